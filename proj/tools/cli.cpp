// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "bct/element.hpp"
#include "bct/json_io.hpp"
#include "bct/oracle.hpp"
#include "bct/order_sets.hpp"
#include "bct/report.hpp"
#include "bct/solve.hpp"
#include "bct/topology.hpp"
#include "bct/verify.hpp"

namespace bct::cli {

namespace {

enum class Format { text, json, grid };

// A parse failure tied to one argument; `position` indexes into `input`.
struct ArgError {
  std::string what;
  std::string input;
  std::size_t position;
  std::string message;
};

Element element_arg(const std::string& what, const std::string& text) {
  try {
    return parse_element(text);
  } catch (const ParseError& e) {
    throw ArgError{what, text, e.position(), e.what()};
  }
}

Topology topology_arg(const std::string& name) {
  if (auto t = Topology::from_name(name)) {
    return *t;
  }
  throw ArgError{"--topology", name, 0, "unknown topology"};
}

// "A,N" split at the last comma outside parentheses.
std::pair<Element, Integer> basic_arg(const std::string& text) {
  int depth = 0;
  std::optional<std::size_t> split;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '(') {
      ++depth;
    } else if (text[k] == ')') {
      --depth;
    } else if (text[k] == ',' && depth == 0) {
      split = k;
    }
  }
  if (!split) {
    throw ArgError{"--basic", text, text.size(), "expected ELEMENT,N"};
  }
  Element x;
  try {
    x = parse_element(text.substr(0, *split));
  } catch (const ParseError& e) {
    throw ArgError{"--basic", text, e.position(), e.what()};
  }
  std::string n_text = text.substr(*split + 1);
  n_text.erase(0, n_text.find_first_not_of(' '));
  try {
    Integer n = parse_integer(n_text);
    if (n < 0) {
      throw std::invalid_argument("negative");
    }
    return {x, n};
  } catch (const std::invalid_argument&) {
    throw ArgError{"--basic", text, *split + 1, "expected a non-negative integer after ','"};
  }
}

Region region_file(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) {
      throw ArgError{"--region", path, 0, "cannot open file"};
    }
    buf << in.rdbuf();
  }
  const std::string text = buf.str();
  try {
    return parse_region(text);
  } catch (const ParseError& e) {
    throw ArgError{"--region " + path, "", e.position(), e.what()};
  }
}

std::string grid(const Region& r, std::size_t n) {
  const oracle::WindowSet set = oracle::window_eval(r, Window{n});
  std::string out;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      out += set.at(i, j) ? "#" : "·";
    }
    out += '\n';
  }
  return out;
}

Json members_json(const Region& r, std::size_t n) {
  Json out = Json::array();
  for (const Element& x : enumerate(r, Window{n})) {
    out.push_back(element_json(x));
  }
  return out;
}

struct Printer {
  Format format;
  std::ostream& out;

  void region(const Region& r, std::size_t window, Json extra = Json::object()) const {
    switch (format) {
      case Format::grid:
        out << grid(r, window);
        return;
      case Format::json: {
        extra["region"] = region_json(r);
        extra["window"] = window;
        extra["members"] = members_json(r, window);
        out << extra.dump(2) << '\n';
        return;
      }
      case Format::text:
        for (const auto& [key, value] : extra.items()) {
          out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
        out << r.str() << '\n';
        out << "members in [0," << window << "]²: " << enumerate(r, Window{window}).size() << '\n';
        return;
    }
  }

  void value(const std::string& text, const Json& json) const {
    if (format == Format::json) {
      out << json.dump(2) << '\n';
    } else {
      out << text << '\n';
    }
  }

  void elements(const std::vector<Element>& xs, Json extra = Json::object()) const {
    if (format == Format::json) {
      Json arr = Json::array();
      for (const Element& x : xs) {
        arr.push_back(element_json(x));
      }
      extra["solutions"] = arr;
      out << extra.dump(2) << '\n';
      return;
    }
    std::string line;
    for (const Element& x : xs) {
      line += (line.empty() ? "" : ", ") + to_pair_string(x);
    }
    out << "{" << line << "}\n";
    for (const auto& [key, value] : extra.items()) {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }

  void report(const WitnessReport& r) const {
    if (format == Format::json) {
      out << to_json(r).dump(2) << '\n';
    } else {
      out << render_text(r);
    }
  }
};

std::size_t default_max() {
  if (const char* env = std::getenv("BCT_MAX_BOUND")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw ArgError{"BCT_MAX_BOUND", env, 0, "expected a non-negative integer"};
    }
  }
  return 8;
}

const std::vector<std::string>& claim_names() {
  static const std::vector<std::string> kNames{
      "prop1",    "prop2",         "prop3",           "lemma2",     "lemma3", "lemma4",   "thm1",      "quasireg",
      "semireg",  "subcover-tauc", "subcover-updown", "joint-cont", "remark1", "inv-cont", "crosscheck", "all"};
  return kNames;
}

struct VerifyOptions {
  int max = 8;
  Crosscheck cc;
  std::size_t window = 40;
  Topology topology = Topology::tau1();
};

WitnessReport run_claim(const std::string& claim, const VerifyOptions& o) {
  const int k = o.max;
  if (claim == "prop1") return verify_prop1(k, k, o.cc);
  if (claim == "prop2") return verify_prop2(k, k, o.cc);
  if (claim == "prop3") return verify_prop3(k, 100, o.cc);
  if (claim == "lemma2") return verify_lemma2(k, o.window);
  if (claim == "lemma3") return verify_trace_injectivity(k);
  if (claim == "lemma4") return verify_lemma4(k, 30);
  if (claim == "thm1") return verify_thm1(k, o.window);
  if (claim == "quasireg") return verify_quasireg(k, k);
  if (claim == "semireg") return verify_semireg(k, k);
  if (claim == "subcover-tauc") return verify_subcover_tauc(100, k);
  if (claim == "subcover-updown") return verify_subcover_updown(100, k);
  if (claim == "joint-cont") return joint_continuity_search(o.topology, k);
  if (claim == "remark1") return verify_remark1(k);
  if (claim == "inv-cont") return verify_inv_continuity(k, k);
  return verify_region_suite(1000, o.window);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topologies on the bicyclic monoid C(p,q)", "bct"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "text";
  app.add_option("--format", format_name, "text, json or grid")
      ->check(CLI::IsMember({"text", "json", "grid"}));

  std::function<int(const Printer&)> action;
  auto on = [&](CLI::App* sub, std::function<int(const Printer&)> f) { sub->callback([&action, f] { action = f; }); };

  // Elements.
  std::string a_text, b_text;
  auto* mul_cmd = app.add_subcommand("mul", "product of two elements");
  mul_cmd->add_option("A", a_text)->required();
  mul_cmd->add_option("B", b_text)->required();
  on(mul_cmd, [&](const Printer& p) {
    const Element z = mul(element_arg("A", a_text), element_arg("B", b_text));
    p.value(to_string(z), element_json(z));
    return 0;
  });

  auto* inv_cmd = app.add_subcommand("inv", "inverse of an element");
  inv_cmd->add_option("A", a_text)->required();
  on(inv_cmd, [&](const Printer& p) {
    const Element z = inv(element_arg("A", a_text));
    p.value(to_string(z), element_json(z));
    return 0;
  });

  auto* trace_cmd = app.add_subcommand("trace", "the idempotents (xx⁻¹, x⁻¹x)");
  trace_cmd->add_option("A", a_text)->required();
  on(trace_cmd, [&](const Printer& p) {
    const auto [l, r] = trace(element_arg("A", a_text));
    p.value("(" + to_string(l) + ", " + to_string(r) + ")", {{"left", element_json(l)}, {"right", element_json(r)}});
    return 0;
  });

  auto* leq_cmd = app.add_subcommand("leq", "natural partial order A ⪯ B");
  leq_cmd->add_option("A", a_text)->required();
  leq_cmd->add_option("B", b_text)->required();
  on(leq_cmd, [&](const Printer& p) {
    const bool v = leq(element_arg("A", a_text), element_arg("B", b_text));
    p.value(v ? "true" : "false", {{"leq", v}});
    return 0;
  });

  std::size_t window = 40;
  auto* order_cmd = app.add_subcommand("order-sets", "↑A, ↓A and ↕A");
  order_cmd->add_option("A", a_text)->required();
  order_cmd->add_option("--window", window);
  on(order_cmd, [&](const Printer& p) {
    const Element x = element_arg("A", a_text);
    const std::vector<std::pair<std::string, Region>> sets{
        {"up", up_set(x)}, {"down", down_set(x)}, {"updown", updown_set(x)}};
    if (p.format == Format::json) {
      Json j = Json::object();
      for (const auto& [name, r] : sets) {
        j[name] = {{"region", region_json(r)}, {"members", members_json(r, window)}};
      }
      j["window"] = window;
      p.out << j.dump(2) << '\n';
      return 0;
    }
    for (const auto& [name, r] : sets) {
      p.out << name << ":\n";
      if (p.format == Format::grid) {
        p.out << grid(r, window);
      } else {
        p.out << "  " << r.str() << '\n';
      }
    }
    return 0;
  });

  // Topology.
  std::string topology_name = "tau1";
  std::string point_text, basic_text, region_path;
  std::string n_text;
  auto* nbhd_cmd = app.add_subcommand("nbhd", "basic neighbourhood basic(A, N)");
  nbhd_cmd->add_option("--topology", topology_name)->required();
  nbhd_cmd->add_option("--point", point_text)->required();
  nbhd_cmd->add_option("--n", n_text)->required();
  nbhd_cmd->add_option("--window", window);
  on(nbhd_cmd, [&](const Printer& p) {
    const Topology t = topology_arg(topology_name);
    const Element x = element_arg("--point", point_text);
    Integer n;
    try {
      n = parse_integer(n_text);
    } catch (const std::invalid_argument&) {
      throw ArgError{"--n", n_text, 0, "expected an integer"};
    }
    if (n < 0) {
      throw ArgError{"--n", n_text, 0, "expected a non-negative integer"};
    }
    p.region(t.basic(x, n), window,
             {{"topology", std::string(t.name())}, {"point", element_json(x)}, {"n", integer_json(n)}});
    return 0;
  });

  auto input_region = [&](const Topology& t) {
    if (!region_path.empty()) {
      return region_file(region_path);
    }
    const auto [x, n] = basic_arg(basic_text);
    return t.basic(x, n);
  };
  for (const char* name : {"closure", "interior"}) {
    const bool is_closure = std::string(name) == "closure";
    auto* cmd = app.add_subcommand(name, is_closure ? "closure of a region" : "interior of a region");
    cmd->add_option("--topology", topology_name)->required();
    auto* region_opt = cmd->add_option("--region", region_path, "region JSON file, - for stdin");
    auto* basic_opt = cmd->add_option("--basic", basic_text, "basic open A,N");
    region_opt->excludes(basic_opt);
    cmd->add_option("--window", window);
    cmd->callback([&, cmd, is_closure] {
      if (cmd->count("--region") + cmd->count("--basic") != 1) {
        throw CLI::ValidationError("exactly one of --region and --basic is required");
      }
      action = [&, is_closure](const Printer& p) {
        const Topology t = topology_arg(topology_name);
        const Region r = input_region(t);
        p.region(is_closure ? closure(t, r) : interior(t, r), window, {{"topology", std::string(t.name())}});
        return 0;
      };
    });
  }

  auto* regular_cmd = app.add_subcommand("regular-open", "whether basic(A,N) equals int(cl(basic(A,N)))");
  regular_cmd->add_option("--topology", topology_name)->required();
  regular_cmd->add_option("--basic", basic_text)->required();
  regular_cmd->add_option("--window", window);
  on(regular_cmd, [&](const Printer& p) {
    const Topology t = topology_arg(topology_name);
    const auto [x, n] = basic_arg(basic_text);
    const Region u = t.basic(x, n);
    const Region ic = interior(t, closure(t, u));
    const bool regular = ic == u;
    if (p.format == Format::text) {
      p.out << "regular_open: " << (regular ? "true" : "false") << '\n';
      p.out << "int(cl(U)): " << ic.str() << '\n';
    } else {
      p.region(ic, window, {{"topology", std::string(t.name())}, {"regular_open", regular}});
    }
    return 0;
  });

  std::string left_text, right_text, two_text, rhs_text;
  std::optional<std::size_t> solve_window;
  auto* solve_cmd = app.add_subcommand("solve", "solution sets of a·x = b, x·c = d, a·x·c = b");
  auto* left_opt = solve_cmd->add_option("--left", left_text);
  auto* right_opt = solve_cmd->add_option("--right", right_text);
  auto* two_opt = solve_cmd->add_option("--two-sided", two_text, "A,C");
  solve_cmd->add_option("--rhs", rhs_text)->required();
  solve_cmd->add_option("--window", solve_window, "also compare with brute force on [0,W]²");
  left_opt->excludes(right_opt)->excludes(two_opt);
  right_opt->excludes(two_opt);
  solve_cmd->callback([&, solve_cmd] {
    if (solve_cmd->count("--left") + solve_cmd->count("--right") + solve_cmd->count("--two-sided") != 1) {
      throw CLI::ValidationError("exactly one of --left, --right, --two-sided is required");
    }
    action = [&, solve_cmd](const Printer& p) {
      const Element rhs = element_arg("--rhs", rhs_text);
      oracle::CheckInputs in;
      in.z = rhs;
      oracle::CheckOp op;
      std::vector<Element> sols;
      if (solve_cmd->count("--left")) {
        in.x = element_arg("--left", left_text);
        sols = solve_left(in.x, rhs);
        op = oracle::CheckOp::solve_left;
      } else if (solve_cmd->count("--right")) {
        in.x = element_arg("--right", right_text);
        sols = solve_right(in.x, rhs);
        op = oracle::CheckOp::solve_right;
      } else {
        // Split "A,C" at the top-level comma.
        int depth = 0;
        std::optional<std::size_t> split;
        for (std::size_t k = 0; k < two_text.size(); ++k) {
          depth += two_text[k] == '(' ? 1 : two_text[k] == ')' ? -1 : 0;
          if (two_text[k] == ',' && depth == 0) {
            split = k;
          }
        }
        if (!split) {
          throw ArgError{"--two-sided", two_text, two_text.size(), "expected A,C"};
        }
        in.x = element_arg("--two-sided", two_text.substr(0, *split));
        in.y = element_arg("--two-sided", two_text.substr(*split + 1));
        sols = solve_two_sided(in.x, in.y, rhs);
        op = oracle::CheckOp::solve_two_sided;
      }
      Json extra = {{"count", sols.size()}};
      int code = 0;
      if (solve_window) {
        const oracle::CheckResult res = oracle::crosscheck(op, in, Window{*solve_window});
        extra["window"] = *solve_window;
        extra["window_check"] = res.pass ? "pass" : "fail: " + res.detail;
        code = res.pass ? 0 : 1;
      }
      p.elements(sols, extra);
      return code;
    };
  });

  // Verification.
  std::string claim;
  VerifyOptions vo;
  std::optional<int> max_opt;
  std::string verify_topology;
  auto* verify_cmd = app.add_subcommand("verify", "check a claim over a finite parameter box");
  verify_cmd->add_option("CLAIM", claim)->required()->check(CLI::IsMember(claim_names()));
  verify_cmd->add_option("--max", max_opt, "parameter bound (default 8, or BCT_MAX_BOUND)");
  verify_cmd->add_flag("--crosscheck", vo.cc.enabled, "confirm a sample of instances by brute force");
  verify_cmd->add_option("--window", vo.window, "brute-force window");
  verify_cmd->add_option("--topology", verify_topology, "topology for joint-cont (default tau1)");
  on(verify_cmd, [&](const Printer& p) {
    vo.max = max_opt ? *max_opt : static_cast<int>(default_max());
    if (vo.max < 0) {
      throw ArgError{"--max", std::to_string(vo.max), 0, "expected a non-negative bound"};
    }
    vo.cc.window = vo.window;
    if (!verify_topology.empty()) {
      vo.topology = topology_arg(verify_topology);
    }
    if (claim != "all") {
      const WitnessReport r = run_claim(claim, vo);
      p.report(r);
      return exit_code(r.verdict);
    }
    Verdict worst = Verdict::verified;
    Json all = Json::array();
    for (const std::string& c : claim_names()) {
      if (c == "all") {
        continue;
      }
      const WitnessReport r = run_claim(c, vo);
      worst = combine(worst, r.verdict);
      if (p.format == Format::json) {
        all.push_back(to_json(r));
      } else {
        p.report(r);
      }
    }
    if (p.format == Format::json) {
      p.out << all.dump(2) << '\n';
    }
    return exit_code(worst);
  });

  std::size_t render_window = 0;
  auto* render_cmd = app.add_subcommand("render", "draw a region on [0,N]²");
  render_cmd->add_option("--region", region_path)->required();
  render_cmd->add_option("--window", render_window)->required();
  on(render_cmd, [&](const Printer& p) {
    const Region r = region_file(region_path);
    if (p.format == Format::text) {
      p.out << grid(r, render_window);
    } else {
      p.region(r, render_window);
    }
    return 0;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const Format format = format_name == "json" ? Format::json : format_name == "grid" ? Format::grid : Format::text;
  try {
    return action(Printer{format, out});
  } catch (const ArgError& e) {
    const bool placed = e.message.rfind("at position", 0) == 0;
    err << "error: " << e.what << ": "
        << (placed ? e.message : "at position " + std::to_string(e.position) + ": " + e.message) << '\n';
    if (!e.input.empty()) {
      err << "  " << e.input << "\n  " << std::string(e.position, ' ') << "^\n";
    }
    return 2;
  } catch (const NotInSubspace& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace bct::cli
