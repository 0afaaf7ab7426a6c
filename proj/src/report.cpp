// SPDX-License-Identifier: Apache-2.0
#include "bct/report.hpp"

#include <cstdio>

namespace bct {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::verified:
      return "verified";
    case Verdict::counterexample:
      return "counterexample";
    case Verdict::inconclusive_budget:
      return "inconclusive_budget";
  }
  return "?";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::verified:
      return 0;
    case Verdict::counterexample:
      return 1;
    case Verdict::inconclusive_budget:
      return 3;
  }
  return 1;
}

Verdict combine(Verdict a, Verdict b) {
  auto rank = [](Verdict v) {
    switch (v) {
      case Verdict::verified:
        return 0;
      case Verdict::inconclusive_budget:
        return 1;
      case Verdict::counterexample:
        return 2;
    }
    return 2;
  };
  return rank(a) >= rank(b) ? a : b;
}

Json to_json(const WitnessReport& r) {
  Json witnesses = Json::array();
  for (const Witness& w : r.witnesses) {
    witnesses.push_back(Json{{"input", w.input}, {"witness", w.witness}});
  }
  Json out{{"claim_id", r.claim_id},
           {"verdict", verdict_name(r.verdict)},
           {"parameters", r.parameters},
           {"witnesses", witnesses}};
  if (!r.notes.empty()) {
    out["notes"] = r.notes;
  }
  out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

std::string render_text(const WitnessReport& r) {
  std::string out = r.claim_id + ": " + std::string(verdict_name(r.verdict)) + "\n";
  for (const auto& [key, value] : r.parameters.items()) {
    out += "  " + key + " = " + value.dump() + "\n";
  }
  if (!r.witnesses.empty()) {
    out += "  witnesses:\n";
    for (const Witness& w : r.witnesses) {
      out += "    " + w.input.dump() + " -> " + w.witness.dump() + "\n";
    }
  }
  for (const std::string& note : r.notes) {
    out += "  note: " + note + "\n";
  }
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.1f", r.elapsed_ms);
  out += "  elapsed_ms = " + std::string(ms) + "\n";
  return out;
}

}  // namespace bct
