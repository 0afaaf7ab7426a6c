// SPDX-License-Identifier: Apache-2.0
#include "bct/json_io.hpp"

namespace bct {

Json integer_json(const Integer& v) {
  if (auto small = to_int64(v)) {
    return *small;
  }
  return v.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.get<long long>();
  }
  if (j.is_number_unsigned()) {
    return Integer(j.get<unsigned long long>());
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(0, std::string("bad integer string: ") + e.what());
    }
  }
  throw ParseError(0, "expected an integer, found " + j.dump());
}

Json element_json(const Element& x) {
  return Json{{"i", integer_json(x.i())}, {"j", integer_json(x.j())}};
}

namespace {

Json bound_json(const Bound& b) { return b.is_finite() ? integer_json(b.value()) : Json(nullptr); }

Json range_json(const Bound& lo, const Bound& hi) {
  return Json{{"min", bound_json(lo)}, {"max", bound_json(hi)}};
}

// Reads field `key` of an interval object; absent or null gives `missing`.
Bound read_bound(const Json& range, const char* key, const Bound& missing, std::size_t cell) {
  if (!range.contains(key) || range.at(key).is_null()) {
    return missing;
  }
  try {
    return Bound(integer_from_json(range.at(key)));
  } catch (const ParseError& e) {
    throw ParseError(0, "cell " + std::to_string(cell) + ": " + key + ": " + e.what());
  }
}

}  // namespace

Json region_json(const Region& r) {
  Json cells = Json::array();
  for (const Cell& c : r.cells()) {
    cells.push_back(Json{{"s", range_json(c.s_min(), c.s_max())},
                         {"t", range_json(c.t_min(), c.t_max())},
                         {"d", range_json(c.d_min(), c.d_max())}});
  }
  return Json{{"cells", cells}};
}

Region region_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cells") || !j.at("cells").is_array()) {
    throw ParseError(0, "region must be an object with a \"cells\" array");
  }
  const Bound inf = Bound::pos_inf();
  const Bound ninf = Bound::neg_inf();
  std::vector<Cell> cells;
  std::size_t index = 0;
  for (const Json& c : j.at("cells")) {
    if (!c.is_object()) {
      throw ParseError(0, "cell " + std::to_string(index) + " is not an object");
    }
    for (const auto& [key, value] : c.items()) {
      if (key != "s" && key != "t" && key != "d") {
        throw ParseError(0, "cell " + std::to_string(index) + ": unknown key \"" + key + "\"");
      }
      if (!value.is_object()) {
        throw ParseError(0, "cell " + std::to_string(index) + ": \"" + key + "\" is not an object");
      }
    }
    Json empty = Json::object();
    const Json& s = c.contains("s") ? c.at("s") : empty;
    const Json& t = c.contains("t") ? c.at("t") : empty;
    const Json& d = c.contains("d") ? c.at("d") : empty;
    auto cell = Cell::make(read_bound(s, "min", 0, index), read_bound(s, "max", inf, index),
                           read_bound(t, "min", 0, index), read_bound(t, "max", inf, index),
                           read_bound(d, "min", ninf, index), read_bound(d, "max", inf, index));
    if (cell) {
      cells.push_back(*cell);
    }
    ++index;
  }
  return Region::from_cells(cells);
}

Region parse_region(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, e.what());
  }
  return region_from_json(j);
}

}  // namespace bct
