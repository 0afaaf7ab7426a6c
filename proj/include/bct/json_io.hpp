// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "bct/element.hpp"
#include "bct/integer.hpp"
#include "bct/region.hpp"

namespace bct {

using Json = nlohmann::ordered_json;

/// A JSON number when the value fits in 64 bits, otherwise a decimal string.
Json integer_json(const Integer& v);
/// Accepts an integral number or a decimal string.
Integer integer_from_json(const Json& j);

/// {"i": .., "j": ..}
Json element_json(const Element& x);

/// {"cells":[{"s":{"min":..,"max":..|null},"t":{..},"d":{"min":..|null,"max":..|null}}]}
Json region_json(const Region& r);

/// Reads the region schema. "s"/"t" minima default to 0, null means
/// unbounded, and a missing "d" leaves the difference unconstrained. Cells
/// with no solutions are dropped. Throws ParseError; for malformed JSON text
/// the position is the byte offset reported by the parser.
Region region_from_json(const Json& j);
Region parse_region(std::string_view text);

}  // namespace bct
