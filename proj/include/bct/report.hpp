// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bct/json_io.hpp"

namespace bct {

/// verified: the claim held on every swept instance by an exact check.
/// counterexample: some instance refutes the claim; witnesses list them.
/// inconclusive_budget: a search ran out of budget without deciding.
enum class Verdict { verified, counterexample, inconclusive_budget };

std::string_view verdict_name(Verdict v);
/// 0, 1 and 3 respectively.
int exit_code(Verdict v);
/// The worse of two verdicts: counterexample over inconclusive over verified.
Verdict combine(Verdict a, Verdict b);

struct Witness {
  Json input;
  Json witness;
};

struct WitnessReport {
  std::string claim_id;
  Verdict verdict = Verdict::verified;
  Json parameters = Json::object();
  std::vector<Witness> witnesses;
  /// Remarks on what was and was not established.
  std::vector<std::string> notes;
  double elapsed_ms = 0;
};

/// {claim_id, verdict, parameters, witnesses:[{input, witness}], notes, elapsed_ms}
Json to_json(const WitnessReport& r);
std::string render_text(const WitnessReport& r);

}  // namespace bct
