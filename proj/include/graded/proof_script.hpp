// Proof scripts: one JSON object per line,
//
//   {"formula": "<formula>", "just": {"kind": "hyp",   "args": {"index": 3}}}
//   {"formula": "<formula>", "just": {"kind": "axiom", "args": {"schema": "trans1", "grades": ["7/10", "4/5"]}}}
//   {"formula": "<formula>", "just": {"kind": "taut",  "args": {"atoms": 2}}}
//   {"formula": "<formula>", "just": {"kind": "mp",    "args": {"minor": 0, "major": 4}}}
//
// Line references are 0-based. "grades" and "atoms" are optional.
// Verdicts serialise as {"accepted": bool, "line"?: int, "reason"?: string}.

#ifndef GRADED_PROOF_SCRIPT_HPP
#define GRADED_PROOF_SCRIPT_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "graded/proof.hpp"

namespace graded {

std::string write_proof_script(const Proof& proof);

/// Throws ParseError (bad formula text or JSON) or ValidationError (bad
/// justification), with the 1-based script line in the message.
Proof read_proof_script(std::string_view text);

nlohmann::ordered_json justification_to_json(const Justification& j);
Justification justification_from_json(const nlohmann::json& j);

nlohmann::ordered_json verdict_to_json(const Verdict& v);

}  // namespace graded

#endif  // GRADED_PROOF_SCRIPT_HPP
