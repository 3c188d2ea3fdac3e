#pragma once

#include <json.hpp>

#include "argue/aggregate.hpp"
#include "argue/criteria.hpp"
#include "argue/database.hpp"
#include "argue/defeat.hpp"
#include "argue/proof.hpp"

namespace argue {

// Objects keep insertion order so output is stable and readable.
using Json = nlohmann::ordered_json;

// {"rule": ..., "conclusion": ..., "label"?: ..., "children": [...]}
Json proof_to_json(const Proof& p);

// Inverse of proof_to_json; returns a shape-only proof for check_proof.
// The database resolves labels.  Malformed structure throws ParseError,
// unknown labels throw Error.
Proof proof_from_json(const Json& j, const Database& db);

// Entry point for files: accepts a bare proof object, {"proof": ...}, or
// {"arguments": [{..., "proof": ...}, ...]} as written by the prove
// command, returning every proof found.
std::vector<Proof> proofs_from_json(const Json& j, const Database& db);

// Parses JSON text with errors reported as ParseError.
Json json_parse(const std::string& text);

Json sign_to_json(const Sign& s);              // "+" / "--" / 0.7
Json confidence_to_json(const Confidence& c);  // "++" / 3 / 0.85

// {"formula": ..., "grounds": [...], "sign": ...}
Json argument_to_json(const Argument& a);
Json argument_to_json(const Argument& a, bool with_proof);

Json criteria_report_to_json(const CriteriaReport& report);

// {"nodes": [...], "edges": [...]}; pro nodes come first, ids are "p0",
// "p1", ... and "c0", "c1", ...
Json labelling_to_json(const SignedArgumentPool& pool, const Labelling& lab);

}  // namespace argue
