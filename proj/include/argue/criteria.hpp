#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "argue/aggregate.hpp"
#include "argue/database.hpp"
#include "argue/dictionary.hpp"
#include "argue/prover.hpp"

namespace argue {

// Sign of an extra argument in the abstract four-element view that the
// flattening criteria are stated over.
enum class AbstractSign { minus_minus, minus, plus, plus_plus };

const std::string& abstract_sign_name(AbstractSign s);

// One flattening test case: a bag of concrete argument signs plus one
// extra argument described abstractly.  `extra_concrete` carries the
// concrete sign when the source dictionary can express the abstract one
// (+ and ++ always can; doubt marks only exist in the delta
// dictionaries).
struct FlatCase {
  std::vector<Sign> base;
  AbstractSign extra = AbstractSign::plus;
  std::optional<Sign> extra_concrete;
};

// Seeded case generator for one source dictionary.  Deterministic for a
// fixed (source, count, seed).
std::vector<FlatCase> generate_flattening_cases(DictId source, std::size_t count,
                                                std::uint64_t seed);

// Equality slack for real-valued confidences in the criteria checks.
inline constexpr double kRealTolerance = 1e-12;

enum class CriterionStatus { pass, fail, not_applicable };

const std::string& criterion_status_name(CriterionStatus s);

struct CriterionResult {
  std::string criterion;
  CriterionStatus status = CriterionStatus::pass;
  std::string detail;          // human-readable qualifier, may be empty
  std::string counterexample;  // rendered witness when status == fail
  bool informational = false;  // reported but not counted by all_pass()
};

struct CriteriaReport {
  std::vector<CriterionResult> entries;

  bool all_pass() const;
  const CriterionResult* find(const std::string& criterion) const;
};

// Checks the four flattening criteria over the cases:
//
//   F1  an extra + argument never lowers the result
//   F2  an extra confirming argument fixes the result at confirmed
//   F3  an extra - argument never raises the result
//   F4  an extra -- argument zeroes the result, unless the base already
//       holds a confirming argument (those cases are skipped)
//
// F4 needs a source dictionary with --; for the others the doubt cases
// degenerate to equality and are reported as passes with a note.
CriteriaReport check_flattening_criteria(const Flattener& f,
                                         const std::vector<FlatCase>& cases);

// Checks the sign coherence of arguments for and against:
//
//   C1  (p, a, +)  exists iff (-p, a, -)  exists
//   C2  (~p, a, +)  whenever (-p, a, +)   (p a negation)
//   C3  (p, a, ++) exists iff (-p, a, --) exists
//   C4  (~p, a, ++) whenever (-p, a, ++)  (p a negation)
//
// over the closure universe of the database.  With `with_closure` the
// pool comes from signed_closure and a separate informational entry
// reports what the bare search engine achieves for C1 on its own;
// without it the checks run against bare search results, where C1/C3
// fail as soon as any positively signed argument exists.  Needs a delta
// dictionary.
CriteriaReport check_acr_criteria(const Database& db,
                                  const SearchLimits& limits = {},
                                  bool with_closure = true);

}  // namespace argue
