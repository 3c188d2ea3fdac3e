#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "argue/database.hpp"
#include "argue/dictionary.hpp"
#include "argue/proof.hpp"
#include "argue/prover.hpp"

namespace argue {

// Aggregated support for one formula.  Either a bounded tally (a count,
// or the distinguished confirmed mark which exceeds every count) or a
// real in [0, 1].
class Confidence {
 public:
  enum class Kind { tally, confirmed, real };

  static Confidence tally(std::uint64_t n);
  static Confidence confirmed();
  static Confidence real(double v);

  Kind kind() const { return kind_; }
  bool is_confirmed() const { return kind_ == Kind::confirmed; }
  std::uint64_t count() const;  // tally only
  double value() const;         // real only

  std::string str() const;  // "++", "3", "0.85"

  // Tallies and confirmed are mutually ordered (confirmed on top); reals
  // only compare with reals.  Mixing kinds across that line throws.
  bool operator==(const Confidence& other) const;
  bool leq(const Confidence& other) const;

 private:
  Kind kind_ = Kind::tally;
  std::uint64_t count_ = 0;
  double value_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const Confidence& c);

// An aggregation recipe over the signs of same-conclusion arguments.
// `source` names the dictionary whose criteria projection the rule is
// judged under; `accepts` lists the dictionaries flatten() will take
// argument signs from.
struct Flattener {
  std::string name;
  DictId source = DictId::generic;
  std::vector<DictId> accepts;
  std::function<Confidence(const std::vector<Sign>&)> rule;

  bool accepts_dict(DictId d) const;
};

// Confirmed when some argument carries ++, otherwise the number of
// positively signed arguments.  Source: bounded (also accepts
// bounded-delta signs, ignoring doubt).
Flattener make_bnd_flattener();

// Probabilistic sum 1 - prod(1 - c_i) over numeric signs.
Flattener make_num_flattener();

// Plain count of positively signed arguments.  Accepts any dictionary.
Flattener make_count_flattener();

// bnd, num or count.  Throws Error on unknown names.
Flattener flattener_by_name(const std::string& name);

// Collapses arguments for one conclusion into a single confidence.  All
// arguments must share a conclusion and a dictionary accepted by the
// flattener; violations throw DictionaryError.  An empty vector is the
// zero case.
Confidence flatten(const std::vector<Argument>& args, const Flattener& f);

// Search-and-flatten for the bounded dictionary.  Throws DictionaryError
// when the database is not bounded.
Confidence agg_bnd(const Database& db, const Formula& goal,
                   const SearchLimits& limits = {});

// Search-and-flatten for the numeric dictionary: the probability that at
// least one independent line of support holds.
double agg_num(const Database& db, const Formula& goal,
               const SearchLimits& limits = {});

}  // namespace argue
