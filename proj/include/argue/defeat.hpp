#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "argue/aggregate.hpp"
#include "argue/database.hpp"
#include "argue/formula.hpp"
#include "argue/proof.hpp"
#include "argue/prover.hpp"

namespace argue {

// An argument against a formula, induced by flipping the sign of an
// argument for its complement.  Con arguments carry no proof of their
// own; they stand and fall with the inducing pro argument, recorded by
// `counterpart` as an index into the pool's pro vector.
struct ConArgument {
  Formula formula;
  Grounds grounds;
  Sign sign;  // a doubt sign: - or --
  std::size_t counterpart;
};

std::string con_argument_str(const ConArgument& a);

// Arguments for and against every formula in a complement-closed
// universe built from the database (plus any extra goals): the ground
// subformula instances of the axioms, their negations and double
// negations.  Formulas outside the search fragment and the trivial # /
// ~# pair are excluded.
struct SignedArgumentPool {
  DictId dict = DictId::delta;
  std::vector<Formula> universe;   // sorted
  std::vector<Argument> pro;       // sorted by (formula, grounds, sign)
  std::vector<ConArgument> con;    // sorted by (formula, grounds, sign)
};

// The universe signed_closure enumerates over, available separately so
// other checks can sweep the same formulas.
std::vector<Formula> closure_universe(const Database& db,
                                      const std::vector<Formula>& extra_goals = {});

// Builds the pool for a delta or bounded-delta database.  Pro arguments
// come from the search engine; arguments for q additionally induce
// arguments for ~~q with the same grounds and sign, so support survives
// double negation.  Con arguments mirror pro arguments of the
// complement with flipped sign.  Throws DictionaryError for
// dictionaries without doubt signs.
SignedArgumentPool signed_closure(const Database& db,
                                  const SearchLimits& limits = {},
                                  const std::vector<Formula>& extra_goals = {});

// Head-on defeat: same conclusion, and the doubt outweighs the support
// (-- defeats + and ++, - defeats only +).
bool rebuts(const ConArgument& attacker, const Argument& target);

// Undercutting defeat: the target's proof passes through the attacked
// formula at some node (leaves included), and the doubt outweighs that
// node's sign.
bool discounts(const ConArgument& attacker, const Argument& target);

enum class Status { in, out, undec };

const std::string& status_name(Status s);  // "IN", "OUT", "UNDEC"

struct AttackEdge {
  enum class Kind { rebut, discount };

  std::size_t con;  // attacker, index into pool.con
  std::size_t pro;  // target, index into pool.pro
  Kind kind;
};

// Statuses for every pooled argument under the least fixpoint: an
// argument is IN when every attacker is OUT, OUT when some attacker is
// IN, UNDEC otherwise.  A con argument's status is its counterpart's.
struct Labelling {
  std::vector<Status> pro;
  std::vector<Status> con;
  std::vector<AttackEdge> edges;
};

Labelling grounded_labelling(const SignedArgumentPool& pool);

// Flattens only the goal's IN pro arguments.  For dictionaries without
// doubt signs nothing can be defeated and this reduces to plain
// search-and-flatten.
Confidence selective_aggregate(const Database& db, const Formula& goal,
                               const Flattener& f,
                               const SearchLimits& limits = {});

}  // namespace argue
