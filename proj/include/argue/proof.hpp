#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "argue/database.hpp"
#include "argue/dictionary.hpp"
#include "argue/formula.hpp"

namespace argue {

// Natural-deduction rules.  imp_elim children are [minor, major]: the
// antecedent proof first, then the implication.  or_elim children are
// [major, left case, right case].  not_elim children are [minor, major].
enum class Rule {
  axiom,
  hypothesis,
  and_intro,
  and_elim_left,
  and_elim_right,
  imp_intro,
  imp_elim,
  or_intro_left,
  or_intro_right,
  or_elim,
  not_intro,
  not_elim,
};

const std::string& rule_name(Rule r);
Rule rule_by_name(const std::string& name);  // throws Error on unknown names

// An immutable proof tree.  Nodes built by the search engine carry their
// grounds and sign; trees loaded from JSON are shape-only until
// check_proof validates them and fills the evaluation in.
class Proof {
 public:
  // Default-constructed proofs are empty; every factory returns a
  // non-empty one.
  Proof() = default;

  // Evaluated leaves.
  static Proof axiom(Formula conclusion, GroundLabel label, Sign sign);
  static Proof hypothesis(Formula conclusion, Sign top);

  // Evaluated inner node; children must be evaluated and the sign
  // combination must be defined, else this throws.
  static Proof inference(Rule r, Formula conclusion, std::vector<Proof> children);

  // Shape-only node, as read from serialized form.
  static Proof shape(Rule r, Formula conclusion, std::vector<Proof> children,
                     std::optional<GroundLabel> label);

  bool empty() const { return node_ == nullptr; }

  Rule rule() const;
  const Formula& conclusion() const;
  const std::vector<Proof>& children() const;
  const std::optional<GroundLabel>& label() const;

  bool evaluated() const;
  const Grounds& grounds() const;  // throws Error when not evaluated
  const Sign& sign() const;        // throws Error when not evaluated

  std::size_t size() const;  // node count

  // Multi-line rendering, two-space indent per level.
  std::string str() const;

  // Structural order used for deterministic tie-breaking; ignores
  // evaluation state.
  std::strong_ordering operator<=>(const Proof& other) const;
  bool operator==(const Proof& other) const;

 private:
  struct Node;
  explicit Proof(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static const Node& deref(const std::shared_ptr<const Node>& node);

  std::shared_ptr<const Node> node_;
};

// A labelled argument: a conclusion with the grounds and sign of one
// supporting proof.  Identity is the (formula, grounds, sign) triple;
// the retained proof is one witness among possibly many.
struct Argument {
  Formula formula;  // kernel-normal
  Grounds grounds;
  Sign sign;
  Proof proof;  // evaluated
};

bool same_triple(const Argument& a, const Argument& b);

// Orders by (formula, grounds, sign), ignoring the proof.
struct TripleLess {
  bool operator()(const Argument& a, const Argument& b) const;
};

std::string argument_str(const Argument& a);

// Validates a proof tree against a database and returns the argument it
// establishes.  The returned argument holds a fully evaluated copy of
// the proof with kernel-normal conclusions.  Throws ProofError (with a
// node path) on invalid trees.
Argument check_proof(const Database& db, const Proof& proof);

// True when some node of the proof concludes q (up to normalization).
// Hypothesis leaves count.
bool proof_mentions(const Proof& proof, const Formula& q);

inline bool depends_on(const Argument& a, const Formula& q) {
  return proof_mentions(a.proof, q);
}

}  // namespace argue
