#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace argue {

// A term is either a constant (lower-case identifier) or a schema
// variable (upper-case identifier).  Terms only occur as atom arguments.
struct Term {
  enum class Kind { constant, variable };

  Kind kind = Kind::constant;
  std::string name;

  static Term constant(std::string name) { return {Kind::constant, std::move(name)}; }
  static Term variable(std::string name) { return {Kind::variable, std::move(name)}; }

  bool is_variable() const { return kind == Kind::variable; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

enum class FormulaKind {
  falsum,
  atom,
  negation,
  conjunction,
  disjunction,
  implication,
};

// Immutable formula over atoms, falsum (#), ~, &, | and ->.  Copies are
// cheap: nodes are shared and never mutated.  `~p` is surface syntax for
// `p -> #`; normalize() rewrites it away, the printer never reintroduces it.
class Formula {
 public:
  // Default-constructed formulas are falsum, so the type is usable in
  // containers without a null state.
  Formula();

  static Formula falsum();
  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula negation(Formula body);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  FormulaKind kind() const;

  // Atom accessors; throw Error when the formula is not an atom.
  const std::string& predicate() const;
  const std::vector<Term>& args() const;

  // Child accessors.  body() is for negation, lhs()/rhs() for the binary
  // connectives.  They throw Error when the kind does not match.
  const Formula& body() const;
  const Formula& lhs() const;
  const Formula& rhs() const;

  bool is_ground() const;
  std::size_t hash() const;

  // True when any subformula has the given kind.
  bool contains(FormulaKind kind) const;

  // Schema variables in first-occurrence order, without duplicates.
  std::vector<std::string> variables() const;

  // Canonical rendering; parse_formula(str()) reproduces the formula.
  std::string str() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }
  std::strong_ordering operator<=>(const Formula& other) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static const std::shared_ptr<const Node>& falsum_node();
  static Formula make_unary(FormulaKind kind, Formula body);
  static Formula make_binary(FormulaKind kind, Formula lhs, Formula rhs);

  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Formula& f);

// Kernel-normal form: every negation is rewritten to `body -> #`.  The
// result contains no FormulaKind::negation nodes.  Idempotent.
Formula normalize(const Formula& f);

// Complement of a ground formula: the premise-sensitive "opposite" used
// when pairing arguments for and against.  complement(q -> #) is q; for
// any other (normalized) shape the complement is f -> #.  Requires a
// ground formula.
Formula complement(const Formula& f);

// Variable-to-constant assignment in a fixed order (the axiom's
// first-occurrence variable order, for labels).
using Binding = std::vector<std::pair<std::string, std::string>>;

// Replaces every variable via the binding.  Throws Error when a variable
// has no entry, so the result is always ground.
Formula substitute(const Formula& f, const Binding& binding);

}  // namespace argue
