#pragma once

#include <compare>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "argue/dictionary.hpp"
#include "argue/formula.hpp"

namespace argue {

// An axiom label instantiated with constants for the axiom's schema
// variables, in the axiom's first-occurrence variable order.  Renders as
// `t1` when the axiom is ground, `t1(someX)` otherwise.
struct GroundLabel {
  std::string label;
  Binding binding;

  std::string str() const;

  friend bool operator==(const GroundLabel&, const GroundLabel&) = default;
  friend auto operator<=>(const GroundLabel&, const GroundLabel&) = default;
};

std::ostream& operator<<(std::ostream& os, const GroundLabel& gl);

// The set of instantiated axiom labels supporting an argument.
using Grounds = std::set<GroundLabel>;

// Renders as `{c1, t1(someX)}` with elements in set order.
std::string grounds_str(const Grounds& g);

// One labelled axiom as read from a kb file.  `formula` keeps the surface
// shape the user wrote; `normalized` is its kernel-normal form.
struct AxiomEntry {
  std::string label;
  Formula formula;
  Sign sign;
  Formula normalized;
  std::vector<std::string> variables;  // schema variables, first-occurrence order

  AxiomEntry(std::string label, Formula formula, Sign sign);
};

// An immutable knowledge base: a dictionary choice plus labelled axioms.
class Database {
 public:
  // Validates label uniqueness, identifier shape and sign membership.
  Database(DictId dict, std::vector<AxiomEntry> axioms);

  DictId dict_id() const { return dict_; }
  const Dictionary& dict() const { return dictionary(dict_); }
  const std::vector<AxiomEntry>& axioms() const { return axioms_; }

  // nullptr when no axiom has the label.
  const AxiomEntry* find(const std::string& label) const;

  // Constants collected from every axiom formula, sorted.
  const std::vector<std::string>& constants() const { return constants_; }

  // One axiom instantiated with database constants.
  struct Instance {
    GroundLabel label;
    Formula formula;  // ground, kernel-normal
    Sign sign;
  };

  // Every axiom under every assignment of database constants to its
  // variables, in axiom order then lexicographic assignment order.
  // Axioms with variables produce nothing when the database has no
  // constants.
  std::vector<Instance> ground_instances() const;

 private:
  DictId dict_;
  std::vector<AxiomEntry> axioms_;
  std::vector<std::string> constants_;
};

}  // namespace argue
