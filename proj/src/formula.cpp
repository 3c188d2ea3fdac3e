#include "argue/formula.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "argue/errors.hpp"

namespace argue {

struct Formula::Node {
  FormulaKind kind;
  std::string predicate;          // atom only
  std::vector<Term> terms;        // atom only
  std::optional<Formula> left;    // negation body / binary lhs
  std::optional<Formula> right;   // binary rhs
  bool ground = true;
  std::size_t hash = 0;
};

namespace {

std::size_t hash_mix(std::size_t seed, std::size_t value) {
  // Standard 64-bit mixing step (same constant as boost::hash_combine).
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

const std::shared_ptr<const Formula::Node>& Formula::falsum_node() {
  static const std::shared_ptr<const Node> node = [] {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::falsum;
    n->hash = hash_mix(0, static_cast<std::size_t>(FormulaKind::falsum));
    return n;
  }();
  return node;
}

Formula::Formula() : node_(falsum_node()) {}

Formula Formula::falsum() { return Formula(falsum_node()); }

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::atom;
  n->predicate = std::move(predicate);
  n->terms = std::move(args);
  std::size_t h = hash_mix(0, static_cast<std::size_t>(FormulaKind::atom));
  h = hash_mix(h, std::hash<std::string>{}(n->predicate));
  for (const Term& t : n->terms) {
    if (t.is_variable()) n->ground = false;
    h = hash_mix(h, std::hash<std::string>{}(t.name));
    h = hash_mix(h, t.is_variable() ? 1u : 2u);
  }
  n->hash = h;
  return Formula(std::move(n));
}

Formula Formula::make_unary(FormulaKind kind, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->ground = body.is_ground();
  std::size_t h = hash_mix(0, static_cast<std::size_t>(kind));
  h = hash_mix(h, body.hash());
  n->hash = h;
  n->left = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::make_binary(FormulaKind kind, Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->ground = lhs.is_ground() && rhs.is_ground();
  std::size_t h = hash_mix(0, static_cast<std::size_t>(kind));
  h = hash_mix(h, lhs.hash());
  h = hash_mix(h, rhs.hash());
  n->hash = h;
  n->left = std::move(lhs);
  n->right = std::move(rhs);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula body) {
  return make_unary(FormulaKind::negation, std::move(body));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make_binary(FormulaKind::conjunction, std::move(lhs), std::move(rhs));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make_binary(FormulaKind::disjunction, std::move(lhs), std::move(rhs));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return make_binary(FormulaKind::implication, std::move(lhs), std::move(rhs));
}

FormulaKind Formula::kind() const { return node_->kind; }

const std::string& Formula::predicate() const {
  if (node_->kind != FormulaKind::atom) throw Error("predicate() on a non-atom formula");
  return node_->predicate;
}

const std::vector<Term>& Formula::args() const {
  if (node_->kind != FormulaKind::atom) throw Error("args() on a non-atom formula");
  return node_->terms;
}

const Formula& Formula::body() const {
  if (node_->kind != FormulaKind::negation) throw Error("body() on a non-negation formula");
  return *node_->left;
}

const Formula& Formula::lhs() const {
  switch (node_->kind) {
    case FormulaKind::conjunction:
    case FormulaKind::disjunction:
    case FormulaKind::implication:
      return *node_->left;
    default:
      throw Error("lhs() on a non-binary formula");
  }
}

const Formula& Formula::rhs() const {
  switch (node_->kind) {
    case FormulaKind::conjunction:
    case FormulaKind::disjunction:
    case FormulaKind::implication:
      return *node_->right;
    default:
      throw Error("rhs() on a non-binary formula");
  }
}

bool Formula::is_ground() const { return node_->ground; }

std::size_t Formula::hash() const { return node_->hash; }

bool Formula::contains(FormulaKind kind) const {
  if (node_->kind == kind) return true;
  switch (node_->kind) {
    case FormulaKind::falsum:
    case FormulaKind::atom:
      return false;
    case FormulaKind::negation:
      return node_->left->contains(kind);
    default:
      return node_->left->contains(kind) || node_->right->contains(kind);
  }
}

namespace {

void collect_variables(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::falsum:
      return;
    case FormulaKind::atom:
      for (const Term& t : f.args()) {
        if (t.is_variable() && std::find(out.begin(), out.end(), t.name) == out.end()) {
          out.push_back(t.name);
        }
      }
      return;
    case FormulaKind::negation:
      collect_variables(f.body(), out);
      return;
    default:
      collect_variables(f.lhs(), out);
      collect_variables(f.rhs(), out);
      return;
  }
}

}  // namespace

std::vector<std::string> Formula::variables() const {
  std::vector<std::string> out;
  collect_variables(*this, out);
  return out;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash) return false;
  return (*this <=> other) == std::strong_ordering::equal;
}

std::strong_ordering Formula::operator<=>(const Formula& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  if (auto c = node_->kind <=> other.node_->kind; c != 0) return c;
  switch (node_->kind) {
    case FormulaKind::falsum:
      return std::strong_ordering::equal;
    case FormulaKind::atom: {
      if (auto c = node_->predicate <=> other.node_->predicate; c != 0) return c;
      return node_->terms <=> other.node_->terms;
    }
    case FormulaKind::negation:
      return *node_->left <=> *other.node_->left;
    default: {
      if (auto c = *node_->left <=> *other.node_->left; c != 0) return c;
      return *node_->right <=> *other.node_->right;
    }
  }
}

namespace {

// Precedence levels for printing: -> binds loosest (right-associative),
// then |, then &, then ~, then atoms and #.
int precedence(FormulaKind k) {
  switch (k) {
    case FormulaKind::implication: return 0;
    case FormulaKind::disjunction: return 1;
    case FormulaKind::conjunction: return 2;
    case FormulaKind::negation: return 3;
    default: return 4;
  }
}

void print(std::ostream& os, const Formula& f, int min_level) {
  const int level = precedence(f.kind());
  const bool parens = level < min_level;
  if (parens) os << '(';
  switch (f.kind()) {
    case FormulaKind::falsum:
      os << '#';
      break;
    case FormulaKind::atom: {
      os << f.predicate();
      if (!f.args().empty()) {
        os << '(';
        bool first = true;
        for (const Term& t : f.args()) {
          if (!first) os << ',';
          first = false;
          os << t.name;
        }
        os << ')';
      }
      break;
    }
    case FormulaKind::negation:
      os << '~';
      print(os, f.body(), 3);
      break;
    case FormulaKind::conjunction:
      print(os, f.lhs(), 2);
      os << " & ";
      print(os, f.rhs(), 3);
      break;
    case FormulaKind::disjunction:
      print(os, f.lhs(), 1);
      os << " | ";
      print(os, f.rhs(), 2);
      break;
    case FormulaKind::implication:
      print(os, f.lhs(), 1);
      os << " -> ";
      print(os, f.rhs(), 0);
      break;
  }
  if (parens) os << ')';
}

}  // namespace

std::string Formula::str() const {
  std::ostringstream os;
  print(os, *this, 0);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  print(os, f, 0);
  return os;
}

Formula normalize(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::falsum:
    case FormulaKind::atom:
      return f;
    case FormulaKind::negation:
      return Formula::implication(normalize(f.body()), Formula::falsum());
    case FormulaKind::conjunction: {
      Formula l = normalize(f.lhs()), r = normalize(f.rhs());
      if (l == f.lhs() && r == f.rhs()) return f;
      return Formula::conjunction(std::move(l), std::move(r));
    }
    case FormulaKind::disjunction: {
      Formula l = normalize(f.lhs()), r = normalize(f.rhs());
      if (l == f.lhs() && r == f.rhs()) return f;
      return Formula::disjunction(std::move(l), std::move(r));
    }
    case FormulaKind::implication: {
      Formula l = normalize(f.lhs()), r = normalize(f.rhs());
      if (l == f.lhs() && r == f.rhs()) return f;
      return Formula::implication(std::move(l), std::move(r));
    }
  }
  throw Error("normalize: unreachable formula kind");
}

Formula complement(const Formula& f) {
  if (!f.is_ground()) throw Error("complement requires a ground formula");
  Formula n = normalize(f);
  if (n.kind() == FormulaKind::implication && n.rhs().kind() == FormulaKind::falsum) {
    return n.lhs();
  }
  return Formula::implication(std::move(n), Formula::falsum());
}

namespace {

const std::string* lookup(const Binding& binding, const std::string& var) {
  for (const auto& [name, value] : binding) {
    if (name == var) return &value;
  }
  return nullptr;
}

}  // namespace

Formula substitute(const Formula& f, const Binding& binding) {
  switch (f.kind()) {
    case FormulaKind::falsum:
      return f;
    case FormulaKind::atom: {
      if (f.is_ground()) return f;
      std::vector<Term> terms;
      terms.reserve(f.args().size());
      for (const Term& t : f.args()) {
        if (!t.is_variable()) {
          terms.push_back(t);
          continue;
        }
        const std::string* value = lookup(binding, t.name);
        if (value == nullptr) throw Error("substitute: unbound variable " + t.name);
        terms.push_back(Term::constant(*value));
      }
      return Formula::atom(f.predicate(), std::move(terms));
    }
    case FormulaKind::negation:
      return f.is_ground() ? f : Formula::negation(substitute(f.body(), binding));
    case FormulaKind::conjunction:
      return f.is_ground() ? f
                           : Formula::conjunction(substitute(f.lhs(), binding),
                                                  substitute(f.rhs(), binding));
    case FormulaKind::disjunction:
      return f.is_ground() ? f
                           : Formula::disjunction(substitute(f.lhs(), binding),
                                                  substitute(f.rhs(), binding));
    case FormulaKind::implication:
      return f.is_ground() ? f
                           : Formula::implication(substitute(f.lhs(), binding),
                                                  substitute(f.rhs(), binding));
  }
  throw Error("substitute: unreachable formula kind");
}

}  // namespace argue
