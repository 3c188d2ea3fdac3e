#include "argue/proof.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "argue/errors.hpp"

namespace argue {

const std::string& rule_name(Rule r) {
  static const std::array<std::string, 12> names = {
      "axiom",        "hypothesis",    "and_intro",     "and_elim_left",
      "and_elim_right", "imp_intro",   "imp_elim",      "or_intro_left",
      "or_intro_right", "or_elim",     "not_intro",     "not_elim"};
  return names[static_cast<std::size_t>(r)];
}

Rule rule_by_name(const std::string& name) {
  for (int i = 0; i < 12; ++i) {
    Rule r = static_cast<Rule>(i);
    if (rule_name(r) == name) return r;
  }
  throw Error("unknown proof rule: " + name);
}

struct Proof::Node {
  Rule rule;
  Formula conclusion;
  std::vector<Proof> children;
  std::optional<GroundLabel> label;

  bool evaluated = false;
  Grounds grounds;
  std::optional<Sign> sign;

  std::size_t size = 1;
};

Proof Proof::axiom(Formula conclusion, GroundLabel label, Sign sign) {
  auto n = std::make_shared<Node>();
  n->rule = Rule::axiom;
  n->conclusion = std::move(conclusion);
  n->label = std::move(label);
  n->evaluated = true;
  n->grounds.insert(*n->label);
  n->sign = sign;
  return Proof(std::move(n));
}

Proof Proof::hypothesis(Formula conclusion, Sign top) {
  auto n = std::make_shared<Node>();
  n->rule = Rule::hypothesis;
  n->conclusion = std::move(conclusion);
  n->evaluated = true;
  n->sign = top;
  return Proof(std::move(n));
}

namespace {

std::size_t total_size(const std::vector<Proof>& children) {
  std::size_t s = 1;
  for (const Proof& c : children) s += c.size();
  return s;
}

}  // namespace

Proof Proof::inference(Rule r, Formula conclusion, std::vector<Proof> children) {
  if (r == Rule::axiom || r == Rule::hypothesis) {
    throw Error("inference() does not build leaves");
  }
  auto n = std::make_shared<Node>();
  n->rule = r;
  n->conclusion = std::move(conclusion);
  n->children = std::move(children);
  n->size = total_size(n->children);

  Grounds grounds;
  std::optional<Sign> sign;
  for (const Proof& c : n->children) {
    if (!c.evaluated()) throw Error("inference() requires evaluated children");
    grounds.insert(c.grounds().begin(), c.grounds().end());
    if (!sign) {
      sign = c.sign();
    } else {
      sign = dictionary(sign->dict()).combine(*sign, c.sign());
    }
  }
  if (!sign) throw Error("inference() requires at least one child");
  n->evaluated = true;
  n->grounds = std::move(grounds);
  n->sign = *sign;
  return Proof(std::move(n));
}

Proof Proof::shape(Rule r, Formula conclusion, std::vector<Proof> children,
                   std::optional<GroundLabel> label) {
  auto n = std::make_shared<Node>();
  n->rule = r;
  n->conclusion = std::move(conclusion);
  n->children = std::move(children);
  n->label = std::move(label);
  n->size = total_size(n->children);
  return Proof(std::move(n));
}

const Proof::Node& Proof::deref(const std::shared_ptr<const Node>& node) {
  if (node == nullptr) throw Error("operation on an empty proof");
  return *node;
}

Rule Proof::rule() const { return deref(node_).rule; }
const Formula& Proof::conclusion() const { return deref(node_).conclusion; }
const std::vector<Proof>& Proof::children() const { return deref(node_).children; }
const std::optional<GroundLabel>& Proof::label() const { return deref(node_).label; }
bool Proof::evaluated() const { return deref(node_).evaluated; }

const Grounds& Proof::grounds() const {
  const Node& n = deref(node_);
  if (!n.evaluated) throw Error("grounds() on an unchecked proof");
  return n.grounds;
}

const Sign& Proof::sign() const {
  const Node& n = deref(node_);
  if (!n.evaluated || !n.sign) throw Error("sign() on an unchecked proof");
  return *n.sign;
}

std::size_t Proof::size() const { return deref(node_).size; }

namespace {

void render(const Proof& p, std::ostringstream& os, int indent) {
  for (int i = 0; i < indent; ++i) os << "  ";
  os << rule_name(p.rule());
  if (p.label()) os << ' ' << p.label()->str();
  os << ": " << p.conclusion().str() << '\n';
  for (const Proof& c : p.children()) render(c, os, indent + 1);
}

}  // namespace

std::string Proof::str() const {
  std::ostringstream os;
  render(*this, os, 0);
  std::string out = os.str();
  if (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

std::strong_ordering Proof::operator<=>(const Proof& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  if (node_ == nullptr) return std::strong_ordering::less;
  if (other.node_ == nullptr) return std::strong_ordering::greater;
  if (auto c = node_->rule <=> other.node_->rule; c != 0) return c;
  if (auto c = node_->conclusion <=> other.node_->conclusion; c != 0) return c;
  const bool has_l = node_->label.has_value(), has_r = other.node_->label.has_value();
  if (auto c = has_l <=> has_r; c != 0) return c;
  if (has_l) {
    if (auto c = *node_->label <=> *other.node_->label; c != 0) return c;
  }
  if (auto c = node_->children.size() <=> other.node_->children.size(); c != 0) return c;
  for (std::size_t i = 0; i < node_->children.size(); ++i) {
    if (auto c = node_->children[i] <=> other.node_->children[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool Proof::operator==(const Proof& other) const {
  return (*this <=> other) == std::strong_ordering::equal;
}

bool same_triple(const Argument& a, const Argument& b) {
  return a.formula == b.formula && a.grounds == b.grounds && a.sign == b.sign;
}

bool TripleLess::operator()(const Argument& a, const Argument& b) const {
  if (auto c = a.formula <=> b.formula; c != 0) return c < 0;
  if (auto c = a.grounds <=> b.grounds; c != 0) return c < 0;
  return a.sign < b.sign;
}

std::string argument_str(const Argument& a) {
  return "(" + a.formula.str() + ", " + grounds_str(a.grounds) + ", " +
         a.sign.str() + ")";
}

namespace {

class Checker {
 public:
  explicit Checker(const Database& db) : db_(db), dict_(db.dict()) {}

  Proof run(const Proof& p) {
    std::vector<Formula> env;
    return walk(p, env, "");
  }

 private:
  [[noreturn]] void fail(const std::string& message, const std::string& path) {
    throw ProofError(message, path);
  }

  static std::string child_path(const std::string& path, std::size_t i) {
    return path.empty() ? std::to_string(i) : path + '.' + std::to_string(i);
  }

  void expect_children(const Proof& p, std::size_t n, const std::string& path) {
    if (p.children().size() != n) {
      fail(rule_name(p.rule()) + " takes " + std::to_string(n) + " premises, got " +
               std::to_string(p.children().size()),
           path);
    }
  }

  // Validates the subtree, returns its evaluated rebuild with
  // kernel-normal conclusions.
  Proof walk(const Proof& p, std::vector<Formula>& env, const std::string& path) {
    if (p.empty()) fail("empty proof", path);
    const Formula conclusion = normalize(p.conclusion());
    switch (p.rule()) {
      case Rule::axiom: {
        if (!p.label()) fail("axiom node needs a label", path);
        const AxiomEntry* ax = db_.find(p.label()->label);
        if (ax == nullptr) fail("unknown axiom label: " + p.label()->label, path);
        if (p.label()->binding.size() != ax->variables.size()) {
          fail("label " + p.label()->str() + " binds " +
                   std::to_string(p.label()->binding.size()) + " of " +
                   std::to_string(ax->variables.size()) + " variables",
               path);
        }
        for (std::size_t i = 0; i < ax->variables.size(); ++i) {
          if (p.label()->binding[i].first != ax->variables[i]) {
            fail("label " + p.label()->str() + " binds " +
                     p.label()->binding[i].first + " where axiom " + ax->label +
                     " expects " + ax->variables[i],
                 path);
          }
        }
        Formula instance;
        try {
          instance = normalize(substitute(ax->formula, p.label()->binding));
        } catch (const Error& e) {
          fail(e.what(), path);
        }
        if (instance != conclusion) {
          fail("conclusion " + conclusion.str() + " is not axiom " +
                   p.label()->str() + " = " + instance.str(),
               path);
        }
        if (!ax->sign.positive()) {
          fail("axiom " + ax->label + " carries doubt sign " + ax->sign.str() +
                   " and cannot support a proof",
               path);
        }
        expect_children(p, 0, path);
        return Proof::axiom(conclusion, *p.label(), ax->sign);
      }

      case Rule::hypothesis: {
        expect_children(p, 0, path);
        if (std::find(env.begin(), env.end(), conclusion) == env.end()) {
          fail("undischarged hypothesis " + conclusion.str(), path);
        }
        return Proof::hypothesis(conclusion, dict_.top());
      }

      case Rule::and_intro: {
        expect_children(p, 2, path);
        Proof l = walk(p.children()[0], env, child_path(path, 0));
        Proof r = walk(p.children()[1], env, child_path(path, 1));
        if (conclusion != Formula::conjunction(l.conclusion(), r.conclusion())) {
          fail("conclusion " + conclusion.str() + " is not the conjunction of its premises",
               path);
        }
        return Proof::inference(Rule::and_intro, conclusion, {l, r});
      }

      case Rule::and_elim_left:
      case Rule::and_elim_right: {
        expect_children(p, 1, path);
        Proof c = walk(p.children()[0], env, child_path(path, 0));
        if (c.conclusion().kind() != FormulaKind::conjunction) {
          fail("premise of " + rule_name(p.rule()) + " is not a conjunction", path);
        }
        const Formula& projected = p.rule() == Rule::and_elim_left
                                       ? c.conclusion().lhs()
                                       : c.conclusion().rhs();
        if (conclusion != projected) {
          fail("conclusion " + conclusion.str() + " does not project from " +
                   c.conclusion().str(),
               path);
        }
        return Proof::inference(p.rule(), conclusion, {c});
      }

      case Rule::imp_intro: {
        expect_children(p, 1, path);
        if (conclusion.kind() != FormulaKind::implication) {
          fail("imp_intro conclusion must be an implication", path);
        }
        env.push_back(conclusion.lhs());
        Proof c = walk(p.children()[0], env, child_path(path, 0));
        env.pop_back();
        if (c.conclusion() != conclusion.rhs()) {
          fail("premise concludes " + c.conclusion().str() + ", expected " +
                   conclusion.rhs().str(),
               path);
        }
        return Proof::inference(Rule::imp_intro, conclusion, {c});
      }

      case Rule::imp_elim: {
        expect_children(p, 2, path);
        Proof minor = walk(p.children()[0], env, child_path(path, 0));
        Proof major = walk(p.children()[1], env, child_path(path, 1));
        if (major.conclusion().kind() != FormulaKind::implication) {
          fail("major premise of imp_elim is not an implication", path);
        }
        if (minor.conclusion() != major.conclusion().lhs()) {
          fail("minor premise concludes " + minor.conclusion().str() +
                   ", expected " + major.conclusion().lhs().str(),
               path);
        }
        if (conclusion != major.conclusion().rhs()) {
          fail("conclusion " + conclusion.str() + " does not follow from " +
                   major.conclusion().str(),
               path);
        }
        return Proof::inference(Rule::imp_elim, conclusion, {minor, major});
      }

      case Rule::or_intro_left:
      case Rule::or_intro_right: {
        expect_children(p, 1, path);
        Proof c = walk(p.children()[0], env, child_path(path, 0));
        if (conclusion.kind() != FormulaKind::disjunction) {
          fail(rule_name(p.rule()) + " conclusion must be a disjunction", path);
        }
        const Formula& side = p.rule() == Rule::or_intro_left ? conclusion.lhs()
                                                              : conclusion.rhs();
        if (c.conclusion() != side) {
          fail("premise concludes " + c.conclusion().str() + ", expected " + side.str(),
               path);
        }
        return Proof::inference(p.rule(), conclusion, {c});
      }

      case Rule::or_elim: {
        expect_children(p, 3, path);
        Proof major = walk(p.children()[0], env, child_path(path, 0));
        if (major.conclusion().kind() != FormulaKind::disjunction) {
          fail("major premise of or_elim is not a disjunction", path);
        }
        env.push_back(major.conclusion().lhs());
        Proof left = walk(p.children()[1], env, child_path(path, 1));
        env.pop_back();
        env.push_back(major.conclusion().rhs());
        Proof right = walk(p.children()[2], env, child_path(path, 2));
        env.pop_back();
        if (left.conclusion() != conclusion || right.conclusion() != conclusion) {
          fail("or_elim cases must both conclude " + conclusion.str(), path);
        }
        return Proof::inference(Rule::or_elim, conclusion, {major, left, right});
      }

      case Rule::not_intro: {
        expect_children(p, 1, path);
        if (conclusion.kind() != FormulaKind::implication ||
            conclusion.rhs().kind() != FormulaKind::falsum) {
          fail("not_intro conclusion must be a negation", path);
        }
        env.push_back(conclusion.lhs());
        Proof c = walk(p.children()[0], env, child_path(path, 0));
        env.pop_back();
        if (c.conclusion().kind() != FormulaKind::falsum) {
          fail("premise of not_intro must conclude #", path);
        }
        return Proof::inference(Rule::not_intro, conclusion, {c});
      }

      case Rule::not_elim: {
        expect_children(p, 2, path);
        Proof minor = walk(p.children()[0], env, child_path(path, 0));
        Proof major = walk(p.children()[1], env, child_path(path, 1));
        if (conclusion.kind() != FormulaKind::falsum) {
          fail("not_elim concludes #", path);
        }
        if (major.conclusion().kind() != FormulaKind::implication ||
            major.conclusion().rhs().kind() != FormulaKind::falsum) {
          fail("major premise of not_elim is not a negation", path);
        }
        if (minor.conclusion() != major.conclusion().lhs()) {
          fail("minor premise concludes " + minor.conclusion().str() +
                   ", expected " + major.conclusion().lhs().str(),
               path);
        }
        return Proof::inference(Rule::not_elim, conclusion, {minor, major});
      }
    }
    fail("unknown rule", path);
  }

  const Database& db_;
  const Dictionary& dict_;
};

}  // namespace

Argument check_proof(const Database& db, const Proof& proof) {
  Checker checker(db);
  Proof evaluated = checker.run(proof);
  return Argument{evaluated.conclusion(), evaluated.grounds(), evaluated.sign(),
                  evaluated};
}

bool proof_mentions(const Proof& proof, const Formula& q) {
  if (proof.empty()) return false;
  Formula target = normalize(q);
  // Checked proofs hold kernel-normal conclusions, but tolerate surface
  // shapes anyway.
  struct Walk {
    const Formula& target;
    bool found = false;
    void operator()(const Proof& p) {
      if (found) return;
      if (normalize(p.conclusion()) == target) {
        found = true;
        return;
      }
      for (const Proof& c : p.children()) (*this)(c);
    }
  } walk{target};
  walk(proof);
  return walk.found;
}

}  // namespace argue
