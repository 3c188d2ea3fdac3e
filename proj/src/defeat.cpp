#include "argue/defeat.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>

#include "argue/errors.hpp"

namespace argue {

std::string con_argument_str(const ConArgument& a) {
  return "(" + a.formula.str() + ", " + grounds_str(a.grounds) + ", " +
         a.sign.str() + ")";
}

namespace {

bool is_neg(const Formula& f) {
  return f.kind() == FormulaKind::implication && f.rhs().kind() == FormulaKind::falsum;
}

Formula neg(const Formula& f) {
  return Formula::implication(f, Formula::falsum());
}

void add_subformulas(const Formula& f, std::set<Formula>& out) {
  out.insert(f);
  switch (f.kind()) {
    case FormulaKind::falsum:
    case FormulaKind::atom:
      return;
    case FormulaKind::negation:
      add_subformulas(f.body(), out);
      return;
    default:
      add_subformulas(f.lhs(), out);
      add_subformulas(f.rhs(), out);
      return;
  }
}

// Ground subformula instances of the axioms and extra goals, closed
// under single and double negation, minus # and ~# and anything the
// search fragment cannot handle.
std::vector<Formula> build_universe(const Database& db,
                                    const std::vector<Formula>& extra_goals) {
  std::set<Formula> base;
  for (const Database::Instance& inst : db.ground_instances()) {
    add_subformulas(inst.formula, base);
  }
  for (const Formula& g : extra_goals) {
    if (!g.is_ground()) {
      throw SearchError("goal must be ground: " + g.str());
    }
    add_subformulas(normalize(g), base);
  }

  std::erase_if(base, [](const Formula& f) {
    return f == Formula::falsum() || f == neg(Formula::falsum()) ||
           f.contains(FormulaKind::disjunction);
  });

  std::set<Formula> universe = base;
  for (const Formula& f : base) {
    universe.insert(neg(f));
    universe.insert(neg(neg(f)));
  }
  return {universe.begin(), universe.end()};
}

struct TripleKey {
  Formula formula;
  Grounds grounds;
  Sign sign;

  auto operator<=>(const TripleKey&) const = default;
  bool operator==(const TripleKey&) const = default;
};

}  // namespace

std::vector<Formula> closure_universe(const Database& db,
                                      const std::vector<Formula>& extra_goals) {
  return build_universe(db, extra_goals);
}

SignedArgumentPool signed_closure(const Database& db, const SearchLimits& limits,
                                  const std::vector<Formula>& extra_goals) {
  const Dictionary& dict = db.dict();
  if (!dict.has_doubt()) {
    throw DictionaryError("signed closure needs a delta dictionary, got " +
                          dict.name());
  }

  SignedArgumentPool pool;
  pool.dict = db.dict_id();
  pool.universe = build_universe(db, extra_goals);

  std::vector<Argument> pro;
  std::set<TripleKey> seen;
  for (const Formula& u : pool.universe) {
    for (Argument& a : find_arguments(db, u, limits)) {
      if (seen.insert({a.formula, a.grounds, a.sign}).second) {
        pro.push_back(std::move(a));
      }
    }
  }

  // Arguments for q induce arguments for ~~q with the same grounds and
  // sign: hypothesise ~q, refute it with the argument.  Search finds
  // these anyway when the depth allows; inducing them keeps support
  // across double negation independent of the depth cutoff.  Repeat to
  // cover nested double negations.
  const std::set<Formula> in_universe(pool.universe.begin(), pool.universe.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t snapshot = pro.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      const Formula candidate = neg(neg(pro[i].formula));
      if (!in_universe.count(candidate)) continue;
      if (seen.count({candidate, pro[i].grounds, pro[i].sign})) continue;
      Proof hyp = Proof::hypothesis(neg(pro[i].formula), dict.top());
      Proof bottom = Proof::inference(Rule::imp_elim, Formula::falsum(),
                                      {pro[i].proof, std::move(hyp)});
      Proof full =
          Proof::inference(Rule::imp_intro, candidate, {std::move(bottom)});
      Argument arg{candidate, pro[i].grounds, pro[i].sign, std::move(full)};
      seen.insert({arg.formula, arg.grounds, arg.sign});
      pro.push_back(std::move(arg));
      grew = true;
    }
  }

  std::sort(pro.begin(), pro.end(), TripleLess{});
  pool.pro = std::move(pro);

  // Index pro arguments by conclusion.
  std::map<Formula, std::vector<std::size_t>> by_formula;
  for (std::size_t i = 0; i < pool.pro.size(); ++i) {
    by_formula[pool.pro[i].formula].push_back(i);
  }

  for (const Formula& u : pool.universe) {
    auto it = by_formula.find(complement(u));
    if (it == by_formula.end()) continue;
    for (std::size_t i : it->second) {
      const Argument& a = pool.pro[i];
      pool.con.push_back(ConArgument{u, a.grounds, dict.flip(a.sign), i});
    }
  }
  std::sort(pool.con.begin(), pool.con.end(),
            [](const ConArgument& a, const ConArgument& b) {
              if (auto c = a.formula <=> b.formula; c != 0) return c < 0;
              if (auto c = a.grounds <=> b.grounds; c != 0) return c < 0;
              return a.sign < b.sign;
            });
  return pool;
}

bool rebuts(const ConArgument& attacker, const Argument& target) {
  if (attacker.formula != target.formula) return false;
  if (attacker.sign.is_numeric() || target.sign.is_numeric()) return false;
  if (attacker.sign.positive() || !target.sign.positive()) return false;
  if (attacker.sign.symbol() == SymbolicSign::minus_minus) return true;
  return target.sign.symbol() == SymbolicSign::plus;
}

namespace {

bool proof_has_weak_node(const Proof& p, const Formula& q, bool strong) {
  if (p.conclusion() == q) {
    if (strong) return true;
    if (!p.sign().is_numeric() && p.sign().symbol() == SymbolicSign::plus) {
      return true;
    }
  }
  for (const Proof& c : p.children()) {
    if (proof_has_weak_node(c, q, strong)) return true;
  }
  return false;
}

}  // namespace

bool discounts(const ConArgument& attacker, const Argument& target) {
  if (attacker.sign.is_numeric() || attacker.sign.positive()) return false;
  if (target.proof.empty()) return false;
  const bool strong = attacker.sign.symbol() == SymbolicSign::minus_minus;
  return proof_has_weak_node(target.proof, attacker.formula, strong);
}

const std::string& status_name(Status s) {
  static const std::array<std::string, 3> names = {"IN", "OUT", "UNDEC"};
  return names[static_cast<std::size_t>(s)];
}

Labelling grounded_labelling(const SignedArgumentPool& pool) {
  Labelling lab;
  for (std::size_t ci = 0; ci < pool.con.size(); ++ci) {
    for (std::size_t pi = 0; pi < pool.pro.size(); ++pi) {
      if (rebuts(pool.con[ci], pool.pro[pi])) {
        lab.edges.push_back({ci, pi, AttackEdge::Kind::rebut});
      }
      if (discounts(pool.con[ci], pool.pro[pi])) {
        lab.edges.push_back({ci, pi, AttackEdge::Kind::discount});
      }
    }
  }

  // A con argument is exactly as defeated as its counterpart, so the
  // fixpoint runs over pro arguments with attacks lifted through
  // counterparts.
  std::vector<std::set<std::size_t>> attackers(pool.pro.size());
  for (const AttackEdge& e : lab.edges) {
    attackers[e.pro].insert(pool.con[e.con].counterpart);
  }

  std::vector<std::optional<Status>> st(pool.pro.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < st.size(); ++i) {
      if (st[i]) continue;
      bool all_out = true;
      bool any_in = false;
      for (std::size_t a : attackers[i]) {
        if (st[a] != Status::out) all_out = false;
        if (st[a] == Status::in) any_in = true;
      }
      if (all_out) {
        st[i] = Status::in;
        changed = true;
      } else if (any_in) {
        st[i] = Status::out;
        changed = true;
      }
    }
  }

  lab.pro.resize(pool.pro.size());
  for (std::size_t i = 0; i < st.size(); ++i) {
    lab.pro[i] = st[i].value_or(Status::undec);
  }
  lab.con.resize(pool.con.size());
  for (std::size_t i = 0; i < pool.con.size(); ++i) {
    lab.con[i] = lab.pro[pool.con[i].counterpart];
  }
  return lab;
}

Confidence selective_aggregate(const Database& db, const Formula& goal,
                               const Flattener& f, const SearchLimits& limits) {
  if (!db.dict().has_doubt()) {
    return flatten(find_arguments(db, goal, limits), f);
  }
  Formula g = normalize(goal);
  SignedArgumentPool pool = signed_closure(db, limits, {g});
  Labelling lab = grounded_labelling(pool);
  std::vector<Argument> in_args;
  for (std::size_t i = 0; i < pool.pro.size(); ++i) {
    if (pool.pro[i].formula == g && lab.pro[i] == Status::in) {
      in_args.push_back(pool.pro[i]);
    }
  }
  return flatten(in_args, f);
}

}  // namespace argue
