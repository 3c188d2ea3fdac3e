#include "argue/criteria.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <set>

#include "argue/defeat.hpp"
#include "argue/errors.hpp"

namespace argue {

const std::string& abstract_sign_name(AbstractSign s) {
  static const std::array<std::string, 4> names = {"--", "-", "+", "++"};
  return names[static_cast<std::size_t>(s)];
}

const std::string& criterion_status_name(CriterionStatus s) {
  static const std::array<std::string, 3> names = {"pass", "fail", "not-applicable"};
  return names[static_cast<std::size_t>(s)];
}

bool CriteriaReport::all_pass() const {
  for (const CriterionResult& e : entries) {
    if (!e.informational && e.status == CriterionStatus::fail) return false;
  }
  return true;
}

const CriterionResult* CriteriaReport::find(const std::string& criterion) const {
  for (const CriterionResult& e : entries) {
    if (e.criterion == criterion) return &e;
  }
  return nullptr;
}

std::vector<FlatCase> generate_flattening_cases(DictId source, std::size_t count,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Dictionary& dict = dictionary(source);
  const std::vector<Sign> elements = dict.elements();
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto random_sign = [&]() -> Sign {
    if (source == DictId::numeric) return Sign::numeric(unit(rng));
    return elements[rng() % elements.size()];
  };

  std::vector<FlatCase> cases;
  cases.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    FlatCase c;
    const std::size_t size = rng() % 6;
    for (std::size_t k = 0; k < size; ++k) c.base.push_back(random_sign());
    c.extra = static_cast<AbstractSign>(rng() % 4);
    switch (c.extra) {
      case AbstractSign::plus:
        // Positive but not confirming.
        c.extra_concrete = source == DictId::numeric
                               ? Sign::numeric(unit(rng))
                               : Sign::symbolic(source, SymbolicSign::plus);
        break;
      case AbstractSign::plus_plus:
        if (dict.has_confirmation()) c.extra_concrete = dict.top();
        break;
      case AbstractSign::minus:
        if (dict.has_doubt()) {
          c.extra_concrete = Sign::symbolic(source, SymbolicSign::minus);
        }
        break;
      case AbstractSign::minus_minus:
        if (source == DictId::bounded_delta) {
          c.extra_concrete = Sign::symbolic(source, SymbolicSign::minus_minus);
        }
        break;
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

namespace {

bool conf_eq(const Confidence& a, const Confidence& b) {
  if (a.kind() == Confidence::Kind::real && b.kind() == Confidence::Kind::real) {
    return std::fabs(a.value() - b.value()) <= kRealTolerance;
  }
  return a == b;
}

bool conf_leq(const Confidence& a, const Confidence& b) {
  if (a.kind() == Confidence::Kind::real && b.kind() == Confidence::Kind::real) {
    return a.value() <= b.value() + kRealTolerance;
  }
  return a.leq(b);
}

std::vector<Argument> as_arguments(const std::vector<Sign>& signs) {
  static const Formula p = Formula::atom("p");
  std::vector<Argument> out;
  out.reserve(signs.size());
  for (const Sign& s : signs) out.push_back(Argument{p, {}, s, Proof{}});
  return out;
}

std::string render_signs(const std::vector<Sign>& signs) {
  std::string out = "[";
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i) out += ", ";
    out += signs[i].str();
  }
  return out + "]";
}

bool has_confirming_sign(const std::vector<Sign>& signs) {
  for (const Sign& s : signs) {
    if (!s.is_numeric() && s.symbol() == SymbolicSign::plus_plus) return true;
  }
  return false;
}

struct CriterionTally {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::optional<std::string> counterexample;

  void fail(std::string witness) {
    if (!counterexample) counterexample = std::move(witness);
  }
};

std::string count_noun(std::size_t n, const std::string& noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

CriterionResult finish(const std::string& name, const CriterionTally& t,
                       std::string na_detail, std::string pass_detail) {
  CriterionResult r;
  r.criterion = name;
  if (t.counterexample) {
    r.status = CriterionStatus::fail;
    r.counterexample = *t.counterexample;
    return r;
  }
  if (t.checked == 0) {
    r.status = CriterionStatus::not_applicable;
    r.detail = std::move(na_detail);
    return r;
  }
  r.status = CriterionStatus::pass;
  r.detail = std::move(pass_detail);
  if (t.skipped > 0) {
    r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(t.skipped) +
                " confirming cases exempt";
  }
  return r;
}

}  // namespace

CriteriaReport check_flattening_criteria(const Flattener& f,
                                         const std::vector<FlatCase>& cases) {
  CriterionTally f1, f2, f3, f4;
  const bool source_has_mm = f.source == DictId::bounded_delta;

  for (const FlatCase& c : cases) {
    const Confidence base = flatten(as_arguments(c.base), f);
    std::vector<Sign> extended = c.base;
    if (c.extra_concrete) extended.push_back(*c.extra_concrete);
    const Confidence ext = flatten(as_arguments(extended), f);

    switch (c.extra) {
      case AbstractSign::plus: {
        if (!c.extra_concrete) break;
        ++f1.checked;
        if (!conf_leq(base, ext)) {
          f1.fail("base=" + render_signs(c.base) + " extra=" +
                  c.extra_concrete->str() + ": " + base.str() + " > " + ext.str());
        }
        break;
      }
      case AbstractSign::plus_plus: {
        if (!c.extra_concrete) break;
        ++f2.checked;
        const Confidence alone =
            flatten(as_arguments({*c.extra_concrete}), f);
        if (!conf_eq(alone, ext)) {
          f2.fail("base=" + render_signs(c.base) + " extra=" +
                  c.extra_concrete->str() + ": " + ext.str() +
                  " != " + alone.str());
        }
        break;
      }
      case AbstractSign::minus: {
        // Without a concrete doubt sign the extended bag equals the
        // base and the criterion holds by equality.
        ++f3.checked;
        if (!conf_leq(ext, base)) {
          f3.fail("base=" + render_signs(c.base) + " extra=-: " + ext.str() +
                  " > " + base.str());
        }
        break;
      }
      case AbstractSign::minus_minus: {
        if (!source_has_mm || !c.extra_concrete) break;
        if (has_confirming_sign(c.base)) {
          ++f4.skipped;
          break;
        }
        ++f4.checked;
        const Confidence alone =
            flatten(as_arguments({*c.extra_concrete}), f);
        if (!conf_eq(alone, ext)) {
          f4.fail("base=" + render_signs(c.base) + " extra=--: " + ext.str() +
                  " != " + alone.str());
        }
        break;
      }
    }
  }

  const Dictionary& src = dictionary(f.source);
  CriteriaReport report;
  report.entries.push_back(finish(
      "F1", f1, "no cases", count_noun(f1.checked, "case")));
  report.entries.push_back(finish(
      "F2", f2,
      "the " + src.name() + " dictionary has no confirming element",
      count_noun(f2.checked, "case")));
  report.entries.push_back(finish(
      "F3", f3, "no cases",
      count_noun(f3.checked, "case") +
          (src.has_doubt() ? "" : "; holds with equality, the " + src.name() +
                                      " dictionary cannot express doubt")));
  report.entries.push_back(finish(
      "F4", f4, "the " + src.name() + " dictionary has no -- element",
      count_noun(f4.checked, "case")));
  return report;
}

namespace {

struct Triple {
  Formula formula;
  Grounds grounds;
  Sign sign;

  auto operator<=>(const Triple&) const = default;
  bool operator==(const Triple&) const = default;
};

struct AcrPool {
  std::vector<Formula> universe;
  std::set<Triple> pro;
  std::set<Triple> con;
};

bool is_neg(const Formula& f) {
  return f.kind() == FormulaKind::implication && f.rhs().kind() == FormulaKind::falsum;
}

Formula neg(const Formula& f) { return Formula::implication(f, Formula::falsum()); }

std::string triple_str(const Triple& t) {
  return "(" + t.formula.str() + ", " + grounds_str(t.grounds) + ", " +
         t.sign.str() + ")";
}

// C1 (and, at the stronger level, C3): for every formula q in the
// universe, doubt (q, a, -) must hold exactly when support (-q, a, +)
// does.  Quantifying over q keeps the two sides dual of each other;
// quantifying over all pro arguments instead would demand double
// negation elimination for ~~q conclusions, which the fragment does not
// have.
CriterionTally eval_biconditional(const AcrPool& pool, DictId dict,
                                  SymbolicSign pos, SymbolicSign negs) {
  CriterionTally t;
  const Sign pos_sign = Sign::symbolic(dict, pos);
  const Sign neg_sign = Sign::symbolic(dict, negs);
  for (const Formula& q : pool.universe) {
    const Formula c = complement(q);
    for (const Triple& a : pool.con) {
      if (a.formula != q || a.sign != neg_sign) continue;
      ++t.checked;
      Triple want{c, a.grounds, pos_sign};
      if (!pool.pro.count(want)) {
        t.fail(triple_str(a) + " has no counterpart " + triple_str(want));
      }
    }
    for (const Triple& a : pool.pro) {
      if (a.formula != c || a.sign != pos_sign) continue;
      ++t.checked;
      Triple want{q, a.grounds, neg_sign};
      if (!pool.con.count(want)) {
        t.fail(triple_str(want) + " is missing for " + triple_str(a));
      }
    }
  }
  return t;
}

// C2 (and C4 at ++): when p is itself a negation ~q, support for q must
// lift to support for ~p = ~~q.
CriterionTally eval_negation_lift(const AcrPool& pool, SymbolicSign level) {
  CriterionTally t;
  const std::set<Formula> universe(pool.universe.begin(), pool.universe.end());
  for (const Formula& p : pool.universe) {
    if (!is_neg(p)) continue;
    const Formula q = p.lhs();  // -p for a negation p
    const Formula np = neg(p);
    if (!universe.count(np)) continue;  // outside the enumerated universe
    for (const Triple& a : pool.pro) {
      if (a.formula != q || a.sign.symbol() != level) continue;
      ++t.checked;
      Triple want{np, a.grounds, a.sign};
      if (!pool.pro.count(want)) {
        t.fail(triple_str(a) + " does not lift to " + triple_str(want));
      }
    }
  }
  return t;
}

AcrPool closed_pool(const Database& db, const SearchLimits& limits) {
  AcrPool out;
  SignedArgumentPool pool = signed_closure(db, limits);
  out.universe = std::move(pool.universe);
  for (const Argument& a : pool.pro) out.pro.insert({a.formula, a.grounds, a.sign});
  for (const ConArgument& a : pool.con) {
    out.con.insert({a.formula, a.grounds, a.sign});
  }
  return out;
}

AcrPool base_pool(const Database& db, const SearchLimits& limits) {
  AcrPool out;
  out.universe = closure_universe(db);
  for (const Formula& u : out.universe) {
    for (const Argument& a : find_arguments(db, u, limits)) {
      out.pro.insert({a.formula, a.grounds, a.sign});
    }
  }
  return out;
}

}  // namespace

CriteriaReport check_acr_criteria(const Database& db, const SearchLimits& limits,
                                  bool with_closure) {
  const Dictionary& dict = db.dict();
  if (!dict.has_doubt()) {
    throw DictionaryError(
        "sign coherence checks need a delta dictionary, got " + dict.name());
  }
  const DictId id = db.dict_id();
  const bool has_strong = id == DictId::bounded_delta;

  AcrPool pool = with_closure ? closed_pool(db, limits) : base_pool(db, limits);

  CriteriaReport report;
  {
    CriterionTally t =
        eval_biconditional(pool, id, SymbolicSign::plus, SymbolicSign::minus);
    report.entries.push_back(finish("C1", t, "no positively signed arguments",
                                    count_noun(t.checked, "pairing")));
  }
  {
    CriterionTally t = eval_negation_lift(pool, SymbolicSign::plus);
    report.entries.push_back(finish("C2", t, "no negated formulas with support",
                                    count_noun(t.checked, "lifting")));
  }
  if (has_strong) {
    CriterionTally t = eval_biconditional(pool, id, SymbolicSign::plus_plus,
                                          SymbolicSign::minus_minus);
    report.entries.push_back(finish("C3", t, "no confirmed arguments",
                                    count_noun(t.checked, "pairing")));
    CriterionTally t4 = eval_negation_lift(pool, SymbolicSign::plus_plus);
    report.entries.push_back(finish("C4", t4,
                                    "no negated formulas with confirmation",
                                    count_noun(t4.checked, "lifting")));
  } else {
    for (const char* name : {"C3", "C4"}) {
      CriterionResult r;
      r.criterion = name;
      r.status = CriterionStatus::not_applicable;
      r.detail = "the " + dict.name() + " dictionary has no ++/--";
      report.entries.push_back(std::move(r));
    }
  }

  if (with_closure) {
    // What the bare engine manages on its own, for the record.
    AcrPool bare = base_pool(db, limits);
    CriterionTally t =
        eval_biconditional(bare, id, SymbolicSign::plus, SymbolicSign::minus);
    CriterionResult r = finish("C1-base", t, "no positively signed arguments",
                               count_noun(t.checked, "pairing"));
    r.informational = true;
    r.detail = (r.detail.empty() ? "" : r.detail + "; ") +
               std::string("search engine without the signed closure");
    report.entries.push_back(std::move(r));
  }
  return report;
}

}  // namespace argue
