#include "argue/prover.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "argue/errors.hpp"

namespace argue {

namespace {

// How a premise (axiom instance or hypothesis) is consumed: a chain of
// eliminations from its root down to the subformula that meets the goal.
enum class StepKind {
  and_left,   // X & Y  =>  X
  and_right,  // X & Y  =>  Y
  imp,        // X -> Y =>  Y, spending a proof of X
};

// An elimination chain through a schema formula, ending at `target`.
struct SchemaPath {
  Formula target;
  std::vector<StepKind> steps;
};

void build_paths(const Formula& f, std::vector<StepKind>& prefix,
                 std::vector<SchemaPath>& out) {
  out.push_back({f, prefix});
  switch (f.kind()) {
    case FormulaKind::conjunction:
      prefix.push_back(StepKind::and_left);
      build_paths(f.lhs(), prefix, out);
      prefix.back() = StepKind::and_right;
      build_paths(f.rhs(), prefix, out);
      prefix.pop_back();
      break;
    case FormulaKind::implication:
      prefix.push_back(StepKind::imp);
      build_paths(f.rhs(), prefix, out);
      prefix.pop_back();
      break;
    default:
      break;
  }
}

std::vector<SchemaPath> paths_of(const Formula& f) {
  std::vector<SchemaPath> out;
  std::vector<StepKind> prefix;
  build_paths(f, prefix, out);
  return out;
}

// Matches a schema pattern against a ground goal, extending `binding`.
// Only pattern variables bind; everything else must agree exactly.
bool match(const Formula& pattern, const Formula& goal,
           std::map<std::string, std::string>& binding) {
  if (pattern.kind() != goal.kind()) return false;
  switch (pattern.kind()) {
    case FormulaKind::falsum:
      return true;
    case FormulaKind::atom: {
      if (pattern.predicate() != goal.predicate()) return false;
      if (pattern.args().size() != goal.args().size()) return false;
      for (std::size_t i = 0; i < pattern.args().size(); ++i) {
        const Term& pt = pattern.args()[i];
        const Term& gt = goal.args()[i];
        if (!pt.is_variable()) {
          if (pt.name != gt.name) return false;
          continue;
        }
        auto [it, inserted] = binding.emplace(pt.name, gt.name);
        if (!inserted && it->second != gt.name) return false;
      }
      return true;
    }
    case FormulaKind::negation:
      return match(pattern.body(), goal.body(), binding);
    default:
      return match(pattern.lhs(), goal.lhs(), binding) &&
             match(pattern.rhs(), goal.rhs(), binding);
  }
}

using TableKey = std::pair<Grounds, Sign>;

struct TableEntry {
  int depth;
  Proof proof;
};

// True when `a` should replace `b` as the retained witness for a key
// found at the same depth.
bool better_witness(const Proof& a, const Proof& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

class Engine {
 public:
  Engine(const Database& db, const SearchLimits& limits)
      : db_(db), limits_(limits), dict_(db.dict()) {
    for (const AxiomEntry& ax : db_.axioms()) {
      axiom_paths_.push_back(paths_of(ax.normalized));
    }
    ctxs_.push_back({});
    ctx_ids_.emplace(std::vector<Formula>{}, 0);
  }

  std::vector<Argument> run(const Formula& goal) {
    const int root = get_node(goal, 0);
    while (!pending_.empty()) {
      int id = pending_.back();
      pending_.pop_back();
      build_producers(id);
    }
    saturate();

    std::vector<Argument> out;
    for (const auto& [key, entry] : nodes_[root].table) {
      out.push_back(Argument{goal, key.first, key.second, entry.proof});
    }
    std::sort(out.begin(), out.end(), TripleLess{});

    if (limits_.minimal_only) {
      std::vector<Argument> kept;
      for (const Argument& a : out) {
        bool dominated = false;
        for (const Argument& b : out) {
          if (b.grounds.size() < a.grounds.size() &&
              std::includes(a.grounds.begin(), a.grounds.end(),
                            b.grounds.begin(), b.grounds.end())) {
            dominated = true;
            break;
          }
        }
        if (!dominated) kept.push_back(a);
      }
      out = std::move(kept);
    }

    if (out.size() > static_cast<std::size_t>(limits_.max_arguments)) {
      out.resize(static_cast<std::size_t>(limits_.max_arguments));
    }
    return out;
  }

 private:
  // A premise consumed along an instantiated elimination chain.
  struct MatchProducer {
    std::optional<GroundLabel> label;  // absent for hypotheses
    Formula premise;                   // ground, kernel-normal
    Sign premise_sign;
    std::vector<StepKind> steps;
    std::vector<int> antecedents;      // node ids, one per imp step
  };

  struct Node {
    Formula goal;
    int ctx;
    std::vector<MatchProducer> matches;
    std::optional<std::pair<int, int>> and_intro;  // left, right node
    std::optional<int> imp_intro;                  // body node
    std::map<TableKey, TableEntry> table;
  };

  int get_ctx(std::vector<Formula> hyps) {
    auto it = ctx_ids_.find(hyps);
    if (it != ctx_ids_.end()) return it->second;
    int id = static_cast<int>(ctxs_.size());
    ctxs_.push_back(hyps);
    ctx_ids_.emplace(std::move(hyps), id);
    return id;
  }

  int get_node(const Formula& goal, int ctx) {
    auto key = std::make_pair(goal, ctx);
    auto it = node_ids_.find(key);
    if (it != node_ids_.end()) return it->second;
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{goal, ctx, {}, {}, {}, {}});
    node_ids_.emplace(std::move(key), id);
    pending_.push_back(id);
    return id;
  }

  bool known_constant(const std::string& name) const {
    const auto& cs = db_.constants();
    return std::binary_search(cs.begin(), cs.end(), name);
  }

  // Completes a partial binding over the axiom's variable list by
  // enumerating database constants for the unmatched ones, emitting one
  // producer per completion.
  void complete_bindings(const AxiomEntry& ax, const SchemaPath& path,
                         const std::map<std::string, std::string>& partial,
                         int ctx, std::vector<MatchProducer>& out) {
    std::vector<std::size_t> residual;
    for (std::size_t i = 0; i < ax.variables.size(); ++i) {
      if (partial.find(ax.variables[i]) == partial.end()) residual.push_back(i);
    }
    const auto& constants = db_.constants();
    if (!residual.empty() && constants.empty()) return;

    std::vector<std::size_t> idx(residual.size(), 0);
    bool exhausted = false;
    while (!exhausted) {
      Binding binding;
      binding.reserve(ax.variables.size());
      std::size_t r = 0;
      for (std::size_t i = 0; i < ax.variables.size(); ++i) {
        auto it = partial.find(ax.variables[i]);
        if (it != partial.end()) {
          binding.emplace_back(ax.variables[i], it->second);
        } else {
          binding.emplace_back(ax.variables[i], constants[idx[r++]]);
        }
      }
      emit_producer(ax, path, std::move(binding), ctx, out);

      exhausted = true;
      for (std::size_t i = idx.size(); i > 0;) {
        --i;
        if (++idx[i] < constants.size()) {
          exhausted = false;
          break;
        }
        idx[i] = 0;
      }
      if (idx.empty()) break;
    }
  }

  void emit_producer(const AxiomEntry& ax, const SchemaPath& path, Binding binding,
                     int ctx, std::vector<MatchProducer>& out) {
    Formula premise = binding.empty() ? ax.normalized
                                      : normalize(substitute(ax.formula, binding));
    MatchProducer m;
    m.label = GroundLabel{ax.label, std::move(binding)};
    m.premise = premise;
    m.premise_sign = ax.sign;
    m.steps = path.steps;
    attach_antecedents(m, ctx);
    out.push_back(std::move(m));
  }

  // Walks the premise along the steps, creating demand nodes for every
  // imp antecedent.
  void attach_antecedents(MatchProducer& m, int ctx) {
    Formula cur = m.premise;
    for (StepKind k : m.steps) {
      switch (k) {
        case StepKind::and_left:
          cur = cur.lhs();
          break;
        case StepKind::and_right:
          cur = cur.rhs();
          break;
        case StepKind::imp:
          m.antecedents.push_back(get_node(cur.lhs(), ctx));
          cur = cur.rhs();
          break;
      }
    }
  }

  void build_producers(int id) {
    // get_node below may grow nodes_, so take copies first.
    const Formula goal = nodes_[id].goal;
    const int ctx = nodes_[id].ctx;

    std::vector<MatchProducer> matches;
    for (std::size_t ai = 0; ai < db_.axioms().size(); ++ai) {
      const AxiomEntry& ax = db_.axioms()[ai];
      if (!ax.sign.positive()) continue;  // doubt axioms never support proofs
      for (const SchemaPath& path : axiom_paths_[ai]) {
        std::map<std::string, std::string> binding;
        if (!match(path.target, goal, binding)) continue;
        bool constants_ok = true;
        for (const auto& [var, value] : binding) {
          (void)var;
          if (!known_constant(value)) {
            constants_ok = false;
            break;
          }
        }
        if (!constants_ok) continue;
        complete_bindings(ax, path, binding, ctx, matches);
      }
    }
    for (const Formula& hyp : ctxs_[ctx]) {
      for (const SchemaPath& path : paths_of(hyp)) {
        if (path.target != goal) continue;
        MatchProducer m;
        m.premise = hyp;
        m.premise_sign = dict_.top();
        m.steps = path.steps;
        attach_antecedents(m, ctx);
        matches.push_back(std::move(m));
      }
    }

    std::optional<std::pair<int, int>> and_intro;
    std::optional<int> imp_intro;
    if (goal.kind() == FormulaKind::conjunction) {
      and_intro = {get_node(goal.lhs(), ctx), get_node(goal.rhs(), ctx)};
    } else if (goal.kind() == FormulaKind::implication) {
      std::vector<Formula> extended = ctxs_[ctx];
      if (std::find(extended.begin(), extended.end(), goal.lhs()) == extended.end()) {
        extended.push_back(goal.lhs());
        std::sort(extended.begin(), extended.end());
      }
      imp_intro = get_node(goal.rhs(), get_ctx(std::move(extended)));
    }

    nodes_[id].matches = std::move(matches);
    nodes_[id].and_intro = and_intro;
    nodes_[id].imp_intro = imp_intro;
  }

  Proof leaf_proof(const MatchProducer& m) const {
    return m.label ? Proof::axiom(m.premise, *m.label, m.premise_sign)
                   : Proof::hypothesis(m.premise, dict_.top());
  }

  // Builds the proof for one firing of a match producer, given the
  // chosen entry for each imp antecedent.
  static Proof chain_proof(const MatchProducer& m, Proof leaf,
                           const std::vector<const TableEntry*>& ants) {
    Proof cur = std::move(leaf);
    Formula f = m.premise;
    std::size_t ant_i = 0;
    for (StepKind k : m.steps) {
      switch (k) {
        case StepKind::and_left:
          f = f.lhs();
          cur = Proof::inference(Rule::and_elim_left, f, {std::move(cur)});
          break;
        case StepKind::and_right:
          f = f.rhs();
          cur = Proof::inference(Rule::and_elim_right, f, {std::move(cur)});
          break;
        case StepKind::imp:
          f = f.rhs();
          cur = Proof::inference(Rule::imp_elim, f,
                                 {ants[ant_i++]->proof, std::move(cur)});
          break;
      }
    }
    return cur;
  }

  void stage(int node, int depth, Proof proof,
             std::map<std::pair<int, TableKey>, TableEntry>& staged) {
    TableKey key{proof.grounds(), proof.sign()};
    if (nodes_[node].table.count(key)) return;  // committed at an earlier depth
    auto full_key = std::make_pair(node, std::move(key));
    auto it = staged.find(full_key);
    if (it == staged.end()) {
      staged.emplace(std::move(full_key), TableEntry{depth, std::move(proof)});
    } else if (better_witness(proof, it->second.proof)) {
      it->second = TableEntry{depth, std::move(proof)};
    }
  }

  // Fires every producer whose premise entries all predate this layer.
  void sweep(int d, std::map<std::pair<int, TableKey>, TableEntry>& staged) {
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
      Node& node = nodes_[id];
      for (const MatchProducer& m : node.matches) {
        fire_match(static_cast<int>(id), m, d, staged);
      }
      if (node.and_intro) {
        const auto& [l, r] = *node.and_intro;
        for (const auto& [lk, le] : nodes_[l].table) {
          (void)lk;
          if (le.depth > d - 1) continue;
          for (const auto& [rk, re] : nodes_[r].table) {
            (void)rk;
            if (re.depth > d - 1) continue;
            int depth = 1 + std::max(le.depth, re.depth);
            stage(static_cast<int>(id), depth,
                  Proof::inference(Rule::and_intro, node.goal,
                                   {le.proof, re.proof}),
                  staged);
          }
        }
      }
      if (node.imp_intro) {
        for (const auto& [bk, be] : nodes_[*node.imp_intro].table) {
          (void)bk;
          if (be.depth > d - 1) continue;
          stage(static_cast<int>(id), 1 + be.depth,
                Proof::inference(Rule::imp_intro, node.goal, {be.proof}), staged);
        }
      }
    }
  }

  void fire_match(int id, const MatchProducer& m, int d,
                  std::map<std::pair<int, TableKey>, TableEntry>& staged) {
    if (m.antecedents.empty()) {
      if (d == 1) stage(id, 1, chain_proof(m, leaf_proof(m), {}), staged);
      return;
    }
    // One choice of entry per antecedent, odometer over the tables.
    std::vector<std::vector<const TableEntry*>> options(m.antecedents.size());
    for (std::size_t i = 0; i < m.antecedents.size(); ++i) {
      for (const auto& [key, entry] : nodes_[m.antecedents[i]].table) {
        (void)key;
        if (entry.depth <= d - 1) options[i].push_back(&entry);
      }
      if (options[i].empty()) return;
    }
    std::vector<std::size_t> idx(options.size(), 0);
    bool exhausted = false;
    while (!exhausted) {
      std::vector<const TableEntry*> chosen(options.size());
      int max_ant_depth = 0;
      for (std::size_t i = 0; i < options.size(); ++i) {
        chosen[i] = options[i][idx[i]];
        max_ant_depth = std::max(max_ant_depth, chosen[i]->depth);
      }
      stage(id, 1 + max_ant_depth, chain_proof(m, leaf_proof(m), chosen), staged);
      exhausted = true;
      for (std::size_t i = idx.size(); i > 0;) {
        --i;
        if (++idx[i] < options[i].size()) {
          exhausted = false;
          break;
        }
        idx[i] = 0;
      }
    }
  }

  void saturate() {
    std::size_t total_entries = 0;
    for (int d = 1; d <= limits_.max_depth; ++d) {
      std::map<std::pair<int, TableKey>, TableEntry> staged;
      sweep(d, staged);
      bool grew = false;
      for (auto& [key, entry] : staged) {
        auto inserted =
            nodes_[key.first].table.emplace(key.second, std::move(entry));
        if (inserted.second) {
          grew = true;
          ++total_entries;
        }
      }
      if (!grew) break;
      if (total_entries > 1000000) {
        throw SearchError("argument table exceeded one million entries");
      }
    }
  }

  const Database& db_;
  const SearchLimits& limits_;
  const Dictionary& dict_;

  std::vector<std::vector<SchemaPath>> axiom_paths_;
  std::vector<std::vector<Formula>> ctxs_;
  std::map<std::vector<Formula>, int> ctx_ids_;
  std::vector<Node> nodes_;
  std::map<std::pair<Formula, int>, int> node_ids_;
  std::vector<int> pending_;
};

}  // namespace

std::vector<Argument> find_arguments(const Database& db, const Formula& goal,
                                     const SearchLimits& limits) {
  if (limits.max_depth < 1) throw SearchError("max_depth must be at least 1");
  if (limits.max_arguments < 1) throw SearchError("max_arguments must be at least 1");
  if (!goal.is_ground()) {
    throw SearchError("goal must be ground: " + goal.str());
  }
  Formula g = normalize(goal);
  if (g.contains(FormulaKind::disjunction)) {
    throw SearchError("goal is outside the search fragment (contains |): " +
                      goal.str());
  }
  Engine engine(db, limits);
  return engine.run(g);
}

}  // namespace argue
