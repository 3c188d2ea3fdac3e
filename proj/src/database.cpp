#include "argue/database.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "argue/errors.hpp"

namespace argue {

std::string GroundLabel::str() const {
  if (binding.empty()) return label;
  std::string out = label;
  out += '(';
  bool first = true;
  for (const auto& [var, value] : binding) {
    (void)var;
    if (!first) out += ',';
    first = false;
    out += value;
  }
  out += ')';
  return out;
}

std::ostream& operator<<(std::ostream& os, const GroundLabel& gl) {
  return os << gl.str();
}

std::string grounds_str(const Grounds& g) {
  std::string out = "{";
  bool first = true;
  for (const GroundLabel& gl : g) {
    if (!first) out += ", ";
    first = false;
    out += gl.str();
  }
  out += '}';
  return out;
}

AxiomEntry::AxiomEntry(std::string label_in, Formula formula_in, Sign sign_in)
    : label(std::move(label_in)),
      formula(std::move(formula_in)),
      sign(sign_in),
      normalized(normalize(formula)),
      variables(formula.variables()) {}

namespace {

void collect_constants(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::falsum:
      return;
    case FormulaKind::atom:
      for (const Term& t : f.args()) {
        if (!t.is_variable()) out.insert(t.name);
      }
      return;
    case FormulaKind::negation:
      collect_constants(f.body(), out);
      return;
    default:
      collect_constants(f.lhs(), out);
      collect_constants(f.rhs(), out);
      return;
  }
}

}  // namespace

Database::Database(DictId dict, std::vector<AxiomEntry> axioms)
    : dict_(dict), axioms_(std::move(axioms)) {
  const Dictionary& d = dictionary(dict_);
  std::set<std::string> seen;
  std::set<std::string> constants;
  for (const AxiomEntry& ax : axioms_) {
    if (ax.label.empty() || !std::islower(static_cast<unsigned char>(ax.label[0]))) {
      throw Error("axiom label must start with a lower-case letter: " + ax.label);
    }
    if (!seen.insert(ax.label).second) {
      throw Error("duplicate axiom label: " + ax.label);
    }
    if (!d.contains(ax.sign)) {
      throw DictionaryError("axiom " + ax.label + ": sign " + ax.sign.str() +
                            " is not in the " + d.name() + " dictionary");
    }
    collect_constants(ax.formula, constants);
  }
  constants_.assign(constants.begin(), constants.end());
}

const AxiomEntry* Database::find(const std::string& label) const {
  for (const AxiomEntry& ax : axioms_) {
    if (ax.label == label) return &ax;
  }
  return nullptr;
}

std::vector<Database::Instance> Database::ground_instances() const {
  std::vector<Instance> out;
  for (const AxiomEntry& ax : axioms_) {
    const std::size_t nvars = ax.variables.size();
    if (nvars == 0) {
      out.push_back({GroundLabel{ax.label, {}}, ax.normalized, ax.sign});
      continue;
    }
    if (constants_.empty()) continue;
    // Odometer over constant tuples, last variable fastest.
    std::vector<std::size_t> idx(nvars, 0);
    bool exhausted = false;
    while (!exhausted) {
      Binding binding;
      binding.reserve(nvars);
      for (std::size_t i = 0; i < nvars; ++i) {
        binding.emplace_back(ax.variables[i], constants_[idx[i]]);
      }
      out.push_back({GroundLabel{ax.label, binding},
                     normalize(substitute(ax.formula, binding)), ax.sign});
      exhausted = true;
      for (std::size_t i = nvars; i > 0;) {
        --i;
        if (++idx[i] < constants_.size()) {
          exhausted = false;
          break;
        }
        idx[i] = 0;
      }
    }
  }
  return out;
}

}  // namespace argue
