#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace argue {

// The five built-in sign dictionaries.
//
//   generic        {+}                every argument has the same force
//   bounded        {+, ++}            ++ marks confirmation
//   delta          {-, +}             signed support and doubt
//   bounded-delta  {--, -, +, ++}     both of the above
//   numeric        reals in [0, 1]    probabilistic coefficients
enum class DictId {
  generic,
  bounded,
  delta,
  bounded_delta,
  numeric,
};

const std::string& dict_name(DictId id);

// Parses a dictionary name as written in a kb file ("bounded-delta" etc).
// Throws DictionaryError for unknown names.
DictId dict_by_name(const std::string& name);

// Symbolic sign values, ordered by strength.
enum class SymbolicSign {
  minus_minus,
  minus,
  plus,
  plus_plus,
};

// A sign together with the dictionary it belongs to.  Symbolic and
// numeric signs never compare equal since they cannot share a dictionary.
class Sign {
 public:
  // Defaults to generic +, the weakest possible claim.
  Sign() = default;

  static Sign symbolic(DictId dict, SymbolicSign value);
  static Sign numeric(double value);  // value must lie in [0, 1]

  DictId dict() const { return dict_; }
  bool is_numeric() const { return dict_ == DictId::numeric; }

  SymbolicSign symbol() const;  // throws DictionaryError on numeric signs
  double value() const;         // throws DictionaryError on symbolic signs

  // Numeric signs and the symbolic +/++ count as positive.
  bool positive() const;

  std::string str() const;

  bool operator==(const Sign& other) const;
  std::strong_ordering operator<=>(const Sign& other) const;

 private:
  DictId dict_ = DictId::generic;
  SymbolicSign symbol_ = SymbolicSign::plus;
  double value_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const Sign& s);

// Operations of one dictionary.  Instances are stateless singletons;
// fetch them with dictionary().
class Dictionary {
 public:
  explicit Dictionary(DictId id) : id_(id) {}

  DictId id() const { return id_; }
  const std::string& name() const { return dict_name(id_); }

  // The strongest sign the dictionary can express: ++ where available,
  // + otherwise, 1 for numeric.
  Sign top() const;

  // Positive elements in ascending strength.  Empty for numeric, which
  // is not enumerable.
  std::vector<Sign> positive_elements() const;

  // Every element, for the finite dictionaries (ascending).  Empty for
  // numeric.
  std::vector<Sign> elements() const;

  bool is_finite() const { return id_ != DictId::numeric; }

  // True when `s` is an element of this dictionary.
  bool contains(const Sign& s) const;

  // Minimal-support combination: min for the symbolic dictionaries,
  // multiplication for numeric.  Both operands must be positive elements
  // of this dictionary; combining a doubt sign throws DictionaryError.
  Sign combine(const Sign& l, const Sign& m) const;

  // Element order (strength).  Both operands must belong to this
  // dictionary.
  bool leq(const Sign& l, const Sign& m) const;

  // Support/doubt mirror: + <-> - and ++ <-> --.  Only the delta
  // dictionaries have it; others throw DictionaryError.
  Sign flip(const Sign& s) const;

  bool has_doubt() const { return id_ == DictId::delta || id_ == DictId::bounded_delta; }
  bool has_confirmation() const;

  // Parses a sign token as written in a kb file: +, ++, -, -- or a
  // decimal in [0, 1].  Validates membership in this dictionary.
  Sign parse_sign(const std::string& text) const;

 private:
  DictId id_;
};

const Dictionary& dictionary(DictId id);

}  // namespace argue
