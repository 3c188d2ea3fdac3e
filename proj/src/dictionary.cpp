#include "argue/dictionary.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

#include "argue/errors.hpp"

namespace argue {

const std::string& dict_name(DictId id) {
  static const std::array<std::string, 5> names = {
      "generic", "bounded", "delta", "bounded-delta", "numeric"};
  return names[static_cast<std::size_t>(id)];
}

DictId dict_by_name(const std::string& name) {
  for (DictId id : {DictId::generic, DictId::bounded, DictId::delta,
                    DictId::bounded_delta, DictId::numeric}) {
    if (dict_name(id) == name) return id;
  }
  throw DictionaryError("unknown dictionary: " + name);
}

namespace {

const char* symbol_text(SymbolicSign s) {
  switch (s) {
    case SymbolicSign::minus_minus: return "--";
    case SymbolicSign::minus: return "-";
    case SymbolicSign::plus: return "+";
    case SymbolicSign::plus_plus: return "++";
  }
  return "?";
}

// Shortest decimal that round-trips to the same double.
std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace

Sign Sign::symbolic(DictId dict, SymbolicSign value) {
  if (dict == DictId::numeric) {
    throw DictionaryError("the numeric dictionary has no symbolic signs");
  }
  Sign s;
  s.dict_ = dict;
  s.symbol_ = value;
  if (!dictionary(dict).contains(s)) {
    throw DictionaryError(std::string("sign ") + symbol_text(value) +
                          " is not in the " + dict_name(dict) + " dictionary");
  }
  return s;
}

Sign Sign::numeric(double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DictionaryError("numeric sign " + format_double(value) +
                          " is outside [0, 1]");
  }
  Sign s;
  s.dict_ = DictId::numeric;
  s.value_ = value;
  return s;
}

SymbolicSign Sign::symbol() const {
  if (is_numeric()) throw DictionaryError("symbol() on a numeric sign");
  return symbol_;
}

double Sign::value() const {
  if (!is_numeric()) throw DictionaryError("value() on a symbolic sign");
  return value_;
}

bool Sign::positive() const {
  if (is_numeric()) return true;
  return symbol_ == SymbolicSign::plus || symbol_ == SymbolicSign::plus_plus;
}

std::string Sign::str() const {
  return is_numeric() ? format_double(value_) : symbol_text(symbol_);
}

bool Sign::operator==(const Sign& other) const {
  return (*this <=> other) == std::strong_ordering::equal;
}

std::strong_ordering Sign::operator<=>(const Sign& other) const {
  if (auto c = dict_ <=> other.dict_; c != 0) return c;
  if (is_numeric()) {
    // Signs never hold NaN (construction rejects values outside [0, 1]),
    // so the partial double order is total here.
    if (value_ < other.value_) return std::strong_ordering::less;
    if (value_ > other.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  return symbol_ <=> other.symbol_;
}

std::ostream& operator<<(std::ostream& os, const Sign& s) { return os << s.str(); }

Sign Dictionary::top() const {
  switch (id_) {
    case DictId::generic:
    case DictId::delta:
      return Sign::symbolic(id_, SymbolicSign::plus);
    case DictId::bounded:
    case DictId::bounded_delta:
      return Sign::symbolic(id_, SymbolicSign::plus_plus);
    case DictId::numeric:
      return Sign::numeric(1.0);
  }
  throw DictionaryError("top: unreachable dictionary");
}

std::vector<Sign> Dictionary::positive_elements() const {
  switch (id_) {
    case DictId::generic:
    case DictId::delta:
      return {Sign::symbolic(id_, SymbolicSign::plus)};
    case DictId::bounded:
    case DictId::bounded_delta:
      return {Sign::symbolic(id_, SymbolicSign::plus),
              Sign::symbolic(id_, SymbolicSign::plus_plus)};
    case DictId::numeric:
      return {};
  }
  throw DictionaryError("positive_elements: unreachable dictionary");
}

std::vector<Sign> Dictionary::elements() const {
  switch (id_) {
    case DictId::generic:
      return {Sign::symbolic(id_, SymbolicSign::plus)};
    case DictId::bounded:
      return {Sign::symbolic(id_, SymbolicSign::plus),
              Sign::symbolic(id_, SymbolicSign::plus_plus)};
    case DictId::delta:
      return {Sign::symbolic(id_, SymbolicSign::minus),
              Sign::symbolic(id_, SymbolicSign::plus)};
    case DictId::bounded_delta:
      return {Sign::symbolic(id_, SymbolicSign::minus_minus),
              Sign::symbolic(id_, SymbolicSign::minus),
              Sign::symbolic(id_, SymbolicSign::plus),
              Sign::symbolic(id_, SymbolicSign::plus_plus)};
    case DictId::numeric:
      return {};
  }
  throw DictionaryError("elements: unreachable dictionary");
}

bool Dictionary::contains(const Sign& s) const {
  if (s.dict() != id_) return false;
  if (id_ == DictId::numeric) return true;
  switch (s.symbol()) {
    case SymbolicSign::plus:
      return true;
    case SymbolicSign::plus_plus:
      return id_ == DictId::bounded || id_ == DictId::bounded_delta;
    case SymbolicSign::minus:
      return id_ == DictId::delta || id_ == DictId::bounded_delta;
    case SymbolicSign::minus_minus:
      return id_ == DictId::bounded_delta;
  }
  return false;
}

Sign Dictionary::combine(const Sign& l, const Sign& m) const {
  if (l.dict() != id_ || m.dict() != id_) {
    throw DictionaryError("combine: sign from a different dictionary (" +
                          dict_name(l.dict()) + ", " + dict_name(m.dict()) +
                          " combined under " + name() + ")");
  }
  if (id_ == DictId::numeric) return Sign::numeric(l.value() * m.value());
  if (!l.positive() || !m.positive()) {
    throw DictionaryError("combine is only defined on positive signs (got " +
                          l.str() + ", " + m.str() + ")");
  }
  return l.symbol() <= m.symbol() ? l : m;
}

bool Dictionary::leq(const Sign& l, const Sign& m) const {
  if (l.dict() != id_ || m.dict() != id_) {
    throw DictionaryError("leq: sign from a different dictionary");
  }
  return l <= m;
}

Sign Dictionary::flip(const Sign& s) const {
  if (!has_doubt()) {
    throw DictionaryError("flip is not defined for the " + name() + " dictionary");
  }
  if (s.dict() != id_) throw DictionaryError("flip: sign from a different dictionary");
  switch (s.symbol()) {
    case SymbolicSign::plus: return Sign::symbolic(id_, SymbolicSign::minus);
    case SymbolicSign::minus: return Sign::symbolic(id_, SymbolicSign::plus);
    case SymbolicSign::plus_plus: return Sign::symbolic(id_, SymbolicSign::minus_minus);
    case SymbolicSign::minus_minus: return Sign::symbolic(id_, SymbolicSign::plus_plus);
  }
  throw DictionaryError("flip: unreachable sign");
}

bool Dictionary::has_confirmation() const {
  switch (id_) {
    case DictId::bounded:
    case DictId::bounded_delta:
    case DictId::numeric:
      return true;
    default:
      return false;
  }
}

Sign Dictionary::parse_sign(const std::string& text) const {
  if (text == "+" || text == "++" || text == "-" || text == "--") {
    SymbolicSign sym = text == "+"    ? SymbolicSign::plus
                       : text == "++" ? SymbolicSign::plus_plus
                       : text == "-"  ? SymbolicSign::minus
                                      : SymbolicSign::minus_minus;
    if (id_ == DictId::numeric) {
      throw DictionaryError("sign " + text + " is not in the numeric dictionary");
    }
    return Sign::symbolic(id_, sym);  // throws when sym is not an element
  }
  // Decimal form.
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw DictionaryError("malformed sign: " + text);
  }
  if (id_ != DictId::numeric) {
    throw DictionaryError("decimal sign " + text + " is not in the " + name() +
                          " dictionary");
  }
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DictionaryError("numeric sign " + text + " is outside [0, 1]");
  }
  return Sign::numeric(v);
}

const Dictionary& dictionary(DictId id) {
  static const std::array<Dictionary, 5> all = {
      Dictionary(DictId::generic), Dictionary(DictId::bounded),
      Dictionary(DictId::delta), Dictionary(DictId::bounded_delta),
      Dictionary(DictId::numeric)};
  return all[static_cast<std::size_t>(id)];
}

}  // namespace argue
