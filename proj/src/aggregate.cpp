#include "argue/aggregate.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "argue/errors.hpp"

namespace argue {

Confidence Confidence::tally(std::uint64_t n) {
  Confidence c;
  c.kind_ = Kind::tally;
  c.count_ = n;
  return c;
}

Confidence Confidence::confirmed() {
  Confidence c;
  c.kind_ = Kind::confirmed;
  return c;
}

Confidence Confidence::real(double v) {
  Confidence c;
  c.kind_ = Kind::real;
  c.value_ = v;
  return c;
}

std::uint64_t Confidence::count() const {
  if (kind_ != Kind::tally) throw Error("count() on a non-tally confidence");
  return count_;
}

double Confidence::value() const {
  if (kind_ != Kind::real) throw Error("value() on a non-real confidence");
  return value_;
}

std::string Confidence::str() const {
  switch (kind_) {
    case Kind::confirmed:
      return "++";
    case Kind::tally:
      return std::to_string(count_);
    case Kind::real: {
      char buf[32];
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value_);
      (void)ec;
      return std::string(buf, end);
    }
  }
  throw Error("str(): unreachable confidence kind");
}

bool Confidence::operator==(const Confidence& other) const {
  if (kind_ != other.kind_) {
    // confirmed vs tally is a legitimate comparison (never equal);
    // anything vs real is not.
    if (kind_ == Kind::real || other.kind_ == Kind::real) {
      throw Error("cannot compare a real confidence with a bounded one");
    }
    return false;
  }
  if (kind_ == Kind::tally) return count_ == other.count_;
  if (kind_ == Kind::real) return value_ == other.value_;
  return true;
}

bool Confidence::leq(const Confidence& other) const {
  if (kind_ == Kind::real || other.kind_ == Kind::real) {
    if (kind_ != other.kind_) {
      throw Error("cannot compare a real confidence with a bounded one");
    }
    return value_ <= other.value_;
  }
  if (kind_ == Kind::confirmed) return other.kind_ == Kind::confirmed;
  if (other.kind_ == Kind::confirmed) return true;
  return count_ <= other.count_;
}

std::ostream& operator<<(std::ostream& os, const Confidence& c) {
  return os << c.str();
}

bool Flattener::accepts_dict(DictId d) const {
  return std::find(accepts.begin(), accepts.end(), d) != accepts.end();
}

namespace {

std::uint64_t positive_count(const std::vector<Sign>& signs) {
  std::uint64_t n = 0;
  for (const Sign& s : signs) {
    if (s.positive()) ++n;
  }
  return n;
}

bool has_confirming(const std::vector<Sign>& signs) {
  for (const Sign& s : signs) {
    if (!s.is_numeric() && s.symbol() == SymbolicSign::plus_plus) return true;
  }
  return false;
}

}  // namespace

Flattener make_bnd_flattener() {
  Flattener f;
  f.name = "bnd";
  f.source = DictId::bounded;
  f.accepts = {DictId::bounded, DictId::bounded_delta};
  f.rule = [](const std::vector<Sign>& signs) {
    if (has_confirming(signs)) return Confidence::confirmed();
    return Confidence::tally(positive_count(signs));
  };
  return f;
}

Flattener make_num_flattener() {
  Flattener f;
  f.name = "num";
  f.source = DictId::numeric;
  f.accepts = {DictId::numeric};
  f.rule = [](const std::vector<Sign>& signs) {
    double miss = 1.0;
    for (const Sign& s : signs) miss *= 1.0 - s.value();
    return Confidence::real(1.0 - miss);
  };
  return f;
}

Flattener make_count_flattener() {
  Flattener f;
  f.name = "count";
  f.source = DictId::generic;
  f.accepts = {DictId::generic, DictId::bounded, DictId::delta,
               DictId::bounded_delta, DictId::numeric};
  f.rule = [](const std::vector<Sign>& signs) {
    return Confidence::tally(positive_count(signs));
  };
  return f;
}

Flattener flattener_by_name(const std::string& name) {
  if (name == "bnd") return make_bnd_flattener();
  if (name == "num") return make_num_flattener();
  if (name == "count") return make_count_flattener();
  throw Error("unknown flattener: " + name);
}

Confidence flatten(const std::vector<Argument>& args, const Flattener& f) {
  std::vector<Sign> signs;
  signs.reserve(args.size());
  for (const Argument& a : args) {
    if (a.formula != args.front().formula) {
      throw DictionaryError("flatten: arguments draw different conclusions (" +
                            args.front().formula.str() + " vs " +
                            a.formula.str() + ")");
    }
    if (a.sign.dict() != args.front().sign.dict()) {
      throw DictionaryError("flatten: arguments mix dictionaries");
    }
    signs.push_back(a.sign);
  }
  if (!args.empty() && !f.accepts_dict(args.front().sign.dict())) {
    throw DictionaryError("flattener " + f.name + " does not accept " +
                          dict_name(args.front().sign.dict()) + " signs");
  }
  return f.rule(signs);
}

Confidence agg_bnd(const Database& db, const Formula& goal,
                   const SearchLimits& limits) {
  if (db.dict_id() != DictId::bounded) {
    throw DictionaryError("agg_bnd needs a bounded database, got " +
                          db.dict().name());
  }
  return flatten(find_arguments(db, goal, limits), make_bnd_flattener());
}

double agg_num(const Database& db, const Formula& goal,
               const SearchLimits& limits) {
  if (db.dict_id() != DictId::numeric) {
    throw DictionaryError("agg_num needs a numeric database, got " +
                          db.dict().name());
  }
  return flatten(find_arguments(db, goal, limits), make_num_flattener()).value();
}

}  // namespace argue
