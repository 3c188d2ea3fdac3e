#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "argue/dictionary.hpp"
#include "argue/errors.hpp"

using namespace argue;

namespace {

Sign sym(DictId d, SymbolicSign s) { return Sign::symbolic(d, s); }

}  // namespace

TEST_CASE("dictionary names round-trip") {
  for (DictId id : {DictId::generic, DictId::bounded, DictId::delta,
                    DictId::bounded_delta, DictId::numeric}) {
    CHECK(dict_by_name(dict_name(id)) == id);
  }
  CHECK(dict_name(DictId::bounded_delta) == "bounded-delta");
  CHECK_THROWS_AS(dict_by_name("boundless"), DictionaryError);
}

TEST_CASE("sign construction validates membership") {
  CHECK_THROWS_AS(Sign::symbolic(DictId::generic, SymbolicSign::plus_plus),
                  DictionaryError);
  CHECK_THROWS_AS(Sign::symbolic(DictId::generic, SymbolicSign::minus),
                  DictionaryError);
  CHECK_THROWS_AS(Sign::symbolic(DictId::bounded, SymbolicSign::minus),
                  DictionaryError);
  CHECK_THROWS_AS(Sign::symbolic(DictId::delta, SymbolicSign::plus_plus),
                  DictionaryError);
  CHECK_THROWS_AS(Sign::symbolic(DictId::numeric, SymbolicSign::plus),
                  DictionaryError);
  CHECK_THROWS_AS(Sign::numeric(-0.1), DictionaryError);
  CHECK_THROWS_AS(Sign::numeric(1.5), DictionaryError);
  CHECK_NOTHROW(Sign::numeric(0.0));
  CHECK_NOTHROW(Sign::numeric(1.0));
}

TEST_CASE("sign accessors reject the wrong representation") {
  CHECK_THROWS_AS(Sign::numeric(0.5).symbol(), DictionaryError);
  CHECK_THROWS_AS(sym(DictId::bounded, SymbolicSign::plus).value(),
                  DictionaryError);
}

TEST_CASE("default sign is generic +") {
  Sign s;
  CHECK(s.dict() == DictId::generic);
  CHECK(s.symbol() == SymbolicSign::plus);
  CHECK(s.positive());
}

TEST_CASE("positivity") {
  CHECK(sym(DictId::bounded_delta, SymbolicSign::plus).positive());
  CHECK(sym(DictId::bounded_delta, SymbolicSign::plus_plus).positive());
  CHECK_FALSE(sym(DictId::bounded_delta, SymbolicSign::minus).positive());
  CHECK_FALSE(sym(DictId::bounded_delta, SymbolicSign::minus_minus).positive());
  CHECK(Sign::numeric(0.0).positive());
}

TEST_CASE("str renders signs as written in kb files") {
  CHECK(sym(DictId::bounded_delta, SymbolicSign::minus_minus).str() == "--");
  CHECK(sym(DictId::delta, SymbolicSign::minus).str() == "-");
  CHECK(sym(DictId::generic, SymbolicSign::plus).str() == "+");
  CHECK(sym(DictId::bounded, SymbolicSign::plus_plus).str() == "++");
  CHECK(Sign::numeric(0.85).str() == "0.85");
  CHECK(Sign::numeric(1.0).str() == "1");
  CHECK(Sign::numeric(0.7).str() == "0.7");
  CHECK(Sign::numeric(0.0).str() == "0");
}

TEST_CASE("element enumeration is ascending and matches membership") {
  const Dictionary& bd = dictionary(DictId::bounded_delta);
  std::vector<Sign> all = bd.elements();
  REQUIRE(all.size() == 4);
  CHECK(all[0].symbol() == SymbolicSign::minus_minus);
  CHECK(all[1].symbol() == SymbolicSign::minus);
  CHECK(all[2].symbol() == SymbolicSign::plus);
  CHECK(all[3].symbol() == SymbolicSign::plus_plus);
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    CHECK(bd.leq(all[i], all[i + 1]));
    CHECK_FALSE(bd.leq(all[i + 1], all[i]));
  }

  CHECK(dictionary(DictId::generic).elements().size() == 1);
  CHECK(dictionary(DictId::bounded).elements().size() == 2);
  CHECK(dictionary(DictId::delta).elements().size() == 2);
  CHECK(dictionary(DictId::numeric).elements().empty());
  CHECK_FALSE(dictionary(DictId::numeric).is_finite());

  for (DictId id : {DictId::generic, DictId::bounded, DictId::delta,
                    DictId::bounded_delta}) {
    const Dictionary& d = dictionary(id);
    for (const Sign& s : d.elements()) CHECK(d.contains(s));
    std::size_t positives = 0;
    for (const Sign& s : d.elements())
      if (s.positive()) ++positives;
    CHECK(d.positive_elements().size() == positives);
  }
}

TEST_CASE("membership is per dictionary") {
  const Dictionary& bounded = dictionary(DictId::bounded);
  CHECK(bounded.contains(sym(DictId::bounded, SymbolicSign::plus)));
  CHECK_FALSE(bounded.contains(sym(DictId::delta, SymbolicSign::plus)));
  CHECK_FALSE(bounded.contains(Sign::numeric(0.5)));
  CHECK(dictionary(DictId::numeric).contains(Sign::numeric(0.5)));
}

TEST_CASE("top is the strongest expressible sign") {
  CHECK(dictionary(DictId::generic).top() == sym(DictId::generic, SymbolicSign::plus));
  CHECK(dictionary(DictId::bounded).top() == sym(DictId::bounded, SymbolicSign::plus_plus));
  CHECK(dictionary(DictId::delta).top() == sym(DictId::delta, SymbolicSign::plus));
  CHECK(dictionary(DictId::bounded_delta).top() ==
        sym(DictId::bounded_delta, SymbolicSign::plus_plus));
  CHECK(dictionary(DictId::numeric).top() == Sign::numeric(1.0));
  for (DictId id : {DictId::generic, DictId::bounded, DictId::delta,
                    DictId::bounded_delta}) {
    const Dictionary& d = dictionary(id);
    for (const Sign& s : d.elements()) CHECK(d.leq(s, d.top()));
  }
}

TEST_CASE("combine takes the weaker sign for every symbolic dictionary") {
  for (DictId id : {DictId::generic, DictId::bounded, DictId::delta,
                    DictId::bounded_delta}) {
    const Dictionary& d = dictionary(id);
    std::vector<Sign> pos = d.positive_elements();
    for (const Sign& l : pos) {
      for (const Sign& m : pos) {
        Sign c = d.combine(l, m);
        CHECK(c == (d.leq(l, m) ? l : m));
        CHECK(c == d.combine(m, l));
        CHECK(d.leq(c, l));
        CHECK(d.leq(c, m));
      }
    }
    // Doubt operands are outside combine's domain on either side.
    for (const Sign& s : d.elements()) {
      if (s.positive()) continue;
      CHECK_THROWS_AS(d.combine(s, d.top()), DictionaryError);
      CHECK_THROWS_AS(d.combine(d.top(), s), DictionaryError);
    }
  }
}

TEST_CASE("exhaustive combine tables") {
  const Dictionary& b = dictionary(DictId::bounded);
  Sign p = sym(DictId::bounded, SymbolicSign::plus);
  Sign pp = sym(DictId::bounded, SymbolicSign::plus_plus);
  CHECK(b.combine(p, p) == p);
  CHECK(b.combine(p, pp) == p);
  CHECK(b.combine(pp, p) == p);
  CHECK(b.combine(pp, pp) == pp);

  const Dictionary& g = dictionary(DictId::generic);
  CHECK(g.combine(g.top(), g.top()) == g.top());

  const Dictionary& dl = dictionary(DictId::delta);
  CHECK(dl.combine(dl.top(), dl.top()) == dl.top());

  const Dictionary& bd = dictionary(DictId::bounded_delta);
  Sign bp = sym(DictId::bounded_delta, SymbolicSign::plus);
  Sign bpp = sym(DictId::bounded_delta, SymbolicSign::plus_plus);
  CHECK(bd.combine(bp, bpp) == bp);
  CHECK(bd.combine(bpp, bpp) == bpp);
}

TEST_CASE("numeric combine is multiplication") {
  const Dictionary& n = dictionary(DictId::numeric);
  CHECK(n.combine(Sign::numeric(0.7), Sign::numeric(1.0)).value() ==
        doctest::Approx(0.7).epsilon(1e-12));
  CHECK(n.combine(Sign::numeric(0.5), Sign::numeric(0.5)).value() ==
        doctest::Approx(0.25).epsilon(1e-12));

  std::mt19937_64 rng(20260822);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    double a = dist(rng);
    double b = dist(rng);
    double c = dist(rng);
    Sign sa = Sign::numeric(a);
    Sign sb = Sign::numeric(b);
    Sign sc = Sign::numeric(c);
    CHECK(n.combine(sa, sb).value() == doctest::Approx(a * b).epsilon(1e-12));
    // Commutative and associative to the last bit is too strict for
    // floats, so allow the usual tolerance.
    CHECK(n.combine(sa, sb).value() ==
          doctest::Approx(n.combine(sb, sa).value()).epsilon(1e-12));
    CHECK(n.combine(n.combine(sa, sb), sc).value() ==
          doctest::Approx(n.combine(sa, n.combine(sb, sc)).value()).epsilon(1e-12));
    // Identity and contraction.
    CHECK(n.combine(sa, n.top()) == sa);
    CHECK(n.leq(n.combine(sa, sb), sa));
    CHECK(n.leq(n.combine(sa, sb), sb));
  }
}

TEST_CASE("combine and leq reject foreign signs") {
  const Dictionary& b = dictionary(DictId::bounded);
  Sign foreign = sym(DictId::bounded_delta, SymbolicSign::plus);
  CHECK_THROWS_AS(b.combine(b.top(), foreign), DictionaryError);
  CHECK_THROWS_AS(b.leq(b.top(), foreign), DictionaryError);
  CHECK_THROWS_AS(dictionary(DictId::numeric).combine(Sign::numeric(0.5), b.top()),
                  DictionaryError);
}

TEST_CASE("flip mirrors support and doubt in the delta dictionaries") {
  const Dictionary& dl = dictionary(DictId::delta);
  CHECK(dl.flip(sym(DictId::delta, SymbolicSign::plus)) ==
        sym(DictId::delta, SymbolicSign::minus));
  CHECK(dl.flip(sym(DictId::delta, SymbolicSign::minus)) ==
        sym(DictId::delta, SymbolicSign::plus));

  const Dictionary& bd = dictionary(DictId::bounded_delta);
  for (const Sign& s : bd.elements()) {
    CHECK(bd.flip(bd.flip(s)) == s);
    CHECK(bd.flip(s).positive() != s.positive());
  }
  CHECK(bd.flip(sym(DictId::bounded_delta, SymbolicSign::plus_plus)) ==
        sym(DictId::bounded_delta, SymbolicSign::minus_minus));

  CHECK_THROWS_AS(dictionary(DictId::generic).flip(Sign()), DictionaryError);
  CHECK_THROWS_AS(dictionary(DictId::bounded).flip(
                      sym(DictId::bounded, SymbolicSign::plus)),
                  DictionaryError);
  CHECK_THROWS_AS(dictionary(DictId::numeric).flip(Sign::numeric(0.5)),
                  DictionaryError);
  CHECK_THROWS_AS(dl.flip(sym(DictId::bounded_delta, SymbolicSign::plus)),
                  DictionaryError);
}

TEST_CASE("capability flags") {
  CHECK_FALSE(dictionary(DictId::generic).has_doubt());
  CHECK_FALSE(dictionary(DictId::bounded).has_doubt());
  CHECK(dictionary(DictId::delta).has_doubt());
  CHECK(dictionary(DictId::bounded_delta).has_doubt());
  CHECK_FALSE(dictionary(DictId::numeric).has_doubt());

  CHECK_FALSE(dictionary(DictId::generic).has_confirmation());
  CHECK(dictionary(DictId::bounded).has_confirmation());
  CHECK_FALSE(dictionary(DictId::delta).has_confirmation());
  CHECK(dictionary(DictId::bounded_delta).has_confirmation());
  CHECK(dictionary(DictId::numeric).has_confirmation());
}

TEST_CASE("parse_sign accepts exactly the member signs") {
  CHECK(dictionary(DictId::bounded).parse_sign("++") ==
        sym(DictId::bounded, SymbolicSign::plus_plus));
  CHECK(dictionary(DictId::bounded_delta).parse_sign("--") ==
        sym(DictId::bounded_delta, SymbolicSign::minus_minus));
  CHECK(dictionary(DictId::numeric).parse_sign("0.85") == Sign::numeric(0.85));
  CHECK(dictionary(DictId::numeric).parse_sign("1") == Sign::numeric(1.0));
  CHECK(dictionary(DictId::numeric).parse_sign("0") == Sign::numeric(0.0));

  CHECK_THROWS_AS(dictionary(DictId::bounded).parse_sign("-"), DictionaryError);
  CHECK_THROWS_AS(dictionary(DictId::generic).parse_sign("++"), DictionaryError);
  CHECK_THROWS_AS(dictionary(DictId::numeric).parse_sign("+"), DictionaryError);
  CHECK_THROWS_AS(dictionary(DictId::bounded).parse_sign("0.5"), DictionaryError);
  CHECK_THROWS_AS(dictionary(DictId::numeric).parse_sign("1.5"), DictionaryError);
  CHECK_THROWS_AS(dictionary(DictId::numeric).parse_sign("abc"), DictionaryError);

  // parse_sign(str()) is the identity on every finite element.
  for (DictId id : {DictId::generic, DictId::bounded, DictId::delta,
                    DictId::bounded_delta}) {
    const Dictionary& d = dictionary(id);
    for (const Sign& s : d.elements()) CHECK(d.parse_sign(s.str()) == s);
  }
  CHECK(dictionary(DictId::numeric).parse_sign(Sign::numeric(0.7).str()) ==
        Sign::numeric(0.7));
}

TEST_CASE("signs order deterministically across dictionaries") {
  std::set<Sign> all;
  for (DictId id : {DictId::generic, DictId::bounded, DictId::delta,
                    DictId::bounded_delta}) {
    for (const Sign& s : dictionary(id).elements()) all.insert(s);
  }
  all.insert(Sign::numeric(0.5));
  all.insert(Sign::numeric(0.25));
  CHECK(all.size() == 1 + 2 + 2 + 4 + 2);
  // The set iterates in a strict total order.
  Sign prev;
  bool first = true;
  for (const Sign& s : all) {
    if (!first) CHECK(prev < s);
    prev = s;
    first = false;
  }
}
