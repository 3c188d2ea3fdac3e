#include <doctest.h>

#include <set>
#include <vector>

#include "argue/errors.hpp"
#include "argue/parser.hpp"
#include "argue/proof.hpp"

using namespace argue;

namespace {

Database tumour_db() {
  return parse_database(
      "dict bounded\n"
      "c1: cell(X) -> growthLtd(X) [+]\n"
      "t1: tumourCell(X) -> cell(X) [++]\n"
      "t2: tumourCell(X) -> ~growthLtd(X) [++]\n"
      "f1: tumourCell(someX) [++]\n");
}

Proof axiom_shape(const std::string& formula, GroundLabel label) {
  return Proof::shape(Rule::axiom, parse_formula(formula), {}, std::move(label));
}

Proof hyp_shape(const std::string& formula) {
  return Proof::shape(Rule::hypothesis, parse_formula(formula), {}, std::nullopt);
}

Proof node_shape(Rule r, const std::string& formula, std::vector<Proof> children) {
  return Proof::shape(r, parse_formula(formula), std::move(children), std::nullopt);
}

}  // namespace

TEST_CASE("rule names round-trip") {
  for (Rule r : {Rule::axiom, Rule::hypothesis, Rule::and_intro,
                 Rule::and_elim_left, Rule::and_elim_right, Rule::imp_intro,
                 Rule::imp_elim, Rule::or_intro_left, Rule::or_intro_right,
                 Rule::or_elim, Rule::not_intro, Rule::not_elim}) {
    CHECK(rule_by_name(rule_name(r)) == r);
  }
  CHECK(rule_name(Rule::imp_elim) == "imp_elim");
  CHECK_THROWS_AS(rule_by_name("modus_ponens"), Error);
}

TEST_CASE("empty proofs reject every accessor") {
  Proof p;
  CHECK(p.empty());
  CHECK_THROWS_AS(p.rule(), Error);
  CHECK_THROWS_AS(p.conclusion(), Error);
  CHECK_THROWS_AS(p.children(), Error);
  CHECK_THROWS_AS(p.grounds(), Error);
  CHECK_THROWS_AS(p.sign(), Error);
  CHECK(p == Proof());
}

TEST_CASE("axiom and hypothesis leaves are evaluated") {
  GroundLabel gl{"t2", {{"X", "someX"}}};
  Sign pp = Sign::symbolic(DictId::bounded, SymbolicSign::plus_plus);
  Proof ax = Proof::axiom(parse_formula("tumourCell(someX)"), gl, pp);
  CHECK(ax.evaluated());
  CHECK(ax.rule() == Rule::axiom);
  CHECK(ax.grounds() == Grounds{gl});
  CHECK(ax.sign() == pp);
  CHECK(ax.size() == 1);
  REQUIRE(ax.label().has_value());
  CHECK(ax.label()->str() == "t2(someX)");

  Proof hyp = Proof::hypothesis(parse_formula("a"), pp);
  CHECK(hyp.evaluated());
  CHECK(hyp.grounds().empty());
  CHECK(hyp.sign() == pp);
  CHECK_FALSE(hyp.label().has_value());
}

TEST_CASE("inference combines signs left to right and unions grounds") {
  Sign p = Sign::symbolic(DictId::bounded, SymbolicSign::plus);
  Sign pp = Sign::symbolic(DictId::bounded, SymbolicSign::plus_plus);
  Proof minor = Proof::axiom(parse_formula("a"), GroundLabel{"f", {}}, p);
  Proof major = Proof::axiom(parse_formula("a -> b"), GroundLabel{"g", {}}, pp);
  Proof mp = Proof::inference(Rule::imp_elim, parse_formula("b"), {minor, major});
  CHECK(mp.sign() == p);
  CHECK(mp.grounds() == Grounds{GroundLabel{"f", {}}, GroundLabel{"g", {}}});
  CHECK(mp.size() == 3);

  // Numeric signs multiply in child order.
  Proof nminor = Proof::axiom(parse_formula("a"), GroundLabel{"f", {}},
                              Sign::numeric(0.7));
  Proof nmajor = Proof::axiom(parse_formula("a -> b"), GroundLabel{"g", {}},
                              Sign::numeric(0.5));
  Proof nmp = Proof::inference(Rule::imp_elim, parse_formula("b"), {nminor, nmajor});
  CHECK(nmp.sign() == Sign::numeric(0.7 * 0.5));
}

TEST_CASE("inference rejects bad shapes and doubt signs") {
  Sign p = Sign::symbolic(DictId::bounded, SymbolicSign::plus);
  Proof leaf = Proof::axiom(parse_formula("a"), GroundLabel{"f", {}}, p);
  CHECK_THROWS_AS(Proof::inference(Rule::axiom, parse_formula("a"), {}), Error);
  CHECK_THROWS_AS(Proof::inference(Rule::and_intro, parse_formula("a & a"), {}),
                  Error);
  Proof shape_only = hyp_shape("a");
  CHECK_THROWS_AS(
      Proof::inference(Rule::and_intro, parse_formula("a & a"), {leaf, shape_only}),
      Error);

  Proof doubt = Proof::axiom(parse_formula("b"), GroundLabel{"g", {}},
                             Sign::symbolic(DictId::delta, SymbolicSign::minus));
  CHECK_THROWS_AS(
      Proof::inference(Rule::and_intro, parse_formula("a & b"), {leaf, doubt}),
      DictionaryError);
}

TEST_CASE("shape nodes stay unevaluated until checked") {
  Proof s = axiom_shape("tumourCell(someX)", GroundLabel{"f1", {}});
  CHECK_FALSE(s.evaluated());
  CHECK_THROWS_AS(s.grounds(), Error);
  CHECK_THROWS_AS(s.sign(), Error);
}

TEST_CASE("str renders an indented tree") {
  Proof minor = axiom_shape("tumourCell(someX)", GroundLabel{"f1", {}});
  Proof major = axiom_shape("tumourCell(someX) -> growthLtd(someX) -> #",
                            GroundLabel{"t2", {{"X", "someX"}}});
  Proof mp = node_shape(Rule::imp_elim, "growthLtd(someX) -> #", {minor, major});
  CHECK(mp.str() ==
        "imp_elim: growthLtd(someX) -> #\n"
        "  axiom f1: tumourCell(someX)\n"
        "  axiom t2(someX): tumourCell(someX) -> growthLtd(someX) -> #");
}

TEST_CASE("structural order is strict and ignores evaluation") {
  Proof a = axiom_shape("a", GroundLabel{"f", {}});
  Proof a_eval = Proof::axiom(parse_formula("a"), GroundLabel{"f", {}},
                              Sign::symbolic(DictId::bounded, SymbolicSign::plus));
  CHECK(a == a_eval);

  std::set<Proof> all;
  all.insert(Proof());
  all.insert(a);
  all.insert(a_eval);
  all.insert(hyp_shape("a"));
  all.insert(axiom_shape("b", GroundLabel{"f", {}}));
  all.insert(axiom_shape("a", GroundLabel{"g", {}}));
  all.insert(node_shape(Rule::and_intro, "a & a", {a, a}));
  CHECK(all.size() == 6);
  CHECK(Proof() < a);
}

TEST_CASE("check_proof validates an axiom instance") {
  Database db = tumour_db();
  Proof leaf = axiom_shape("~growthLtd(someX)", GroundLabel{"t2", {{"X", "someX"}}});
  // The label's instance is the implication, not its surface negation.
  CHECK_THROWS_AS(check_proof(db, leaf), ProofError);

  Proof good = axiom_shape("tumourCell(someX) -> ~growthLtd(someX)",
                           GroundLabel{"t2", {{"X", "someX"}}});
  Argument a = check_proof(db, good);
  CHECK(a.formula.str() == "tumourCell(someX) -> growthLtd(someX) -> #");
  CHECK(grounds_str(a.grounds) == "{t2(someX)}");
  CHECK(a.sign == Sign::symbolic(DictId::bounded, SymbolicSign::plus_plus));
  CHECK(a.proof.evaluated());
}

TEST_CASE("check_proof accepts an implication chain") {
  Database db = tumour_db();
  Proof minor = axiom_shape("tumourCell(someX)", GroundLabel{"f1", {}});
  Proof major = axiom_shape("tumourCell(X) -> ~growthLtd(X)",
                            GroundLabel{"t2", {{"X", "someX"}}});
  // The major premise must state the instantiated formula.
  CHECK_THROWS_AS(
      check_proof(db, node_shape(Rule::imp_elim, "~growthLtd(someX)", {minor, major})),
      ProofError);

  Proof major_inst = axiom_shape("tumourCell(someX) -> ~growthLtd(someX)",
                                 GroundLabel{"t2", {{"X", "someX"}}});
  Argument a = check_proof(
      db, node_shape(Rule::imp_elim, "~growthLtd(someX)", {minor, major_inst}));
  CHECK(argument_str(a) == "(growthLtd(someX) -> #, {f1, t2(someX)}, ++)");
}

TEST_CASE("check_proof handles hypotheses and vacuous discharge") {
  Database db = tumour_db();
  Argument identity = check_proof(
      db, node_shape(Rule::imp_intro, "a -> a", {hyp_shape("a")}));
  CHECK(identity.formula.str() == "a -> a");
  CHECK(identity.grounds.empty());
  CHECK(identity.sign == db.dict().top());

  Argument vacuous = check_proof(
      db, node_shape(Rule::imp_intro, "b -> tumourCell(someX)",
                     {axiom_shape("tumourCell(someX)", GroundLabel{"f1", {}})}));
  CHECK(grounds_str(vacuous.grounds) == "{f1}");

  CHECK_THROWS_AS(check_proof(db, hyp_shape("a")), ProofError);
}

TEST_CASE("check_proof covers the conjunction rules") {
  Database db = parse_database(
      "dict bounded\n"
      "c: a & b [+]\n");
  Argument left = check_proof(
      db, node_shape(Rule::and_elim_left, "a",
                     {axiom_shape("a & b", GroundLabel{"c", {}})}));
  CHECK(argument_str(left) == "(a, {c}, +)");

  Argument pair = check_proof(
      db, node_shape(Rule::and_intro, "b & a",
                     {node_shape(Rule::and_elim_right, "b",
                                 {axiom_shape("a & b", GroundLabel{"c", {}})}),
                      node_shape(Rule::and_elim_left, "a",
                                 {axiom_shape("a & b", GroundLabel{"c", {}})})}));
  CHECK(argument_str(pair) == "(b & a, {c}, +)");

  CHECK_THROWS_AS(
      check_proof(db, node_shape(Rule::and_elim_left, "b",
                                 {axiom_shape("a & b", GroundLabel{"c", {}})})),
      ProofError);
}

TEST_CASE("check_proof covers the negation rules") {
  Database db = parse_database(
      "dict bounded-delta\n"
      "f1: a [+]\n"
      "f2: ~a [++]\n");
  Proof falsum = node_shape(Rule::not_elim, "#",
                            {axiom_shape("a", GroundLabel{"f1", {}}),
                             axiom_shape("~a", GroundLabel{"f2", {}})});
  Argument boom = check_proof(db, falsum);
  CHECK(argument_str(boom) == "(#, {f1, f2}, +)");

  Argument notb = check_proof(db, node_shape(Rule::not_intro, "~b", {falsum}));
  CHECK(notb.formula.str() == "b -> #");
  CHECK(grounds_str(notb.grounds) == "{f1, f2}");

  CHECK_THROWS_AS(
      check_proof(db, node_shape(Rule::not_intro, "a & b", {falsum})), ProofError);
}

TEST_CASE("or_elim discharges each case hypothesis") {
  Database db = parse_database(
      "dict bounded\n"
      "d: a | b [+]\n"
      "u: a -> c [+]\n"
      "v: b -> c [+]\n");
  Proof cases = node_shape(
      Rule::or_elim, "c",
      {axiom_shape("a | b", GroundLabel{"d", {}}),
       node_shape(Rule::imp_elim, "c",
                  {hyp_shape("a"), axiom_shape("a -> c", GroundLabel{"u", {}})}),
       node_shape(Rule::imp_elim, "c",
                  {hyp_shape("b"), axiom_shape("b -> c", GroundLabel{"v", {}})})});
  Argument a = check_proof(db, cases);
  CHECK(argument_str(a) == "(c, {d, u, v}, +)");

  // The case hypotheses are not visible outside their branches.
  CHECK_THROWS_AS(
      check_proof(db, node_shape(Rule::imp_elim, "c",
                                 {hyp_shape("a"),
                                  axiom_shape("a -> c", GroundLabel{"u", {}})})),
      ProofError);

  Argument left = check_proof(
      db, node_shape(Rule::or_intro_left, "(a -> a) | q",
                     {node_shape(Rule::imp_intro, "a -> a", {hyp_shape("a")})}));
  CHECK(left.formula.str() == "(a -> a) | q");
  CHECK(left.grounds.empty());
}

TEST_CASE("check_proof error paths locate the failing node") {
  Database db = tumour_db();

  try {
    check_proof(db, axiom_shape("a", GroundLabel{"zz", {}}));
    FAIL("expected ProofError");
  } catch (const ProofError& e) {
    CHECK(e.path == "");
    CHECK(std::string(e.what()).find("unknown axiom label") != std::string::npos);
    CHECK(std::string(e.what()).find("(at root)") != std::string::npos);
  }

  try {
    check_proof(db, node_shape(Rule::imp_elim, "cell(someX)",
                               {hyp_shape("tumourCell(someX)"),
                                axiom_shape("tumourCell(someX) -> cell(someX)",
                                            GroundLabel{"t1", {{"X", "someX"}}})}));
    FAIL("expected ProofError");
  } catch (const ProofError& e) {
    CHECK(e.path == "0");
    CHECK(std::string(e.what()).find("undischarged hypothesis") != std::string::npos);
  }

  try {
    check_proof(db, node_shape(Rule::and_intro, "a & b",
                               {axiom_shape("tumourCell(someX)", GroundLabel{"f1", {}})}));
    FAIL("expected ProofError");
  } catch (const ProofError& e) {
    CHECK(std::string(e.what()).find("takes 2 premises") != std::string::npos);
  }

  // Binding problems: arity and variable-name mismatches.
  CHECK_THROWS_AS(
      check_proof(db, axiom_shape("tumourCell(someX) -> cell(someX)",
                                  GroundLabel{"t1", {}})),
      ProofError);
  CHECK_THROWS_AS(
      check_proof(db, axiom_shape("tumourCell(someX) -> cell(someX)",
                                  GroundLabel{"t1", {{"Y", "someX"}}})),
      ProofError);
}

TEST_CASE("check_proof rejects doubt-signed axioms") {
  Database db = parse_database(
      "dict delta\n"
      "f: a [-]\n");
  try {
    check_proof(db, axiom_shape("a", GroundLabel{"f", {}}));
    FAIL("expected ProofError");
  } catch (const ProofError& e) {
    CHECK(std::string(e.what()).find("doubt sign") != std::string::npos);
  }
}

TEST_CASE("checker accepts constants the database never mentions") {
  Database db = parse_database(
      "dict bounded\n"
      "u: r(X) -> s(X) [+]\n"
      "k: r(c1) [+]\n");
  Argument a = check_proof(
      db, axiom_shape("r(c9) -> s(c9)", GroundLabel{"u", {{"X", "c9"}}}));
  CHECK(argument_str(a) == "(r(c9) -> s(c9), {u(c9)}, +)");
}

TEST_CASE("proof_mentions sees every node including hypotheses") {
  Database db = tumour_db();
  Argument a = check_proof(
      db, node_shape(Rule::imp_intro, "b -> tumourCell(someX)",
                     {axiom_shape("tumourCell(someX)", GroundLabel{"f1", {}})}));
  CHECK(proof_mentions(a.proof, parse_formula("tumourCell(someX)")));
  CHECK(proof_mentions(a.proof, parse_formula("b -> tumourCell(someX)")));
  CHECK_FALSE(proof_mentions(a.proof, parse_formula("b")));

  Argument identity = check_proof(
      db, node_shape(Rule::imp_intro, "q -> q", {hyp_shape("q")}));
  CHECK(proof_mentions(identity.proof, parse_formula("q")));
  CHECK(depends_on(identity, parse_formula("q")));

  // Surface shapes normalize before comparison, so either spelling of the
  // conclusion matches the same node.
  Argument neg = check_proof(
      db, axiom_shape("tumourCell(someX) -> ~growthLtd(someX)",
                      GroundLabel{"t2", {{"X", "someX"}}}));
  CHECK(proof_mentions(neg.proof,
                       parse_formula("tumourCell(someX) -> ~growthLtd(someX)")));
  CHECK(proof_mentions(
      neg.proof, parse_formula("tumourCell(someX) -> (growthLtd(someX) -> #)")));
  CHECK_FALSE(proof_mentions(neg.proof, parse_formula("~growthLtd(someX)")));

  CHECK_FALSE(proof_mentions(Proof(), parse_formula("a")));
}

TEST_CASE("same_triple and TripleLess ignore the witness proof") {
  Database db = tumour_db();
  Argument a = check_proof(
      db, node_shape(Rule::imp_intro, "a -> a", {hyp_shape("a")}));
  Argument b = a;
  b.proof = check_proof(db, node_shape(Rule::imp_intro, "a -> a",
                                       {hyp_shape("a")})).proof;
  CHECK(same_triple(a, b));
  TripleLess less;
  CHECK_FALSE(less(a, b));
  CHECK_FALSE(less(b, a));

  Argument c = check_proof(
      db, node_shape(Rule::imp_intro, "b -> b", {hyp_shape("b")}));
  CHECK_FALSE(same_triple(a, c));
  CHECK(less(a, c) != less(c, a));
}
