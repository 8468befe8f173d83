#include <doctest.h>

#include "tacsearch/errors.hpp"
#include "tacsearch/syntax.hpp"
#include "tacsearch/term.hpp"
#include "test_util.hpp"

using namespace tacsearch;

TEST_CASE("types print and parse") {
  for (const char* s : {"num", "bool", "list(num)", "num->bool", "(num->num)->bool"}) {
    CHECK(type_to_string(parse_type(s)) == s);
  }
  CHECK(parse_type("num -> num") == parse_type("num->num"));
  CHECK(parse_type("num -> num -> num").arity() == 2);
  CHECK_THROWS_AS(parse_type("num ->"), ParseError);
}

TEST_CASE("application is type checked") {
  const Term suc = Term::constant("SUC", parse_type("num -> num"));
  const Term p = Term::var("p", Type::boolean());
  CHECK_THROWS_AS(Term::app(suc, p), TypeError);
  CHECK(Term::app(suc, Term::var("n", Type::num())).type() == Type::num());
}

TEST_CASE("alpha equivalence and substitution") {
  const Signature sig = Signature::standard();
  const Term a = parse_term("!x:num. x = x", sig);
  const Term b = parse_term("!y:num. y = y", sig);
  CHECK(alpha_equal(a, b));
  CHECK_FALSE(a == b);
  CHECK(term_key(a) == term_key(b));

  // capture: (!y. x = y)[x := y] must rename the binder
  std::vector<Term> ctx;
  const Term t = parse_term("!y:num. (x:num) = y", sig, ctx);
  const Term y = Term::var("y", Type::num());
  const Term r = subst(t, {{ctx.at(0), y}});
  CHECK(occurs_free(y, r));
  CHECK_FALSE(alpha_equal(r, parse_term("!y:num. y = y", sig)));
}

TEST_CASE("precedence of the concrete syntax") {
  const Signature sig = Signature::standard();
  std::vector<Term> ctx;
  const Term t = parse_term("(p:bool) ==> (q:bool) ==> p /\\ q \\/ ~p", sig, ctx);
  auto imp = logic::dest_binary(t, logic::kImp);
  REQUIRE(imp);
  auto inner = logic::dest_binary(imp->second, logic::kImp);
  REQUIRE(inner);
  CHECK(logic::dest_binary(inner->second, logic::kOr).has_value());
  CHECK(print_term(t) == "p ==> q ==> p /\\ q \\/ ~p");

  const Term s = parse_term("SUC (n:num) + (m:num) = 0", sig, ctx);
  CHECK(logic::dest_binary(s, logic::kEq).has_value());
}

TEST_CASE("print then parse is the identity on goals") {
  const Signature sig = testutil::sig_with({{"f", "num -> num"}});
  for (const char* g : {"!n:num. f n = n", "(p:bool) |- p \\/ ~p",
                        "(x:num) = 0; f x = x |- f 0 = 0",
                        "!l:list(num). l = NIL \\/ (?h:num t:list(num). l = h :: t)"}) {
    const Goal a = parse_goal(g, sig);
    const Goal b = parse_goal(print_goal(a), sig);
    CHECK(goal_equal(a, b));
  }
}

TEST_CASE("unannotated free variables are rejected") {
  const Signature sig = Signature::standard();
  CHECK_THROWS_AS(parse_term("x = 0", sig), ParseError);
  try {
    parse_term("!n:num. n + ", sig);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() > 0);
  }
}

TEST_CASE("goal equality ignores assumption order and bound names") {
  const Signature sig = Signature::standard();
  const Goal a = parse_goal("(p:bool); (q:bool) |- !x:num. x = x", sig);
  const Goal b = parse_goal("(q:bool); (p:bool) |- !y:num. y = y", sig);
  CHECK(goal_equal(a, b));
  CHECK(goal_key(a) == goal_key(b));
  CHECK(goal_sets_equal({a, b}, {b, a}));
}

TEST_CASE("well typed goals") {
  const Signature sig = Signature::standard();
  CHECK(well_typed_goal(parse_goal("!n:num. n = n", sig)));
  Goal bad;
  bad.conclusion = Term::var("n", Type::num());
  CHECK_FALSE(well_typed_goal(bad));
}
