#include <doctest.h>

#include "tacsearch/rewrite.hpp"
#include "tacsearch/syntax.hpp"
#include "test_util.hpp"

using namespace tacsearch;

namespace {

Term norm(const std::vector<Term>& rules, const Term& t, std::size_t max_steps = 1000) {
  std::vector<RewriteRule> rs;
  for (const Term& r : rules) {
    for (RewriteRule& x : rules_of(r)) rs.push_back(std::move(x));
  }
  Rewriter rw(rs, max_steps);
  Budget b(1.0);
  return rw.normalize(t, b);
}

}  // namespace

TEST_CASE("rules from statements") {
  const Signature sig = Signature::standard();
  auto rs = rules_of(parse_term("!n:num. 0 + n = n /\\ ~(SUC n = 0)", sig));
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].pattern_vars.size() == 1);
  CHECK(logic::is_const(rs[1].rhs, logic::kFalse));
  // a bare variable on the left is useless as a rule
  CHECK(rules_of(parse_term("!n:num. n = n + 0", sig)).empty());
}

TEST_CASE("commutativity is a permutative rule") {
  const Signature sig = Signature::standard();
  auto rs = rules_of(parse_term("!m n:num. m + n = n + m", sig));
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].permutative);
  auto add0 = rules_of(parse_term("!n:num. 0 + n = n", sig));
  CHECK_FALSE(add0.at(0).permutative);
}

TEST_CASE("ordered rewriting terminates and normalizes AC sums") {
  const Signature sig = Signature::standard();
  const Term comm = parse_term("!m n:num. m + n = n + m", sig);
  const Term assoc = parse_term("!m n p:num. (m + n) + p = m + (n + p)", sig);
  const Term lcomm = parse_term("!m n p:num. m + (n + p) = n + (m + p)", sig);
  std::vector<Term> ctx;
  const Term l = parse_term("((a:num) + (b:num)) + (c:num)", sig, ctx);
  const Term r = parse_term("c + (b + a)", sig, ctx);
  const Term nl = norm({comm, assoc, lcomm}, l);
  const Term nr = norm({comm, assoc, lcomm}, r);
  CHECK(alpha_equal(nl, nr));
  CHECK(term_less(norm({comm}, parse_term("b + a", sig, ctx)), parse_term("b + a", sig, ctx)) ==
        term_less(parse_term("a + b", sig, ctx), parse_term("b + a", sig, ctx)));
}

TEST_CASE("term order is total and strict") {
  const Signature sig = Signature::standard();
  std::vector<Term> ctx;
  const Term a = parse_term("(x:num) + 0", sig, ctx);
  const Term b = parse_term("0 + x", sig, ctx);
  CHECK(term_less(a, b) != term_less(b, a));
  CHECK_FALSE(term_less(a, a));
  CHECK(term_less(parse_term("x", sig, ctx), a));
}

TEST_CASE("builtin simplification") {
  const Signature sig = Signature::standard();
  std::vector<Term> ctx;
  auto simp = [&](const char* s) { return builtin_simplify(parse_term(s, sig, ctx)); };
  CHECK(logic::is_const(*simp("SUC (n:num) = 0"), logic::kFalse));
  CHECK(logic::is_const(*simp("(p:bool) ==> p"), logic::kTrue));
  CHECK(logic::dest_binary(*simp("SUC (n:num) = SUC (m:num)"), logic::kEq).has_value());
  CHECK(logic::dest_binary(*simp("(h:num) :: (t:list(num)) = (k:num) :: (u:list(num))"), logic::kAnd)
            .has_value());
  CHECK_FALSE(simp("(p:bool) /\\ (q:bool)").has_value());
}

TEST_CASE("looping rules hit the step limit") {
  const Signature sig = testutil::sig_with({{"f", "num -> num"}});
  const Term loop = parse_term("!n:num. f n = f (SUC n)", sig);
  std::vector<Term> ctx;
  CHECK_THROWS_AS(norm({loop}, parse_term("f 0", sig, ctx), 50), RewriteLimit);
}

TEST_CASE("rewriting under binders keeps bound variables apart") {
  const Signature sig = Signature::standard();
  const Term add0 = parse_term("!n:num. n + 0 = n", sig);
  const Term t = parse_term("!m:num. m + 0 = m", sig);
  CHECK(logic::is_const(norm({add0}, t), logic::kTrue));
}
