#include <doctest.h>

#include "oracles.hpp"
#include "tacsearch/errors.hpp"
#include "tacsearch/prover.hpp"
#include "tacsearch/syntax.hpp"
#include "test_util.hpp"

using namespace tacsearch;

TEST_CASE("resolution agrees with ground enumeration") {
  const oracle::Report r = oracle::prover(600, 99);
  INFO(r.first);
  CHECK(r.cases == 600);
  CHECK(r.mismatches == 0);
}

TEST_CASE("clausification preserves the truth table") {
  const oracle::Report r = oracle::clausify(300, 5);
  INFO(r.first);
  CHECK(r.mismatches == 0);
  CHECK(r.cases >= 270);  // at most a tenth past the size cap
  CHECK(r.cases + r.skipped == 300);
}

namespace {

ProofResult prove(const std::string& g, const std::vector<Theorem>& prem, const Signature& sig) {
  Budget b(2.0);
  return prove_goal(parse_goal(g, sig), prem, b);
}

}  // namespace

TEST_CASE("first-order proofs name their premises") {
  const Signature sig = testutil::sig_with({{"P", "num -> bool"}, {"Q", "num -> bool"}, {"c", "num"}});
  const std::vector<Theorem> prem = {testutil::thm("PQ", "!x:num. P x ==> Q x", sig),
                                     testutil::thm("PC", "P c", sig),
                                     testutil::thm("NOISE", "!x:num. Q x ==> Q x", sig)};
  const ProofResult r = prove("Q c", prem, sig);
  CHECK(r.status == ProofResult::Status::Proof);
  CHECK(r.premises == std::vector<std::string>{"PC", "PQ"});
  CHECK(prove("P (SUC c)", prem, sig).status != ProofResult::Status::Proof);
}

TEST_CASE("existentials and equality") {
  const Signature sig = testutil::sig_with({{"P", "num -> bool"}, {"c", "num"}});
  CHECK(prove("?x:num. P x", {testutil::thm("PC", "P c", sig)}, sig).status ==
        ProofResult::Status::Proof);
  CHECK(prove("(a:num) = (b:num) ==> b = a", {}, sig).status == ProofResult::Status::Proof);
  CHECK(prove("(a:num) = (b:num) /\\ P a ==> P b", {}, sig).status == ProofResult::Status::Proof);
}

TEST_CASE("skolem constants are fresh per existential") {
  const Signature sig = testutil::sig_with({{"P", "num -> bool"}});
  const ClauseSet cs = clausify(parse_goal("(?x:num. P x) /\\ (?y:num. ~P y) ==> F", sig), {});
  int skolems = 0;
  for (std::size_t i = 0; i < cs.symbols.size(); ++i) {
    skolems += cs.symbols.name(static_cast<int>(i)).rfind("sk", 0) == 0 ? 1 : 0;
  }
  CHECK(skolems == 2);
}

TEST_CASE("budget exhaustion is a timeout") {
  const Signature sig = testutil::sig_with({{"P", "num -> bool"}, {"f", "num -> num"}});
  const std::vector<Theorem> prem = {testutil::thm("STEP", "!x:num. P x ==> P (f x)", sig)};
  Budget b(1e-5);
  const ProofResult r = prove_goal(parse_goal("P (f (f (f (f 0))))", sig), prem, b);
  CHECK(r.status != ProofResult::Status::Proof);
}
