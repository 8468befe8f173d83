#include <doctest.h>

#include "mini_corpus.hpp"
#include "tacsearch/corpus.hpp"
#include "tacsearch/errors.hpp"

using namespace tacsearch;

TEST_CASE("corpus structure") {
  const Corpus c = parse_corpus_text(kMiniCorpus);
  REQUIRE(c.theories.size() == 2);
  CHECK(c.theorem_count() == 9);
  const auto chron = c.chronological();
  CHECK(chron.size() == 11);
  for (std::size_t i = 0; i < chron.size(); ++i) CHECK(chron[i]->theorem.sequence_index == i);
  CHECK(c.theory_of(0) == "logic");
  CHECK(c.theory_of(10) == "arith");
  const CorpusEntry* add0r = chron[7];
  CHECK(add0r->theorem.name == "ADD_0_R");
  CHECK(add0r->theorem.dependencies == std::vector<std::string>{"ADD_0_L", "ADD_SUC_L"});
}

TEST_CASE("theories are ordered by requires") {
  const Corpus c = parse_corpus_text(R"(
theory b
requires a
thm B: "T"
proof: rewrite_tac [A]
theory a
thm A: "T"
proof: rewrite_tac []
)");
  CHECK(c.theories.front().name == "a");
}

TEST_CASE("corpus errors") {
  CHECK_THROWS_WITH_AS(parse_corpus_text("theory a\nrequires b\ntheory b\nrequires a\n"),
                       doctest::Contains("cyclic"), CorpusError);
  CHECK_THROWS_AS(parse_corpus_text("theory a\nrequires zz\n"), CorpusError);
  CHECK_THROWS_AS(parse_corpus_text("theory a\nthm X: \"T\"\nproof: rewrite_tac []\nthm X: \"T\"\nproof: rewrite_tac []\n"),
                  CorpusError);
  // references must be visible
  CHECK_THROWS_AS(parse_corpus_text("theory a\nthm X: \"T\"\nproof: rewrite_tac [Y]\nthm Y: \"T\"\nproof: rewrite_tac []\n"),
                  CorpusError);
  CHECK_THROWS_AS(parse_corpus_text("theory a\nthm X: \"(n:num) = n\"\nproof: refl_tac\n"),
                  CorpusError);
  try {
    parse_corpus_text("theory a\nthm X: \"!n:num. n +\"\nproof: refl_tac\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("the bundled corpus parses") {
  const Corpus c = parse_corpus(std::string(TACSEARCH_CORPUS_DIR) + "/corpus.thy");
  CHECK(c.theorem_count() >= 150);
  CHECK(c.theories.size() == 3);
}
