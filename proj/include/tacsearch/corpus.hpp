// Copyright 2026 The tacsearch Authors.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tacsearch/term.hpp"

namespace tacsearch {

// Corpus files, `#` starts a comment:
//
//   theory list
//   requires nat
//   const APPEND : list(num) -> list(num) -> list(num)
//   axiom APPEND_NIL: "!l:list(num). APPEND NIL l = l"
//   thm APPEND_NIL_R: "!l:list(num). APPEND l NIL = l"
//   proof:
//     induct_list_tac THENL [rewrite_tac [APPEND_NIL], ...]
//
// A proof runs until the next stanza keyword at the start of a line.

struct CorpusEntry {
  Theorem theorem;  // dependencies: theorem names used in the proof
  std::string proof;
  bool axiom = false;
  std::size_t line = 0;
};

struct CorpusTheory {
  std::string name;
  std::vector<std::string> required;
  std::vector<std::pair<std::string, Type>> constants;
  std::vector<CorpusEntry> entries;
};

struct Corpus {
  // Theories in dependency order; entries carry global sequence indices.
  std::vector<CorpusTheory> theories;
  Signature signature = Signature::standard();

  std::size_t theorem_count() const;  // thm entries only
  std::vector<const CorpusEntry*> chronological() const;
  // Name of the theory holding the entry with this sequence index.
  const std::string& theory_of(std::size_t sequence_index) const;
};

// Throws ParseError for malformed text and CorpusError for cyclic or
// unknown requires, duplicate names and references to theorems not yet
// visible (earlier in the same theory or in a required one).
Corpus parse_corpus_text(std::string_view text);
Corpus parse_corpus(const std::string& path);

}  // namespace tacsearch
