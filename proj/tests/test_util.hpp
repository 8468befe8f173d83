#pragma once

#include <string>

#include "tacsearch/syntax.hpp"
#include "tacsearch/term.hpp"

namespace testutil {

inline tacsearch::Signature sig_with(std::initializer_list<std::pair<const char*, const char*>> decls) {
  tacsearch::Signature s = tacsearch::Signature::standard();
  for (const auto& [n, t] : decls) s.declare(n, tacsearch::parse_type(t));
  return s;
}

inline tacsearch::Goal goal(const std::string& text, const tacsearch::Signature& sig) {
  return tacsearch::parse_goal(text, sig);
}

inline tacsearch::Theorem thm(const std::string& name, const std::string& text,
                              const tacsearch::Signature& sig, std::size_t seq = 0) {
  tacsearch::Theorem t;
  t.name = name;
  t.statement = tacsearch::parse_goal(text, sig);
  t.sequence_index = seq;
  return t;
}

}  // namespace testutil
