#pragma once

#include <string>
#include <vector>

#include "catkit/report.hpp"

namespace catkit {

using Id = std::string;

// Canonical tuple encoding: enc({"x","a"}) == "(x|a)".  Components may
// themselves be encoded tuples; dec splits at '|' only at parenthesis
// depth zero, so nesting round-trips.  Raw identifiers must keep their
// parentheses balanced and use '|' only inside balanced parens.
inline Id enc(const std::vector<Id>& parts) {
  Id out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '|';
    out += parts[i];
  }
  out += ')';
  return out;
}

inline Id enc2(const Id& a, const Id& b) { return enc({a, b}); }

inline std::vector<Id> dec(const Id& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("not a tuple id: " + s);
  std::vector<Id> parts;
  Id cur;
  int depth = 0;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '|' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw ParseError("unbalanced tuple id: " + s);
  parts.push_back(cur);
  return parts;
}

inline std::vector<Id> dec(const Id& s, std::size_t arity) {
  auto parts = dec(s);
  if (parts.size() != arity)
    throw ParseError("expected " + std::to_string(arity) + " components: " + s);
  return parts;
}

}  // namespace catkit
