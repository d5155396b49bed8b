#pragma once

#include <string_view>

#include "wp/graph.hpp"
#include "wp/graph6.hpp"

namespace wp {

// Construction mini-language, fully parenthesized:
//   complete(n) cycle(n) path(n) star(n) kmp(s1,s2,...) fig1() fig2(q)
//   union(a,b) join(a,b) corona(a,p) lex(a,b) k1
// e.g. "corona(path(3),2)" or "lex(complete(2),union(k1,k1))".
// Throws ParseError with the offending offset.
Graph parse_construction(std::string_view text);

}  // namespace wp
