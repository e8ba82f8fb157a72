#pragma once

#include "sl2a/amalgam.hpp"
#include "sl2a/mat2.hpp"
#include "sl2a/tree.hpp"
#include "sl2a/words.hpp"

#include <string>

namespace sl2a {

// Ring spec grammar:
//   base ('[' var (',' var)* ']')? ('loc' '(' expr (',' expr)* ')')?
// with base either Z or F<q>, q prime.
Rs parse_ring_spec(const std::string& text);

// Expression grammar: integers, declared variables, + - * / ^ and
// parentheses; exponents are nonnegative integer literals (inverses are
// written as divisions).
RingElem parse_elem(const std::string& text, const Rs& rs);

// Matrix literal [[e, e], [e, e]].
Mat2 parse_matrix(const std::string& text, const Rs& rs);

// Vertex literal (n, expr).
TreeVertex parse_vertex(const std::string& text, const Rs& rs);

std::string format_poly(const RingSpec& rs, const Poly& p);
std::string format_elem(const RingElem& e);
std::string format_matrix(const Mat2& m);
std::string format_ring_spec(const RingSpec& rs);
std::string format_vertex(const TreeVertex& w);
std::string format_side(SideClass c);
std::string format_word(const AmalgamWord& w);

// DOT graph of the radius-k neighborhood (k <= 4); nodes labeled "(n, u)".
std::string dot_neighborhood(const TreeVertex& center, int radius, const Valuation& v);

} // namespace sl2a
