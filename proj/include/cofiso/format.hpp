#ifndef COFISO_FORMAT_HPP
#define COFISO_FORMAT_HPP

#include <string>
#include <string_view>

#include "cofiso/congruence.hpp"
#include "cofiso/element.hpp"

namespace cofiso {

// Canonical serializations.  Whitespace-free; sets come out sorted, so
// parse(format(x)) == x and format(parse(t)) == t for canonical t.
//   Point         (a,b,...)
//   FinPointSet   {p1;p2;...}
//   Perm          [i1,...,in]
//   Element       ([i1,...,in]|{p1;...;pk})
//   SemidirectPair([i1,...,in],{p1;...;pk})
std::string format(const Point& p);
std::string format(const FinPointSet& s);
std::string format(const Perm& sigma);
std::string format(const Element& a);
std::string format(const SemidirectPair& p);

// Strict parsers: the whole input must match, duplicate points are rejected,
// failures carry the 1-based column.
Point parse_point(std::string_view text);
FinPointSet parse_point_set(std::string_view text);
Perm parse_perm(std::string_view text);
Element parse_element(std::string_view text);

}  // namespace cofiso

#endif  // COFISO_FORMAT_HPP
