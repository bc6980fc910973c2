#ifndef SUPCONE_TEXT_HPP
#define SUPCONE_TEXT_HPP

#include <string>
#include <variant>

#include "supcone/func.hpp"
#include "supcone/iso.hpp"
#include "supcone/poly.hpp"
#include "supcone/stone.hpp"

namespace supcone {

// Canonical, bit-exact serializations. parse(print(x)) == x on canonical
// values; print(parse(s)) canonicalizes s.

std::string print_fn(const TreeFn& u);
std::string print_fn(const FlatFn& u);
std::string print_poly(const Poly& p);

/// Grammar (whitespace-insensitive):
///   fn   := "const" ext | "split" "(" fn "," fn ")"
///         | "ramp" "(" bit ";" prefix ";" poly ")"
///   poly := "poly" "[" rat ("," rat)* "]"
///   ext  := rat | "+inf" | "-inf"
/// Ramp prefixes are accepted and reified; canonical output never has one.
TreeFn parse_treefn(const std::string& text);

/// "flat d=<d> [v0, v1, ...]"
FlatFn parse_flatfn(const std::string& text);

std::variant<TreeFn, FlatFn> parse_any_fn(const std::string& text);

/// "{w1,w2,...}" with "e" for the root cell.
ClopenSet parse_clopen(const std::string& text);

/// A cell word ("e", "0110", ...) or a branch point ("01(1)^w").
PointRef parse_point(const std::string& text);

}  // namespace supcone

#endif  // SUPCONE_TEXT_HPP
