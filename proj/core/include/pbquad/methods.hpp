#pragma once

#include "pbquad/polynomial.hpp"
#include "pbquad/quadratization.hpp"

#include <optional>
#include <span>
#include <string_view>

namespace pbquad {

// Whole-function quadratization strategies selectable from the command line.
enum class Method { rosenberg, kzfd, chain, ishikawa, rkfj, aggregate, split2, split3 };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view name);
std::span<const Method> all_methods();

// Quadratizes f with auxiliaries numbered from f.num_vars() + 1. The
// aggregate method falls back to ishikawa for unshared positive terms.
// Throws InvalidInput for kzfd on a positive term of degree >= 3.
Quadratization quadratize(const PseudoBooleanFunction& f, Method m);

}  // namespace pbquad
