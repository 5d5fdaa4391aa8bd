#include "pbquad/methods.hpp"

#include "pbquad/aggregate.hpp"
#include "pbquad/termwise.hpp"

#include <array>

namespace pbquad {

namespace {

constexpr std::array kMethods{Method::rosenberg, Method::kzfd,      Method::chain,  Method::ishikawa,
                              Method::rkfj,      Method::aggregate, Method::split2, Method::split3};

}  // namespace

std::string_view to_string(Method m) {
    switch (m) {
        case Method::rosenberg: return "rosenberg";
        case Method::kzfd: return "kzfd";
        case Method::chain: return "chain";
        case Method::ishikawa: return "ishikawa";
        case Method::rkfj: return "rkfj";
        case Method::aggregate: return "aggregate";
        case Method::split2: return "split2";
        case Method::split3: return "split3";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
    for (Method m : kMethods) {
        if (to_string(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

std::span<const Method> all_methods() { return kMethods; }

Quadratization quadratize(const PseudoBooleanFunction& f, Method m) {
    AuxAllocator fresh(f.num_vars());
    switch (m) {
        case Method::rosenberg: return rosenberg_reduce(f, fresh);
        case Method::kzfd: return quadratize_kzfd(f, fresh);
        case Method::chain: return quadratize_termwise(f, PositiveMethod::chain, fresh);
        case Method::ishikawa: return quadratize_termwise(f, PositiveMethod::ishikawa, fresh);
        case Method::rkfj: return quadratize_termwise(f, PositiveMethod::rkfj, fresh);
        case Method::aggregate: return aggregate_pipeline(f, PositiveMethod::ishikawa, fresh);
        case Method::split2: return quadratize_split(f, two_split(), fresh);
        case Method::split3: return quadratize_split(f, three_split(), fresh);
    }
    return quadratize_termwise(f, PositiveMethod::ishikawa, fresh);
}

}  // namespace pbquad
