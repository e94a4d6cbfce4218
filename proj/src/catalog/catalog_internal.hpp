#pragma once

#include <vector>

#include "hyptrans/catalog.hpp"

namespace hyptrans::detail {

std::vector<IdentitySpec> build_entries();

enum class Point { Zero, One, Infinity };

// Exponents a function factor may show at 0, 1 or infinity, as affine expressions.
// At infinity these are powers of |y|.
std::vector<Affine> fn_exponents(const FnSpec& fn, Point p);

// The same for everything multiplying the explicit power weights of an integral:
// the inner function, or the nested integral through its closed form.
std::vector<Affine> inner_exponents(const IntegralSpec& spec, Point p);

// Solution kind behind a function factor (Pure2F1 is w1).
SolutionKind solution_kind(FnKind k);

HypParams fn_params(const FnSpec& fn, const SymValues& v);

// Representative x inside a domain interval.
double representative(const OpenInterval& iv);

}  // namespace hyptrans::detail
