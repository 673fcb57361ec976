#pragma once

#include <cstdint>

#include "paravec/model.hpp"

namespace paravec {

/// Random instance with A, P entries from N(0, 100) and b from U[0, 10];
/// ordering cone is the positive orthant.
Problem gen_nondegenerate(int q, int n, int m, std::uint64_t seed);

/// Degenerate recipe: b nonnegative with many zero components, second
/// objective the negative of the first, third with a single nonzero
/// entry, fourth (when q >= 4) mostly zero.
Problem gen_degenerate(int q, int n, int m, std::uint64_t seed);

}  // namespace paravec
