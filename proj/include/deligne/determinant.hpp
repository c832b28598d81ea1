#pragma once

#include <map>
#include <vector>

#include "deligne/integer.hpp"
#include "deligne/partition.hpp"

namespace deligne {

/// A polynomial in one family of generators g_1, g_2, ... (the h_d or the
/// e_d of one alphabet). The monomial g_{d1} g_{d2} ... is keyed by the
/// partition with parts d1, d2, ...; the empty partition is the constant 1.
using MonomialExpansion = std::map<Partition, Integer>;

/// Expands det(g_{index[i][j]}) symbolically with g_0 = 1 and g_d = 0 for
/// d < 0. The matrix must be square; the 0x0 determinant is 1.
MonomialExpansion expand_index_determinant(const std::vector<std::vector<int>>& index);

/// Product of two monomial expansions in the same generators.
MonomialExpansion multiply(const MonomialExpansion& a, const MonomialExpansion& b);

}  // namespace deligne
