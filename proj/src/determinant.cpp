#include "deligne/determinant.hpp"

#include <algorithm>
#include <stdexcept>

namespace deligne {

namespace {

Partition merge_monomials(const Partition& a, const Partition& b) {
    std::vector<int> parts(a.parts());
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

}  // namespace

MonomialExpansion expand_index_determinant(const std::vector<std::vector<int>>& index) {
    const std::size_t n = index.size();
    for (const auto& row : index)
        if (row.size() != n) throw std::invalid_argument("determinant matrix must be square");

    MonomialExpansion out;
    std::vector<bool> used(n, false);
    std::vector<int> factors;
    // Row-by-row permutation expansion; a zero entry prunes the branch.
    auto expand = [&](auto&& self, std::size_t row, int sign) -> void {
        if (row == n) {
            std::vector<int> parts(factors);
            std::sort(parts.begin(), parts.end(), std::greater<>());
            auto& slot = out[Partition(std::move(parts))];
            slot += sign;
            return;
        }
        int larger_used = 0;
        for (std::size_t c = n; c-- > 0;) {
            if (used[c]) {
                ++larger_used;
                continue;
            }
            int d = index[row][c];
            if (d < 0) continue;
            used[c] = true;
            if (d > 0) factors.push_back(d);
            self(self, row + 1, (larger_used % 2) ? -sign : sign);
            if (d > 0) factors.pop_back();
            used[c] = false;
        }
    };
    expand(expand, 0, 1);
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

MonomialExpansion multiply(const MonomialExpansion& a, const MonomialExpansion& b) {
    MonomialExpansion out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) out[merge_monomials(ma, mb)] += ca * cb;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace deligne
