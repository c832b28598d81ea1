#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "deligne/partition.hpp"

namespace deligne {

/// A word in the symbols "×" (cross) and "∘" (circle) with m crosses and n
/// circles. The cross positions are the images g(1) < ... < g(m) of the
/// minimal-length representative g of a coset g(S_m x S_n) in S_{m+n}; the
/// circle positions are g(m+1) < ... < g(m+n).
class CosetPattern {
public:
    /// `crosses[k]` is true when position k holds "×".
    explicit CosetPattern(std::vector<bool> crosses);

    /// Parses a pattern written with "×"/"∘" (or ASCII 'x'/'o'). Throws
    /// std::invalid_argument on any other character.
    static CosetPattern parse(std::string_view text);

    /// As parse(), but also requires exactly m crosses and n circles.
    static CosetPattern parse(std::string_view text, int m, int n);

    int crosses() const noexcept { return m_; }
    int circles() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(symbols_.size()); }
    bool is_cross(int position) const { return symbols_.at(static_cast<std::size_t>(position)); }

    /// Zero-based positions of the crosses, increasing.
    std::vector<int> cross_positions() const;
    /// Zero-based positions of the circles, increasing.
    std::vector<int> circle_positions() const;

    friend bool operator==(const CosetPattern&, const CosetPattern&) = default;

private:
    std::vector<bool> symbols_;
    int m_ = 0;
    int n_ = 0;
};

std::string to_string(const CosetPattern& p);

/// Every pattern with m crosses and n circles, in lexicographic order of
/// cross positions.
std::vector<CosetPattern> all_coset_patterns(int m, int n);

struct CosetStatistic {
    /// Parts of size i count the circles with exactly i crosses to their right.
    Partition tau;
    /// (-1)^{|tau|}
    int sign = 1;
};

CosetStatistic coset_tau(const CosetPattern& p);

/// For each cross, the number of circles to its left, sorted into a
/// partition. Always equals conjugate(coset_tau(p).tau).
Partition cross_statistic(const CosetPattern& p);

/// One-line notation of the minimal-length representative g: entry k is
/// g(k+1) - 1, i.e. first the cross positions and then the circle positions.
std::vector<int> minimal_representative(const CosetPattern& p);

/// Sign of a permutation in one-line notation, by counting inversions.
int permutation_sign(const std::vector<int>& one_line);

}  // namespace deligne
