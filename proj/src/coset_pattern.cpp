#include "deligne/coset_pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace deligne {

CosetPattern::CosetPattern(std::vector<bool> crosses) : symbols_(std::move(crosses)) {
    m_ = static_cast<int>(std::count(symbols_.begin(), symbols_.end(), true));
    n_ = static_cast<int>(symbols_.size()) - m_;
}

CosetPattern CosetPattern::parse(std::string_view text) {
    static constexpr std::string_view cross = "×";
    static constexpr std::string_view circle = "∘";
    std::vector<bool> symbols;
    while (!text.empty()) {
        if (text.starts_with(cross)) {
            symbols.push_back(true);
            text.remove_prefix(cross.size());
        } else if (text.starts_with(circle)) {
            symbols.push_back(false);
            text.remove_prefix(circle.size());
        } else if (text.front() == 'x' || text.front() == 'X') {
            symbols.push_back(true);
            text.remove_prefix(1);
        } else if (text.front() == 'o' || text.front() == 'O') {
            symbols.push_back(false);
            text.remove_prefix(1);
        } else {
            throw std::invalid_argument("coset pattern may only contain crosses and circles");
        }
    }
    return CosetPattern(std::move(symbols));
}

CosetPattern CosetPattern::parse(std::string_view text, int m, int n) {
    CosetPattern p = parse(text);
    if (p.crosses() != m || p.circles() != n)
        throw std::invalid_argument("coset pattern must have " + std::to_string(m) + " crosses and " +
                                    std::to_string(n) + " circles");
    return p;
}

std::vector<int> CosetPattern::cross_positions() const {
    std::vector<int> out;
    for (int k = 0; k < length(); ++k)
        if (symbols_[static_cast<std::size_t>(k)]) out.push_back(k);
    return out;
}

std::vector<int> CosetPattern::circle_positions() const {
    std::vector<int> out;
    for (int k = 0; k < length(); ++k)
        if (!symbols_[static_cast<std::size_t>(k)]) out.push_back(k);
    return out;
}

std::string to_string(const CosetPattern& p) {
    std::string out;
    for (int k = 0; k < p.length(); ++k) out += p.is_cross(k) ? "×" : "∘";
    return out;
}

std::vector<CosetPattern> all_coset_patterns(int m, int n) {
    std::vector<CosetPattern> out;
    std::vector<bool> symbols(static_cast<std::size_t>(m + n), false);
    std::fill(symbols.begin(), symbols.begin() + m, true);
    // prev_permutation walks true-first arrangements in lexicographic order
    // of cross positions.
    do {
        out.emplace_back(symbols);
    } while (std::prev_permutation(symbols.begin(), symbols.end()));
    return out;
}

CosetStatistic coset_tau(const CosetPattern& p) {
    std::vector<int> parts;
    int crosses_to_right = 0;
    for (int k = p.length() - 1; k >= 0; --k) {
        if (p.is_cross(k)) ++crosses_to_right;
        else if (crosses_to_right > 0) parts.push_back(crosses_to_right);
    }
    // Scanning right to left produces the circle counts in increasing order.
    std::reverse(parts.begin(), parts.end());
    CosetStatistic out{Partition(std::move(parts)), 1};
    out.sign = out.tau.size() % 2 ? -1 : 1;
    return out;
}

Partition cross_statistic(const CosetPattern& p) {
    std::vector<int> parts;
    int circles_to_left = 0;
    for (int k = 0; k < p.length(); ++k) {
        if (!p.is_cross(k)) ++circles_to_left;
        else if (circles_to_left > 0) parts.push_back(circles_to_left);
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

std::vector<int> minimal_representative(const CosetPattern& p) {
    std::vector<int> g = p.cross_positions();
    std::vector<int> rest = p.circle_positions();
    g.insert(g.end(), rest.begin(), rest.end());
    return g;
}

int permutation_sign(const std::vector<int>& one_line) {
    int inversions = 0;
    for (std::size_t i = 0; i < one_line.size(); ++i)
        for (std::size_t j = i + 1; j < one_line.size(); ++j)
            if (one_line[i] > one_line[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

}  // namespace deligne
