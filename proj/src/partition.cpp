#include "deligne/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace deligne {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    // Within one size, lexicographically larger part lists come first.
    return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                  a.parts_.begin(), a.parts_.end());
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << '(' << to_string(p) << ')';
    return os;
}

std::string to_string(const Partition& p) {
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    std::string_view body = trim(text);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("unbalanced brackets in partition");
        body = trim(body.substr(1, body.size() - 2));
    }
    std::vector<int> parts;
    if (body.empty()) return Partition{};
    while (true) {
        auto comma = body.find(',');
        std::string_view token = trim(body.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    if (std::find(parts.begin(), parts.end(), 0) != parts.end())
        throw std::invalid_argument("partition parts must be positive: '" + std::string(text) + "'");
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
    std::vector<int> out(static_cast<std::size_t>(p.first()), 0);
    for (int part : p.parts())
        for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
    return Partition(std::move(out));
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

namespace {

// Emits partitions of `remaining` with parts <= max_part in canonical order
// (largest parts first), honouring an optional bound on the number of parts.
void generate(int remaining, int max_part, int max_rows, std::vector<int>& prefix,
              std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (static_cast<int>(prefix.size()) == max_rows) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        generate(remaining - part, part, max_rows, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> prefix;
    generate(n, n, n, prefix, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto level = partitions_of(k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Partition> partitions_in_rectangle(int rows, int cols) {
    std::vector<Partition> out;
    if (rows < 0 || cols < 0) return out;
    std::vector<int> prefix;
    for (int n = 0; n <= rows * cols; ++n) generate(n, cols, rows, prefix, out);
    return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(outer_, inner_))
        throw std::invalid_argument("skew shape inner partition is not contained in outer");
}

void for_each_ssyt(const SkewShape& shape, int max_entry,
                   const std::function<void(const Tableau&)>& visit) {
    const Partition& outer = shape.outer();
    const Partition& inner = shape.inner();
    Tableau t;
    t.rows.resize(static_cast<std::size_t>(outer.length()));
    // Cells in row-major order as (row, column).
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < outer.length(); ++r) {
        t.rows[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(outer[r] - inner[r]), 0);
        for (int c = inner[r]; c < outer[r]; ++c) cells.emplace_back(r, c);
    }
    auto at = [&](int r, int c) -> int& {
        return t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - inner[r])];
    };

    auto fill = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            visit(t);
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1;
        if (c > inner[r]) lo = std::max(lo, at(r, c - 1));
        if (r > 0 && c >= inner[r - 1]) lo = std::max(lo, at(r - 1, c) + 1);
        for (int v = lo; v <= max_entry; ++v) {
            at(r, c) = v;
            self(self, k + 1);
        }
    };
    if (max_entry <= 0 && !cells.empty()) return;
    fill(fill, 0);
}

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry) {
    std::vector<Tableau> out;
    for_each_ssyt(shape, max_entry, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

}  // namespace deligne
