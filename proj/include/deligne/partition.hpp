#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace deligne {

/// An integer partition stored as its positive parts in weakly decreasing
/// order. Trailing zeros passed to the constructor are dropped, so equal
/// partitions always have equal part lists.
///
/// Ordering is the canonical order used for every enumeration and every
/// serialized output: by size first, then larger part lists first
/// (reverse lexicographic), e.g. (3) < (2,1) < (1,1,1).
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// Zero-based row access; rows past the end read as 0.
    int operator[](int row) const noexcept {
        return row >= 0 && row < length() ? parts_[static_cast<std::size_t>(row)] : 0;
    }
    int first() const noexcept { return (*this)[0]; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// "2,1,1"; the empty partition prints as "".
std::string to_string(const Partition& p);

/// Parses the CLI text syntax: comma-separated positive parts, optionally
/// wrapped in brackets. "" and "[]" give the empty partition. Throws
/// std::invalid_argument on anything else.
Partition parse_partition(std::string_view text);

Partition conjugate(const Partition& p);

/// True iff inner[i] <= outer[i] for every row.
bool contains(const Partition& outer, const Partition& inner);

/// All partitions with at most `rows` parts, each at most `cols`, in
/// canonical order.
std::vector<Partition> partitions_in_rectangle(int rows, int cols);

/// All partitions of n in canonical order.
std::vector<Partition> partitions_of(int n);

/// All partitions of size at most n in canonical order.
std::vector<Partition> partitions_up_to(int n);

/// A skew diagram outer/inner with inner contained in outer.
class SkewShape {
public:
    SkewShape() = default;
    /// Throws std::invalid_argument when inner is not contained in outer.
    SkewShape(Partition outer, Partition inner);
    explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    int cells() const noexcept { return outer_.size() - inner_.size(); }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    Partition inner_;
};

/// A filling of a skew shape. rows[r] holds the entries of row r from
/// column inner[r] to outer[r] - 1.
struct Tableau {
    std::vector<std::vector<int>> rows;

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Visits every semistandard filling with entries in 1..max_entry (rows weakly
/// increasing, columns strictly increasing). Cells are filled in row-major
/// order with entries tried in increasing order, which fixes the visiting
/// order.
void for_each_ssyt(const SkewShape& shape, int max_entry,
                   const std::function<void(const Tableau&)>& visit);

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry);

}  // namespace deligne
