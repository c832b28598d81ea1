#pragma once

#include <map>
#include <ostream>
#include <vector>

#include "deligne/integer.hpp"
#include "deligne/partition.hpp"
#include "deligne/symfunc.hpp"

namespace deligne {

/// Index of the basis element s_x(x) s_y(y) of the two-alphabet ring.
struct BiIndex {
    Partition x;
    Partition y;

    int degree() const noexcept { return x.size() + y.size(); }

    friend bool operator==(const BiIndex&, const BiIndex&) = default;
    /// Higher filtration degree first, then x, then y in canonical order.
    friend std::strong_ordering operator<=>(const BiIndex& a, const BiIndex& b);
};

std::ostream& operator<<(std::ostream& os, const BiIndex& idx);

/// Element of Lambda (x) Lambda in the basis s_lambda(x) s_mu(y). The two
/// alphabets are kept independent; nothing here identifies y with x^{-1}.
/// Iteration visits leading (highest-degree) terms first.
class BiSymFunc {
public:
    using Terms = std::map<BiIndex, Integer>;

    BiSymFunc() = default;
    static BiSymFunc unit() { return BiSymFunc(BiIndex{}); }
    explicit BiSymFunc(BiIndex idx, Integer coeff = 1);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(const BiIndex& idx) const;
    /// Filtration degree: max |lambda| + |mu| over terms; -1 for zero.
    int degree() const noexcept;

    void add_term(const BiIndex& idx, const Integer& coeff);

    BiSymFunc& operator+=(const BiSymFunc& other);
    BiSymFunc& operator-=(const BiSymFunc& other);
    BiSymFunc& operator*=(const Integer& scalar);

    friend BiSymFunc operator+(BiSymFunc a, const BiSymFunc& b) { return a += b; }
    friend BiSymFunc operator-(BiSymFunc a, const BiSymFunc& b) { return a -= b; }
    friend BiSymFunc operator*(BiSymFunc a, const Integer& s) { return a *= s; }
    friend BiSymFunc operator*(const Integer& s, BiSymFunc a) { return a *= s; }
    friend BiSymFunc operator*(const BiSymFunc& a, const BiSymFunc& b);
    friend bool operator==(const BiSymFunc&, const BiSymFunc&) = default;

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const BiSymFunc& f);

BiSymFunc tensor(const SymFunc& a, const SymFunc& b);

/// Termwise Littlewood-Richardson product in each alphabet.
BiSymFunc multiply(const BiSymFunc& a, const BiSymFunc& b);

/// omega applied in both alphabets.
BiSymFunc omega_xy(const BiSymFunc& f);

/// Rank over Q of a family of elements (exact fraction-free elimination).
std::size_t rank(const std::vector<BiSymFunc>& family);

}  // namespace deligne
