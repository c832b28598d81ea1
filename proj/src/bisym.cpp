#include "deligne/bisym.hpp"

#include <algorithm>

namespace deligne {

std::strong_ordering operator<=>(const BiIndex& a, const BiIndex& b) {
    if (auto c = b.degree() <=> a.degree(); c != 0) return c;
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
}

std::ostream& operator<<(std::ostream& os, const BiIndex& idx) {
    return os << "s" << idx.x << "(x)s" << idx.y << "(y)";
}

BiSymFunc::BiSymFunc(BiIndex idx, Integer coeff) {
    if (coeff != 0) terms_.emplace(std::move(idx), std::move(coeff));
}

Integer BiSymFunc::coefficient(const BiIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Integer(0) : it->second;
}

int BiSymFunc::degree() const noexcept {
    return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

void BiSymFunc::add_term(const BiIndex& idx, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(idx, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

BiSymFunc& BiSymFunc::operator+=(const BiSymFunc& other) {
    for (const auto& [idx, c] : other.terms_) add_term(idx, c);
    return *this;
}

BiSymFunc& BiSymFunc::operator-=(const BiSymFunc& other) {
    for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
    return *this;
}

BiSymFunc& BiSymFunc::operator*=(const Integer& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [idx, c] : terms_) c *= scalar;
    return *this;
}

BiSymFunc operator*(const BiSymFunc& a, const BiSymFunc& b) { return multiply(a, b); }

std::ostream& operator<<(std::ostream& os, const BiSymFunc& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [idx, c] : f.terms()) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Integer mag = abs(c);
        if (mag != 1) os << mag << "*";
        os << idx;
        first = false;
    }
    return os;
}

BiSymFunc tensor(const SymFunc& a, const SymFunc& b) {
    BiSymFunc out;
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms()) out.add_term({pa, pb}, ca * cb);
    return out;
}

BiSymFunc multiply(const BiSymFunc& a, const BiSymFunc& b) {
    BiSymFunc out;
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            const SymFunc xs = multiply(schur(ia.x), schur(ib.x));
            const SymFunc ys = multiply(schur(ia.y), schur(ib.y));
            out += tensor(xs, ys) * (ca * cb);
        }
    return out;
}

BiSymFunc omega_xy(const BiSymFunc& f) {
    BiSymFunc out;
    for (const auto& [idx, c] : f.terms()) out.add_term({conjugate(idx.x), conjugate(idx.y)}, c);
    return out;
}

std::size_t rank(const std::vector<BiSymFunc>& family) {
    // Rows are family members, columns the basis indices they touch.
    std::map<BiIndex, std::size_t> column;
    for (const auto& f : family)
        for (const auto& [idx, c] : f.terms()) column.try_emplace(idx, column.size());
    std::vector<std::vector<Integer>> m(family.size(), std::vector<Integer>(column.size(), 0));
    for (std::size_t r = 0; r < family.size(); ++r)
        for (const auto& [idx, c] : family[r].terms()) m[r][column.at(idx)] = c;

    // Fraction-free Gaussian elimination; exact over Z, rank over Q.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < column.size() && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            const Integer a = m[rank][col];
            const Integer b = m[r][col];
            for (std::size_t k = col; k < column.size(); ++k) m[r][k] = a * m[r][k] - b * m[rank][k];
            Integer g = 0;
            for (std::size_t k = col; k < column.size(); ++k) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m[r][k].get_mpz_t());
            if (g > 1)
                for (std::size_t k = col; k < column.size(); ++k) m[r][k] /= g;
        }
        ++rank;
    }
    return rank;
}

}  // namespace deligne
