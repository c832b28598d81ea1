#pragma once

#include <map>

#include "deligne/determinant.hpp"
#include "deligne/integer.hpp"
#include "deligne/partition.hpp"

namespace deligne {

/// An element of the ring of symmetric functions, stored by its Schur-basis
/// coordinates. Zero coefficients are never stored.
class SymFunc {
public:
    using Terms = std::map<Partition, Integer>;

    SymFunc() = default;
    static SymFunc unit() { return SymFunc(Partition{}); }
    explicit SymFunc(const Partition& p, Integer coeff = 1);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(const Partition& p) const;
    /// Largest size of a partition carrying a nonzero coefficient; -1 for 0.
    int degree() const noexcept;

    void add_term(const Partition& p, const Integer& coeff);

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    SymFunc& operator*=(const Integer& scalar);

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const Integer& s) { return a *= s; }
    friend SymFunc operator*(const Integer& s, SymFunc a) { return a *= s; }
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator-(SymFunc a) { return a *= -1; }
    friend bool operator==(const SymFunc&, const SymFunc&) = default;

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const SymFunc& f);

SymFunc schur(const Partition& p);

/// Littlewood-Richardson product, computed by counting lattice-word skew
/// tableaux.
SymFunc multiply(const SymFunc& a, const SymFunc& b);

/// c^nu_{lambda,mu}: number of semistandard fillings of nu/lambda with
/// content mu whose reverse reading word is a lattice word.
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// f * e_i via vertical strips (Pieri). Independent of the LR code path.
SymFunc pieri_column(const SymFunc& f, int i);

/// f * h_i via horizontal strips (Pieri).
SymFunc pieri_row(const SymFunc& f, int i);

/// h_{m_1} h_{m_2} ... in the Schur basis.
SymFunc complete_to_schur(const Partition& m);

/// e_{m_1} e_{m_2} ... in the Schur basis.
SymFunc elementary_to_schur(const Partition& m);

/// Schur expansion of s_{outer/inner}; zero when inner is not contained in
/// outer.
SymFunc skew_schur(const Partition& outer, const Partition& inner);
SymFunc skew_schur(const SkewShape& shape);

/// The involution omega: s_p -> s_{p'}.
SymFunc omega(const SymFunc& f);

enum class JacobiTrudiBasis { complete, elementary };

/// Evaluates det(h_{p_i - i + j}) or det(e_{p'_i - i + j}) symbolically and
/// converts the result to the Schur basis.
SymFunc jacobi_trudi(const Partition& p, JacobiTrudiBasis basis);

/// Converts a polynomial in the h_d (or e_d) to the Schur basis.
SymFunc complete_monomials_to_schur(const MonomialExpansion& h);
SymFunc elementary_monomials_to_schur(const MonomialExpansion& e);

}  // namespace deligne
