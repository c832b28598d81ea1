#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "deligne/bisym.hpp"
#include "deligne/integer.hpp"
#include "deligne/partition.hpp"

namespace deligne {

/// Exact Laurent polynomial in x_1..x_n.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, Integer>;

    explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}
    static LaurentPoly constant(int nvars, const Integer& c);
    static LaurentPoly monomial(const Exponents& e, const Integer& c = 1);

    int nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Integer& c);

    /// x_i -> x_i^{-1} for every variable.
    LaurentPoly inverted() const;
    /// x_i -> x_{perm[i]}.
    LaurentPoly permuted(const std::vector<int>& perm) const;
    /// True when invariant under every permutation of the variables.
    bool is_symmetric() const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Integer& s);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    int nvars_;
    Terms terms_;
};

/// Terms in increasing exponent order, e.g. "x1^-1*x2^1 + 1 + x1^1*x2^-1".
/// Zero exponents are omitted; the others are always printed with a sign
/// when negative.
std::string to_string(const LaurentPoly& f);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

/// Highest weight of a rational GL_n irreducible: weakly decreasing integers.
class Signature {
public:
    explicit Signature(std::vector<int> entries);

    const std::vector<int>& entries() const noexcept { return entries_; }
    int n() const noexcept { return static_cast<int>(entries_.size()); }

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const Signature& s);

/// (lambda_1, ..., lambda_r, 0, ..., 0, -mu_s, ..., -mu_1) of length n.
/// Throws std::domain_error when n < ell(lambda) + ell(mu).
Signature signature_of(const Partition& lambda, const Partition& mu, int n);

/// Character of the irreducible with signature s: the polynomial Schur
/// character of s + (q, ..., q) divided by (x_1...x_n)^q. With no explicit
/// shift q = max(0, -last entry).
LaurentPoly rational_schur_char(const Signature& s);
LaurentPoly rational_schur_char(const Signature& s, int shift);

/// s_lambda(x) s_mu(y) -> s_lambda(x_1..x_n) s_mu(x_1^{-1}..x_n^{-1}).
LaurentPoly specialize_to_gl_n(const BiSymFunc& f, int n);

/// Checks e_i(x^{-1}) = e_{n-i}(x) (x_1...x_n)^{-1} as Laurent polynomials.
/// Throws std::domain_error unless 0 <= i <= n.
bool check_detshift(int i, int n);

}  // namespace deligne
