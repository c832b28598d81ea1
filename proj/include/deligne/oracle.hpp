#pragma once

#include <array>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "deligne/bisym.hpp"
#include "deligne/integer.hpp"
#include "deligne/partition.hpp"

// Brute-force ground truth: symmetric functions expanded into honest
// polynomials in finitely many variables.
namespace deligne::oracle {

/// Named alphabets, in the order variables are laid out and printed.
enum class Alphabet { alpha = 0, beta = 1, x = 2, y = 3 };

std::string name(Alphabet a);

/// Number of variables declared in each alphabet. Exponent vectors store
/// alpha, beta, x, y variables in that order.
struct Layout {
    std::array<int, 4> counts{};

    static Layout of(Alphabet a, int nvars);

    int count(Alphabet a) const noexcept { return counts[static_cast<std::size_t>(a)]; }
    int offset(Alphabet a) const noexcept;
    int total() const noexcept;

    /// Per-alphabet maximum of the two layouts.
    friend Layout merge(const Layout& a, const Layout& b);
    friend bool operator==(const Layout&, const Layout&) = default;
};

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial over the integers in a fixed layout.
class MultiPoly {
public:
    using Terms = std::map<Exponents, Integer>;

    MultiPoly() = default;
    explicit MultiPoly(Layout layout) : layout_(layout) {}
    static MultiPoly constant(const Integer& c, Layout layout = {});
    /// The single variable `alphabet`_{index+1}.
    static MultiPoly variable(Alphabet alphabet, int index, Layout layout);

    const Layout& layout() const noexcept { return layout_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Integer& c);

    /// Re-expresses the polynomial in a layout with at least as many
    /// variables per alphabet.
    MultiPoly embedded(const Layout& target) const;

    /// Total degree in the given alphabets.
    int degree_in(const Exponents& e, std::initializer_list<Alphabet> alphabets) const;

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const Integer& scalar);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Integer& s) { return a *= s; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    /// Equality after embedding both sides into a common layout.
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
    Layout layout_;
    Terms terms_;
};

/// Product that drops every monomial whose total degree in `alphabets`
/// exceeds `max_degree`.
MultiPoly multiply_truncated(const MultiPoly& a, const MultiPoly& b,
                             std::initializer_list<Alphabet> alphabets, int max_degree);

/// Keeps only the monomials of total degree <= max_degree in `alphabets`.
MultiPoly truncate(const MultiPoly& f, std::initializer_list<Alphabet> alphabets, int max_degree);

/// Sets the last variable of `alphabet` to zero and drops it from the layout.
MultiPoly drop_last_variable(const MultiPoly& f, Alphabet alphabet);

/// Plain-text form: variables sorted by alphabet then index, e.g.
/// "x1^2*x2 + 3*y1 - 1".
std::string to_string(const MultiPoly& f);
std::ostream& operator<<(std::ostream& os, const MultiPoly& f);

/// Sum over semistandard tableaux of the content monomial.
MultiPoly schur_poly(const Partition& p, Alphabet alphabet, int nvars);
MultiPoly skew_schur_poly(const SkewShape& shape, Alphabet alphabet, int nvars);

/// s_lambda(x) s_mu(y) -> products of SSYT polynomials.
MultiPoly expand_bisym(const BiSymFunc& f, int nx, int ny);

/// Polynomial image of a Schur-basis element in one alphabet.
MultiPoly expand_symfunc(const SymFunc& f, Alphabet alphabet, int nvars);

/// det(x_i^{p_j + n - j}) / det(x_i^{n - j}) by exact long division.
/// Throws std::invalid_argument when ell(p) > nvars and std::logic_error if
/// the division leaves a remainder.
MultiPoly bialternant_schur(const Partition& p, int nvars, Alphabet alphabet = Alphabet::x);

}  // namespace deligne::oracle
