#pragma once

#include <functional>
#include <map>
#include <vector>

#include "deligne/bisym.hpp"
#include "deligne/coset_pattern.hpp"
#include "deligne/integer.hpp"
#include "deligne/partition.hpp"

namespace deligne {

/// Label (lambda, mu) of the indecomposable X_{lambda,mu}.
using ObjectLabel = BiIndex;

/// Coordinates in the basis {S_{lambda,mu}} of Lambda (x) Lambda.
using SBasisCoefficients = std::map<ObjectLabel, Integer>;

/// A polynomial in h_d(x) and h_d(y): the key's x part lists the x-indices
/// of one monomial and its y part the y-indices.
using CompleteBiMonomials = std::map<BiIndex, Integer>;

struct SClassOptions {
    /// Sum over every tau in the ell(lambda) x ell(mu) rectangle instead of
    /// only tau contained in lambda with tau' contained in mu.
    bool exhaustive_rectangle = false;
    /// Replaces the sign (-1)^{|tau|}. Only used to exercise failure paths.
    std::function<int(const Partition& tau)> sign;
};

/// S_{lambda,mu} = sum_tau (-1)^{|tau|} s_{lambda/tau}(x) s_{mu/tau'}(y).
BiSymFunc s_class(const Partition& lambda, const Partition& mu, const SClassOptions& options = {});

/// Index matrix of the mixed Jacobi-Trudi determinant: the first ell(mu)
/// rows hold h(y) indices mu_{m+1-i} + i - j, the remaining ell(lambda) rows
/// hold h(x) indices lambda_k - k + j - m (one-based, m = ell(mu)).
std::vector<std::vector<int>> mixed_jacobi_trudi_matrix(const Partition& lambda, const Partition& mu);

/// The mixed determinant expanded in h-monomials by Laplace expansion along
/// the first ell(mu) rows, one term per coset pattern.
CompleteBiMonomials mixed_jacobi_trudi_monomials(const Partition& lambda, const Partition& mu);

/// One Laplace term of the mixed determinant.
struct LaplaceTerm {
    CosetPattern pattern;
    /// Laplace sign computed from the chosen column positions.
    int sign = 1;
    /// Minor on the y rows and the cross columns, in the Schur basis of y.
    SymFunc y_minor;
    /// Minor on the x rows and the circle columns, in the Schur basis of x.
    SymFunc x_minor;
};

std::vector<LaplaceTerm> mixed_jacobi_trudi_laplace_terms(const Partition& lambda, const Partition& mu);

/// The mixed determinant converted to the Schur (x) Schur basis.
BiSymFunc mixed_jacobi_trudi(const Partition& lambda, const Partition& mu);

/// Converts h(x)h(y) monomials to the Schur (x) Schur basis.
BiSymFunc complete_bimonomials_to_schur(const CompleteBiMonomials& h);

/// Coordinates of f in the S basis, by descending-degree elimination using
/// S_{lambda,mu} = s_lambda(x)s_mu(y) + (lower degree).
SBasisCoefficients expand_in_s_basis(const BiSymFunc& f);

/// Multiplicities of X_{kappa,sigma} in X_a (x) X_b for generic t.
SBasisCoefficients tensor_structure_constants(const ObjectLabel& a, const ObjectLabel& b);

}  // namespace deligne
