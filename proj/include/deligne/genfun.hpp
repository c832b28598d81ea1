#pragma once

#include "deligne/oracle.hpp"
#include "deligne/partition.hpp"

// Truncated checks of the generating function for the classes S_{lambda,mu}
// and of the Cauchy identities it is assembled from. All series are cut at a
// total degree D in the alpha and beta variables jointly.
namespace deligne::genfun {

using oracle::MultiPoly;

struct TruncationSpec {
    int a = 1;   // alpha variables
    int b = 1;   // beta variables
    int nx = 1;  // x variables
    int ny = 1;  // y variables
    int max_degree = 0;

    /// Throws std::invalid_argument for negative counts or a degree outside
    /// 0..kMaxDegree.
    void validate() const;
};

inline constexpr int kMaxDegree = 8;

/// Number of (lambda, mu) pairs summed by genfun_lhs.
int genfun_pair_count(const TruncationSpec& t);

/// sum s_lambda(alpha) s_mu(beta) S_{lambda,mu}(x, y) over ell(lambda) <= a,
/// ell(mu) <= b, |lambda| + |mu| <= D.
MultiPoly genfun_lhs(const TruncationSpec& t);

/// The same sum written with omega applied in all four alphabets:
/// sum s_{lambda'}(alpha) s_{mu'}(beta) omega_xy(S_{lambda,mu}).
MultiPoly genfun_lhs_omega(const TruncationSpec& t);

/// prod 1/(1 - x_i alpha_j) prod 1/(1 - y_i beta_j) prod (1 - alpha_i beta_j).
MultiPoly genfun_rhs(const TruncationSpec& t);

/// sum_lambda s_lambda(alpha) s_{lambda/tau}(x), alpha-degree <= D.
MultiPoly cauchy_skew_sum(const Partition& tau, int a, int nx, int max_degree,
                          oracle::Alphabet series = oracle::Alphabet::alpha,
                          oracle::Alphabet variables = oracle::Alphabet::x);

/// s_tau(alpha) prod 1/(1 - x_i alpha_j), alpha-degree <= D.
MultiPoly cauchy_product(const Partition& tau, int a, int nx, int max_degree,
                         oracle::Alphabet series = oracle::Alphabet::alpha,
                         oracle::Alphabet variables = oracle::Alphabet::x);

/// Checks the skew Cauchy identity for tau in (alpha, x) and for tau' in
/// (beta, y).
bool verify_cauchy(const Partition& tau, const TruncationSpec& t);

/// sum_tau (-1)^{|tau|} s_tau(alpha) s_{tau'}(beta), degree <= D.
MultiPoly dual_cauchy_sum(const TruncationSpec& t);
/// prod (1 - alpha_i beta_j), degree <= D.
MultiPoly dual_cauchy_product(const TruncationSpec& t);

bool verify_dual_cauchy(const TruncationSpec& t);

/// sum_tau (-1)^{|tau|} [s_tau(alpha) prod 1/(1-x alpha)] [s_{tau'}(beta)
/// prod 1/(1-y beta)], i.e. the right side assembled from the Cauchy
/// products, truncated at degree D.
MultiPoly assembled_rhs(const TruncationSpec& t);

}  // namespace deligne::genfun
