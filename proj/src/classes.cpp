#include "deligne/classes.hpp"

#include "deligne/determinant.hpp"
#include "deligne/symfunc.hpp"

namespace deligne {

namespace {

using IndexMatrix = std::vector<std::vector<int>>;

IndexMatrix submatrix(const IndexMatrix& full, int row_begin, int row_count, const std::vector<int>& cols) {
    IndexMatrix out;
    for (int r = row_begin; r < row_begin + row_count; ++r) {
        std::vector<int> row;
        for (int c : cols) row.push_back(full[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        out.push_back(std::move(row));
    }
    return out;
}

int laplace_sign(const std::vector<int>& cols) {
    int parity = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) parity += cols[j] - static_cast<int>(j);
    return parity % 2 ? -1 : 1;
}

}  // namespace

BiSymFunc s_class(const Partition& lambda, const Partition& mu, const SClassOptions& options) {
    BiSymFunc out;
    for (const Partition& tau : partitions_in_rectangle(lambda.length(), mu.length())) {
        const Partition tau_conj = conjugate(tau);
        if (!options.exhaustive_rectangle && (!contains(lambda, tau) || !contains(mu, tau_conj))) continue;
        const int sign = options.sign ? options.sign(tau) : (tau.size() % 2 ? -1 : 1);
        out += tensor(skew_schur(lambda, tau), skew_schur(mu, tau_conj)) * sign;
    }
    return out;
}

IndexMatrix mixed_jacobi_trudi_matrix(const Partition& lambda, const Partition& mu) {
    const int m = mu.length();
    const int n = lambda.length();
    IndexMatrix index(static_cast<std::size_t>(m + n), std::vector<int>(static_cast<std::size_t>(m + n)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m + n; ++j)
            index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mu[m - 1 - i] + i - j;
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < m + n; ++j)
            index[static_cast<std::size_t>(m + k)][static_cast<std::size_t>(j)] = lambda[k] - k + j - m;
    return index;
}

CompleteBiMonomials mixed_jacobi_trudi_monomials(const Partition& lambda, const Partition& mu) {
    const int m = mu.length();
    const int n = lambda.length();
    const IndexMatrix index = mixed_jacobi_trudi_matrix(lambda, mu);
    CompleteBiMonomials out;
    for (const CosetPattern& pattern : all_coset_patterns(m, n)) {
        const auto cross_cols = pattern.cross_positions();
        const auto circle_cols = pattern.circle_positions();
        const MonomialExpansion y_minor = expand_index_determinant(submatrix(index, 0, m, cross_cols));
        if (y_minor.empty()) continue;
        const MonomialExpansion x_minor = expand_index_determinant(submatrix(index, m, n, circle_cols));
        const int sign = laplace_sign(cross_cols);
        for (const auto& [hy, cy] : y_minor)
            for (const auto& [hx, cx] : x_minor) out[BiIndex{hx, hy}] += sign * cy * cx;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::vector<LaplaceTerm> mixed_jacobi_trudi_laplace_terms(const Partition& lambda, const Partition& mu) {
    const int m = mu.length();
    const int n = lambda.length();
    const IndexMatrix index = mixed_jacobi_trudi_matrix(lambda, mu);
    std::vector<LaplaceTerm> out;
    for (const CosetPattern& pattern : all_coset_patterns(m, n)) {
        const auto cross_cols = pattern.cross_positions();
        LaplaceTerm term{pattern, laplace_sign(cross_cols), {}, {}};
        term.y_minor = complete_monomials_to_schur(expand_index_determinant(submatrix(index, 0, m, cross_cols)));
        term.x_minor = complete_monomials_to_schur(
            expand_index_determinant(submatrix(index, m, n, pattern.circle_positions())));
        out.push_back(std::move(term));
    }
    return out;
}

BiSymFunc complete_bimonomials_to_schur(const CompleteBiMonomials& h) {
    BiSymFunc out;
    for (const auto& [mono, c] : h)
        out += tensor(complete_to_schur(mono.x), complete_to_schur(mono.y)) * c;
    return out;
}

BiSymFunc mixed_jacobi_trudi(const Partition& lambda, const Partition& mu) {
    return complete_bimonomials_to_schur(mixed_jacobi_trudi_monomials(lambda, mu));
}

SBasisCoefficients expand_in_s_basis(const BiSymFunc& f) {
    SBasisCoefficients out;
    std::map<ObjectLabel, BiSymFunc> memo;
    BiSymFunc rest = f;
    while (!rest.is_zero()) {
        // The first term has maximal filtration degree, so it is the leading
        // term of exactly one S_{lambda,mu} still to be subtracted.
        const auto [label, coeff] = *rest.terms().begin();
        auto it = memo.find(label);
        if (it == memo.end()) it = memo.emplace(label, s_class(label.x, label.y)).first;
        out[label] += coeff;
        rest -= it->second * coeff;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

SBasisCoefficients tensor_structure_constants(const ObjectLabel& a, const ObjectLabel& b) {
    return expand_in_s_basis(s_class(a.x, a.y) * s_class(b.x, b.y));
}

}  // namespace deligne
