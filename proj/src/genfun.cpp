#include "deligne/genfun.hpp"

#include <stdexcept>

#include "deligne/classes.hpp"
#include "deligne/symfunc.hpp"

namespace deligne::genfun {

using oracle::Alphabet;
using oracle::Exponents;
using oracle::Layout;

namespace {

constexpr std::initializer_list<Alphabet> kSeries = {Alphabet::alpha, Alphabet::beta};

Layout full_layout(const TruncationSpec& t) {
    Layout layout;
    layout.counts = {t.a, t.b, t.nx, t.ny};
    return layout;
}

// 1 + (uv) + (uv)^2 + ... up to the degree budget in the series alphabets.
MultiPoly geometric(Alphabet u, int ui, Alphabet v, int vi, const Layout& layout, int max_degree,
                    std::initializer_list<Alphabet> series) {
    MultiPoly out = MultiPoly::constant(1, layout);
    Exponents e(static_cast<std::size_t>(layout.total()), 0);
    const auto pu = static_cast<std::size_t>(layout.offset(u) + ui);
    const auto pv = static_cast<std::size_t>(layout.offset(v) + vi);
    for (int k = 1;; ++k) {
        e[pu] = k;
        e[pv] = k;
        if (out.degree_in(e, series) > max_degree) break;
        out.add_term(e, 1);
    }
    return out;
}

// prod_{i,j} 1/(1 - v_i s_j) with truncation after every factor.
MultiPoly cauchy_kernel(Alphabet series, int nseries, Alphabet variables, int nvars, const Layout& layout,
                        int max_degree, std::initializer_list<Alphabet> budget) {
    MultiPoly out = MultiPoly::constant(1, layout);
    for (int i = 0; i < nvars; ++i)
        for (int j = 0; j < nseries; ++j)
            out = oracle::multiply_truncated(out, geometric(variables, i, series, j, layout, max_degree, budget),
                                             budget, max_degree);
    return out;
}

MultiPoly schur_in(const Partition& p, Alphabet alphabet, int nvars, const Layout& layout) {
    return oracle::schur_poly(p, alphabet, nvars).embedded(layout);
}

int sign_of(const Partition& tau) { return tau.size() % 2 ? -1 : 1; }

}  // namespace

void TruncationSpec::validate() const {
    if (a < 0 || b < 0 || nx < 0 || ny < 0) throw std::invalid_argument("variable counts must be nonnegative");
    if (max_degree < 0 || max_degree > kMaxDegree)
        throw std::invalid_argument("truncation degree must lie in 0.." + std::to_string(kMaxDegree));
}

int genfun_pair_count(const TruncationSpec& t) {
    t.validate();
    int count = 0;
    for (const Partition& lambda : partitions_up_to(t.max_degree)) {
        if (lambda.length() > t.a) continue;
        for (const Partition& mu : partitions_up_to(t.max_degree - lambda.size()))
            if (mu.length() <= t.b) ++count;
    }
    return count;
}

MultiPoly genfun_lhs(const TruncationSpec& t) {
    t.validate();
    const Layout layout = full_layout(t);
    MultiPoly out(layout);
    for (const Partition& lambda : partitions_up_to(t.max_degree)) {
        if (lambda.length() > t.a) continue;
        const MultiPoly s_alpha = schur_in(lambda, Alphabet::alpha, t.a, layout);
        for (const Partition& mu : partitions_up_to(t.max_degree - lambda.size())) {
            if (mu.length() > t.b) continue;
            const MultiPoly s_beta = schur_in(mu, Alphabet::beta, t.b, layout);
            const MultiPoly cls = oracle::expand_bisym(s_class(lambda, mu), t.nx, t.ny);
            out += s_alpha * s_beta * cls;
        }
    }
    return out;
}

MultiPoly genfun_lhs_omega(const TruncationSpec& t) {
    t.validate();
    const Layout layout = full_layout(t);
    MultiPoly out(layout);
    // Every pair of the right total size is summed; Schur polynomials with
    // too many parts vanish on their own.
    for (const Partition& lambda : partitions_up_to(t.max_degree)) {
        const Partition lambda_c = conjugate(lambda);
        if (lambda_c.length() > t.a) continue;
        const MultiPoly s_alpha = schur_in(lambda_c, Alphabet::alpha, t.a, layout);
        for (const Partition& mu : partitions_up_to(t.max_degree - lambda.size())) {
            const Partition mu_c = conjugate(mu);
            if (mu_c.length() > t.b) continue;
            const MultiPoly s_beta = schur_in(mu_c, Alphabet::beta, t.b, layout);
            const MultiPoly cls = oracle::expand_bisym(omega_xy(s_class(lambda, mu)), t.nx, t.ny);
            out += s_alpha * s_beta * cls;
        }
    }
    return out;
}

MultiPoly genfun_rhs(const TruncationSpec& t) {
    t.validate();
    const Layout layout = full_layout(t);
    const int d = t.max_degree;
    MultiPoly out = cauchy_kernel(Alphabet::alpha, t.a, Alphabet::x, t.nx, layout, d, kSeries);
    out = oracle::multiply_truncated(out, cauchy_kernel(Alphabet::beta, t.b, Alphabet::y, t.ny, layout, d, kSeries),
                                     kSeries, d);
    for (int i = 0; i < t.a; ++i)
        for (int j = 0; j < t.b; ++j) {
            MultiPoly factor = MultiPoly::constant(1, layout);
            factor -= MultiPoly::variable(Alphabet::alpha, i, layout) * MultiPoly::variable(Alphabet::beta, j, layout);
            out = oracle::multiply_truncated(out, factor, kSeries, d);
        }
    return out;
}

MultiPoly cauchy_skew_sum(const Partition& tau, int a, int nx, int max_degree, Alphabet series,
                          Alphabet variables) {
    Layout layout;
    layout.counts[static_cast<std::size_t>(series)] = a;
    layout.counts[static_cast<std::size_t>(variables)] = nx;
    MultiPoly out(layout);
    for (const Partition& lambda : partitions_up_to(max_degree)) {
        if (lambda.length() > a || !contains(lambda, tau)) continue;
        const MultiPoly skew = oracle::expand_symfunc(skew_schur(lambda, tau), variables, nx);
        out += schur_in(lambda, series, a, layout) * skew;
    }
    return out;
}

MultiPoly cauchy_product(const Partition& tau, int a, int nx, int max_degree, Alphabet series,
                         Alphabet variables) {
    Layout layout;
    layout.counts[static_cast<std::size_t>(series)] = a;
    layout.counts[static_cast<std::size_t>(variables)] = nx;
    const MultiPoly kernel = cauchy_kernel(series, a, variables, nx, layout, max_degree, {series});
    return oracle::multiply_truncated(schur_in(tau, series, a, layout), kernel, {series}, max_degree);
}

bool verify_cauchy(const Partition& tau, const TruncationSpec& t) {
    t.validate();
    const int d = t.max_degree;
    const bool x_side = cauchy_skew_sum(tau, t.a, t.nx, d) == cauchy_product(tau, t.a, t.nx, d);
    const Partition tau_c = conjugate(tau);
    const bool y_side = cauchy_skew_sum(tau_c, t.b, t.ny, d, Alphabet::beta, Alphabet::y) ==
                        cauchy_product(tau_c, t.b, t.ny, d, Alphabet::beta, Alphabet::y);
    return x_side && y_side;
}

MultiPoly dual_cauchy_sum(const TruncationSpec& t) {
    t.validate();
    Layout layout;
    layout.counts = {t.a, t.b, 0, 0};
    MultiPoly out(layout);
    for (const Partition& tau : partitions_up_to(t.max_degree / 2)) {
        const Partition tau_c = conjugate(tau);
        if (tau.length() > t.a || tau_c.length() > t.b) continue;
        out += schur_in(tau, Alphabet::alpha, t.a, layout) * schur_in(tau_c, Alphabet::beta, t.b, layout) *
               Integer(sign_of(tau));
    }
    return out;
}

MultiPoly dual_cauchy_product(const TruncationSpec& t) {
    t.validate();
    Layout layout;
    layout.counts = {t.a, t.b, 0, 0};
    MultiPoly out = MultiPoly::constant(1, layout);
    for (int i = 0; i < t.a; ++i)
        for (int j = 0; j < t.b; ++j) {
            MultiPoly factor = MultiPoly::constant(1, layout);
            factor -= MultiPoly::variable(Alphabet::alpha, i, layout) * MultiPoly::variable(Alphabet::beta, j, layout);
            out = oracle::multiply_truncated(out, factor, kSeries, t.max_degree);
        }
    return out;
}

bool verify_dual_cauchy(const TruncationSpec& t) { return dual_cauchy_sum(t) == dual_cauchy_product(t); }

MultiPoly assembled_rhs(const TruncationSpec& t) {
    t.validate();
    const Layout layout = full_layout(t);
    const int d = t.max_degree;
    MultiPoly out(layout);
    for (const Partition& tau : partitions_up_to(d / 2)) {
        const Partition tau_c = conjugate(tau);
        if (tau.length() > t.a || tau_c.length() > t.b) continue;
        const MultiPoly left = cauchy_product(tau, t.a, t.nx, d).embedded(layout);
        const MultiPoly right =
            cauchy_product(tau_c, t.b, t.ny, d, Alphabet::beta, Alphabet::y).embedded(layout);
        out += oracle::multiply_truncated(left, right, kSeries, d) * Integer(sign_of(tau));
    }
    return out;
}

}  // namespace deligne::genfun
