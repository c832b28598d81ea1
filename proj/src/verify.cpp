#include "deligne/verify.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "deligne/classes.hpp"
#include "deligne/genfun.hpp"
#include "deligne/parallel.hpp"
#include "deligne/specialize.hpp"

namespace deligne::verify {

namespace {

using Failure = std::optional<std::string>;

SClassOptions class_options(const Options& options) {
    SClassOptions out;
    if (options.inject_sign_fault)
        out.sign = [](const Partition& tau) { return tau.size() == 1 ? 1 : (tau.size() % 2 ? -1 : 1); };
    return out;
}

std::string pair_name(const Partition& lambda, const Partition& mu) {
    std::ostringstream os;
    os << "lambda=" << lambda << " mu=" << mu;
    return os.str();
}

Report collect(std::string suite, const std::vector<Failure>& outcomes) {
    Report report{std::move(suite), outcomes.size(), 0, {}, {}};
    for (const auto& f : outcomes) {
        if (!f) continue;
        if (report.failures++ == 0) report.first_failure = *f;
    }
    return report;
}

std::vector<std::pair<Partition, Partition>> pairs_up_to(int max_size) {
    std::vector<std::pair<Partition, Partition>> out;
    const auto parts = partitions_up_to(max_size);
    for (const auto& lambda : parts)
        for (const auto& mu : parts) out.emplace_back(lambda, mu);
    return out;
}

Report detsum(const Options& options) {
    const auto pairs = pairs_up_to(options.max_size);
    const auto sopts = class_options(options);
    return collect("detsum", parallel_map(pairs.size(), [&](std::size_t i) -> Failure {
        const auto& [lambda, mu] = pairs[i];
        if (mixed_jacobi_trudi(lambda, mu) == s_class(lambda, mu, sopts)) return std::nullopt;
        return pair_name(lambda, mu);
    }));
}

Report omega_duality(const Options& options) {
    const auto pairs = pairs_up_to(options.max_size);
    const auto sopts = class_options(options);
    return collect("omega", parallel_map(pairs.size(), [&](std::size_t i) -> Failure {
        const auto& [lambda, mu] = pairs[i];
        if (omega_xy(s_class(lambda, mu, sopts)) == s_class(conjugate(lambda), conjugate(mu), sopts))
            return std::nullopt;
        return pair_name(lambda, mu);
    }));
}

Report genfun_identity(const Options& options) {
    genfun::TruncationSpec spec{2, 2, 3, 3, options.degree < 0 ? 6 : options.degree};
    Report report{"genfun", 1, 0, {}, {}};
    std::ostringstream detail;
    detail << "truncation a=" << spec.a << " b=" << spec.b << " nx=" << spec.nx << " ny=" << spec.ny
           << " D=" << spec.max_degree << "; pairs summed: " << genfun::genfun_pair_count(spec);
    report.detail = detail.str();

    // The fault injection has to reach the class sum, so the left side is
    // rebuilt here when it is active.
    genfun::MultiPoly lhs;
    if (options.inject_sign_fault) {
        const auto sopts = class_options(options);
        oracle::Layout layout;
        layout.counts = {spec.a, spec.b, spec.nx, spec.ny};
        lhs = genfun::MultiPoly(layout);
        for (const auto& lambda : partitions_up_to(spec.max_degree)) {
            if (lambda.length() > spec.a) continue;
            for (const auto& mu : partitions_up_to(spec.max_degree - lambda.size())) {
                if (mu.length() > spec.b) continue;
                lhs += oracle::schur_poly(lambda, oracle::Alphabet::alpha, spec.a) *
                       oracle::schur_poly(mu, oracle::Alphabet::beta, spec.b) *
                       oracle::expand_bisym(s_class(lambda, mu, sopts), spec.nx, spec.ny);
            }
        }
    } else {
        lhs = genfun::genfun_lhs(spec);
    }
    const genfun::MultiPoly rhs = genfun::genfun_rhs(spec);
    if (!(lhs == rhs)) {
        report.failures = 1;
        const oracle::Layout common = merge(lhs.layout(), rhs.layout());
        const genfun::MultiPoly diff = lhs.embedded(common) - rhs.embedded(common);
        genfun::MultiPoly first(common);
        const auto& [e, c] = *diff.terms().begin();
        first.add_term(e, c);
        report.first_failure = "lhs - rhs has monomial " + oracle::to_string(first);
    }
    return report;
}

Report cauchy(const Options& options) {
    const int degree = options.degree < 0 ? 5 : options.degree;
    const int dual_degree = options.degree < 0 ? 4 : options.degree;
    std::vector<Failure> outcomes;
    for (const auto& tau : partitions_up_to(options.max_size)) {
        const genfun::TruncationSpec spec{2, 2, 2, 2, degree};
        outcomes.push_back(genfun::verify_cauchy(tau, spec) ? Failure{} : Failure{"tau=" + to_string(tau)});
    }
    const genfun::TruncationSpec dual{2, 2, 0, 0, dual_degree};
    outcomes.push_back(genfun::verify_dual_cauchy(dual) ? Failure{} : Failure{"dual identity"});
    Report report = collect("cauchy", outcomes);
    report.detail = "a=b=2 nx=ny=2 D=" + std::to_string(degree) + ", |tau| <= " + std::to_string(options.max_size) +
                    "; dual a=b=2 D=" + std::to_string(dual_degree);
    return report;
}

Report detshift(const Options& options) {
    std::vector<Failure> outcomes;
    for (int n = 0; n <= options.max_size; ++n)
        for (int i = 0; i <= n; ++i)
            outcomes.push_back(check_detshift(i, n) ? Failure{}
                                                    : Failure{"i=" + std::to_string(i) + " n=" + std::to_string(n)});
    return collect("detshift", outcomes);
}

Report f_n(const Options& options) {
    struct Case {
        Partition lambda, mu;
        int n;
    };
    std::vector<Case> cases;
    for (const auto& [lambda, mu] : pairs_up_to(options.max_size))
        for (int n = lambda.length() + mu.length(); n <= options.max_n; ++n)
            if (n >= 1) cases.push_back({lambda, mu, n});
    const auto sopts = class_options(options);
    return collect("f_n", parallel_map(cases.size(), [&](std::size_t i) -> Failure {
        const Case& c = cases[i];
        const LaurentPoly lhs = specialize_to_gl_n(s_class(c.lambda, c.mu, sopts), c.n);
        if (lhs == rational_schur_char(signature_of(c.lambda, c.mu, c.n))) return std::nullopt;
        return pair_name(c.lambda, c.mu) + " n=" + std::to_string(c.n);
    }));
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"detsum", "omega", "genfun", "cauchy", "detshift", "f_n"};
    return names;
}

Report run_suite(const std::string& name, const Options& options) {
    if (name == "detsum") return detsum(options);
    if (name == "omega") return omega_duality(options);
    if (name == "genfun") return genfun_identity(options);
    if (name == "cauchy") return cauchy(options);
    if (name == "detshift") return detshift(options);
    if (name == "f_n") return f_n(options);
    throw std::invalid_argument("unknown verification suite '" + name + "'");
}

std::string format_report(const Report& report) {
    std::ostringstream os;
    os << report.suite << ": ";
    if (report.passed()) os << "PASS (" << report.cases << " cases)";
    else os << "FAIL (" << report.failures << " of " << report.cases << " cases; first: " << report.first_failure << ")";
    if (!report.detail.empty()) os << "\n  " << report.detail;
    return os.str();
}

}  // namespace deligne::verify
