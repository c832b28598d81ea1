#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace deligne::verify {

struct Options {
    /// Bound on |lambda| and |mu| (detsum, omega, f_n), on |tau| (cauchy) and
    /// on n (detshift).
    int max_size = 4;
    /// Truncation degree for genfun and cauchy; a negative value selects the
    /// suite default (genfun 6, cauchy 5 with the dual identity at 4).
    int degree = -1;
    /// Largest GL_n rank checked by f_n.
    int max_n = 4;
    /// Flips the sign of every |tau| = 1 term in the class sum so the failure
    /// paths can be exercised. Reaches detsum, genfun and f_n; omega is blind
    /// to it because conjugation preserves |tau|.
    bool inject_sign_fault = false;
};

struct Report {
    std::string suite;
    std::size_t cases = 0;
    std::size_t failures = 0;
    /// Description of the first failing case in enumeration order.
    std::string first_failure;
    /// Extra context (truncation spec, pair counts).
    std::string detail;

    bool passed() const noexcept { return failures == 0; }
};

/// detsum | omega | genfun | cauchy | detshift | f_n
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
Report run_suite(const std::string& name, const Options& options);

/// "PASS (N cases)" or "FAIL (k of N cases; first: ...)", followed by the
/// detail line when present.
std::string format_report(const Report& report);

}  // namespace deligne::verify
