#include "deligne/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "deligne/classes.hpp"
#include "deligne/serialize.hpp"
#include "deligne/specialize.hpp"
#include "deligne/symfunc.hpp"
#include "deligne/verify.hpp"

namespace deligne::cli {

namespace {

// Raised for bad arguments discovered after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition partition_arg(const std::string& text, const char* flag) {
    try {
        return parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

// "L:M" (also "L|M" or "L;M"), each side in partition syntax.
ObjectLabel label_arg(const std::string& text, const char* flag) {
    const auto sep = text.find_first_of(":|;");
    if (sep == std::string::npos)
        throw UsageError(std::string(flag) + ": expected LAMBDA:MU, e.g. \"2,1:1\"");
    return {partition_arg(text.substr(0, sep), flag), partition_arg(text.substr(sep + 1), flag)};
}

void print_s_basis_text(std::ostream& out, const SBasisCoefficients& coeffs) {
    for (const auto& [label, c] : coeffs) out << to_decimal(c) << " X" << label.x << label.y << "\n";
}

serialize::Json laurent_json(const LaurentPoly& f) {
    serialize::Json terms = serialize::Json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back(serialize::Json{{"exponents", e}, {"coeff", to_decimal(c)}});
    return serialize::Json{{"nvars", f.nvars()}, {"terms", terms}};
}

template <class Fn>
double time_ms(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Grothendieck ring of Rep(GL_t): classes S_{lambda,mu}, structure constants, checks", "deligne"};
    app.require_subcommand(1);

    std::string format = "json";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    std::string lambda_text, mu_text, basis = "schur";
    auto* sclass = app.add_subcommand("sclass", "Class S_{lambda,mu} in the Schur (x) Schur or h basis");
    sclass->add_option("--lambda", lambda_text, "Partition lambda, e.g. 2,1")->required();
    sclass->add_option("--mu", mu_text, "Partition mu")->required();
    sclass->add_option("--basis", basis, "schur or hdet")->check(CLI::IsMember({"schur", "hdet"}));
    add_format(sclass);

    std::string a_text, b_text;
    auto* tensor_cmd = app.add_subcommand("tensor", "Multiplicities in X_a (x) X_b for generic t");
    tensor_cmd->add_option("--a", a_text, "First label LAMBDA:MU")->required();
    tensor_cmd->add_option("--b", b_text, "Second label LAMBDA:MU")->required();
    add_format(tensor_cmd);

    std::string input_path;
    auto* expand = app.add_subcommand("expand", "Expand a Schur (x) Schur element in the S basis");
    expand->add_option("--input", input_path, "JSON file (\"-\" for stdin)")->required();
    add_format(expand);

    int n = 0;
    auto* specialize = app.add_subcommand("specialize", "GL_n character of X_{lambda,mu}");
    specialize->add_option("--lambda", lambda_text, "Partition lambda")->required();
    specialize->add_option("--mu", mu_text, "Partition mu")->required();
    specialize->add_option("--n", n, "Rank n")->required()->check(CLI::NonNegativeNumber);
    std::string specialize_format = "text";
    specialize->add_option("--format", specialize_format, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::string suite;
    verify::Options vopts;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(verify::suite_names()));
    verify_cmd->add_option("--max-size", vopts.max_size, "Size bound")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--degree", vopts.degree, "Truncation degree")->check(CLI::Range(0, 8));
    verify_cmd->add_option("--max-n", vopts.max_n, "Largest GL_n rank (f_n)")->check(CLI::NonNegativeNumber);
    verify_cmd->add_flag("--inject-sign-fault", vopts.inject_sign_fault)->group("");

    std::string op;
    int size = 3;
    auto* bench = app.add_subcommand("bench", "Time one kernel");
    bench->add_option("--op", op, "lr, sclass or det")->required()->check(CLI::IsMember({"lr", "sclass", "det"}));
    bench->add_option("--size", size, "Size bound")->check(CLI::Range(0, 12));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (sclass->parsed()) {
            const Partition lambda = partition_arg(lambda_text, "--lambda");
            const Partition mu = partition_arg(mu_text, "--mu");
            if (basis == "hdet") {
                const auto mono = mixed_jacobi_trudi_monomials(lambda, mu);
                if (format == "json") {
                    out << serialize::h_basis_json(mono).dump() << "\n";
                } else {
                    for (const auto& [idx, c] : mono) out << to_decimal(c) << " h" << idx.x << "(x)h" << idx.y << "(y)\n";
                }
            } else {
                const BiSymFunc f = s_class(lambda, mu);
                if (format == "json") out << serialize::to_json(f).dump() << "\n";
                else out << f << "\n";
            }
            return kExitOk;
        }
        if (tensor_cmd->parsed()) {
            const auto coeffs = tensor_structure_constants(label_arg(a_text, "--a"), label_arg(b_text, "--b"));
            if (format == "json") out << serialize::s_basis_json(coeffs).dump() << "\n";
            else print_s_basis_text(out, coeffs);
            return kExitOk;
        }
        if (expand->parsed()) {
            serialize::Json input;
            try {
                if (input_path == "-") {
                    input = serialize::Json::parse(std::cin);
                } else {
                    std::ifstream file(input_path);
                    if (!file) throw UsageError("--input: cannot open '" + input_path + "'");
                    input = serialize::Json::parse(file);
                }
            } catch (const serialize::Json::parse_error& e) {
                throw UsageError(std::string("--input: invalid JSON: ") + e.what());
            }
            BiSymFunc f;
            try {
                f = serialize::bisym_from_json(input);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("--input: ") + e.what());
            }
            const auto coeffs = expand_in_s_basis(f);
            if (format == "json") out << serialize::s_basis_json(coeffs).dump() << "\n";
            else print_s_basis_text(out, coeffs);
            return kExitOk;
        }
        if (specialize->parsed()) {
            const Partition lambda = partition_arg(lambda_text, "--lambda");
            const Partition mu = partition_arg(mu_text, "--mu");
            if (n < lambda.length() + mu.length())
                throw UsageError("--n must be at least ell(lambda) + ell(mu) = " +
                                 std::to_string(lambda.length() + mu.length()));
            const LaurentPoly character = specialize_to_gl_n(s_class(lambda, mu), n);
            if (specialize_format == "json") out << laurent_json(character).dump() << "\n";
            else out << to_string(character) << "\n";
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            const verify::Report report = verify::run_suite(suite, vopts);
            out << verify::format_report(report) << "\n";
            return report.passed() ? kExitOk : kExitVerificationFailed;
        }
        if (bench->parsed()) {
            std::size_t cases = 0;
            const auto parts = partitions_of(size);
            const auto small = partitions_up_to(size);
            double ms = 0;
            if (op == "lr") {
                ms = time_ms([&] {
                    for (const auto& a : parts)
                        for (const auto& b : parts) {
                            (void)multiply(schur(a), schur(b));
                            ++cases;
                        }
                });
            } else {
                const bool det = op == "det";
                ms = time_ms([&] {
                    for (const auto& a : small)
                        for (const auto& b : small) {
                            if (det) (void)mixed_jacobi_trudi(a, b);
                            else (void)s_class(a, b);
                            ++cases;
                        }
                });
            }
            out << "op=" << op << " size=" << size << " cases=" << cases << " elapsed_ms=" << ms << "\n";
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace deligne::cli
