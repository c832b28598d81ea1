#include "deligne/specialize.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "deligne/oracle.hpp"

namespace deligne {

namespace {

LaurentPoly from_polynomial(const oracle::MultiPoly& f, int n) {
    LaurentPoly out(n);
    for (const auto& [e, c] : f.terms()) out.add_term(e, c);
    return out;
}

LaurentPoly schur_character(const Partition& p, int n) {
    return from_polynomial(oracle::schur_poly(p, oracle::Alphabet::x, n), n);
}

}  // namespace

LaurentPoly LaurentPoly::constant(int nvars, const Integer& c) {
    LaurentPoly out(nvars);
    out.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return out;
}

LaurentPoly LaurentPoly::monomial(const Exponents& e, const Integer& c) {
    LaurentPoly out(static_cast<int>(e.size()));
    out.add_term(e, c);
    return out;
}

Integer LaurentPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Integer& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent vector has wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::inverted() const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents neg(e);
        for (int& v : neg) v = -v;
        out.add_term(neg, c);
    }
    return out;
}

LaurentPoly LaurentPoly::permuted(const std::vector<int>& perm) const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents moved(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) moved[static_cast<std::size_t>(perm[i])] = e[i];
        out.add_term(moved, c);
    }
    return out;
}

bool LaurentPoly::is_symmetric() const {
    // Adjacent transpositions generate the symmetric group.
    std::vector<int> perm(static_cast<std::size_t>(nvars_));
    for (int i = 0; i + 1 < nvars_; ++i) {
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
        if (!(permuted(perm) == *this)) return false;
    }
    return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    if (other.nvars_ != nvars_) throw std::invalid_argument("variable counts differ");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    if (other.nvars_ != nvars_) throw std::invalid_argument("variable counts differ");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable counts differ");
    LaurentPoly out(a.nvars_);
    LaurentPoly::Exponents sum(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = ea[k] + eb[k];
            out.add_term(sum, ca * cb);
        }
    return out;
}

LaurentPoly operator*(LaurentPoly a, const Integer& s) {
    if (s == 0) {
        a.terms_.clear();
        return a;
    }
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
}

std::string to_string(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += "x" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
        }
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        const Integer mag = abs(c);
        if (mono.empty()) os << mag;
        else if (mag == 1) os << mono;
        else os << mag << '*' << mono;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << to_string(f); }

Signature::Signature(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i] > entries_[i - 1]) throw std::invalid_argument("signature entries must be weakly decreasing");
}

std::ostream& operator<<(std::ostream& os, const Signature& s) {
    os << '(';
    for (std::size_t i = 0; i < s.entries().size(); ++i) os << (i ? "," : "") << s.entries()[i];
    return os << ')';
}

Signature signature_of(const Partition& lambda, const Partition& mu, int n) {
    if (n < lambda.length() + mu.length())
        throw std::domain_error("n = " + std::to_string(n) + " is below ell(lambda) + ell(mu) = " +
                                std::to_string(lambda.length() + mu.length()));
    std::vector<int> entries(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < lambda.length(); ++i) entries[static_cast<std::size_t>(i)] = lambda[i];
    for (int j = 0; j < mu.length(); ++j) entries[static_cast<std::size_t>(n - 1 - j)] = -mu[j];
    return Signature(std::move(entries));
}

LaurentPoly rational_schur_char(const Signature& s) {
    const int last = s.entries().empty() ? 0 : s.entries().back();
    return rational_schur_char(s, std::max(0, -last));
}

LaurentPoly rational_schur_char(const Signature& s, int shift) {
    const int n = s.n();
    std::vector<int> parts(s.entries());
    for (int& v : parts) {
        v += shift;
        if (v < 0) throw std::invalid_argument("shift too small to make the signature polynomial");
    }
    const LaurentPoly polynomial = schur_character(Partition(std::move(parts)), n);
    return polynomial * LaurentPoly::monomial(std::vector<int>(static_cast<std::size_t>(n), -shift));
}

LaurentPoly specialize_to_gl_n(const BiSymFunc& f, int n) {
    LaurentPoly out(n);
    std::map<Partition, LaurentPoly> cache;
    auto character = [&](const Partition& p) -> const LaurentPoly& {
        auto it = cache.find(p);
        if (it == cache.end()) it = cache.emplace(p, schur_character(p, n)).first;
        return it->second;
    };
    for (const auto& [idx, c] : f.terms()) {
        const LaurentPoly& x_part = character(idx.x);
        const LaurentPoly y_part = character(idx.y).inverted();
        out += (x_part * y_part) * c;
    }
    return out;
}

bool check_detshift(int i, int n) {
    if (i < 0 || i > n) throw std::domain_error("check_detshift requires 0 <= i <= n");
    auto column = [](int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); };
    const LaurentPoly lhs = schur_character(column(i), n).inverted();
    const LaurentPoly det_dual = LaurentPoly::monomial(std::vector<int>(static_cast<std::size_t>(n), -1));
    const LaurentPoly rhs = schur_character(column(n - i), n) * det_dual;
    return lhs == rhs;
}

}  // namespace deligne
