#include "deligne/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace deligne::oracle {

std::string name(Alphabet a) {
    switch (a) {
        case Alphabet::alpha: return "alpha";
        case Alphabet::beta: return "beta";
        case Alphabet::x: return "x";
        case Alphabet::y: return "y";
    }
    return "?";
}

Layout Layout::of(Alphabet a, int nvars) {
    if (nvars < 0) throw std::invalid_argument("variable count must be nonnegative");
    Layout out;
    out.counts[static_cast<std::size_t>(a)] = nvars;
    return out;
}

int Layout::offset(Alphabet a) const noexcept {
    int off = 0;
    for (std::size_t k = 0; k < static_cast<std::size_t>(a); ++k) off += counts[k];
    return off;
}

int Layout::total() const noexcept { return std::accumulate(counts.begin(), counts.end(), 0); }

Layout merge(const Layout& a, const Layout& b) {
    Layout out;
    for (std::size_t k = 0; k < 4; ++k) out.counts[k] = std::max(a.counts[k], b.counts[k]);
    return out;
}

MultiPoly MultiPoly::constant(const Integer& c, Layout layout) {
    MultiPoly out(layout);
    out.add_term(Exponents(static_cast<std::size_t>(layout.total()), 0), c);
    return out;
}

MultiPoly MultiPoly::variable(Alphabet alphabet, int index, Layout layout) {
    if (index < 0 || index >= layout.count(alphabet)) throw std::out_of_range("variable index outside layout");
    MultiPoly out(layout);
    Exponents e(static_cast<std::size_t>(layout.total()), 0);
    e[static_cast<std::size_t>(layout.offset(alphabet) + index)] = 1;
    out.add_term(e, 1);
    return out;
}

Integer MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::embedded(const Layout& target) const {
    if (target == layout_) return *this;
    for (std::size_t k = 0; k < 4; ++k)
        if (target.counts[k] < layout_.counts[k]) throw std::invalid_argument("target layout is too small");
    MultiPoly out(target);
    for (const auto& [e, c] : terms_) {
        Exponents moved(static_cast<std::size_t>(target.total()), 0);
        for (std::size_t k = 0; k < 4; ++k) {
            const auto a = static_cast<Alphabet>(k);
            for (int i = 0; i < layout_.count(a); ++i)
                moved[static_cast<std::size_t>(target.offset(a) + i)] =
                    e[static_cast<std::size_t>(layout_.offset(a) + i)];
        }
        out.terms_.emplace(std::move(moved), c);
    }
    return out;
}

int MultiPoly::degree_in(const Exponents& e, std::initializer_list<Alphabet> alphabets) const {
    int d = 0;
    for (Alphabet a : alphabets)
        for (int i = 0; i < layout_.count(a); ++i) d += e[static_cast<std::size_t>(layout_.offset(a) + i)];
    return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    const Layout common = merge(layout_, other.layout_);
    if (!(common == layout_)) *this = embedded(common);
    if (other.layout_ == common) {
        for (const auto& [e, c] : other.terms_) add_term(e, c);
    } else {
        const MultiPoly moved = other.embedded(common);
        for (const auto& [e, c] : moved.terms_) add_term(e, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    MultiPoly negated = other;
    negated *= -1;
    return *this += negated;
}

MultiPoly& MultiPoly::operator*=(const Integer& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

namespace {

MultiPoly product(const MultiPoly& a, const MultiPoly& b, std::initializer_list<Alphabet> alphabets,
                  int max_degree) {
    const Layout common = merge(a.layout(), b.layout());
    const MultiPoly lhs = a.embedded(common);
    const MultiPoly rhs = b.embedded(common);
    MultiPoly out(common);
    Exponents sum(static_cast<std::size_t>(common.total()), 0);
    for (const auto& [ea, ca] : lhs.terms()) {
        const int da = max_degree >= 0 ? out.degree_in(ea, alphabets) : 0;
        for (const auto& [eb, cb] : rhs.terms()) {
            if (max_degree >= 0 && da + out.degree_in(eb, alphabets) > max_degree) continue;
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = ea[k] + eb[k];
            out.add_term(sum, ca * cb);
        }
    }
    return out;
}

}  // namespace

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return product(a, b, {}, -1); }

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    const Layout common = merge(a.layout_, b.layout_);
    return a.embedded(common).terms_ == b.embedded(common).terms_;
}

MultiPoly multiply_truncated(const MultiPoly& a, const MultiPoly& b, std::initializer_list<Alphabet> alphabets,
                             int max_degree) {
    return product(a, b, alphabets, max_degree);
}

MultiPoly truncate(const MultiPoly& f, std::initializer_list<Alphabet> alphabets, int max_degree) {
    MultiPoly out(f.layout());
    for (const auto& [e, c] : f.terms())
        if (f.degree_in(e, alphabets) <= max_degree) out.add_term(e, c);
    return out;
}

MultiPoly drop_last_variable(const MultiPoly& f, Alphabet alphabet) {
    const Layout& from = f.layout();
    if (from.count(alphabet) == 0) throw std::invalid_argument("alphabet has no variables to drop");
    Layout to = from;
    --to.counts[static_cast<std::size_t>(alphabet)];
    const auto dropped = static_cast<std::size_t>(from.offset(alphabet) + from.count(alphabet) - 1);
    MultiPoly out(to);
    for (const auto& [e, c] : f.terms()) {
        if (e[dropped] != 0) continue;
        Exponents kept(e);
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(dropped));
        out.add_term(kept, c);
    }
    return out;
}

std::string to_string(const MultiPoly& f) {
    if (f.is_zero()) return "0";
    const Layout& layout = f.layout();
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t k = 0; k < 4; ++k) {
            const auto a = static_cast<Alphabet>(k);
            for (int i = 0; i < layout.count(a); ++i) {
                const int power = e[static_cast<std::size_t>(layout.offset(a) + i)];
                if (power == 0) continue;
                if (!mono.empty()) mono += '*';
                mono += name(a) + std::to_string(i + 1);
                if (power != 1) mono += '^' + std::to_string(power);
            }
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

std::ostream& operator<<(std::ostream& os, const MultiPoly& f) { return os << to_string(f); }

MultiPoly skew_schur_poly(const SkewShape& shape, Alphabet alphabet, int nvars) {
    const Layout layout = Layout::of(alphabet, nvars);
    MultiPoly out(layout);
    Exponents e(static_cast<std::size_t>(nvars), 0);
    for_each_ssyt(shape, nvars, [&](const Tableau& t) {
        std::fill(e.begin(), e.end(), 0);
        for (const auto& row : t.rows)
            for (int v : row) ++e[static_cast<std::size_t>(v - 1)];
        out.add_term(e, 1);
    });
    return out;
}

MultiPoly schur_poly(const Partition& p, Alphabet alphabet, int nvars) {
    return skew_schur_poly(SkewShape(p), alphabet, nvars);
}

MultiPoly expand_symfunc(const SymFunc& f, Alphabet alphabet, int nvars) {
    MultiPoly out(Layout::of(alphabet, nvars));
    for (const auto& [p, c] : f.terms()) out += schur_poly(p, alphabet, nvars) * c;
    return out;
}

MultiPoly expand_bisym(const BiSymFunc& f, int nx, int ny) {
    Layout layout;
    layout.counts[static_cast<std::size_t>(Alphabet::x)] = nx;
    layout.counts[static_cast<std::size_t>(Alphabet::y)] = ny;
    MultiPoly out(layout);
    std::map<Partition, MultiPoly> xs, ys;
    for (const auto& [idx, c] : f.terms()) {
        auto xi = xs.find(idx.x);
        if (xi == xs.end()) xi = xs.emplace(idx.x, schur_poly(idx.x, Alphabet::x, nx)).first;
        auto yi = ys.find(idx.y);
        if (yi == ys.end()) yi = ys.emplace(idx.y, schur_poly(idx.y, Alphabet::y, ny)).first;
        out += (xi->second * yi->second) * c;
    }
    return out;
}

MultiPoly bialternant_schur(const Partition& p, int nvars, Alphabet alphabet) {
    if (p.length() > nvars) throw std::invalid_argument("partition has more parts than variables");
    const Layout layout = Layout::of(alphabet, nvars);
    const auto n = static_cast<std::size_t>(nvars);

    // Permutation expansion of det(x_i^{exponent[j]}).
    auto alternant = [&](const std::vector<int>& exponent) {
        MultiPoly out(layout);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Exponents e(n, 0);
            int inversions = 0;
            for (std::size_t i = 0; i < n; ++i) {
                e[i] = exponent[static_cast<std::size_t>(perm[i])];
                for (std::size_t j = i + 1; j < n; ++j)
                    if (perm[i] > perm[j]) ++inversions;
            }
            out.add_term(e, inversions % 2 ? -1 : 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    };

    std::vector<int> shifted(n), staircase(n);
    for (std::size_t j = 0; j < n; ++j) {
        staircase[j] = nvars - 1 - static_cast<int>(j);
        shifted[j] = p[static_cast<int>(j)] + staircase[j];
    }
    MultiPoly remainder = alternant(shifted);
    const MultiPoly divisor = alternant(staircase);

    // Lex order with x1 > x2 > ...: the map's last key is the leading term.
    const auto& [lead_e, lead_c] = *divisor.terms().rbegin();
    MultiPoly quotient(layout);
    while (!remainder.is_zero()) {
        const auto [e, c] = *remainder.terms().rbegin();
        Exponents q(n);
        for (std::size_t k = 0; k < n; ++k) {
            q[k] = e[k] - lead_e[k];
            if (q[k] < 0) throw std::logic_error("bialternant division is not exact");
        }
        if (c % lead_c != 0) throw std::logic_error("bialternant division is not exact");
        MultiPoly step(layout);
        step.add_term(q, c / lead_c);
        quotient += step;
        remainder -= step * divisor;
    }
    return quotient;
}

}  // namespace deligne::oracle
