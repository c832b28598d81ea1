#include "deligne/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <utility>

namespace deligne {

namespace {

template <class Key, class Value>
class MemoCache {
public:
    template <class Compute>
    Value get(const Key& key, Compute&& compute) {
        {
            std::lock_guard lock(mutex_);
            if (auto it = values_.find(key); it != values_.end()) return it->second;
        }
        Value value = compute();
        std::lock_guard lock(mutex_);
        return values_.emplace(key, std::move(value)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<Key, Value> values_;
};

// Visits every filling of outer/inner that is semistandard and whose reading
// word (rows top to bottom, each row right to left) is a lattice word. When
// `cap` is non-null, entry v may be used at most cap[v-1] times. The visitor
// receives the content vector (index v-1 holds the number of v's).
template <class Visit>
void for_each_lr_filling(const Partition& outer, const Partition& inner, const Partition* cap,
                         Visit&& visit) {
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(outer.length()));
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < outer.length(); ++r) {
        grid[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(outer[r]), 0);
        for (int c = outer[r] - 1; c >= inner[r]; --c) cells.emplace_back(r, c);
    }
    auto at = [&](int r, int c) -> int& {
        return grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    };
    std::vector<int> content(cells.size() + 1, 0);
    int max_used = 0;
    const int cap_len = cap ? cap->length() : static_cast<int>(cells.size());

    auto fill = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            visit(std::vector<int>(content.begin(), content.begin() + max_used));
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1;
        if (r > 0 && c >= inner[r - 1]) lo = at(r - 1, c) + 1;
        int hi = std::min(max_used + 1, cap_len);
        if (c + 1 < outer[r]) hi = std::min(hi, at(r, c + 1));
        for (int v = lo; v <= hi; ++v) {
            auto vi = static_cast<std::size_t>(v - 1);
            if (v > 1 && content[vi - 1] <= content[vi]) continue;
            if (cap && content[vi] >= (*cap)[v - 1]) continue;
            ++content[vi];
            const int saved = max_used;
            max_used = std::max(max_used, v);
            at(r, c) = v;
            self(self, k + 1);
            max_used = saved;
            --content[vi];
        }
    };
    fill(fill, 0);
}

// Calls visit(nu) for every nu with nu/p a horizontal strip of size i.
template <class Visit>
void for_each_horizontal_strip(const Partition& p, int i, Visit&& visit) {
    const int rows = p.length() + 1;
    std::vector<int> nu(static_cast<std::size_t>(rows), 0);
    auto place = [&](auto&& self, int row, int remaining) -> void {
        if (row == rows) {
            if (remaining == 0) visit(Partition(nu));
            return;
        }
        // nu[row] ranges over p[row] .. p[row-1] (unbounded in row 0).
        int max_add = row == 0 ? remaining : std::min(remaining, p[row - 1] - p[row]);
        for (int add = max_add; add >= 0; --add) {
            nu[static_cast<std::size_t>(row)] = p[row] + add;
            self(self, row + 1, remaining - add);
        }
    };
    place(place, 0, i);
}

// Calls visit(nu) for every nu with nu/p a vertical strip of size i.
template <class Visit>
void for_each_vertical_strip(const Partition& p, int i, Visit&& visit) {
    const int rows = p.length() + i;
    std::vector<int> nu(static_cast<std::size_t>(rows), 0);
    auto place = [&](auto&& self, int row, int remaining) -> void {
        if (remaining == 0 || row == rows) {
            if (remaining != 0) return;
            for (int r = row; r < rows; ++r) nu[static_cast<std::size_t>(r)] = p[r];
            visit(Partition(nu));
            return;
        }
        for (int add : {1, 0}) {
            int value = p[row] + add;
            if (row > 0 && value > nu[static_cast<std::size_t>(row - 1)]) continue;
            nu[static_cast<std::size_t>(row)] = value;
            self(self, row + 1, remaining - add);
        }
    };
    place(place, 0, i);
}

MemoCache<Partition, SymFunc>& complete_cache() {
    static MemoCache<Partition, SymFunc> cache;
    return cache;
}

MemoCache<Partition, SymFunc>& elementary_cache() {
    static MemoCache<Partition, SymFunc> cache;
    return cache;
}

MemoCache<std::pair<Partition, Partition>, SymFunc>& skew_cache() {
    static MemoCache<std::pair<Partition, Partition>, SymFunc> cache;
    return cache;
}

MemoCache<std::pair<Partition, Partition>, SymFunc>& product_cache() {
    static MemoCache<std::pair<Partition, Partition>, SymFunc> cache;
    return cache;
}

SymFunc schur_product(const Partition& lambda, const Partition& mu) {
    if (lambda.empty()) return schur(mu);
    if (mu.empty()) return schur(lambda);
    auto key = lambda < mu ? std::pair(lambda, mu) : std::pair(mu, lambda);
    return product_cache().get(key, [&] {
        SymFunc out;
        for (const Partition& nu : partitions_of(lambda.size() + mu.size())) {
            if (!contains(nu, lambda) || !contains(nu, mu)) continue;
            if (Integer c = lr_coefficient(lambda, mu, nu); c != 0) out.add_term(nu, c);
        }
        return out;
    });
}

}  // namespace

SymFunc::SymFunc(const Partition& p, Integer coeff) {
    if (coeff != 0) terms_.emplace(p, std::move(coeff));
}

Integer SymFunc::coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Integer(0) : it->second;
}

int SymFunc::degree() const noexcept {
    int d = -1;
    for (const auto& [p, c] : terms_) d = std::max(d, p.size());
    return d;
}

void SymFunc::add_term(const Partition& p, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
    for (const auto& [p, c] : other.terms_) add_term(p, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
    for (const auto& [p, c] : other.terms_) add_term(p, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Integer& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_) c *= scalar;
    return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) { return multiply(a, b); }

std::ostream& operator<<(std::ostream& os, const SymFunc& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [p, c] : f.terms()) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Integer mag = abs(c);
        if (mag != 1) os << mag << "*";
        os << "s" << p;
        first = false;
    }
    return os;
}

SymFunc schur(const Partition& p) { return SymFunc(p); }

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size() || !contains(nu, lambda)) return 0;
    Integer count = 0;
    for_each_lr_filling(nu, lambda, &mu, [&](const std::vector<int>&) { ++count; });
    return count;
}

SymFunc multiply(const SymFunc& a, const SymFunc& b) {
    SymFunc out;
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms()) {
            Integer scale = ca * cb;
            const SymFunc product = schur_product(pa, pb);
            for (const auto& [nu, c] : product.terms()) out.add_term(nu, scale * c);
        }
    return out;
}

SymFunc pieri_column(const SymFunc& f, int i) {
    SymFunc out;
    if (i < 0) return out;
    for (const auto& [p, c] : f.terms())
        for_each_vertical_strip(p, i, [&](const Partition& nu) { out.add_term(nu, c); });
    return out;
}

SymFunc pieri_row(const SymFunc& f, int i) {
    SymFunc out;
    if (i < 0) return out;
    for (const auto& [p, c] : f.terms())
        for_each_horizontal_strip(p, i, [&](const Partition& nu) { out.add_term(nu, c); });
    return out;
}

SymFunc complete_to_schur(const Partition& m) {
    return complete_cache().get(m, [&] {
        SymFunc out = SymFunc::unit();
        for (int part : m.parts()) out = pieri_row(out, part);
        return out;
    });
}

SymFunc elementary_to_schur(const Partition& m) {
    return elementary_cache().get(m, [&] {
        SymFunc out = SymFunc::unit();
        for (int part : m.parts()) out = pieri_column(out, part);
        return out;
    });
}

SymFunc skew_schur(const Partition& outer, const Partition& inner) {
    if (!contains(outer, inner)) return SymFunc{};
    if (inner.empty()) return schur(outer);
    return skew_cache().get({outer, inner}, [&] {
        SymFunc out;
        for_each_lr_filling(outer, inner, nullptr,
                            [&](const std::vector<int>& content) { out.add_term(Partition(content), 1); });
        return out;
    });
}

SymFunc skew_schur(const SkewShape& shape) { return skew_schur(shape.outer(), shape.inner()); }

SymFunc omega(const SymFunc& f) {
    SymFunc out;
    for (const auto& [p, c] : f.terms()) out.add_term(conjugate(p), c);
    return out;
}

SymFunc complete_monomials_to_schur(const MonomialExpansion& h) {
    SymFunc out;
    for (const auto& [m, c] : h) out += complete_to_schur(m) * c;
    return out;
}

SymFunc elementary_monomials_to_schur(const MonomialExpansion& e) {
    SymFunc out;
    for (const auto& [m, c] : e) out += elementary_to_schur(m) * c;
    return out;
}

SymFunc jacobi_trudi(const Partition& p, JacobiTrudiBasis basis) {
    const Partition rows = basis == JacobiTrudiBasis::complete ? p : conjugate(p);
    const int n = rows.length();
    std::vector<std::vector<int>> index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rows[i] - i + j;
    MonomialExpansion det = expand_index_determinant(index);
    return basis == JacobiTrudiBasis::complete ? complete_monomials_to_schur(det)
                                               : elementary_monomials_to_schur(det);
}

}  // namespace deligne
