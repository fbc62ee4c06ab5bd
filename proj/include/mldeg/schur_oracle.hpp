#pragma once

// Definition-level Lascoux coefficients: expand the complete homogeneous
// polynomial of a family of linear forms into monomials, then peel off Schur
// polynomials from the lexicographically largest monomial down. Slow, simple,
// and independent of every formula in lascoux.hpp.

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "indexset.hpp"

namespace mldeg {

using Exponent = std::vector<int>;
using LinearForm = std::vector<int>;  // nonnegative coefficients of x_1..x_r

// Symmetric polynomial stored as one dominant (weakly decreasing) exponent per
// orbit, i.e. in the monomial symmetric basis.
class SymPoly {
public:
    explicit SymPoly(int nvars = 0) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::map<Exponent, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BigInt coeff(const Exponent& e) const {
        Exponent d = dominant(e);
        auto it = terms_.find(d);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    void add(const Exponent& e, const BigInt& c) {
        if (static_cast<int>(e.size()) != nvars_) throw DomainError("SymPoly: exponent length mismatch");
        Exponent d = dominant(e);
        auto [it, fresh] = terms_.try_emplace(d, 0);
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    // Every monomial of the symmetric polynomial.
    std::map<Exponent, BigInt> expand() const {
        std::map<Exponent, BigInt> out;
        for (const auto& [e, c] : terms_) {
            Exponent p = e;
            std::sort(p.begin(), p.end());
            do out[p] = c;
            while (std::next_permutation(p.begin(), p.end()));
        }
        return out;
    }

    // Collapses a full monomial map onto orbits; fails if it is not symmetric.
    static SymPoly from_monomials(int nvars, const std::map<Exponent, BigInt>& mono) {
        SymPoly p(nvars);
        for (const auto& [e, c] : mono) {
            if (c == 0) continue;
            Exponent d = dominant(e);
            auto it = mono.find(d);
            if (it == mono.end() || it->second != c)
                throw DomainError("SymPoly: symmetry violation at a monomial of degree " + std::to_string(degree_of(e)));
            if (d == e) p.terms_.emplace(d, c);
        }
        std::size_t orbit_total = 0;
        for (const auto& [e, c] : p.terms_) {
            Exponent q = e;
            std::sort(q.begin(), q.end());
            do ++orbit_total;
            while (std::next_permutation(q.begin(), q.end()));
        }
        std::size_t nonzero = 0;
        for (const auto& [e, c] : mono) nonzero += c != 0;
        if (orbit_total != nonzero) throw DomainError("SymPoly: symmetry violation (incomplete orbit)");
        return p;
    }

    friend SymPoly operator+(SymPoly a, const SymPoly& b) {
        for (const auto& [e, c] : b.terms_) a.add(e, c);
        return a;
    }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) {
        for (const auto& [e, c] : b.terms_) a.add(e, -c);
        return a;
    }
    friend SymPoly operator*(const BigInt& s, SymPoly a) {
        if (s == 0) return SymPoly(a.nvars_);
        for (auto& [e, c] : a.terms_) c *= s;
        return a;
    }
    // Products go through the full monomial expansions; only dominant
    // product monomials are kept since they determine the orbit sums.
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
        if (a.nvars_ != b.nvars_) throw DomainError("SymPoly: variable count mismatch");
        auto fa = a.expand(), fb = b.expand();
        SymPoly out(a.nvars_);
        for (const auto& [eb, cb] : fb)
            for (const auto& [ea, ca] : fa) {
                Exponent e(ea.size());
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                if (std::is_sorted(e.rbegin(), e.rend())) out.add(e, ca * cb);
            }
        return out;
    }

    friend bool operator==(const SymPoly&, const SymPoly&) = default;

    static Exponent dominant(Exponent e) {
        std::sort(e.begin(), e.end(), std::greater<>());
        return e;
    }

private:
    static long degree_of(const Exponent& e) {
        long d = 0;
        for (int x : e) d += x;
        return d;
    }

    int nvars_;
    std::map<Exponent, BigInt> terms_;
};

using SchurExpansion = std::map<Partition, BigInt>;

namespace oracle_detail {

// Eight bits per variable, up to eight variables.
using Packed = std::uint64_t;
using PackedPoly = std::unordered_map<Packed, BigInt>;

inline Packed pack(const Exponent& e) {
    Packed p = 0;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] < 0 || e[k] > 255) throw DomainError("oracle: exponent out of packing range");
        p |= static_cast<Packed>(e[k]) << (8 * k);
    }
    return p;
}

inline Exponent unpack(Packed p, int nvars) {
    Exponent e(nvars);
    for (int k = 0; k < nvars; ++k) e[k] = static_cast<int>(p >> (8 * k) & 0xff);
    return e;
}

// h_0 .. h_dmax of the given forms, as full monomial expansions.
inline std::vector<PackedPoly> complete_hom_all(int dmax, const std::vector<LinearForm>& forms, int nvars) {
    if (nvars > 8) throw DomainError("oracle: at most 8 variables");
    std::vector<PackedPoly> H(dmax + 1);
    H[0][0] = 1;
    for (const auto& f : forms) {
        if (static_cast<int>(f.size()) != nvars) throw DomainError("oracle: linear form has wrong length");
        std::vector<std::pair<Packed, long>> fterms;
        for (int k = 0; k < nvars; ++k)
            if (f[k] != 0) fterms.emplace_back(Packed(1) << (8 * k), f[k]);
        // H_e(f_1..f_j) = H_e(f_1..f_{j-1}) + f_j * H_{e-1}(f_1..f_j)
        for (int e = 1; e <= dmax; ++e) {
            const PackedPoly& prev = H[e - 1];
            PackedPoly& cur = H[e];
            for (const auto& [m, c] : prev)
                for (const auto& [shift, w] : fterms) cur[m + shift] += c * w;
        }
    }
    for (auto& h : H)
        for (auto it = h.begin(); it != h.end();) it = it->second == 0 ? h.erase(it) : std::next(it);
    return H;
}

inline std::map<Exponent, BigInt> unpack_poly(const PackedPoly& p, int nvars) {
    std::map<Exponent, BigInt> out;
    for (const auto& [m, c] : p) out.emplace(unpack(m, nvars), c);
    return out;
}

// Kostka number K(lambda, mu): semistandard tableaux of shape lambda and
// content mu. Peels a horizontal strip of size mu.back() off lambda.
inline BigInt kostka(const std::vector<int>& lam, const std::vector<int>& mu) {
    thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo;
    std::vector<int> l = lam;
    while (!l.empty() && l.back() == 0) l.pop_back();
    std::vector<int> m = mu;
    while (!m.empty() && m.back() == 0) m.pop_back();
    if (m.empty()) return l.empty() ? 1 : 0;
    if (l.size() > m.size()) return 0;
    auto key = std::make_pair(l, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int strip = m.back();
    std::vector<int> mrest(m.begin(), m.end() - 1);
    BigInt total = 0;
    std::vector<int> nu(l.size());
    // lambda_{i+1} <= nu_i <= lambda_i, sum(lambda - nu) = strip
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == l.size()) {
            if (left == 0) total += kostka(nu, mrest);
            return;
        }
        int lower = i + 1 < l.size() ? l[i + 1] : 0;
        for (int v = l[i]; v >= lower; --v) {
            int take = l[i] - v;
            if (take > left) break;
            nu[i] = v;
            self(self, i + 1, left - take);
        }
    };
    rec(rec, 0, strip);
    memo.emplace(std::move(key), total);
    return total;
}

// Partitions of w into at most r parts, padded to length r.
inline std::vector<Exponent> dominant_weights(long w, int r) {
    std::vector<Exponent> out;
    Exponent cur(r, 0);
    auto rec = [&](auto&& self, int k, long left, long maxpart) -> void {
        if (k == r) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (long p = std::min(left, maxpart); p >= 0; --p) {
            if (p * (r - k) < left) break;
            cur[k] = static_cast<int>(p);
            self(self, k + 1, left - p, p);
        }
    };
    if (r == 0) {
        if (w == 0) out.push_back(cur);
        return out;
    }
    rec(rec, 0, w, w);
    return out;
}

}  // namespace oracle_detail

inline SymPoly complete_hom_of_forms(int d, const std::vector<LinearForm>& forms, int nvars) {
    if (d < 0) return SymPoly(nvars);
    auto H = oracle_detail::complete_hom_all(d, forms, nvars);
    return SymPoly::from_monomials(nvars, oracle_detail::unpack_poly(H[d], nvars));
}

// s_lambda in r variables, via Kostka numbers.
inline const SymPoly& schur_polynomial(const Partition& lam, int r) {
    thread_local std::map<std::pair<Partition, int>, SymPoly> memo;
    auto key = std::make_pair(lam, r);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    SymPoly p(r);
    if (static_cast<int>(lam.nonzero()) <= r) {
        for (const auto& mu : oracle_detail::dominant_weights(lam.weight(), r)) {
            BigInt k = oracle_detail::kostka(lam.parts, mu);
            if (k != 0) p.add(mu, k);
        }
    }
    return memo.emplace(std::move(key), std::move(p)).first->second;
}

// Peels c * s_lambda off the lexicographically largest remaining monomial.
// Works for inhomogeneous input too: the largest surviving monomial always
// belongs to a Schur polynomial with nonzero coefficient.
inline SchurExpansion schur_decompose(const SymPoly& p) {
    SchurExpansion out;
    std::map<Exponent, BigInt> rem = p.terms();
    const int r = p.nvars();
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        Exponent lam = top->first;
        BigInt c = top->second;
        Partition part(lam);
        out.emplace(part, c);
        for (const auto& [mu, k] : schur_polynomial(part, r).terms()) {
            auto [it, fresh] = rem.try_emplace(mu, 0);
            it->second -= c * k;
            if (it->second == 0) rem.erase(it);
        }
    }
    return out;
}

namespace oracle_detail {

// Forms x_i + x_j over i <= j (symmetric type) or i < j (skew type).
inline std::vector<LinearForm> pair_forms(int r, bool include_diagonal) {
    std::vector<LinearForm> forms;
    for (int i = 0; i < r; ++i)
        for (int j = include_diagonal ? i : i + 1; j < r; ++j) {
            LinearForm f(r, 0);
            f[i] += 1;
            f[j] += 1;
            forms.push_back(f);
        }
    return forms;
}

// Schur expansions of h_d(forms) for d = 0..dmax, memoized per (kind, r).
inline const SchurExpansion& one_alphabet_expansion(bool include_diagonal, int r, int d) {
    thread_local std::map<std::pair<bool, int>, std::vector<SchurExpansion>> memo;
    auto& table = memo[{include_diagonal, r}];
    if (static_cast<int>(table.size()) <= d) {
        auto H = complete_hom_all(d, pair_forms(r, include_diagonal), r);
        table.clear();
        for (const auto& h : H) table.push_back(schur_decompose(SymPoly::from_monomials(r, unpack_poly(h, r))));
    }
    return table[d];
}

inline BigInt lookup(const SchurExpansion& e, const Partition& p) {
    auto it = e.find(p);
    return it == e.end() ? BigInt(0) : it->second;
}

}  // namespace oracle_detail

using TwoAlphabetExpansion = std::map<std::pair<Partition, Partition>, BigInt>;

// Coefficients of s_lambda(X) s_mu(Y) in h_d({x_i + y_j}), #X = k, #Y = l.
// With x_first the X-alphabet is decomposed first (y-monomials as
// coefficients), otherwise Y first; both orders must agree.
inline TwoAlphabetExpansion two_alphabet_expansion(int k, int l, int d, bool x_first = true) {
    using namespace oracle_detail;
    TwoAlphabetExpansion out;
    if (k == 0 || l == 0) {
        // no forms at all: only the degree-0 constant survives
        if (d == 0) out.emplace(std::make_pair(Partition(std::vector<int>(k, 0)), Partition(std::vector<int>(l, 0))), 1);
        return out;
    }
    std::vector<LinearForm> forms;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < l; ++j) {
            LinearForm f(k + l, 0);
            f[i] = 1;
            f[k + j] = 1;
            forms.push_back(f);
        }
    auto H = complete_hom_all(d, forms, k + l);
    // Keep monomials dominant in both blocks, after checking block symmetry.
    std::map<std::pair<Exponent, Exponent>, BigInt> dom;
    for (const auto& [m, c] : H[d]) {
        Exponent e = unpack(m, k + l);
        Exponent ex(e.begin(), e.begin() + k), ey(e.begin() + k, e.end());
        Exponent sx = SymPoly::dominant(ex), sy = SymPoly::dominant(ey);
        Exponent se = sx;
        se.insert(se.end(), sy.begin(), sy.end());
        auto it = H[d].find(pack(se));
        if (it == H[d].end() || it->second != c) throw DomainError("two_alphabet_expansion: symmetry violation");
        if (sx == ex && sy == ey) dom.emplace(std::make_pair(ex, ey), c);
    }
    const int first_vars = x_first ? k : l, second_vars = x_first ? l : k;
    // stage 1: second-alphabet monomial -> polynomial in the first alphabet
    std::map<Exponent, SymPoly> by_second;
    for (const auto& [key, c] : dom) {
        const Exponent& a = x_first ? key.first : key.second;
        const Exponent& b = x_first ? key.second : key.first;
        by_second.try_emplace(b, first_vars).first->second.add(a, c);
    }
    std::map<Partition, SymPoly> by_first;
    for (const auto& [b, poly] : by_second)
        for (const auto& [lam, c] : schur_decompose(poly)) by_first.try_emplace(lam, second_vars).first->second.add(b, c);
    for (const auto& [lam, poly] : by_first)
        for (const auto& [mu, c] : schur_decompose(poly))
            out.emplace(x_first ? std::make_pair(lam, mu) : std::make_pair(mu, lam), c);
    return out;
}

// psi_I: coefficient of s_lambda(I) in h_|lambda(I)|({x_i + x_j : i <= j}).
inline BigInt psi_oracle(const IndexSet& I) {
    Partition lam = lambda_of(I);
    const int r = static_cast<int>(I.size());
    return oracle_detail::lookup(oracle_detail::one_alphabet_expansion(true, r, lam.weight()), lam);
}

// alpha_I: the same with the forms x_i + x_j, i < j.
inline BigInt alpha_oracle(const IndexSet& I) {
    Partition lam = lambda_of(I);
    const int r = static_cast<int>(I.size());
    return oracle_detail::lookup(oracle_detail::one_alphabet_expansion(false, r, lam.weight()), lam);
}

// d_{I,J}: coefficient of s_lambda(I)(X) s_lambda(J)(Y) in h_d(X + Y).
inline BigInt d_oracle(const IndexSet& I, const IndexSet& J) {
    thread_local std::map<std::tuple<int, int, long>, TwoAlphabetExpansion> memo;
    Partition a = lambda_of(I), b = lambda_of(J);
    const int k = static_cast<int>(I.size()), l = static_cast<int>(J.size());
    const long d = a.weight() + b.weight();
    auto key = std::make_tuple(k, l, d);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, two_alphabet_expansion(k, l, static_cast<int>(d))).first;
    auto jt = it->second.find({a, b});
    return jt == it->second.end() ? BigInt(0) : jt->second;
}

// s_{I,J}: coefficient of s_lambda(J) in s_lambda(I)(x_1 + 1, ..., x_r + 1).
inline BigInt sij_oracle(const IndexSet& I, const IndexSet& J) {
    if (I.size() != J.size()) throw DomainError("sij_oracle: sizes differ");
    const int r = static_cast<int>(I.size());
    if (r == 0) return 1;
    std::map<Exponent, BigInt> shifted;
    for (const auto& [e, c] : schur_polynomial(lambda_of(I), r).expand()) {
        // prod_k (x_k + 1)^{e_k}
        std::vector<std::pair<Exponent, BigInt>> acc{{Exponent(r, 0), c}};
        for (int k = 0; k < r; ++k) {
            std::vector<std::pair<Exponent, BigInt>> next;
            for (const auto& [m, v] : acc)
                for (int t = 0; t <= e[k]; ++t) {
                    Exponent mm = m;
                    mm[k] = t;
                    next.emplace_back(mm, v * binom(e[k], t));
                }
            acc = std::move(next);
        }
        for (auto& [m, v] : acc) shifted[m] += v;
    }
    std::erase_if(shifted, [](const auto& kv) { return kv.second == 0; });
    auto exp = schur_decompose(SymPoly::from_monomials(r, shifted));
    return oracle_detail::lookup(exp, lambda_of(J));
}

}  // namespace mldeg
