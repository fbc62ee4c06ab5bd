#pragma once

#include <algorithm>
#include <exception>
#include <type_traits>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "indexset.hpp"
#include "lascoux.hpp"
#include "qschur.hpp"
#include "unipoly.hpp"

namespace mldeg {

enum class MatrixType { symmetric, general, skew };

inline const char* matrix_type_name(MatrixType t) {
    switch (t) {
        case MatrixType::symmetric: return "sym";
        case MatrixType::general: return "a";
        case MatrixType::skew: return "d";
    }
    return "?";
}

enum class DegreePath { direct, nrs, convention };

inline const char* path_name(DegreePath p) {
    switch (p) {
        case DegreePath::direct: return "direct";
        case DegreePath::nrs: return "nrs";
        case DegreePath::convention: return "convention";
    }
    return "?";
}

struct DegreeResult {
    BigInt value;
    DegreePath path = DegreePath::direct;
    long terms_summed = 0;
};

// Sums f over items in contiguous chunks, one per worker, then adds the
// partial sums in chunk order. Exact arithmetic makes the split irrelevant to
// the result.
template <class T, class F, class V = std::invoke_result_t<F&, const T&>>
V ordered_parallel_sum(const std::vector<T>& items, int jobs, F&& f) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs < 1 ? 1 : jobs, items.size()));
    if (workers == 1) {
        V total = V(0);
        for (const auto& x : items) total += f(x);
        return total;
    }
    std::vector<V> partial(workers, V(0));
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    const std::size_t chunk = (items.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w * chunk; i < std::min(items.size(), (w + 1) * chunk); ++i) partial[w] += f(items[i]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    V total = V(0);
    for (auto& p : partial) total += p;
    return total;
}

// (-1)^e C(m-1, e) as a signed integer
inline BigInt signed_binom(long m1, long e) {
    BigInt b = binom(m1, e);
    return e % 2 ? BigInt(-b) : b;
}

// dim S_nu C^n = prod over cells of (n + content) / hook, nu given by rows.
inline UniPolyQ schur_dimension_poly(const std::vector<int>& rows) {
    UniPolyQ r(1);
    std::vector<int> nu;
    for (int x : rows)
        if (x > 0) nu.push_back(x);
    for (std::size_t k = 1; k < nu.size(); ++k)
        if (nu[k] > nu[k - 1]) throw ConsistencyError("schur_dimension_poly: rows are not a partition");
    Partition conj = Partition(nu).conjugate();
    for (std::size_t i = 0; i < nu.size(); ++i)
        for (int j = 0; j < nu[i]; ++j) {
            long hook = (nu[i] - j) + (conj[j] - static_cast<long>(i)) - 1;
            r *= UniPolyQ{make_rat(j - static_cast<long>(i), hook), make_rat(1, hook)};
        }
    return r;
}

class Degrees {
public:
    Degrees(Lascoux& lx, QSchur& q, int jobs = 1) : lx_(lx), q_(q), jobs_(jobs) {}

    int jobs() const { return jobs_; }
    void set_jobs(int j) { jobs_ = std::max(1, j); }
    Lascoux& lascoux() { return lx_; }
    QSchur& qschur() { return q_; }

    // ---- symmetric matrices ----

    // sum over #I = s, sum I = m - s of psi_I psi_{[n]\I}; meaningful for
    // every n >= 0 (this is delta(m, n, n - s) when s <= n).
    DegreeResult delta_sym_corank(long m, long n, long s) {
        auto sets = enumerate_indexsets(static_cast<int>(s), m - s, n);
        BigInt v = ordered_parallel_sum(sets, jobs_, [&](const IndexSet& I) -> BigInt { return lx_.psi(I) * lx_.psi_complement(I, n); });
        return {v, DegreePath::direct, static_cast<long>(sets.size())};
    }

    DegreeResult delta_sym(long m, long n, long r) {
        if (n <= 0 || r < 0 || r > n || m < 0)
            throw DomainError("delta_sym: need n > 0, 0 <= r <= n, m >= 0 (got m=" + std::to_string(m) +
                              ", n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
        const long top = n * (n + 1) / 2;
        if (r == 0) return {BigInt(m == top ? 1 : 0), DegreePath::convention, 0};
        if (r < n && (m == 0 || m >= top)) return {0, DegreePath::convention, 0};
        return delta_sym_corank(m, n, n - r);
    }

    // sum over #I = s, sum I <= m - s of (-1)^{m-s-sum I} psi_I b_I(n) C(m-1, m-s-sum I)
    DegreeResult delta_sym_nrs(long m, long n, long s) {
        if (m <= 0 || n <= 0 || s <= 0) throw DomainError("delta_sym_nrs: need m, n, s > 0");
        std::vector<IndexSet> sets;
        for_each_indexset_upto(static_cast<int>(s), m - s, -1, [&](const IndexSet& I) { sets.push_back(I); });
        BigRat v = ordered_parallel_sum(sets, jobs_, [&](const IndexSet& I) -> BigRat {
            const long e = m - s - I.sum();
            return BigRat(BigInt(lx_.psi(I) * signed_binom(m - 1, e))) * q_.b_poly(I)(n);
        });
        return {require_integer(v, "delta_sym_nrs"), DegreePath::nrs, static_cast<long>(sets.size())};
    }

    // phi(n, d) = (1/n) sum_s s delta(d, n, n - s)
    BigInt phi_sym(long n, long d) {
        if (n <= 0 || d <= 0) throw DomainError("phi_sym: need n, d > 0");
        const long top = n * (n + 1) / 2;
        if (d > top) return 0;
        BigInt total = 0;
        for (long s = 1; s <= n && s * (s + 1) / 2 <= d; ++s) total += s * delta_sym(d, n, n - s).value;
        return exact_quotient(total, n, "phi_sym");
    }

    // ---- general square matrices ----

    // sum over #I = #J = s, sum I + sum J = m - s of d_{I,J} d_{[n]\I,[n]\J}
    DegreeResult delta_typeA_corank(long m, long n, long s) {
        std::vector<std::pair<IndexSet, IndexSet>> pairs;
        const long total = m - s;
        for (long a = 0; a <= total; ++a)
            for (const auto& I : enumerate_indexsets(static_cast<int>(s), a, n))
                for (const auto& J : enumerate_indexsets(static_cast<int>(s), total - a, n)) pairs.emplace_back(I, J);
        BigInt v = ordered_parallel_sum(pairs, jobs_, [&](const std::pair<IndexSet, IndexSet>& p) -> BigInt {
            return lx_.d_A(p.first, p.second) * lx_.d_A_complement(p.first, p.second, n);
        });
        return {v, DegreePath::direct, static_cast<long>(pairs.size())};
    }

    DegreeResult delta_typeA(long m, long n, long r) {
        if (n <= 0 || r < 0 || r > n || m < 0) throw DomainError("delta_typeA: need n > 0, 0 <= r <= n, m >= 0");
        if (r > 0 && r < n) {
            auto [lo, hi] = pataki_window(MatrixType::general, n, r);
            if (m < lo || m > hi) return {0, DegreePath::convention, 0};
        }
        return delta_typeA_corank(m, n, n - r);
    }

    BigInt phi_typeA(long n, long d) {
        if (n <= 0 || d <= 0) throw DomainError("phi_typeA: need n, d > 0");
        BigInt total = 0;
        for (long r = 1; r <= n; ++r) total += r * delta_typeA(d, n, n - r).value;
        return exact_quotient(total, n, "phi_typeA");
    }

    // content/hook polynomial of the shape (r + lambda(I)_i rows, then the
    // conjugate of lambda(J))
    static UniPolyQ a_ij_poly(const IndexSet& I, const IndexSet& J) {
        if (I.size() != J.size()) throw DomainError("a_ij_poly: sizes differ");
        const int r = static_cast<int>(I.size());
        std::vector<int> rows;
        for (int x : lambda_of(I).parts) rows.push_back(r + x);
        for (int x : lambda_of(J).conjugate().parts) rows.push_back(x);
        return schur_dimension_poly(rows);
    }

    // delta_A(m, n, n - r) via d_{I,L} and a_{I,L}(n)
    DegreeResult delta_typeA_nrs(long m, long n, long r) {
        if (m <= 0 || n <= 0 || r <= 0) throw DomainError("delta_typeA_nrs: need m, n, r > 0");
        std::vector<std::pair<IndexSet, IndexSet>> pairs;
        const long cap = m - r;
        for (long a = 0; a <= cap; ++a)
            for (const auto& I : enumerate_indexsets(static_cast<int>(r), a))
                for_each_indexset_upto(static_cast<int>(r), cap - a, -1, [&](const IndexSet& L) { pairs.emplace_back(I, L); });
        BigRat v = ordered_parallel_sum(pairs, jobs_, [&](const std::pair<IndexSet, IndexSet>& p) -> BigRat {
            const long e = m - r - p.first.sum() - p.second.sum();
            return BigRat(BigInt(lx_.d_A(p.first, p.second) * signed_binom(m - 1, e))) * a_ij_poly(p.first, p.second)(n);
        });
        return {require_integer(v, "delta_typeA_nrs"), DegreePath::nrs, static_cast<long>(pairs.size())};
    }

    // ---- skew matrices (2n x 2n, rank at most 2r) ----

    // sum over #I = 2s, sum I = m, I in [2n] of alpha_I alpha_{[2n]\I}
    DegreeResult delta_typeD_corank(long m, long n, long s) {
        auto sets = enumerate_indexsets(static_cast<int>(2 * s), m, 2 * n);
        BigInt v = ordered_parallel_sum(sets, jobs_, [&](const IndexSet& I) -> BigInt {
            BigInt a = lx_.alpha(I);
            return a == 0 ? a : BigInt(a * lx_.alpha_complement(I, 2 * n));
        });
        return {v, DegreePath::direct, static_cast<long>(sets.size())};
    }

    DegreeResult delta_typeD(long m, long n, long r) {
        if (n <= 0 || r < 0 || r > n || m < 0) throw DomainError("delta_typeD: need n > 0, 0 <= r <= n, m >= 0");
        if (r > 0 && r < n) {
            auto [lo, hi] = pataki_window(MatrixType::skew, n, r);
            if (m < lo || m > hi) return {0, DegreePath::convention, 0};
        }
        return delta_typeD_corank(m, n, n - r);
    }

    BigInt phi_typeD(long n, long d) {
        if (n <= 0 || d <= 0) throw DomainError("phi_typeD: need n, d > 0");
        BigInt total = 0;
        for (long r = 1; r <= n; ++r) total += r * delta_typeD(d, n, n - r).value;
        return exact_quotient(total, n, "phi_typeD");
    }

    // delta_D(m, n, n - r): sum over #I = 2r, sum I <= m of
    // (-1)^{m - sum I} alpha_I d_I(2n) C(m-1, m - sum I)
    DegreeResult delta_typeD_nrs(long m, long n, long r) {
        if (m <= 0 || n <= 0 || r <= 0) throw DomainError("delta_typeD_nrs: need m, n, r > 0");
        std::vector<IndexSet> sets;
        for_each_indexset_upto(static_cast<int>(2 * r), m, -1, [&](const IndexSet& I) { sets.push_back(I); });
        BigRat v = ordered_parallel_sum(sets, jobs_, [&](const IndexSet& I) -> BigRat {
            BigInt a = lx_.alpha(I);
            if (a == 0) return BigRat(0);
            return BigRat(BigInt(a * signed_binom(m - 1, m - I.sum()))) * q_.d_poly(I)(2 * n);
        });
        return {require_integer(v, "delta_typeD_nrs"), DegreePath::nrs, static_cast<long>(sets.size())};
    }

    // ---- shared ----

    DegreeResult delta(MatrixType t, long m, long n, long r) {
        switch (t) {
            case MatrixType::symmetric: return delta_sym(m, n, r);
            case MatrixType::general: return delta_typeA(m, n, r);
            case MatrixType::skew: return delta_typeD(m, n, r);
        }
        throw DomainError("delta: unknown matrix type");
    }

    // Same quantity through the closed form; r is the rank as in delta().
    DegreeResult delta_nrs(MatrixType t, long m, long n, long r) {
        switch (t) {
            case MatrixType::symmetric: return delta_sym_nrs(m, n, n - r);
            case MatrixType::general: return delta_typeA_nrs(m, n, n - r);
            case MatrixType::skew: return delta_typeD_nrs(m, n, n - r);
        }
        throw DomainError("delta_nrs: unknown matrix type");
    }

    BigInt phi(MatrixType t, long n, long d) {
        switch (t) {
            case MatrixType::symmetric: return phi_sym(n, d);
            case MatrixType::general: return phi_typeA(n, d);
            case MatrixType::skew: return phi_typeD(n, d);
        }
        throw DomainError("phi: unknown matrix type");
    }

    // Window of m outside which delta_t(m, n, r) vanishes; r is the rank
    // (for skew: n is the half-size and the rank is 2r).
    static std::pair<long, long> pataki_window(MatrixType t, long n, long r) {
        if (!(0 < r && r < n)) throw DomainError("pataki_window: need 0 < r < n");
        auto c2 = [](long x) { return x * (x - 1) / 2; };
        switch (t) {
            case MatrixType::symmetric: return {c2(n - r + 1), c2(n + 1) - c2(r + 1)};
            case MatrixType::general: return {(n - r) * (n - r), n * n - r * r};
            case MatrixType::skew: return {c2(2 * n - 2 * r), c2(2 * n) - c2(2 * r)};
        }
        throw DomainError("pataki_window: unknown matrix type");
    }

    // Full-space dimension (the top m / d for which the invariants are 1).
    static long full_dimension(MatrixType t, long n) {
        switch (t) {
            case MatrixType::symmetric: return n * (n + 1) / 2;
            case MatrixType::general: return n * n;
            case MatrixType::skew: return n * (2 * n - 1);
        }
        return 0;
    }

private:
    Lascoux& lx_;
    QSchur& q_;
    int jobs_;
};

inline Degrees& default_degrees() {
    static Degrees d(default_lascoux(), default_qschur());
    return d;
}

inline BigInt delta_sym(long m, long n, long r) { return default_degrees().delta_sym(m, n, r).value; }
inline BigInt delta_sym_nrs(long m, long n, long s) { return default_degrees().delta_sym_nrs(m, n, s).value; }
inline BigInt phi_sym(long n, long d) { return default_degrees().phi_sym(n, d); }
inline std::pair<long, long> pataki_window(MatrixType t, long n, long r) { return Degrees::pataki_window(t, n, r); }
inline BigInt delta_typeA(long m, long n, long r) { return default_degrees().delta_typeA(m, n, r).value; }
inline BigInt phi_typeA(long n, long d) { return default_degrees().phi_typeA(n, d); }
inline UniPolyQ a_ij_poly(const IndexSet& I, const IndexSet& J) { return Degrees::a_ij_poly(I, J); }
inline BigInt delta_typeA_nrs(long m, long n, long r) { return default_degrees().delta_typeA_nrs(m, n, r).value; }
inline BigInt delta_typeD(long m, long n, long r) { return default_degrees().delta_typeD(m, n, r).value; }
inline BigInt phi_typeD(long n, long d) { return default_degrees().phi_typeD(n, d); }
inline BigInt delta_typeD_nrs(long m, long n, long r) { return default_degrees().delta_typeD_nrs(m, n, r).value; }

}  // namespace mldeg
