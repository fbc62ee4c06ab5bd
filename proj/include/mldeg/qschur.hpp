#pragma once

// Schur Q-functions at n copies of 1/2, as polynomials in n. One-row values
// come from the generating function ((1 + t/2)/(1 - t/2))^n, two-row values
// from the quadratic relation, longer shapes from the Pfaffian of two-row
// values.

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "indexset.hpp"
#include "matrix.hpp"
#include "unipoly.hpp"

namespace mldeg {

// Strictly decreasing positive parts.
struct StrictPartition {
    std::vector<int> parts;

    StrictPartition() = default;
    StrictPartition(std::initializer_list<int> xs) : StrictPartition(std::vector<int>(xs)) {}
    explicit StrictPartition(std::vector<int> xs) : parts(std::move(xs)) {
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (parts[k] <= 0) throw DomainError("StrictPartition: parts must be positive");
            if (k > 0 && parts[k] >= parts[k - 1]) throw DomainError("StrictPartition: parts must strictly decrease");
        }
    }
    long weight() const {
        long w = 0;
        for (int p : parts) w += p;
        return w;
    }
    friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;
    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
};

// Power series in t truncated after t^T, coefficients in Q[n].
class TruncatedSeries {
public:
    explicit TruncatedSeries(int T) : c_(T + 1) {}

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const UniPolyQ& operator[](int k) const { return c_.at(k); }
    UniPolyQ& operator[](int k) { return c_.at(k); }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int T = std::min(a.order(), b.order());
        TruncatedSeries r(T);
        for (int i = 0; i <= T; ++i)
            for (int j = 0; i + j <= T; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }

    // exp(n * g) for g with zero constant term and rational coefficients,
    // via F' = n g' F, i.e. a F_a = n sum_k k g_k F_{a-k}.
    static TruncatedSeries exp_n_multiple(const std::vector<BigRat>& g, int T) {
        if (!g.empty() && g[0] != 0) throw DomainError("exp_n_multiple: constant term must vanish");
        const UniPolyQ n = UniPolyQ::variable();
        TruncatedSeries F(T);
        F.c_[0] = UniPolyQ(1);
        for (int a = 1; a <= T; ++a) {
            UniPolyQ acc;
            for (int k = 1; k <= a; ++k) {
                BigRat gk = k < static_cast<int>(g.size()) ? g[k] : BigRat(0);
                if (gk != 0) acc += (gk * k) * (n * F.c_[a - k]);
            }
            F.c_[a] = acc * make_rat(1, a);
        }
        return F;
    }

private:
    std::vector<UniPolyQ> c_;
};

// log((1 + t/2)/(1 - t/2)) = sum over odd k of 2 (t/2)^k / k, up to t^T.
inline std::vector<BigRat> half_log_series(int T) {
    std::vector<BigRat> g(T + 1);
    for (int k = 1; k <= T; k += 2) g[k] = make_rat(2, BigInt(k) * pow2(k));
    return g;
}

class QSchur {
public:
    // Coefficient of t^a in ((1 + t/2)/(1 - t/2))^n; T is the series order.
    UniPolyQ q_onerow(int a, int T) {
        if (a < 0) return {};
        if (a > T) throw TruncationError("q_onerow: part " + std::to_string(a) + " exceeds truncation " + std::to_string(T));
        {
            std::shared_lock lock(mu_);
            if (a < static_cast<int>(onerow_.size())) return onerow_[a];
        }
        TruncatedSeries F = TruncatedSeries::exp_n_multiple(half_log_series(T), T);
        std::unique_lock lock(mu_);
        if (static_cast<int>(onerow_.size()) <= T) {
            onerow_.clear();
            for (int k = 0; k <= T; ++k) onerow_.push_back(F[k]);
        }
        return onerow_[a];
    }
    UniPolyQ q_onerow(int a) { return q_onerow(a, a + 2); }

    // Q_(a,b) = Q_a Q_b + 2 sum_{k=1}^{b} (-1)^k Q_{a+k} Q_{b-k}
    UniPolyQ q_tworow(int a, int b) {
        if (!(a > b && b >= 0)) throw DomainError("q_tworow: need a > b >= 0");
        const int T = a + b + 2;
        UniPolyQ r = q_onerow(a, T) * q_onerow(b, T);
        for (int k = 1; k <= b; ++k) {
            UniPolyQ t = q_onerow(a + k, T) * q_onerow(b - k, T);
            r += (k % 2 ? BigRat(-2) : BigRat(2)) * t;
        }
        return r;
    }

    // Pfaffian of (Q_(l_i, l_j)), odd lengths padded with a zero part.
    UniPolyQ q_strict(const StrictPartition& lam) {
        {
            std::shared_lock lock(mu_);
            if (auto it = strict_.find(lam); it != strict_.end()) return it->second;
        }
        std::vector<int> p = lam.parts;
        UniPolyQ v;
        if (p.empty())
            v = UniPolyQ(1);
        else if (p.size() == 1)
            v = q_onerow(p[0]);
        else {
            if (p.size() % 2) p.push_back(0);
            SquareMatrix<UniPolyQ> m(p.size());
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = i + 1; j < p.size(); ++j) {
                    m(i, j) = q_tworow(p[i], p[j]);
                    m(j, i) = -m(i, j);
                }
            v = pfaffian(m);
        }
        std::unique_lock lock(mu_);
        strict_.emplace(lam, v);
        return v;
    }

    // b_I(n) = Q_{I + 1}
    UniPolyQ b_poly(const IndexSet& I) {
        std::vector<int> p;
        for (auto it = I.elements().rbegin(); it != I.elements().rend(); ++it) p.push_back(*it + 1);
        return q_strict(StrictPartition(p));
    }

    // d_I(n) = P_I = Q_I / 2^(number of parts); a zero element is not a part.
    UniPolyQ d_poly(const IndexSet& I) {
        std::vector<int> p;
        for (auto it = I.elements().rbegin(); it != I.elements().rend(); ++it)
            if (*it > 0) p.push_back(*it);
        return q_strict(StrictPartition(p)) * make_rat(1, pow2(static_cast<long>(p.size())));
    }

private:
    mutable std::shared_mutex mu_;
    std::vector<UniPolyQ> onerow_;
    std::map<StrictPartition, UniPolyQ> strict_;
};

inline QSchur& default_qschur() {
    static QSchur q;
    return q;
}

inline UniPolyQ q_onerow(int a, int T) { return default_qschur().q_onerow(a, T); }
inline UniPolyQ q_tworow(int a, int b) { return default_qschur().q_tworow(a, b); }
inline UniPolyQ q_strict(const StrictPartition& lam) { return default_qschur().q_strict(lam); }
inline UniPolyQ b_poly(const IndexSet& I) { return default_qschur().b_poly(I); }
inline UniPolyQ d_poly(const IndexSet& I) { return default_qschur().d_poly(I); }

}  // namespace mldeg
