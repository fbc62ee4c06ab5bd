#pragma once

// Fast routes to the Lascoux coefficients psi_I, alpha_I, d_{I,J}, s_{I,J}
// and their [n]-complements: Pfaffians of pair values, binomial determinants,
// Pascal minors and the one-step recursions. Each route is memoized in a
// CoeffTable; the independent routes (Pascal, recursion) keep private memos so
// they never read values produced by the main route.

#include <memory>
#include <string>
#include <vector>

#include "coeff_table.hpp"
#include "exact.hpp"
#include "indexset.hpp"
#include "matrix.hpp"

namespace mldeg {

// psi_{i,j} = sum_{k=i+1}^{j} C(i+j, k) for i < j.
inline BigInt psi_pair(int i, int j) {
    BigInt s = 0;
    for (int k = i + 1; k <= j; ++k) s += binom(i + j, k);
    return s;
}

class Lascoux {
public:
    explicit Lascoux(std::shared_ptr<CoeffTable> table = std::make_shared<CoeffTable>())
        : table_(std::move(table)) {}

    CoeffTable& table() { return *table_; }
    std::shared_ptr<CoeffTable> table_ptr() const { return table_; }

    // Pfaffian of the pair matrix; odd sizes get an extra first row holding
    // psi_{i_k} = 2^{i_k}.
    BigInt psi(const IndexSet& I) {
        const std::size_t r = I.size();
        if (r == 0) return 1;
        if (r == 1) return pow2(I[0]);
        if (r == 2) return psi_pair(I[0], I[1]);
        const std::string key = I.str();
        if (auto v = table_->get(Family::psi, key)) return *v;
        const std::size_t pad = r % 2;
        SquareMatrix<BigInt> m(r + pad);
        for (std::size_t k = 0; k < r; ++k) {
            if (pad) {
                m(0, k + 1) = pow2(I[k]);
                m(k + 1, 0) = -m(0, k + 1);
            }
            for (std::size_t l = k + 1; l < r; ++l) {
                m(k + pad, l + pad) = psi_pair(I[k], I[l]);
                m(l + pad, k + pad) = -m(k + pad, l + pad);
            }
        }
        BigInt v = pfaffian(m);
        table_->put(Family::psi, key, v);
        return v;
    }

    // Multisets have coefficient 0.
    BigInt psi(const IndexMultiset& I) {
        auto s = I.as_set();
        return s ? psi(*s) : BigInt(0);
    }

    // psi of [n] \ I, zero when I is not inside [n]. For small I relative to
    // n this is a Pfaffian of size about #I built from pair complements.
    BigInt psi_complement(const IndexSet& I, long n) {
        if (!I.within(n)) return 0;
        const long r = static_cast<long>(I.size());
        if (r <= 2 || n - r <= r + 2) return psi(complement(I, n));
        const std::string key = I.str() + "|" + std::to_string(n);
        if (auto v = table_->get(Family::psi_complement, key)) return *v;
        BigInt v = psi_complement_small(I, n);
        table_->put(Family::psi_complement, key, v);
        return v;
    }

    // The small route regardless of sizes.
    BigInt psi_complement_small(const IndexSet& I, long n) {
        if (!I.within(n)) return 0;
        const std::size_t r = I.size();
        const std::size_t pad = r % 2;
        SquareMatrix<BigInt> m(r + pad);
        for (std::size_t k = 0; k < r; ++k) {
            if (pad) {
                m(0, k + 1) = psi(complement(IndexSet{I[k]}, n));
                m(k + 1, 0) = -m(0, k + 1);
            }
            for (std::size_t l = k + 1; l < r; ++l) {
                m(k + pad, l + pad) = psi(complement(IndexSet{I[k], I[l]}, n));
                m(l + pad, k + pad) = -m(k + pad, l + pad);
            }
        }
        return pfaffian(m);
    }

    BigInt psi_complement(const IndexMultiset& I, long n) {
        auto s = I.as_set();
        return s ? psi_complement(*s, n) : BigInt(0);
    }

    // sum over J <= I of det(C(i_k, j_l)).
    BigInt psi_pascal(const IndexSet& I) {
        BigInt total = 0;
        for (const auto& J : sets_below(I)) total += binomial_minor(I, J, 0, false);
        return total;
    }

    // Prepend-zero recursion for min I > 0, box sum for 0 in I.
    BigInt psi_recursion(const IndexSet& I) {
        const std::size_t r = I.size();
        if (r == 0) return 1;
        const std::string key = I.str();
        if (auto v = rec_memo_.get(Family::psi, key)) return *v;
        BigInt v = 0;
        if (I[0] > 0) {
            v = BigInt(static_cast<long>(r + 1)) * psi_recursion(I.with(0));
            for (std::size_t l = 0; l < r; ++l) {
                int prev = l == 0 ? 0 : I[l - 1];
                if (I[l] - 1 > prev) {
                    std::vector<int> e = I.elements();
                    e[l] -= 1;
                    e.insert(e.begin(), 0);
                    v -= 2 * psi_recursion(IndexSet(e));
                }
            }
        } else {
            for_each_box(I, [&](const IndexSet& J) { v += psi_recursion(J); });
        }
        rec_memo_.put(Family::psi, key, v);
        return v;
    }

    // det(C(i_k, j_l)); zero unless J <= I.
    BigInt s_ij(const IndexSet& I, const IndexSet& J) {
        if (I.size() != J.size()) throw DomainError("s_ij: sizes differ (" + I.str() + ", " + J.str() + ")");
        if (!leq(J, I)) return 0;
        const std::string key = I.str() + ";" + J.str();
        if (auto v = table_->get(Family::sIJ, key)) return *v;
        BigInt v = binomial_minor(I, J, 0, false);
        table_->put(Family::sIJ, key, v);
        return v;
    }

    BigInt alpha(const IndexSet& I) {
        const std::size_t r = I.size();
        if (r == 0) return 1;
        if (I[0] > 0 && r % 2 == 1) return 0;
        const std::string key = I.str();
        if (auto v = table_->get(Family::alpha, key)) return *v;
        BigInt v = 0;
        if (I[0] > 0)
            v = alpha(I.with(0));
        else
            for_each_box(I, [&](const IndexSet& J) { v += alpha(J); });
        table_->put(Family::alpha, key, v);
        return v;
    }

    BigInt alpha_complement(const IndexSet& I, long k) {
        if (!I.within(k)) return 0;
        return alpha(complement(I, k));
    }

    // det D(0)_{I,J} with D(t)_{ab} = C(t + a + b, a) for equal sizes; for
    // #I < #J the first #J-#I elements of J must be 0, 1, ... and the rest are
    // shifted down into D(#J - #I).
    BigInt d_A(const IndexSet& I, const IndexSet& J) {
        if (I.size() > J.size()) return d_A(J, I);
        const std::string key = I.str() + ";" + J.str();
        if (auto v = table_->get(Family::dA, key)) return *v;
        const int t = static_cast<int>(J.size() - I.size());
        BigInt v = 0;
        bool gate = true;
        for (int i = 0; i < t; ++i) gate = gate && J[i] == i;
        if (gate) {
            std::vector<int> rest;
            for (std::size_t i = t; i < J.size(); ++i) rest.push_back(J[i] - t);
            v = binomial_minor(I, IndexSet(rest), t, true);
        }
        table_->put(Family::dA, key, v);
        return v;
    }

    BigInt d_A(const IndexMultiset& I, const IndexMultiset& J) {
        auto a = I.as_set(), b = J.as_set();
        return a && b ? d_A(*a, *b) : BigInt(0);
    }

    // Equal sizes only. min I, min J > 0: prepend zeros and correct; otherwise
    // the box sum over both sets.
    BigInt d_A_recursion(const IndexSet& I, const IndexSet& J) {
        if (I.size() != J.size()) throw DomainError("d_A_recursion: sizes differ (" + I.str() + ", " + J.str() + ")");
        const std::size_t s = I.size();
        if (s == 0) return 1;
        const std::string key = I.str() + ";" + J.str();
        if (auto v = rec_memo_.get(Family::dA, key)) return *v;
        BigInt v = 0;
        if (I[0] > 0 && J[0] > 0) {
            IndexSet I0 = I.with(0), J0 = J.with(0);
            auto lowered = [](const IndexSet& S, std::size_t p) {
                std::vector<int> e = S.elements();
                e[p] -= 1;
                return IndexMultiset(e);
            };
            auto rec_or_zero = [&](const IndexMultiset& A, const IndexMultiset& B) {
                auto a = A.as_set(), b = B.as_set();
                return a && b ? d_A_recursion(*a, *b) : BigInt(0);
            };
            v = BigInt(static_cast<long>(s + 1)) * d_A_recursion(I0, J0);
            IndexMultiset J0m(J0.elements()), I0m(I0.elements());
            for (std::size_t p = 1; p <= s; ++p) v -= rec_or_zero(lowered(I0, p), J0m);
            for (std::size_t q = 1; q <= s; ++q) v -= rec_or_zero(I0m, lowered(J0, q));
        } else {
            std::vector<IndexSet> bi, bj;
            for_each_box(I, [&](const IndexSet& A) { bi.push_back(A); });
            for_each_box(J, [&](const IndexSet& B) { bj.push_back(B); });
            for (const auto& A : bi)
                for (const auto& B : bj) v += d_A_recursion(A, B);
        }
        rec_memo_.put(Family::dA, key, v);
        return v;
    }

    BigInt d_A_complement(const IndexSet& I, const IndexSet& J, long n) {
        if (I.size() != J.size()) throw DomainError("d_A_complement: sizes differ (" + I.str() + ", " + J.str() + ")");
        if (!I.within(n) || !J.within(n)) return 0;
        return d_A(complement(I, n), complement(J, n));
    }

private:
    // Sets {j'_1, ..., j'_{r-1}} with i_l <= j'_l < i_{l+1}.
    template <class F>
    static void for_each_box(const IndexSet& I, F&& f) {
        const std::size_t r = I.size();
        std::vector<int> cur(r - 1);
        auto rec = [&](auto&& self, std::size_t l) -> void {
            if (l + 1 == r) {
                f(IndexSet(cur));
                return;
            }
            for (int j = I[l]; j < I[l + 1]; ++j) {
                cur[l] = j;
                self(self, l + 1);
            }
        };
        rec(rec, 0);
    }

    // det of C(i_k, j_l) (pascal) or C(t + i_k + j_l, i_k) (type A).
    static BigInt binomial_minor(const IndexSet& I, const IndexSet& J, int t, bool type_a) {
        auto m = make_matrix<BigInt>(I.size(), [&](std::size_t k, std::size_t l) {
            return type_a ? binom(t + I[k] + J[l], I[k]) : binom(I[k], J[l]);
        });
        return det(m);
    }

    std::shared_ptr<CoeffTable> table_;
    CoeffTable rec_memo_;
};

// Process-wide engine behind the free functions.
inline Lascoux& default_lascoux() {
    static Lascoux engine;
    return engine;
}

inline BigInt psi(const IndexSet& I) { return default_lascoux().psi(I); }
inline BigInt psi_complement(const IndexSet& I, long n) { return default_lascoux().psi_complement(I, n); }
inline BigInt psi_pascal(const IndexSet& I) { return default_lascoux().psi_pascal(I); }
inline BigInt psi_recursion_step(const IndexSet& I) { return default_lascoux().psi_recursion(I); }
inline BigInt s_ij(const IndexSet& I, const IndexSet& J) { return default_lascoux().s_ij(I, J); }
inline BigInt alpha(const IndexSet& I) { return default_lascoux().alpha(I); }
inline BigInt alpha_complement(const IndexSet& I, long k) { return default_lascoux().alpha_complement(I, k); }
inline BigInt d_A(const IndexSet& I, const IndexSet& J) { return default_lascoux().d_A(I, J); }
inline BigInt d_A_recursion(const IndexSet& I, const IndexSet& J) { return default_lascoux().d_A_recursion(I, J); }
inline BigInt d_A_complement(const IndexSet& I, const IndexSet& J, long n) {
    return default_lascoux().d_A_complement(I, J, n);
}

}  // namespace mldeg
