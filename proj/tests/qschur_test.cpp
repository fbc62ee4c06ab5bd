#include <gtest/gtest.h>

#include <functional>

#include "mldeg/lascoux.hpp"
#include "mldeg/poly_n.hpp"
#include "mldeg/qschur.hpp"

using namespace mldeg;

namespace {

// Number of marked shifted tableaux of shape lam in the alphabet
// 1' < 1 < ... < n' < n (diagonal entries may be primed). Each one
// contributes 2^{-|lam|} to Q_lam(1/2, ..., 1/2).
BigInt count_marked_shifted(const std::vector<int>& lam, int n) {
    // symbol 2k means (k+1)', 2k + 1 means k + 1
    std::vector<std::pair<int, int>> cells;
    for (std::size_t i = 0; i < lam.size(); ++i)
        for (int j = 0; j < lam[i]; ++j) cells.emplace_back(static_cast<int>(i), static_cast<int>(i) + j);
    std::map<std::pair<int, int>, int> fill;
    BigInt count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [i, j] = cells[k];
        for (int s = 0; s < 2 * n; ++s) {
            auto left = fill.find({i, j - 1});
            auto up = fill.find({i - 1, j});
            if (left != fill.end() && (s < left->second || (s == left->second && s % 2 == 0))) continue;
            if (up != fill.end() && (s < up->second || (s == up->second && s % 2 == 1))) continue;
            fill[{i, j}] = s;
            rec(k + 1);
            fill.erase({i, j});
        }
    };
    rec(0);
    return count;
}

void for_each_strict_partition(int maxweight, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int below, int left) {
        f(cur);
        for (int p = std::min(below - 1, left); p >= 1; --p) {
            cur.push_back(p);
            rec(p, left - p);
            cur.pop_back();
        }
    };
    rec(maxweight + 1, maxweight);
}

}  // namespace

TEST(QOneRow, Examples) {
    EXPECT_EQ(q_onerow(0, 3), UniPolyQ(1));
    EXPECT_EQ(q_onerow(1, 3), UniPolyQ::variable());
    EXPECT_EQ(q_onerow(2, 4), UniPolyQ::monomial(make_rat(1, 2), 2));
    EXPECT_EQ(q_onerow(3, 3).degree(), 3);
    EXPECT_THROW(q_onerow(4, 3), TruncationError);
}

TEST(QOneRow, MatchesSeriesAtIntegers) {
    // ((1 + t/2) / (1 - t/2))^n expanded directly for small n
    for (int n = 0; n <= 6; ++n) {
        std::vector<BigRat> series(9, BigRat(0));
        series[0] = 1;
        for (int k = 0; k < n; ++k) {
            std::vector<BigRat> next(9, BigRat(0));
            // multiply by (1 + t/2) * sum_j (t/2)^j = 1 + sum_{j>=1} 2 (t/2)^j
            for (int a = 0; a <= 8; ++a)
                for (int j = 0; a + j <= 8; ++j) {
                    BigRat c = j == 0 ? BigRat(1) : BigRat(BigInt(2)) / BigRat(pow2(j));
                    next[a + j] += series[a] * c;
                }
            series = next;
        }
        for (int a = 0; a <= 8; ++a) EXPECT_EQ(q_onerow(a, 8)(n), series[a]) << a << " " << n;
    }
}

TEST(QTwoRow, Examples) {
    for (int a = 1; a <= 5; ++a) EXPECT_EQ(q_tworow(a, 0), q_onerow(a, a + 2));
    EXPECT_EQ(q_tworow(1, 0), UniPolyQ::variable());
    EXPECT_EQ(q_tworow(2, 1), q_onerow(2, 5) * q_onerow(1, 5) - q_onerow(3, 5) * q_onerow(0, 5) * BigRat(2));
    EXPECT_THROW(q_tworow(1, 1), DomainError);
    EXPECT_THROW(q_tworow(1, 2), DomainError);
}

TEST(QStrict, Examples) {
    EXPECT_EQ(q_strict(StrictPartition({})), UniPolyQ(1));
    EXPECT_EQ(q_strict(StrictPartition({1})), UniPolyQ::variable());
    EXPECT_EQ(q_strict(StrictPartition({2, 1})), q_tworow(2, 1));
    EXPECT_THROW(StrictPartition({1, 1}), DomainError);
    EXPECT_THROW(StrictPartition({2, 0}), DomainError);
}

TEST(QStrict, MatchesShiftedTableauCount) {
    int checked = 0;
    for_each_strict_partition(6, [&](const std::vector<int>& lam) {
        long w = 0;
        for (int x : lam) w += x;
        UniPolyQ q = q_strict(StrictPartition(lam));
        for (int n = 0; n <= 5; ++n) {
            BigRat expect = BigRat(count_marked_shifted(lam, n)) / BigRat(pow2(w));
            ASSERT_EQ(q(n), expect) << "lambda size " << lam.size() << " weight " << w << " n " << n;
            ++checked;
        }
    });
    EXPECT_GT(checked, 50);
}

TEST(BPoly, Examples) {
    EXPECT_EQ(b_poly(IndexSet{}), UniPolyQ(1));
    EXPECT_EQ(b_poly(IndexSet{0}), UniPolyQ::variable());
    EXPECT_EQ(b_poly(IndexSet{0, 1}), q_tworow(2, 1));
}

TEST(BPoly, DegreeAndNonnegativity) {
    for (int r = 0; r <= 3; ++r)
        for_each_indexset_upto(r, 8, -1, [&](const IndexSet& I) {
            UniPolyQ b = b_poly(I);
            EXPECT_EQ(b.degree(), I.sum() + static_cast<long>(I.size())) << I.str();
            for (int n = 0; n <= 20; ++n) EXPECT_GE(b(n), 0) << I.str() << " " << n;
        });
}

TEST(DPoly, Examples) {
    EXPECT_EQ(d_poly(IndexSet{}), UniPolyQ(1));
    EXPECT_EQ(d_poly(IndexSet{0}), UniPolyQ(1));
    EXPECT_EQ(d_poly(IndexSet{1}), UniPolyQ::monomial(make_rat(1, 2), 1));
    EXPECT_EQ(d_poly(IndexSet{0, 2}), q_onerow(2, 4) * make_rat(1, 2));
}

// b_I(n) = sum_{J <= I} (1/2)^{sum I - sum J} s_{I,J} LP_J(n)
TEST(BExpansion, ExactPolynomialIdentity) {
    int checked = 0;
    for (int r = 0; r <= 3; ++r)
        for_each_indexset_upto(r, 8, -1, [&](const IndexSet& I) {
            UniPolyQ rhs;
            for (const auto& J : sets_below(I))
                rhs += lp_poly(J) * (BigRat(s_ij(I, J)) / BigRat(pow2(I.sum() - J.sum())));
            EXPECT_EQ(b_poly(I), rhs) << I.str();
            ++checked;
        });
    EXPECT_EQ(checked, 1 + 9 + 20 + 16);
}

namespace {

BigRat d_expansion_rhs(const IndexSet& I, long n) {
    BigRat rhs = 0;
    for (const auto& J : sets_below(I))
        rhs += BigRat(BigInt(s_ij(I, J) * alpha_complement(J, n))) / BigRat(pow2(I.sum() - J.sum()));
    return rhs;
}

}  // namespace

// d_I(n) = sum_{J <= I} (1/2)^{sum I - sum J} s_{I,J} alpha_{[n]\J} holds
// whenever 0 is not in I or n - #I is even.
TEST(DExpansion, HoldsOffTheOddParityZeroCase) {
    for (int r = 0; r <= 3; ++r)
        for_each_indexset_upto(r, 8, -1, [&](const IndexSet& I) {
            for (long n = 0; n <= 12; ++n) {
                if (I.contains(0) && (n - static_cast<long>(I.size())) % 2 != 0) continue;
                EXPECT_EQ(d_poly(I)(n), d_expansion_rhs(I, n)) << I.str() << " n=" << n;
            }
        });
}

// The remaining case really does fail, and nothing else does.
TEST(DExpansion, FailuresAreExactlyTheOddParityZeroCase) {
    long failures = 0;
    for (int r = 0; r <= 3; ++r)
        for_each_indexset_upto(r, 8, -1, [&](const IndexSet& I) {
            for (long n = 0; n <= 12; ++n) {
                bool holds = d_poly(I)(n) == d_expansion_rhs(I, n);
                bool odd_zero = I.contains(0) && (n - static_cast<long>(I.size())) % 2 != 0;
                if (!holds) {
                    ++failures;
                    EXPECT_TRUE(odd_zero) << I.str() << " n=" << n;
                }
            }
        });
    EXPECT_GT(failures, 0);
}
