#pragma once

// Invariant suites shared by the CLI `check` command and the acceptance
// binary. Each suite walks its whole range and records every counterexample.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "degrees.hpp"
#include "lascoux.hpp"
#include "poly_n.hpp"
#include "qschur.hpp"
#include "schur_oracle.hpp"

namespace mldeg {

struct CheckReport {
    std::string suite;
    long checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty() && checked > 0; }
    void expect(bool cond, const std::function<std::string()>& what) {
        ++checked;
        if (!cond) failures.push_back(what());
    }
};

struct CheckCaps {
    long nmax = 7;      // matrix size for symmetric sweeps
    long nmax_ad = 4;   // matrix size for type A / D sweeps
    long sum_max = 8;   // bound on sum I for coefficient identities
    long size_max = 3;  // bound on #I
    long kmax = 12;     // argument range for pointwise identities
};

namespace checks_detail {

inline std::string show(const BigInt& v) { return to_string(v); }
inline std::string show(const BigRat& v) { return to_string(v); }

template <class A, class B>
std::string mismatch(const std::string& where, const A& a, const B& b) {
    return where + ": " + show(a) + " != " + show(b);
}

inline std::string args(std::initializer_list<long> xs) {
    std::string s = "(";
    bool first = true;
    for (long x : xs) {
        s += (first ? "" : ",") + std::to_string(x);
        first = false;
    }
    return s + ")";
}

}  // namespace checks_detail

// delta_sym(m, n, n - s) = delta_sym_nrs(m, n, s)
inline CheckReport check_nrs_sym(Degrees& D, const CheckCaps& c) {
    using namespace checks_detail;
    CheckReport rep{"nrs-sym", 0, {}};
    for (long n = 2; n <= c.nmax; ++n)
        for (long s = 1; s < n; ++s)
            for (long m = 1; m <= n * (n + 1) / 2; ++m) {
                BigInt a = D.delta_sym(m, n, n - s).value, b = D.delta_sym_nrs(m, n, s).value;
                rep.expect(a == b, [&] { return mismatch("delta" + args({m, n, n - s}) + " direct vs nrs", a, b); });
            }
    return rep;
}

// delta(m, n, n - s) = delta(C(n+1,2) - m, n, s)
inline CheckReport check_duality(Degrees& D, const CheckCaps& c) {
    using namespace checks_detail;
    CheckReport rep{"duality", 0, {}};
    for (long n = 1; n <= c.nmax; ++n) {
        const long top = n * (n + 1) / 2;
        for (long s = 0; s <= n; ++s)
            for (long m = 0; m <= top; ++m) {
                BigInt a = D.delta_sym(m, n, n - s).value, b = D.delta_sym(top - m, n, s).value;
                rep.expect(a == b, [&] { return mismatch("delta" + args({m, n, n - s}) + " vs dual", a, b); });
            }
    }
    return rep;
}

// Zero strictly outside the window, nonzero at both ends. Uses the raw sums,
// not the window short-circuit inside delta_*.
inline CheckReport check_pataki(Degrees& D, MatrixType t, long nmax) {
    using namespace checks_detail;
    CheckReport rep{std::string("pataki-") + matrix_type_name(t), 0, {}};
    auto raw = [&](long m, long n, long r) {
        switch (t) {
            case MatrixType::symmetric: return D.delta_sym_corank(m, n, n - r).value;
            case MatrixType::general: return D.delta_typeA_corank(m, n, n - r).value;
            case MatrixType::skew: return D.delta_typeD_corank(m, n, n - r).value;
        }
        return BigInt(0);
    };
    for (long n = 2; n <= nmax; ++n)
        for (long r = 1; r < n; ++r) {
            auto [lo, hi] = Degrees::pataki_window(t, n, r);
            for (long m = 0; m <= Degrees::full_dimension(t, n) + 1; ++m) {
                BigInt v = raw(m, n, r);
                if (m < lo || m > hi)
                    rep.expect(v == 0, [&] { return "delta" + args({m, n, r}) + " = " + to_string(v) + " outside window"; });
                else if (m == lo || m == hi)
                    rep.expect(v > 0, [&] { return "delta" + args({m, n, r}) + " = " + to_string(v) + " at window end"; });
            }
        }
    return rep;
}

inline CheckReport check_pataki(Degrees& D, const CheckCaps& c) {
    CheckReport all{"pataki", 0, {}};
    for (auto rep : {check_pataki(D, MatrixType::symmetric, std::min(c.nmax, 6L)),
                     check_pataki(D, MatrixType::general, c.nmax_ad), check_pataki(D, MatrixType::skew, c.nmax_ad)}) {
        all.checked += rep.checked;
        for (auto& f : rep.failures) all.failures.push_back(rep.suite + ": " + f);
    }
    return all;
}

// n * phi(n, d) = sum_s s delta(d, n, n - s), with the sum divisible by n
inline CheckReport check_fundamental(Degrees& D, const CheckCaps& c) {
    using namespace checks_detail;
    CheckReport rep{"fundamental", 0, {}};
    for (long n = 1; n <= c.nmax; ++n)
        for (long d = 1; d <= n * (n + 1) / 2; ++d) {
            BigInt total = 0;
            for (long s = 1; s <= n; ++s) total += s * D.delta_sym(d, n, n - s).value;
            BigInt phi;
            try {
                phi = D.phi_sym(n, d);
            } catch (const ConsistencyError& e) {
                rep.expect(false, [&] { return std::string(e.what()); });
                continue;
            }
            rep.expect(phi * n == total && phi > 0,
                       [&] { return mismatch("n*phi" + args({n, d}) + " vs delta sum", BigInt(phi * n), total); });
        }
    return rep;
}

// lp_poly degree, leading coefficient and agreement with psi_complement
inline CheckReport check_leading(PolyN& P, const CheckCaps& c) {
    using namespace checks_detail;
    CheckReport rep{"leading", 0, {}};
    Lascoux& lx = P.degrees().lascoux();
    for (long r = 0; r <= c.size_max; ++r)
        for_each_indexset_upto(static_cast<int>(r), c.sum_max, -1, [&](const IndexSet& I) {
            const long D = I.sum() + static_cast<long>(I.size());
            UniPolyQ p;
            try {
                p = P.lp_poly(I);
            } catch (const ConsistencyError& e) {
                rep.expect(false, [&] { return std::string(e.what()); });
                return;
            }
            rep.expect(p.degree() == D, [&] { return "lp" + I.str() + " degree " + std::to_string(p.degree()); });
            rep.expect(p.leading() == lp_leading_coefficient(I),
                       [&] { return mismatch("lp" + I.str() + " leading", p.leading(), lp_leading_coefficient(I)); });
            for (long n = 0; n <= D + 5; ++n) {
                BigRat a = p(n), b = BigRat(lx.psi_complement(I, n));
                rep.expect(a == b, [&] { return mismatch("lp" + I.str() + "(" + std::to_string(n) + ")", a, b); });
            }
        });
    return rep;
}

// b_I(n) = sum_{J <= I} (1/2)^{sum I - sum J} s_{I,J} LP_J(n), as polynomials
inline CheckReport check_b_expansion(PolyN& P, const CheckCaps& c) {
    CheckReport rep{"b-expansion", 0, {}};
    Lascoux& lx = P.degrees().lascoux();
    QSchur& q = P.degrees().qschur();
    for (long r = 0; r <= c.size_max; ++r)
        for_each_indexset_upto(static_cast<int>(r), c.sum_max, -1, [&](const IndexSet& I) {
            UniPolyQ rhs;
            for (const auto& J : sets_below(I))
                rhs += P.lp_poly(J) * (BigRat(lx.s_ij(I, J)) / BigRat(pow2(I.sum() - J.sum())));
            UniPolyQ lhs = q.b_poly(I);
            rep.expect(lhs == rhs, [&] { return "b" + I.str() + ": " + lhs.to_string() + " != " + rhs.to_string(); });
        });
    return rep;
}

// d_I(n) = sum_{J <= I} (1/2)^{sum I - sum J} s_{I,J} alpha_{[n]\J}, pointwise.
// With parity_restricted the pairs with 0 in I and n - #I odd are skipped.
inline CheckReport check_d_expansion(PolyN& P, const CheckCaps& c, bool parity_restricted) {
    using namespace checks_detail;
    CheckReport rep{parity_restricted ? "d-expansion-parity" : "d-expansion", 0, {}};
    Lascoux& lx = P.degrees().lascoux();
    QSchur& q = P.degrees().qschur();
    for (long r = 0; r <= c.size_max; ++r)
        for_each_indexset_upto(static_cast<int>(r), c.sum_max, -1, [&](const IndexSet& I) {
            UniPolyQ lhs = q.d_poly(I);
            for (long n = 0; n <= c.kmax; ++n) {
                if (parity_restricted && I.contains(0) && (n - static_cast<long>(I.size())) % 2 != 0) continue;
                BigRat rhs = 0;
                for (const auto& J : sets_below(I))
                    rhs += BigRat(BigInt(lx.s_ij(I, J) * lx.alpha_complement(J, n))) / BigRat(pow2(I.sum() - J.sum()));
                BigRat a = lhs(n);
                rep.expect(a == rhs, [&] { return mismatch("d" + I.str() + "(" + std::to_string(n) + ")", a, rhs); });
            }
        });
    return rep;
}

// Recurrences behind the polynomiality of LP_I, as polynomial identities
inline CheckReport check_recursion(PolyN& P, const CheckCaps& c) {
    CheckReport rep{"recursion", 0, {}};
    for (long r = 1; r <= c.size_max; ++r)
        for_each_indexset_upto(static_cast<int>(r), c.sum_max, -1, [&](const IndexSet& I) {
            UniPolyQ z = P.lp_recursion_residual(I);
            rep.expect(z == UniPolyQ(), [&] { return "LP" + I.str() + " residual " + z.to_string(); });
        });
    return rep;
}

// The alternating s_{I,J} sums over psi (symmetric), d (type A) and
// alpha (type D). Right side is the coefficient at J when the sum is tight,
// 0 otherwise.
inline CheckReport check_alternating_sums(Lascoux& lx, long jsum_max = 6, long m_max = 10) {
    using namespace checks_detail;
    CheckReport rep{"alternating", 0, {}};
    auto half_pow = [](long e) -> BigRat { return BigRat(BigInt(e % 2 ? -1 : 1)) / BigRat(pow2(e)); };
    for (long m = 1; m <= m_max; ++m)
        for (int s = 1; s <= 2; ++s) {
            for_each_indexset_upto(s, std::min(jsum_max, m - s), -1, [&](const IndexSet& J) {
                BigRat lhs = 0;
                for_each_indexset_upto(s, m - s, -1, [&](const IndexSet& I) {
                    if (!leq(J, I)) return;
                    lhs += BigRat(BigInt(lx.psi(I) * lx.s_ij(I, J) * binom(m - 1, m - s - I.sum()))) * half_pow(I.sum() - J.sum());
                });
                BigRat rhs = J.sum() == m - s ? BigRat(lx.psi(J)) : BigRat(0);
                rep.expect(lhs == rhs, [&] { return mismatch("sym J=" + J.str() + " m=" + std::to_string(m), lhs, rhs); });
            });
            for_each_indexset_upto(s, std::min(jsum_max, m), -1, [&](const IndexSet& J) {
                BigRat lhs = 0;
                for_each_indexset_upto(s, m, -1, [&](const IndexSet& I) {
                    if (!leq(J, I)) return;
                    lhs += BigRat(BigInt(lx.alpha(I) * lx.s_ij(I, J) * binom(m - 1, m - I.sum()))) * half_pow(I.sum() - J.sum());
                });
                BigRat rhs = J.sum() == m ? BigRat(lx.alpha(J)) : BigRat(0);
                rep.expect(lhs == rhs, [&] { return mismatch("skew J=" + J.str() + " m=" + std::to_string(m), lhs, rhs); });
            });
            for (long kl = 0; kl <= std::min(jsum_max, m - s); ++kl)
                for (long ks = 0; ks <= kl; ++ks)
                    for (const auto& K : enumerate_indexsets(s, ks))
                        for (const auto& L : enumerate_indexsets(s, kl - ks)) {
                            BigInt lhs = 0;
                            for_each_indexset_upto(s, m - s - L.sum(), -1, [&](const IndexSet& I) {
                                if (!leq(K, I)) return;
                                BigInt term = lx.d_A(I, L) * lx.s_ij(I, K) * binom(m - 1, m - s - I.sum() - L.sum());
                                lhs += (I.sum() - K.sum()) % 2 ? BigInt(-term) : term;
                            });
                            BigInt rhs = kl == m - s ? lx.d_A(K, L) : BigInt(0);
                            rep.expect(lhs == rhs, [&] {
                                return mismatch("typeA K=" + K.str() + " L=" + L.str() + " m=" + std::to_string(m), lhs, rhs);
                            });
                        }
        }
    return rep;
}

// d_A paths, delta_A direct vs NRS on windows, conormal symmetry
inline CheckReport check_typeA(Degrees& D, const CheckCaps& c) {
    using namespace checks_detail;
    CheckReport rep{"typeA", 0, {}};
    Lascoux& lx = D.lascoux();
    for (int s = 0; s <= 3; ++s)
        for (const auto& I : subsets_of_range(7, s))
            for (const auto& J : subsets_of_range(7, s)) {
                BigInt a = lx.d_A(I, J), b = lx.d_A_recursion(I, J), o = d_oracle(I, J);
                rep.expect(a == b && a == o, [&] {
                    return "d" + I.str() + J.str() + ": det " + to_string(a) + " rec " + to_string(b) + " oracle " + to_string(o);
                });
            }
    for (long n = 2; n <= c.nmax_ad; ++n)
        for (long r = 1; r < n; ++r) {
            auto [lo, hi] = Degrees::pataki_window(MatrixType::general, n, r);
            for (long m = lo; m <= hi; ++m) {
                BigInt a = D.delta_typeA(m, n, r).value, b = D.delta_typeA_nrs(m, n, n - r).value;
                rep.expect(a == b, [&] { return mismatch("deltaA" + args({m, n, r}) + " direct vs nrs", a, b); });
            }
        }
    for (long n = 1; n <= c.nmax_ad; ++n)
        for (long r = 0; r <= n; ++r)
            for (long m = 0; m <= n * n; ++m) {
                BigInt a = D.delta_typeA(m, n, r).value, b = D.delta_typeA(n * n - m, n, n - r).value;
                rep.expect(a == b, [&] { return mismatch("deltaA" + args({m, n, r}) + " vs conormal dual", a, b); });
            }
    return rep;
}

// alpha recursion vs oracle, delta_D direct vs NRS, LP^D branches
inline CheckReport check_typeD(PolyN& P, const CheckCaps& c) {
    using namespace checks_detail;
    CheckReport rep{"typeD", 0, {}};
    Degrees& D = P.degrees();
    Lascoux& lx = D.lascoux();
    for (int s = 0; s <= 4; ++s)
        for (const auto& I : subsets_of_range(9, s)) {
            BigInt a = lx.alpha(I), o = alpha_oracle(I);
            rep.expect(a == o, [&] { return mismatch("alpha" + I.str() + " recursion vs oracle", a, o); });
        }
    for (long n = 2; n <= c.nmax_ad; ++n)
        for (long r = 1; r < n; ++r)
            for (long m = 1; m <= Degrees::full_dimension(MatrixType::skew, n); ++m) {
                BigInt a = D.delta_typeD(m, n, r).value, b = D.delta_typeD_nrs(m, n, n - r).value;
                rep.expect(a == b, [&] { return mismatch("deltaD" + args({m, n, r}) + " direct vs nrs", a, b); });
            }
    for (long r = 0; r <= 2; ++r)
        for_each_indexset_upto(static_cast<int>(r), 4, -1, [&](const IndexSet& I) {
            QuasiPolyQ q = P.lp_d_quasipoly(I);
            for (long k = 0; k <= c.kmax; ++k) {
                BigRat a = q(k), b = BigRat(lx.alpha_complement(I, k));
                rep.expect(a == b, [&] { return mismatch("LPD" + I.str() + "(" + std::to_string(k) + ")", a, b); });
            }
        });
    return rep;
}

// Four psi routes agree, and match the oracle
inline CheckReport check_paths(Lascoux& lx, const CheckCaps& c) {
    CheckReport rep{"paths", 0, {}};
    for (long r = 0; r <= std::min(c.size_max + 1, 4L); ++r)
        for (const auto& I : subsets_of_range(9, static_cast<int>(r))) {
            BigInt a = lx.psi(I), b = lx.psi_pascal(I), d = lx.psi_recursion(I), o = psi_oracle(I);
            rep.expect(a == b && a == d && a == o, [&] {
                return "psi" + I.str() + ": pfaffian " + to_string(a) + " pascal " + to_string(b) + " recursion " + to_string(d) +
                       " oracle " + to_string(o);
            });
        }
    return rep;
}

inline const std::vector<std::string>& check_suite_names() {
    static const std::vector<std::string> names = {"nrs-sym", "duality",   "pataki", "fundamental", "leading",
                                                   "b-expansion", "d-expansion",   "d-expansion-parity", "recursion",
                                                   "alternating", "typeA", "typeD", "paths"};
    return names;
}

inline CheckReport run_check(const std::string& suite, PolyN& P, const CheckCaps& c) {
    Degrees& D = P.degrees();
    if (suite == "nrs-sym") return check_nrs_sym(D, c);
    if (suite == "duality") return check_duality(D, c);
    if (suite == "pataki") return check_pataki(D, c);
    if (suite == "fundamental") return check_fundamental(D, c);
    if (suite == "leading") return check_leading(P, c);
    if (suite == "b-expansion") return check_b_expansion(P, c);
    if (suite == "d-expansion") return check_d_expansion(P, c, false);
    if (suite == "d-expansion-parity") return check_d_expansion(P, c, true);
    if (suite == "recursion") return check_recursion(P, c);
    if (suite == "alternating") return check_alternating_sums(D.lascoux());
    if (suite == "typeA") return check_typeA(D, c);
    if (suite == "typeD") return check_typeD(P, c);
    if (suite == "paths") return check_paths(D.lascoux(), c);
    throw DomainError("unknown check suite '" + suite + "'");
}

}  // namespace mldeg
