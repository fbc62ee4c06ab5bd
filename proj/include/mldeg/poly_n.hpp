#pragma once

// Polynomials in n recovered by exact interpolation: LP_I, the type-A and
// type-D complement coefficients, delta(m, n, n - s) and phi(n, d). Every fit
// is over-determined by extra evaluation points; fits with an unknown degree
// start from a guess and escalate.

#include <functional>
#include <string>
#include <vector>

#include "degrees.hpp"
#include "lascoux.hpp"
#include "unipoly.hpp"

namespace mldeg {

// Newton divided differences through (xs[k], ys[k]).
inline UniPolyQ interpolate(const std::vector<BigRat>& xs, const std::vector<BigRat>& ys) {
    if (xs.size() != ys.size()) throw DomainError("interpolate: node/value count mismatch");
    const std::size_t N = xs.size();
    std::vector<BigRat> dd = ys;
    for (std::size_t level = 1; level < N; ++level)
        for (std::size_t k = N - 1; k >= level; --k) {
            if (xs[k] == xs[k - level]) throw DomainError("interpolate: repeated node");
            dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
        }
    UniPolyQ p;
    for (std::size_t k = N; k-- > 0;) {
        p = p * UniPolyQ{BigRat(-xs[k]), BigRat(1)} + UniPolyQ(dd[k]);
    }
    return p;
}

struct FitResult {
    UniPolyQ poly;
    int degree_bound = 0;
    int escalations = 0;
};

struct FitOptions {
    long first = 0;      // first node
    long step = 1;       // spacing between nodes
    int degree = 0;      // starting degree bound
    int extra = 5;       // over-determination points
    int escalate_by = 2; // 0 disables escalation
    int max_degree = 80;
};

// Fits f at first, first + step, ...; checks opt.extra further points and
// raises the degree bound on disagreement.
inline FitResult fit_polynomial(const std::function<BigRat(long)>& f, FitOptions opt, const std::string& what) {
    std::vector<BigRat> xs, ys;
    auto value_at = [&](std::size_t k) {
        while (xs.size() <= k) {
            long x = opt.first + static_cast<long>(xs.size()) * opt.step;
            xs.emplace_back(x);
            ys.push_back(f(x));
        }
    };
    FitResult out;
    int deg = std::max(opt.degree, 0);
    while (true) {
        value_at(static_cast<std::size_t>(deg + opt.extra));
        std::vector<BigRat> nx(xs.begin(), xs.begin() + deg + 1), ny(ys.begin(), ys.begin() + deg + 1);
        UniPolyQ p = interpolate(nx, ny);
        bool ok = true;
        for (int k = deg + 1; k <= deg + opt.extra; ++k) ok = ok && p(xs[k]) == ys[k];
        if (ok) {
            out.poly = p;
            out.degree_bound = deg;
            return out;
        }
        if (opt.escalate_by <= 0 || deg + opt.escalate_by > opt.max_degree)
            throw ConsistencyError(what + ": values are not a polynomial of degree <= " + std::to_string(deg));
        deg += opt.escalate_by;
        ++out.escalations;
    }
}

// Period-p family of polynomials; branch k serves arguments congruent to k.
struct QuasiPolyQ {
    int period = 1;
    std::vector<UniPolyQ> branches;

    BigRat operator()(long x) const {
        long k = ((x % period) + period) % period;
        return branches.at(static_cast<std::size_t>(k))(x);
    }
    friend bool operator==(const QuasiPolyQ&, const QuasiPolyQ&) = default;
};

// prod_{j>k}(i_j - i_k) / [prod_j (i_j + 1)! prod_{j>k}(i_j + i_k + 2)]
inline BigRat lp_leading_coefficient(const IndexSet& I) {
    BigInt num = 1, den = 1;
    for (std::size_t j = 0; j < I.size(); ++j) {
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(I[j] + 1));
        den *= f;
        for (std::size_t k = 0; k < j; ++k) {
            num *= I[j] - I[k];
            den *= I[j] + I[k] + 2;
        }
    }
    return make_rat(num, den);
}

class PolyN {
public:
    explicit PolyN(Degrees& deg) : deg_(deg) {}

    Degrees& degrees() { return deg_; }

    // LP_I(n) = psi_{[n]\I}, degree sum I + #I; checked at 5 further points
    // and against the closed-form leading coefficient.
    UniPolyQ lp_poly(const IndexSet& I) {
        Lascoux& lx = deg_.lascoux();
        FitOptions opt;
        opt.degree = static_cast<int>(I.sum() + static_cast<long>(I.size()));
        opt.escalate_by = 0;
        auto fit = fit_polynomial([&](long n) { return BigRat(lx.psi_complement(I, n)); }, opt, "lp_poly " + I.str());
        if (fit.poly.degree() != opt.degree || fit.poly.leading() != lp_leading_coefficient(I))
            throw ConsistencyError("lp_poly " + I.str() + ": leading term " + to_string(fit.poly.leading()) +
                                   " differs from the closed form " + to_string(lp_leading_coefficient(I)));
        return fit.poly;
    }

    // n -> d_{[n]\I,[n]\J}; degree unknown, starts at sum I + sum J + #I.
    FitResult lp_a_fit(const IndexSet& I, const IndexSet& J) {
        Lascoux& lx = deg_.lascoux();
        FitOptions opt;
        opt.degree = static_cast<int>(I.sum() + J.sum() + static_cast<long>(I.size()));
        return fit_polynomial([&](long n) { return BigRat(lx.d_A_complement(I, J, n)); }, opt,
                              "lp_a_poly " + I.str() + "," + J.str());
    }
    UniPolyQ lp_a_poly(const IndexSet& I, const IndexSet& J) { return lp_a_fit(I, J).poly; }

    // k -> alpha_{[k]\I}, one polynomial per parity of k.
    QuasiPolyQ lp_d_quasipoly(const IndexSet& I) {
        Lascoux& lx = deg_.lascoux();
        QuasiPolyQ q;
        q.period = 2;
        for (long b = 0; b < 2; ++b) {
            FitOptions opt;
            opt.first = b;
            opt.step = 2;
            opt.degree = static_cast<int>(I.sum() + static_cast<long>(I.size()));
            auto fit = fit_polynomial([&](long k) { return BigRat(lx.alpha_complement(I, k)); }, opt,
                                      "lp_d_quasipoly " + I.str() + (b ? " odd" : " even"));
            q.branches.push_back(fit.poly);
        }
        return q;
    }

    // n -> delta_t(m, n, n - s); vanishes at n = 0.
    FitResult delta_fit(MatrixType t, long m, long s) {
        if (m <= 0 || s <= 0) throw DomainError("delta_poly: need m, s > 0");
        FitOptions opt;
        opt.degree = static_cast<int>(m);
        std::function<BigRat(long)> f;
        switch (t) {
            case MatrixType::symmetric:
                opt.escalate_by = 0;
                f = [&](long n) { return BigRat(deg_.delta_sym_corank(m, n, s).value); };
                break;
            case MatrixType::general:
                f = [&](long n) { return BigRat(deg_.delta_typeA_corank(m, n, s).value); };
                break;
            case MatrixType::skew:
                f = [&](long n) { return BigRat(deg_.delta_typeD_corank(m, n, s).value); };
                break;
        }
        auto fit = fit_polynomial(f, opt, std::string("delta_poly ") + matrix_type_name(t));
        if (fit.poly.coeff(0) != 0) throw ConsistencyError("delta_poly: nonzero value at n = 0");
        return fit;
    }
    UniPolyQ delta_poly(MatrixType t, long m, long s) { return delta_fit(t, m, s).poly; }

    // n -> phi_t(n, d) for n >= 1; degree d - 1 for symmetric matrices.
    FitResult phi_fit(MatrixType t, long d) {
        if (d <= 0) throw DomainError("phi_poly: need d > 0");
        FitOptions opt;
        opt.first = 1;
        opt.degree = static_cast<int>(d - 1);
        if (t == MatrixType::symmetric) opt.escalate_by = 0;
        auto fit = fit_polynomial([&](long n) { return BigRat(deg_.phi(t, n, d)); }, opt,
                                  std::string("phi_poly ") + matrix_type_name(t));
        return fit;
    }
    UniPolyQ phi_poly(MatrixType t, long d) { return phi_fit(t, d).poly; }

    // LHS - RHS of the recurrence that proves LP_I is a polynomial:
    //   0 in I:  LP_I(n) = (n - r + 1) LP_{I\0}(n) - 2 sum_l LP_{I\{0,i_l} + {i_l + 1}}(n), over l >= 2 with i_{l+1} > i_l + 1
    //   0 not in I:  LP_I(n) - LP_I(n - 1) = sum over J != I, J = {i_l - e_l}, e in {0,1}^r of LP_J(n - 1)
    UniPolyQ lp_recursion_residual(const IndexSet& I) {
        if (I.size() == 0) throw DomainError("lp_recursion_residual: I must be nonempty");
        const long r = static_cast<long>(I.size());
        const UniPolyQ lhs = lp_poly(I);
        UniPolyQ rhs;
        if (I[0] == 0) {
            const IndexSet rest = I.without(0);
            rhs = UniPolyQ{BigRat(1 - r), BigRat(1)} * lp_poly(rest);
            for (long l = 1; l < r; ++l) {
                const long next = l + 1 < r ? I[l + 1] : -1;
                if (next != -1 && next <= I[l] + 1) continue;
                rhs -= lp_poly(rest.without(I[l]).with(I[l] + 1)) * BigRat(2);
            }
            return lhs - rhs;
        }
        for (unsigned long mask = 1; mask < (1UL << r); ++mask) {
            std::vector<int> v;
            for (long l = 0; l < r; ++l) v.push_back(I[l] - static_cast<int>((mask >> l) & 1));
            bool strict = true;
            for (std::size_t k = 1; k < v.size(); ++k) strict = strict && v[k] > v[k - 1];
            if (strict) rhs += lp_poly(IndexSet(v)).shifted(-1);
        }
        return lhs - lhs.shifted(-1) - rhs;
    }

private:
    Degrees& deg_;
};

inline PolyN& default_poly_n() {
    static PolyN p(default_degrees());
    return p;
}

inline UniPolyQ lp_poly(const IndexSet& I) { return default_poly_n().lp_poly(I); }
inline UniPolyQ lp_a_poly(const IndexSet& I, const IndexSet& J) { return default_poly_n().lp_a_poly(I, J); }
inline QuasiPolyQ lp_d_quasipoly(const IndexSet& I) { return default_poly_n().lp_d_quasipoly(I); }
inline UniPolyQ delta_poly(MatrixType t, long m, long s) { return default_poly_n().delta_poly(t, m, s); }
inline UniPolyQ phi_poly(MatrixType t, long d) { return default_poly_n().phi_poly(t, d); }

}  // namespace mldeg
