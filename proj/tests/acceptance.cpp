// One PASS/FAIL line per acceptance criterion. Every criterion starts from
// cold coefficient tables so the printed times are honest.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mldeg/cli.hpp"
#include "mldeg/checks.hpp"

using namespace mldeg;

namespace {

struct Fresh {
    Lascoux lx;
    QSchur q;
    Degrees deg{lx, q, 1};
    PolyN poly{deg};
};

struct Outcome {
    bool pass;
    std::string detail;
};

std::string summary(const CheckReport& r) {
    std::ostringstream s;
    s << r.suite << " " << (r.checked - static_cast<long>(r.failures.size())) << "/" << r.checked;
    if (!r.failures.empty()) s << " [first failure: " << r.failures.front() << "]";
    return s.str();
}

Outcome combine(const std::vector<CheckReport>& reps) {
    Outcome o{true, ""};
    for (const auto& r : reps) {
        o.pass = o.pass && r.ok();
        o.detail += (o.detail.empty() ? "" : "; ") + summary(r);
    }
    return o;
}

Outcome c1() {
    Fresh F;
    const std::vector<std::pair<IndexSet, long>> worked = {
        {IndexSet{0, 2}, 3}, {IndexSet{0, 3}, 7}, {IndexSet{1, 2}, 3}, {IndexSet{1, 3}, 10}, {IndexSet{2, 3}, 10}};
    CheckReport r{"four-paths", 0, {}};
    for (const auto& [I, v] : worked) {
        BigInt paths[] = {F.lx.psi(I), F.lx.psi_pascal(I), F.lx.psi_recursion(I), psi_oracle(I)};
        const char* names[] = {"pfaffian", "pascal", "recursion", "oracle"};
        for (int k = 0; k < 4; ++k)
            r.expect(paths[k] == v, [&] { return "psi" + I.str() + " via " + names[k] + " = " + to_string(paths[k]); });
    }
    return combine({r});
}

Outcome c2() {
    Fresh F;
    CheckReport r{"phi(3,d)", 0, {}};
    const long expected[] = {1, 2, 4, 4, 2, 1};
    for (long d = 1; d <= 6; ++d) {
        BigInt v = F.deg.phi_sym(3, d);
        r.expect(v == expected[d - 1], [&] { return "phi(3," + std::to_string(d) + ") = " + to_string(v); });
        // second route: the same weighted sum with every delta from the closed form
        BigInt total = 0;
        for (long s = 1; s < 3 && s * (s + 1) / 2 <= d; ++s) total += s * F.deg.delta_sym_nrs(d, 3, s).value;
        if (d == 6) total += 3;  // delta(6, 3, 0) = 1
        r.expect(total == 3 * expected[d - 1], [&] { return "nrs route for d=" + std::to_string(d) + " gives " + to_string(total); });
        r.expect(F.deg.phi_sym(3, 7 - d) == v, [&] { return "phi(3,d) not symmetric at d=" + std::to_string(d); });
    }
    CheckCaps c;
    c.nmax = 3;
    return combine({r, check_duality(F.deg, c)});
}

Outcome c3() {
    Fresh F;
    CheckCaps c;
    c.nmax = 7;
    return combine({check_nrs_sym(F.deg, c)});
}

Outcome c4() {
    Fresh F;
    CheckCaps c;
    c.nmax = 7;
    return combine({check_duality(F.deg, c)});
}

Outcome c5() {
    Fresh F;
    return combine({check_pataki(F.deg, MatrixType::symmetric, 6), check_pataki(F.deg, MatrixType::general, 4),
                    check_pataki(F.deg, MatrixType::skew, 4)});
}

Outcome c6() {
    Fresh F;
    CheckCaps c;
    c.sum_max = 9;
    c.size_max = 3;
    return combine({check_leading(F.poly, c)});
}

Outcome c7() {
    Fresh F;
    CheckCaps c;
    c.sum_max = 8;
    c.size_max = 3;
    c.kmax = 12;
    CheckReport b = check_b_expansion(F.poly, c), d = check_d_expansion(F.poly, c, false), dp = check_d_expansion(F.poly, c, true);
    Outcome o = combine({b, d});
    o.detail += "; parity-restricted " + summary(dp) +
                " (the identity cannot hold for 0 in I with n - #I odd: e.g. I = {0}, n even has left side 1 and right side "
                "alpha of an odd-size set not containing 0, which is 0)";
    return o;
}

Outcome c8() {
    Fresh F;
    CheckCaps c;
    c.nmax_ad = 4;
    return combine({check_typeA(F.deg, c)});
}

Outcome c9() {
    Fresh F;
    CheckCaps c;
    c.nmax_ad = 4;
    c.kmax = 12;
    return combine({check_typeD(F.poly, c)});
}

Outcome c10() {
    Fresh F;
    CheckReport r{"phi-poly", 0, {}};
    std::string table;
    for (long d = 1; d <= 8; ++d) {
        UniPolyQ p = F.poly.phi_poly(MatrixType::symmetric, d);
        r.expect(p.degree() == d - 1, [&] { return "phi_poly d=" + std::to_string(d) + " has degree " + std::to_string(p.degree()); });
        for (long n = 1; n <= d + 4; ++n) {
            BigInt v = F.deg.phi_sym(n, d);
            r.expect(p(n) == BigRat(v), [&] { return "phi_poly d=" + std::to_string(d) + " at n=" + std::to_string(n); });
        }
    }
    BigInt pinned = F.deg.phi_sym(4, 10);
    r.expect(pinned == 1, [&] { return "phi(4,10) = " + to_string(pinned) + ", pinned 1"; });
    const long row4[] = {1, 3, 9, 17, 21, 21, 17, 9, 3, 1};
    for (long d = 1; d <= 10; ++d)
        r.expect(F.deg.phi_sym(4, d) == row4[d - 1], [&] { return "phi(4," + std::to_string(d) + ") moved"; });
    Outcome o = combine({r});
    o.detail += "; phi(4,10) = " + to_string(pinned);
    return o;
}

Outcome c11() {
    const std::vector<std::vector<std::string>> queries = {
        {"check", "paths"},
        {"check", "nrs-sym", "--nmax", "7"},
        {"check", "duality", "--nmax", "7"},
        {"check", "pataki"},
        {"check", "leading", "--sum-max", "9"},
        {"check", "b-expansion"},
        {"check", "d-expansion"},
        {"check", "typeA"},
        {"check", "typeD"},
        {"phi", "--table", "8"},
        {"phi", "-n", "4", "-d", "10"},
        {"delta", "--type", "sym", "-m", "14", "-n", "7", "-r", "3", "--path", "both"},
    };
    CheckReport r{"jobs-1-vs-4", 0, {}};
    for (const auto& q : queries) {
        std::vector<std::string> four = {"--jobs", "4"};
        four.insert(four.end(), q.begin(), q.end());
        std::ostringstream o1, o4, e1, e4;
        int a = cli::run_cli(q, o1, e1), b = cli::run_cli(four, o4, e4);
        std::string what = q[0] + " " + q[1];
        r.expect(a == b && o1.str() == o4.str() && !o1.str().empty(), [&] { return what + " differs between --jobs 1 and --jobs 4"; });
    }
    return combine({r});
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"worked psi coefficients, four paths", c1},
        {"phi(3, d) conic numbers", c2},
        {"NRS equality sweep n <= 7", c3},
        {"duality sweep n <= 7", c4},
        {"Pataki windows (sym n <= 6, A/D n <= 4)", c5},
        {"LP_I degree, leading coefficient, extrapolation", c6},
        {"b_I identity and d_I pointwise identity", c7},
        {"type A paths, NRS and conormal symmetry", c8},
        {"type D alpha, NRS and quasi-polynomials", c9},
        {"phi polynomials d <= 8, phi(4,10) regression", c10},
        {"determinism across worker counts", c11},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) ++failed;
        char head[160];
        std::snprintf(head, sizeof head, "criterion %2zu: %s  %8.3fs  ", k + 1, o.pass ? "PASS" : "FAIL", sec);
        std::cout << head << criteria[k].first << " | " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
    return failed ? 1 : 0;
}
