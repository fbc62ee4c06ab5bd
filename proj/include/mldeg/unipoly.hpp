#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "exact.hpp"

namespace mldeg {

// Polynomial in the formal variable n with rational coefficients,
// stored lowest degree first without trailing zeros.
class UniPolyQ {
public:
    UniPolyQ() = default;
    UniPolyQ(long c) : UniPolyQ(BigRat(c)) {}
    UniPolyQ(const BigInt& c) : UniPolyQ(BigRat(c)) {}
    UniPolyQ(const BigRat& c) {
        if (c != 0) c_.push_back(c);
    }
    UniPolyQ(std::initializer_list<BigRat> cs) : c_(cs) { trim(); }
    explicit UniPolyQ(std::vector<BigRat> cs) : c_(std::move(cs)) { trim(); }

    static UniPolyQ variable() { return UniPolyQ{BigRat(0), BigRat(1)}; }

    // c * n^k
    static UniPolyQ monomial(const BigRat& c, std::size_t k) {
        std::vector<BigRat> v(k + 1);
        v[k] = c;
        return UniPolyQ(std::move(v));
    }

    // Zero polynomial has degree -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigRat>& coeffs() const { return c_; }

    BigRat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigRat(0); }
    BigRat leading() const { return c_.empty() ? BigRat(0) : c_.back(); }

    BigRat operator()(const BigRat& x) const {
        BigRat r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }
    BigRat operator()(long x) const { return (*this)(BigRat(x)); }

    // Exact value at an integer point, throwing if it is not an integer.
    BigInt eval_integer(long x) const { return require_integer((*this)(x), "UniPolyQ::eval_integer"); }

    // p(n + a)
    UniPolyQ shifted(const BigRat& a) const {
        UniPolyQ r;
        UniPolyQ lin{a, BigRat(1)};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + UniPolyQ(*it);
        return r;
    }

    UniPolyQ& operator+=(const UniPolyQ& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPolyQ& operator-=(const UniPolyQ& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UniPolyQ& operator*=(const UniPolyQ& o) { return *this = *this * o; }

    friend UniPolyQ operator+(UniPolyQ a, const UniPolyQ& b) { return a += b; }
    friend UniPolyQ operator-(UniPolyQ a, const UniPolyQ& b) { return a -= b; }
    friend UniPolyQ operator-(UniPolyQ a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend UniPolyQ operator*(const UniPolyQ& a, const UniPolyQ& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigRat> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UniPolyQ(std::move(r));
    }
    friend UniPolyQ operator*(UniPolyQ a, const BigRat& s) {
        if (s == 0) return {};
        for (auto& x : a.c_) x *= s;
        return a;
    }
    friend UniPolyQ operator*(const BigRat& s, UniPolyQ a) { return std::move(a) * s; }

    // Long division; returns {quotient, remainder}.
    friend std::pair<UniPolyQ, UniPolyQ> divmod(const UniPolyQ& a, const UniPolyQ& b) {
        if (b.is_zero()) throw DomainError("UniPolyQ: division by zero polynomial");
        std::vector<BigRat> rem = a.c_;
        int db = b.degree();
        std::vector<BigRat> q(a.degree() >= db ? a.degree() - db + 1 : 0);
        for (int k = a.degree(); k >= db; --k) {
            BigRat f = rem[k] / b.c_.back();
            if (f == 0) continue;
            q[k - db] = f;
            for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
        }
        return {UniPolyQ(std::move(q)), UniPolyQ(std::move(rem))};
    }

    friend bool operator==(const UniPolyQ& a, const UniPolyQ& b) { return a.c_ == b.c_; }

    // Human-readable, highest degree first, e.g. "1/2*n^2 - 1/2*n".
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            const BigRat& c = c_[k];
            if (c == 0) continue;
            BigRat a = abs(c);
            if (s.empty())
                s += c < 0 ? "-" : "";
            else
                s += c < 0 ? " - " : " + ";
            bool unit = a == 1 && k > 0;
            if (!unit) s += mldeg::to_string(a);
            if (k > 0) s += (unit ? "" : "*") + std::string("n") + (k > 1 ? "^" + std::to_string(k) : "");
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigRat> c_;
};

// Exact division; throws if b does not divide a.
inline UniPolyQ exact_div(const UniPolyQ& a, const UniPolyQ& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw ConsistencyError("UniPolyQ: inexact division");
    return q;
}

// Binomial coefficient C(n + a, k) as a polynomial in n.
inline UniPolyQ binom_poly(long a, long k) {
    if (k < 0) return {};
    UniPolyQ r(1);
    for (long j = 0; j < k; ++j) r *= UniPolyQ{make_rat(a - j, k - j), make_rat(1, k - j)};
    return r;
}

}  // namespace mldeg
