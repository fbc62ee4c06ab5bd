#pragma once

#include <cstdint>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "unipoly.hpp"

namespace mldeg {

template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, T(0)) {}
    SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
        for (const auto& row : rows) {
            if (row.size() != n_) throw StructureError("SquareMatrix: rows must have length " + std::to_string(n_));
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    std::size_t dim() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

private:
    std::size_t n_ = 0;
    std::vector<T> a_;
};

// Build from a row count and an entry function f(i, j).
template <class T, class F>
SquareMatrix<T> make_matrix(std::size_t n, F&& f) {
    SquareMatrix<T> m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = f(i, j);
    return m;
}

template <class T>
SquareMatrix<T> operator*(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
    if (a.dim() != b.dim()) throw StructureError("matrix product: dimension mismatch");
    SquareMatrix<T> c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k)
            for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) += a(i, k) * b(k, j);
    return c;
}

namespace detail {

inline bool is_zero(const BigInt& x) { return x == 0; }
inline bool is_zero(const BigRat& x) { return x == 0; }
inline bool is_zero(const UniPolyQ& x) { return x.is_zero(); }

inline BigInt divide_exact(const BigInt& a, const BigInt& b) { return exact_quotient(a, b, "Bareiss step"); }
inline BigRat divide_exact(const BigRat& a, const BigRat& b) { return a / b; }
inline UniPolyQ divide_exact(const UniPolyQ& a, const UniPolyQ& b) { return exact_div(a, b); }

}  // namespace detail

// Fraction-free (Bareiss) elimination. Every intermediate division is exact,
// so integer matrices never leave Z and polynomial matrices never leave Q[n].
template <class T>
T det(SquareMatrix<T> m) {
    const std::size_t n = m.dim();
    if (n == 0) return T(1);
    int sign = 1;
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (detail::is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && detail::is_zero(m(p, k))) ++p;
            if (p == n) return T(0);
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = detail::divide_exact(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return sign < 0 ? T(-d) : d;
}

template <class T>
bool is_skew(const SquareMatrix<T>& m) {
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (!detail::is_zero(m(i, i))) return false;
        for (std::size_t j = i + 1; j < m.dim(); ++j)
            if (!(m(i, j) == T(-m(j, i)))) return false;
    }
    return true;
}

namespace detail {

template <class T>
void check_pfaffian_shape(const SquareMatrix<T>& m) {
    if (m.dim() % 2 != 0) throw StructureError("pfaffian: odd dimension " + std::to_string(m.dim()));
    if (!is_skew(m)) throw StructureError("pfaffian: matrix is not skew-symmetric");
}

// Pf(A) = a01 * Pf(B), B_kl = a_kl + (a_1k a_0l - a_0k a_1l) / a01, after
// moving a nonzero entry of row 0 into column 1 (each swap flips the sign).
inline BigRat pfaffian_field(SquareMatrix<BigRat> a) {
    const std::size_t n = a.dim();
    BigRat pf = 1;
    for (std::size_t k = 0; k < n; k += 2) {
        std::size_t p = k + 1;
        while (p < n && a(k, p) == 0) ++p;
        if (p == n) return 0;
        if (p != k + 1) {
            a.swap_rows(k + 1, p);
            a.swap_cols(k + 1, p);
            pf = -pf;
        }
        const BigRat piv = a(k, k + 1);
        pf *= piv;
        for (std::size_t i = k + 2; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                a(i, j) += (a(k + 1, i) * a(k, j) - a(k, i) * a(k + 1, j)) / piv;
                a(j, i) = -a(i, j);
            }
    }
    return pf;
}

}  // namespace detail

// Row-expansion Pfaffian, memoized on the set of remaining indices.
// Division-free, so it works over any commutative ring.
template <class T>
T pfaffian_expand(const SquareMatrix<T>& m) {
    detail::check_pfaffian_shape(m);
    const std::size_t n = m.dim();
    if (n > 62) throw StructureError("pfaffian_expand: dimension too large");
    std::unordered_map<std::uint64_t, T> memo;
    auto rec = [&](auto&& self, std::uint64_t mask) -> T {
        if (mask == 0) return T(1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        std::size_t first = static_cast<std::size_t>(__builtin_ctzll(mask));
        std::uint64_t rest = mask & ~(std::uint64_t(1) << first);
        T sum(0);
        int pos = 0;
        for (std::size_t j = first + 1; j < n; ++j) {
            if (!(rest >> j & 1)) continue;
            if (!detail::is_zero(m(first, j))) {
                T term = m(first, j) * self(self, rest & ~(std::uint64_t(1) << j));
                if (pos % 2 == 0)
                    sum += term;
                else
                    sum -= term;
            }
            ++pos;
        }
        memo.emplace(mask, sum);
        return sum;
    };
    return rec(rec, n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1);
}

// Integers go through exact rational elimination; polynomial entries use the
// division-free expansion.
template <class T>
T pfaffian(const SquareMatrix<T>& m) {
    detail::check_pfaffian_shape(m);
    if constexpr (std::is_same_v<T, BigRat>) {
        return detail::pfaffian_field(m);
    } else if constexpr (std::is_same_v<T, BigInt>) {
        auto q = make_matrix<BigRat>(m.dim(), [&](std::size_t i, std::size_t j) { return BigRat(m(i, j)); });
        return require_integer(detail::pfaffian_field(std::move(q)), "pfaffian");
    } else {
        return pfaffian_expand(m);
    }
}

}  // namespace mldeg
