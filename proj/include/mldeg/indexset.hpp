#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace mldeg {

// Strictly increasing list of nonnegative integers.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<int> xs) : IndexSet(std::vector<int>(xs)) {}
    explicit IndexSet(std::vector<int> xs) : e_(std::move(xs)) {
        for (std::size_t k = 0; k < e_.size(); ++k) {
            if (e_[k] < 0) throw DomainError("IndexSet: negative element in " + str());
            if (k > 0 && e_[k] <= e_[k - 1]) throw DomainError("IndexSet: not strictly increasing: " + str());
        }
    }

    // {0, 1, ..., n-1}
    static IndexSet range(int n) {
        std::vector<int> v(std::max(n, 0));
        std::iota(v.begin(), v.end(), 0);
        return IndexSet(std::move(v));
    }

    // Parses "{0,2,5}" (whitespace allowed, braces optional, "{}" is empty).
    static IndexSet parse(std::string_view s) {
        std::string t;
        for (char c : s)
            if (c != ' ' && c != '\t') t += c;
        if (!t.empty() && t.front() == '{') {
            if (t.back() != '}') throw DomainError("IndexSet: unbalanced braces in '" + std::string(s) + "'");
            t = t.substr(1, t.size() - 2);
        }
        std::vector<int> v;
        std::size_t pos = 0;
        while (pos < t.size()) {
            std::size_t comma = t.find(',', pos);
            std::string tok = t.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6)
                throw DomainError("IndexSet: bad element '" + tok + "' in '" + std::string(s) + "'");
            v.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
            if (pos == t.size()) throw DomainError("IndexSet: trailing comma in '" + std::string(s) + "'");
        }
        return IndexSet(std::move(v));
    }

    std::size_t size() const { return e_.size(); }
    bool empty() const { return e_.empty(); }
    int operator[](std::size_t k) const { return e_[k]; }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }
    const std::vector<int>& elements() const { return e_; }
    int front() const { return e_.front(); }
    int back() const { return e_.back(); }
    long sum() const { return std::accumulate(e_.begin(), e_.end(), 0L); }
    bool contains(int x) const { return std::binary_search(e_.begin(), e_.end(), x); }

    // Every element below n, i.e. I is a subset of [n].
    bool within(long n) const { return e_.empty() || e_.back() < n; }

    IndexSet with(int x) const {
        if (contains(x)) throw DomainError("IndexSet::with: " + std::to_string(x) + " already in " + str());
        std::vector<int> v = e_;
        v.insert(std::upper_bound(v.begin(), v.end(), x), x);
        return IndexSet(std::move(v));
    }
    IndexSet without(int x) const {
        std::vector<int> v;
        for (int y : e_)
            if (y != x) v.push_back(y);
        return IndexSet(std::move(v));
    }

    std::string str() const {
        std::string s = "{";
        for (std::size_t k = 0; k < e_.size(); ++k) s += (k ? "," : "") + std::to_string(e_[k]);
        return s + "}";
    }

    friend auto operator<=>(const IndexSet&, const IndexSet&) = default;
    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<int> e_;
};

// Sorted list that may repeat entries. Coefficients of a genuine multiset are
// zero by convention, so callers ask as_set() and treat nullopt as 0.
class IndexMultiset {
public:
    explicit IndexMultiset(std::vector<int> xs) : e_(std::move(xs)) { std::sort(e_.begin(), e_.end()); }
    std::optional<IndexSet> as_set() const {
        for (std::size_t k = 1; k < e_.size(); ++k)
            if (e_[k] == e_[k - 1]) return std::nullopt;
        if (!e_.empty() && e_.front() < 0) return std::nullopt;
        return IndexSet(e_);
    }
    const std::vector<int>& elements() const { return e_; }

private:
    std::vector<int> e_;
};

// Weakly decreasing parts; trailing zeros count towards length().
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> xs) : Partition(std::vector<int>(xs)) {}
    explicit Partition(std::vector<int> xs) : parts(std::move(xs)) {
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (parts[k] < 0) throw DomainError("Partition: negative part");
            if (k > 0 && parts[k] > parts[k - 1]) throw DomainError("Partition: parts must be weakly decreasing");
        }
    }

    std::size_t length() const { return parts.size(); }
    int operator[](std::size_t k) const { return k < parts.size() ? parts[k] : 0; }
    long weight() const { return std::accumulate(parts.begin(), parts.end(), 0L); }
    std::size_t nonzero() const {
        return static_cast<std::size_t>(std::count_if(parts.begin(), parts.end(), [](int x) { return x > 0; }));
    }

    Partition conjugate() const {
        std::vector<int> c(parts.empty() ? 0 : parts.front(), 0);
        for (int p : parts)
            for (int j = 0; j < p; ++j) ++c[j];
        return Partition(std::move(c));
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "," : "") + std::to_string(parts[k]);
        return s + ")";
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;
};

// lambda(I) = (i_r - (r-1), ..., i_2 - 1, i_1)
inline Partition lambda_of(const IndexSet& I) {
    const std::size_t r = I.size();
    std::vector<int> p(r);
    for (std::size_t k = 0; k < r; ++k) p[k] = I[r - 1 - k] - static_cast<int>(r - 1 - k);
    return Partition(std::move(p));
}

// I(lambda) = {lambda_r, lambda_{r-1} + 1, ..., lambda_1 + r - 1}
inline IndexSet index_of(const Partition& lam) {
    const std::size_t r = lam.length();
    std::vector<int> v(r);
    for (std::size_t k = 0; k < r; ++k) v[k] = lam.parts[r - 1 - k] + static_cast<int>(k);
    return IndexSet(std::move(v));
}

inline IndexSet complement(const IndexSet& I, long n) {
    if (!I.within(n)) throw DomainError("complement: " + I.str() + " is not a subset of [" + std::to_string(n) + "]");
    std::vector<int> v;
    for (int k = 0; k < n; ++k)
        if (!I.contains(k)) v.push_back(k);
    return IndexSet(std::move(v));
}

// Componentwise I <= J.
inline bool leq(const IndexSet& I, const IndexSet& J) {
    if (I.size() != J.size()) throw DomainError("leq: sizes differ (" + I.str() + " vs " + J.str() + ")");
    for (std::size_t k = 0; k < I.size(); ++k)
        if (I[k] > J[k]) return false;
    return true;
}

// Calls f(I) for every I with #I = size, sum I = total and (bound >= 0) I a
// subset of [bound], in lexicographic order.
template <class F>
void for_each_indexset(int size, long total, long bound, F&& f) {
    if (size < 0 || total < 0) return;
    std::vector<int> cur(size);
    auto rec = [&](auto&& self, int k, int lo, long rem) -> void {
        if (k == size) {
            if (rem == 0) f(IndexSet(cur));
            return;
        }
        const long left = size - k;  // elements still to place, including this one
        for (int i = lo;; ++i) {
            // smallest completion: i, i+1, ..., i+left-1
            long minsum = left * i + left * (left - 1) / 2;
            if (minsum > rem) break;
            if (bound >= 0 && i + left - 1 >= bound) break;
            if (bound >= 0) {
                // largest completion: i, then the top left-1 values below bound
                long hi = i;
                for (long t = 1; t < left; ++t) hi += bound - t;
                if (hi < rem) continue;
            }
            cur[k] = i;
            self(self, k + 1, i + 1, rem - i);
        }
    };
    rec(rec, 0, 0, total);
}

inline std::vector<IndexSet> enumerate_indexsets(int size, long total, std::optional<long> bound = std::nullopt) {
    std::vector<IndexSet> out;
    for_each_indexset(size, total, bound.value_or(-1), [&](const IndexSet& I) { out.push_back(I); });
    return out;
}

// Every set of the given size with sum at most maxsum, by increasing sum.
template <class F>
void for_each_indexset_upto(int size, long maxsum, long bound, F&& f) {
    for (long t = 0; t <= maxsum; ++t) for_each_indexset(size, t, bound, f);
}

// All sets of the given size inside [n] (lexicographic order).
inline std::vector<IndexSet> subsets_of_range(int n, int size) {
    std::vector<IndexSet> out;
    if (size < 0 || size > n) return out;
    std::vector<int> cur(size);
    for (int k = 0; k < size; ++k) cur[k] = k;
    while (true) {
        out.emplace_back(cur);
        int k = size - 1;
        while (k >= 0 && cur[k] == n - size + k) --k;
        if (k < 0) break;
        ++cur[k];
        for (int j = k + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

// All J with #J = #I and J <= I componentwise (lexicographic order).
inline std::vector<IndexSet> sets_below(const IndexSet& I) {
    std::vector<IndexSet> out;
    const std::size_t r = I.size();
    std::vector<int> cur(r);
    auto rec = [&](auto&& self, std::size_t k, int lo) -> void {
        if (k == r) {
            out.emplace_back(cur);
            return;
        }
        for (int j = lo; j <= I[k]; ++j) {
            cur[k] = j;
            self(self, k + 1, j + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace mldeg
