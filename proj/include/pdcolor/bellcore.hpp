#pragma once

// Weighted (w-color) composition counts.
//
// A w-color composition of n lets a part of size j carry one of w_j colors.
// Three independent routes to the count are provided:
//   - partial Bell polynomials: c_{n,k}(w) = k!/n! * B_{n,k}(1!w_1, 2!w_2, ...)
//   - the invert transform:     W_n = w_n + sum_{i<n} w_i W_{n-i}
//   - a direct sum over the k-part partitions of n (multinomial weights).

#include <cstdint>
#include <algorithm>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "count.hpp"

namespace pdcolor {

/// Finite prefix (w_1, ..., w_N) of a color-multiplicity sequence.
class WeightSeq {
public:
    explicit WeightSeq(std::vector<Count> weights) : weights_(std::move(weights)) {
        if (weights_.empty()) throw input_error("weight sequence must have at least one entry");
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (weights_[i] < 0) {
                throw input_error("weight w_" + std::to_string(i + 1) + " is negative");
            }
        }
    }

    WeightSeq(std::initializer_list<std::int64_t> weights)
        : WeightSeq(std::vector<Count>(weights.begin(), weights.end())) {}

    /// w_j = 1 for j = 1..n.
    static WeightSeq ones(std::int64_t n) { return WeightSeq(std::vector<Count>(checked(n), 1)); }

    /// w_j = 1 where allowed(j), 0 otherwise, for j = 1..n.
    static WeightSeq indicator(std::int64_t n, const std::function<bool(std::int64_t)>& allowed) {
        std::vector<Count> w(checked(n));
        for (std::int64_t j = 1; j <= n; ++j) w[j - 1] = allowed(j) ? 1 : 0;
        return WeightSeq(std::move(w));
    }

    /// Simplicial d-polytopic colors p_j(d) = C(j+d-1, d).
    static WeightSeq polytopic(std::int64_t d, std::int64_t n) {
        if (d < 1) throw domain_error("polytopic weights need d >= 1");
        std::vector<Count> w(checked(n));
        for (std::int64_t j = 1; j <= n; ++j) w[j - 1] = binomial(j + d - 1, d);
        return WeightSeq(std::move(w));
    }

    std::int64_t size() const { return static_cast<std::int64_t>(weights_.size()); }

    /// w_j, 1-based; indices past the prefix are an error, never zero.
    const Count& at(std::int64_t j) const {
        if (j < 1 || j > size()) {
            throw input_error("weight index " + std::to_string(j) + " outside prefix 1.." +
                              std::to_string(size()));
        }
        return weights_[j - 1];
    }

    std::span<const Count> values() const { return weights_; }

private:
    static std::size_t checked(std::int64_t n) {
        if (n < 1) throw input_error("weight sequence must have at least one entry");
        return static_cast<std::size_t>(n);
    }

    std::vector<Count> weights_;
};

/// B_{n,k}(x_1, x_2, ...) with x[0] = x_1.
///
/// Uses B_{n,k} = (1/k) sum_j C(n,j) x_j B_{n-j,k-1}, B_{0,0} = 1. The memo table
/// is local to the call, and every division by k is checked to be exact.
inline Count partial_bell(std::int64_t n, std::int64_t k, std::span<const Count> x) {
    if (k < 1 || k > n) {
        throw domain_error("partial_bell needs 1 <= k <= n (n=" + std::to_string(n) +
                           ", k=" + std::to_string(k) + ")");
    }
    const std::int64_t jmax = n - k + 1;
    if (static_cast<std::int64_t>(x.size()) < jmax) {
        throw input_error("partial_bell(" + std::to_string(n) + "," + std::to_string(k) +
                          ") needs " + std::to_string(jmax) + " arguments, got " +
                          std::to_string(x.size()));
    }

    // table[kk][m] = B_{m,kk}; only m <= n - (k - kk) is ever consulted.
    std::vector<std::vector<Count>> table(k + 1);
    table[0].assign(1, Count(1));
    for (std::int64_t kk = 1; kk <= k; ++kk) {
        const std::int64_t mmax = n - (k - kk);
        auto& row = table[kk];
        const auto& prev = table[kk - 1];
        row.assign(mmax + 1, Count(0));
        for (std::int64_t m = kk; m <= mmax; ++m) {
            Count sum = 0;
            for (std::int64_t j = 1; j <= m - kk + 1; ++j) {
                const std::int64_t rest = m - j;
                if (rest >= static_cast<std::int64_t>(prev.size())) continue;
                const Count& b = prev[rest];
                if (b == 0 || x[j - 1] == 0) continue;
                sum += binomial(m, j) * x[j - 1] * b;
            }
            row[m] = exact_div(sum, kk, "partial Bell recurrence");
        }
    }
    return table[k][n];
}

inline Count partial_bell(std::int64_t n, std::int64_t k, std::initializer_list<Count> x) {
    return partial_bell(n, k, std::span<const Count>(x.begin(), x.size()));
}

namespace detail {

inline void check_nk(const WeightSeq& w, std::int64_t n, std::int64_t k) {
    if (n < 1) throw domain_error("n must be positive");
    if (k < 1 || k > n) {
        throw domain_error("need 1 <= k <= n (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                           ")");
    }
    if (n > w.size()) {
        throw input_error("n=" + std::to_string(n) + " exceeds weight prefix length " +
                          std::to_string(w.size()));
    }
}

}  // namespace detail

/// Number of w-color compositions of n with exactly k parts, via partial Bell polynomials.
inline Count weighted_count_k(const WeightSeq& w, std::int64_t n, std::int64_t k) {
    detail::check_nk(w, n, k);
    std::vector<Count> x(n - k + 1);
    for (std::int64_t j = 1; j <= n - k + 1; ++j) x[j - 1] = factorial(j) * w.at(j);
    return exact_div(factorial(k) * partial_bell(n, k, x), factorial(n), "k!/n! scaling");
}

/// Number of w-color compositions of n.
inline Count weighted_count(const WeightSeq& w, std::int64_t n) {
    if (n < 1) throw domain_error("n must be positive");
    if (n > w.size()) {
        throw input_error("n=" + std::to_string(n) + " exceeds weight prefix length " +
                          std::to_string(w.size()));
    }
    // One pass: x_j covers every k at once.
    std::vector<Count> x(n);
    for (std::int64_t j = 1; j <= n; ++j) x[j - 1] = factorial(j) * w.at(j);
    Count total = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        total += exact_div(factorial(k) * partial_bell(n, k, std::span<const Count>(x).first(n - k + 1)),
                           factorial(n), "k!/n! scaling");
    }
    return total;
}

/// (W_1, ..., W_{n_max}) from 1 + W(t) = 1 / (1 - w(t)).
inline std::vector<Count> invert_transform(const WeightSeq& w, std::int64_t n_max) {
    if (n_max < 1) throw domain_error("n_max must be positive");
    if (n_max > w.size()) {
        throw input_error("n_max=" + std::to_string(n_max) + " exceeds weight prefix length " +
                          std::to_string(w.size()));
    }
    std::vector<Count> out(n_max);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        Count value = w.at(n);
        for (std::int64_t i = 1; i < n; ++i) value += w.at(i) * out[n - i - 1];
        out[n - 1] = std::move(value);
    }
    return out;
}

/// c_{n,k}(w) as a sum over k-part partitions of n of k!/(k_1!...k_n!) w_1^{k_1}...w_n^{k_n}.
/// Exponential in n; kept as an oracle for weighted_count_k.
inline Count hoggatt_lind_count(const WeightSeq& w, std::int64_t n, std::int64_t k) {
    detail::check_nk(w, n, k);
    Count total = 0;
    std::vector<std::int64_t> mult(n + 1, 0);  // mult[j] = number of parts equal to j

    // Parts chosen in non-increasing order, largest first.
    std::function<void(std::int64_t, std::int64_t, std::int64_t)> walk =
        [&](std::int64_t remaining, std::int64_t parts_left, std::int64_t max_part) {
            if (parts_left == 0) {
                if (remaining != 0) return;
                Count denom = 1;
                Count weight = 1;
                for (std::int64_t j = 1; j <= n; ++j) {
                    if (mult[j] == 0) continue;
                    denom *= factorial(mult[j]);
                    weight *= boost::multiprecision::pow(w.at(j), static_cast<unsigned>(mult[j]));
                }
                total += exact_div(factorial(k), denom, "multinomial coefficient") * weight;
                return;
            }
            const std::int64_t hi = std::min(max_part, remaining - (parts_left - 1));
            for (std::int64_t part = hi; part >= 1; --part) {
                if (part * parts_left < remaining) break;
                ++mult[part];
                walk(remaining - part, parts_left - 1, part);
                --mult[part];
            }
        };
    walk(n, k, n);
    return total;
}

}  // namespace pdcolor
