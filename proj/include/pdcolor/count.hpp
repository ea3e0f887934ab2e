#pragma once

// Exact counting primitives shared by every module: the big-integer Count
// type, the error hierarchy, and cached factorials / binomial coefficients.

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pdcolor {

using Count = boost::multiprecision::cpp_int;

/// Argument outside the mathematical domain of an operation (k > n, rank out of range, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed or insufficient input data (short weight prefix, bad word, bad token).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An identity that must hold exactly did not (non-exact division and the like).
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline std::string to_string(const Count& c) { return c.str(); }

/// Exact quotient; throws consistency_error when `den` does not divide `num`.
inline Count exact_div(const Count& num, const Count& den, const char* what) {
    Count q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) {
        throw consistency_error(std::string("non-exact division in ") + what + ": " + num.str() +
                                " / " + den.str());
    }
    return q;
}

namespace detail {

class factorial_table {
public:
    Count get(std::int64_t n) {
        {
            std::shared_lock lock(mutex_);
            if (static_cast<std::size_t>(n) < values_.size()) return values_[n];
        }
        std::unique_lock lock(mutex_);
        while (values_.size() <= static_cast<std::size_t>(n)) {
            values_.push_back(values_.back() * static_cast<std::int64_t>(values_.size()));
        }
        return values_[n];
    }

private:
    std::shared_mutex mutex_;
    std::vector<Count> values_{Count(1)};
};

class binomial_cache {
public:
    Count get(std::int64_t a, std::int64_t b) {
        const auto key = std::make_pair(a, b);
        {
            std::shared_lock lock(mutex_);
            if (auto it = values_.find(key); it != values_.end()) return it->second;
        }
        // Multiplicative evaluation; each prefix product C(a-b+i, i) is an integer.
        Count value = 1;
        for (std::int64_t i = 1; i <= b; ++i) {
            value *= a - b + i;
            value /= i;
        }
        std::unique_lock lock(mutex_);
        return values_.emplace(key, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::pair<std::int64_t, std::int64_t>, Count> values_;
};

inline factorial_table& factorials() {
    static factorial_table table;
    return table;
}

inline binomial_cache& binomials() {
    static binomial_cache cache;
    return cache;
}

}  // namespace detail

inline Count factorial(std::int64_t n) {
    if (n < 0) throw domain_error("factorial of negative number");
    return detail::factorials().get(n);
}

/// C(a, b), zero whenever b < 0, a < 0 or b > a.
inline Count binomial(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    if (b == 0) return 1;
    if (b == 1) return a;
    return detail::binomials().get(a, b);
}

}  // namespace pdcolor
