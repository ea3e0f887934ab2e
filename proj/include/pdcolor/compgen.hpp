#pragma once

// Lazy exhaustive enumeration of colored and restricted compositions.
//
// Streams are single-consumer. Each exposes next() returning std::optional and
// is also an input range, so both `while (auto c = s.next())` and range-for work.

#include <compare>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bellcore.hpp"
#include "closedform.hpp"
#include "count.hpp"

namespace pdcolor {

struct Composition {
    std::vector<std::int64_t> parts;

    std::int64_t total() const {
        std::int64_t s = 0;
        for (auto p : parts) s += p;
        return s;
    }

    friend auto operator<=>(const Composition&, const Composition&) = default;
};

struct ColoredPart {
    std::int64_t size = 1;
    Count color = 1;

    friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
    friend std::strong_ordering operator<=>(const ColoredPart& a, const ColoredPart& b) {
        if (auto c = a.size <=> b.size; c != 0) return c;
        if (a.color < b.color) return std::strong_ordering::less;
        if (b.color < a.color) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

/// Parts n_i^{c_i}. With d >= 1 the colors obey 1 <= c_i <= C(n_i + d - 1, d);
/// d == 0 marks a composition whose colors come from an explicit WeightSeq.
struct ColoredComposition {
    std::vector<ColoredPart> parts;
    std::int64_t d = 0;

    std::int64_t total() const {
        std::int64_t s = 0;
        for (const auto& p : parts) s += p.size;
        return s;
    }

    friend bool operator==(const ColoredComposition&, const ColoredComposition&) = default;
    friend std::strong_ordering operator<=>(const ColoredComposition& a, const ColoredComposition& b) {
        if (auto c = a.d <=> b.d; c != 0) return c;
        return std::lexicographical_compare_three_way(a.parts.begin(), a.parts.end(),
                                                      b.parts.begin(), b.parts.end());
    }
};

/// Number of colors available to a part of size `size` in a p(d)-color composition.
inline Count polytopic_colors(std::int64_t size, std::int64_t d) { return binomial(size + d - 1, d); }

/// Throws input_error if `alpha` is not a valid p(d)-color composition for its d.
inline void validate(const ColoredComposition& alpha) {
    if (alpha.d < 1) throw input_error("colored composition needs d >= 1");
    if (alpha.parts.empty()) throw input_error("colored composition has no parts");
    for (std::size_t i = 0; i < alpha.parts.size(); ++i) {
        const auto& p = alpha.parts[i];
        if (p.size < 1) throw input_error("part " + std::to_string(i + 1) + " has size < 1");
        const Count bound = polytopic_colors(p.size, alpha.d);
        if (p.color < 1 || p.color > bound) {
            throw input_error("part " + std::to_string(i + 1) + " color " + p.color.str() +
                              " outside 1.." + bound.str() + " for size " + std::to_string(p.size) +
                              ", d=" + std::to_string(alpha.d));
        }
    }
}

/// CRTP base turning `std::optional<T> next()` into an input range.
template <class Derived, class T>
class Stream {
public:
    class iterator {
    public:
        using value_type = T;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        explicit iterator(Derived* owner) : owner_(owner) { ++*this; }

        const T& operator*() const { return *current_; }
        const T* operator->() const { return &*current_; }
        iterator& operator++() {
            current_ = owner_->next();
            if (!current_) owner_ = nullptr;
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.owner_ == nullptr; }

    private:
        Derived* owner_ = nullptr;
        std::optional<T> current_;
    };

    iterator begin() { return iterator(static_cast<Derived*>(this)); }
    std::default_sentinel_t end() { return {}; }
};

/// Colored compositions of nu with a per-size color bound.
///
/// Order: ascending number of parts; for a fixed part count, size tuples in
/// lexicographically descending order; for fixed sizes, color tuples in
/// ascending lexicographic order. Size tuples with a zero-color part are skipped.
class ColoredStream : public Stream<ColoredStream, ColoredComposition> {
public:
    /// bounds[s - 1] = number of colors for a part of size s, s = 1..nu.
    ColoredStream(std::int64_t nu, std::vector<Count> bounds, std::int64_t d, std::int64_t k_lo,
                  std::int64_t k_hi)
        : nu_(nu), d_(d), bounds_(std::move(bounds)), k_(k_lo), k_hi_(k_hi) {
        if (nu < 1) throw domain_error("nu must be positive");
        if (k_lo < 1 || k_hi > nu || k_lo > k_hi) throw domain_error("part count outside 1..nu");
        if (static_cast<std::int64_t>(bounds_.size()) < nu) throw input_error("color bounds shorter than nu");
    }

    std::optional<ColoredComposition> next() {
        if (done_) return std::nullopt;
        if (!started_) {
            started_ = true;
            if (!first_sizes_from(k_)) return finish();
        } else if (!advance_colors() && !advance_sizes()) {
            return finish();
        }
        ColoredComposition out;
        out.d = d_;
        out.parts.reserve(sizes_.size());
        for (std::size_t i = 0; i < sizes_.size(); ++i) out.parts.push_back({sizes_[i], colors_[i]});
        return out;
    }

private:
    std::optional<ColoredComposition> finish() {
        done_ = true;
        return std::nullopt;
    }

    const Count& bound(std::int64_t size) const { return bounds_[size - 1]; }

    bool colorable() const {
        for (auto s : sizes_) {
            if (bound(s) == 0) return false;
        }
        return true;
    }

    void reset_colors() { colors_.assign(sizes_.size(), Count(1)); }

    bool advance_colors() {
        for (std::size_t i = colors_.size(); i-- > 0;) {
            if (colors_[i] < bound(sizes_[i])) {
                ++colors_[i];
                return true;
            }
            colors_[i] = 1;
        }
        return false;
    }

    // Lexicographically next-smaller size tuple with the same length and sum.
    bool step_sizes() {
        const std::size_t k = sizes_.size();
        for (std::size_t i = k - 1; i-- > 0;) {
            if (sizes_[i] > 1) {
                --sizes_[i];
                std::int64_t tail = 1;
                for (std::size_t j = i + 1; j < k; ++j) tail += sizes_[j];
                const auto slots = static_cast<std::int64_t>(k - i - 1);
                sizes_[i + 1] = tail - (slots - 1);
                for (std::size_t j = i + 2; j < k; ++j) sizes_[j] = 1;
                return true;
            }
        }
        return false;
    }

    // First colorable size tuple with k or more parts, k <= k_hi.
    bool first_sizes_from(std::int64_t k) {
        for (k_ = k; k_ <= k_hi_; ++k_) {
            sizes_.assign(k_, 1);
            sizes_[0] = nu_ - k_ + 1;
            do {
                if (colorable()) {
                    reset_colors();
                    return true;
                }
            } while (step_sizes());
        }
        return false;
    }

    bool advance_sizes() {
        while (step_sizes()) {
            if (colorable()) {
                reset_colors();
                return true;
            }
        }
        return first_sizes_from(k_ + 1);
    }

    std::int64_t nu_;
    std::int64_t d_;
    std::vector<Count> bounds_;
    std::int64_t k_;
    std::int64_t k_hi_;
    std::vector<std::int64_t> sizes_;
    std::vector<Count> colors_;
    bool started_ = false;
    bool done_ = false;
};

/// p(d)-color compositions of nu, all part counts or exactly k parts.
inline ColoredStream enum_colored(std::int64_t nu, std::int64_t d, std::optional<std::int64_t> k = std::nullopt) {
    if (nu < 1 || d < 1) throw domain_error("enum_colored needs nu, d >= 1");
    if (k && (*k < 1 || *k > nu)) throw domain_error("enum_colored needs 1 <= k <= nu");
    std::vector<Count> bounds(nu);
    for (std::int64_t s = 1; s <= nu; ++s) bounds[s - 1] = polytopic_colors(s, d);
    return ColoredStream(nu, std::move(bounds), d, k.value_or(1), k.value_or(nu));
}

/// w-color compositions of n; colors bounded by w_size. Result d is 0.
inline ColoredStream enum_weighted(const WeightSeq& w, std::int64_t n) {
    if (n < 1) throw domain_error("n must be positive");
    if (n > w.size()) {
        throw input_error("n=" + std::to_string(n) + " exceeds weight prefix length " + std::to_string(w.size()));
    }
    std::vector<Count> bounds(w.values().begin(), w.values().begin() + n);
    return ColoredStream(n, std::move(bounds), 0, 1, n);
}

/// Compositions of n whose parts all satisfy the family predicate, in
/// lexicographic order on the part lists.
class FamilyStream : public Stream<FamilyStream, Composition> {
public:
    FamilyStream(FamilyId family, std::int64_t n) : family_(family), n_(n), reachable_(n + 1, false) {
        if (n < 1) throw domain_error("n must be positive");
        // reachable_[r]: r splits into allowed parts (r = 0 is the empty split).
        reachable_[0] = true;
        for (std::int64_t r = 1; r <= n; ++r) {
            for (std::int64_t p = 1; p <= r && !reachable_[r]; ++p) {
                reachable_[r] = family_.allows(p) && reachable_[r - p];
            }
        }
    }

    std::optional<Composition> next() {
        if (done_) return std::nullopt;
        if (!started_) {
            started_ = true;
            if (!reachable_[n_]) return finish();
            fill_smallest(n_);
            return Composition{parts_};
        }
        std::int64_t freed = 0;
        while (!parts_.empty()) {
            const std::int64_t last = parts_.back();
            parts_.pop_back();
            freed += last;
            for (std::int64_t q = last + 1; q <= freed; ++q) {
                if (family_.allows(q) && reachable_[freed - q]) {
                    parts_.push_back(q);
                    fill_smallest(freed - q);
                    return Composition{parts_};
                }
            }
        }
        return finish();
    }

private:
    std::optional<Composition> finish() {
        done_ = true;
        return std::nullopt;
    }

    void fill_smallest(std::int64_t r) {
        while (r > 0) {
            for (std::int64_t q = 1; q <= r; ++q) {
                if (family_.allows(q) && reachable_[r - q]) {
                    parts_.push_back(q);
                    r -= q;
                    break;
                }
            }
        }
    }

    FamilyId family_;
    std::int64_t n_;
    std::vector<bool> reachable_;
    std::vector<std::int64_t> parts_;
    bool started_ = false;
    bool done_ = false;
};

inline FamilyStream enum_family(const FamilyId& f, std::int64_t n) { return FamilyStream(f, n); }

}  // namespace pdcolor
