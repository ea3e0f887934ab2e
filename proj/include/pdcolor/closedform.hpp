#pragma once

// Closed-form counts for p(d)-color compositions and the three restricted
// composition families they are equinumerous with.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "count.hpp"

namespace pdcolor {

enum class FamilyKind {
    OnesAndM,  // parts in {1, m}
    OneModM,   // every part = 1 (mod m)
    AtLeastM,  // every part >= m
};

/// A restricted composition family, tagged with its modulus / threshold m >= 2.
class FamilyId {
public:
    FamilyId(FamilyKind kind, std::int64_t m) : kind_(kind), m_(m) {
        if (m < 2) throw domain_error("family parameter m must be >= 2, got " + std::to_string(m));
    }

    static FamilyId ones_and(std::int64_t m) { return {FamilyKind::OnesAndM, m}; }
    static FamilyId one_mod(std::int64_t m) { return {FamilyKind::OneModM, m}; }
    static FamilyId at_least(std::int64_t m) { return {FamilyKind::AtLeastM, m}; }

    FamilyKind kind() const { return kind_; }
    std::int64_t m() const { return m_; }

    bool allows(std::int64_t part) const {
        switch (kind_) {
            case FamilyKind::OnesAndM: return part == 1 || part == m_;
            case FamilyKind::OneModM: return part >= 1 && part % m_ == 1;
            case FamilyKind::AtLeastM: return part >= m_;
        }
        return false;
    }

    friend bool operator==(const FamilyId&, const FamilyId&) = default;

private:
    FamilyKind kind_;
    std::int64_t m_;
};

/// Short CLI names: ones, mod, ge.
inline std::string_view kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::OnesAndM: return "ones";
        case FamilyKind::OneModM: return "mod";
        case FamilyKind::AtLeastM: return "ge";
    }
    return "?";
}

inline std::optional<FamilyKind> parse_kind(std::string_view name) {
    if (name == "ones") return FamilyKind::OnesAndM;
    if (name == "mod") return FamilyKind::OneModM;
    if (name == "ge") return FamilyKind::AtLeastM;
    return std::nullopt;
}

/// p(d)-color compositions of nu with exactly k parts: C(nu + dk - 1, nu - k).
inline Count count_pd_k(std::int64_t nu, std::int64_t d, std::int64_t k) {
    if (nu < 1 || d < 1 || k < 1) throw domain_error("count_pd_k needs nu, d, k >= 1");
    if (k > nu) return 0;
    return binomial(nu + d * k - 1, nu - k);
}

/// P_nu(d), all p(d)-color compositions of nu.
inline Count count_pd(std::int64_t nu, std::int64_t d) {
    if (nu < 1 || d < 1) throw domain_error("count_pd needs nu, d >= 1");
    Count total = 0;
    for (std::int64_t k = 1; k <= nu; ++k) total += count_pd_k(nu, d, k);
    return total;
}

/// Size of a restricted family. Valid for every n >= 1: the binomial terms
/// vanish where the sums would otherwise overreach.
inline Count count_family(const FamilyId& f, std::int64_t n) {
    if (n < 1) throw domain_error("count_family needs n >= 1");
    const std::int64_t m = f.m();
    Count total = 0;
    switch (f.kind()) {
        case FamilyKind::OnesAndM:
            for (std::int64_t j = 0; j <= n / m; ++j) total += binomial(n - (m - 1) * j, j);
            break;
        case FamilyKind::OneModM:
            for (std::int64_t j = 0; j <= n / m; ++j) total += binomial(n - (m - 1) * j - 1, j);
            break;
        case FamilyKind::AtLeastM:
            for (std::int64_t k = 1; k <= (n - 1) / (m - 1); ++k) {
                total += binomial(n - (m - 1) * k - 1, k - 1);
            }
            break;
    }
    return total;
}

}  // namespace pdcolor
