#pragma once

// Bijections between p(d)-color compositions, binary words and the three
// restricted composition families.
//
// A BinaryWord labels its characters right to left as 0..n-1; text form
// writes position n-1 first. rank_word / unrank_word realise the
// combinatorial number system on m - 1:
//
//     m - 1 = C(c_d, d) + ... + C(c_1, 1),   c_d > ... > c_1 >= 0,
//
// with the ones of the word sitting at positions c_d, ..., c_1.
//
// to_binary concatenates the words of the parts (part n^c becomes the rank-c
// word of length n + d - 1 with d ones) joined by single '1' separators.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "compgen.hpp"
#include "count.hpp"

namespace pdcolor {

class BinaryWord {
public:
    BinaryWord() = default;

    /// All-zero word of the given length.
    explicit BinaryWord(std::size_t length) : bits_(length, 0) {}

    /// Parses "0101..." (highest position first).
    static BinaryWord from_text(std::string_view text) {
        if (text.empty()) throw input_error("empty binary word");
        BinaryWord w(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char ch = text[text.size() - 1 - i];
            if (ch != '0' && ch != '1') {
                throw input_error("binary word contains '" + std::string(1, ch) + "'");
            }
            w.bits_[i] = ch == '1';
        }
        return w;
    }

    std::size_t size() const { return bits_.size(); }
    bool bit(std::size_t position) const { return bits_.at(position) != 0; }
    void set(std::size_t position, bool value = true) { bits_.at(position) = value; }

    std::size_t ones() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)); }

    std::string text() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i]) s[bits_.size() - 1 - i] = '1';
        }
        return s;
    }

    /// Value of the word read as a base-2 number; words longer than 64 bits are rejected.
    std::uint64_t value() const {
        if (bits_.size() > 64) throw domain_error("binary word longer than 64 bits");
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i]) v |= std::uint64_t{1} << i;
        }
        return v;
    }

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
    friend auto operator<=>(const BinaryWord& a, const BinaryWord& b) { return a.text() <=> b.text(); }

private:
    std::vector<std::uint8_t> bits_;  // bits_[p] is the character at position p
};

/// phi_d: the m-th (1-based) word of length n with exactly d ones.
inline BinaryWord unrank_word(const Count& m, std::int64_t n, std::int64_t d) {
    if (d < 1 || n < 1) throw domain_error("unrank_word needs n, d >= 1");
    if (d > n) throw domain_error("unrank_word needs d <= n (d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")");
    const Count total = binomial(n, d);
    if (m < 1 || m > total) {
        throw domain_error("rank " + m.str() + " outside 1.." + total.str());
    }
    BinaryWord w(static_cast<std::size_t>(n));
    Count rest = m - 1;
    std::int64_t upper = n - 1;
    for (std::int64_t j = d; j >= 1; --j) {
        std::int64_t c = upper;
        Count b = binomial(c, j);
        while (b > rest) b = binomial(--c, j);
        w.set(static_cast<std::size_t>(c));
        rest -= b;
        upper = c - 1;
    }
    return w;
}

/// phi_d^{-1}: 1 + sum_j C(p_j, d - j + 1) over the ones read left to right.
inline Count rank_word(const BinaryWord& w, std::int64_t d) {
    if (d < 1) throw domain_error("rank_word needs d >= 1");
    if (static_cast<std::int64_t>(w.ones()) != d) {
        throw input_error("word " + w.text() + " has " + std::to_string(w.ones()) + " ones, expected " +
                          std::to_string(d));
    }
    Count m = 1;
    std::int64_t lower = d;
    for (std::size_t p = w.size(); p-- > 0;) {
        if (w.bit(p)) m += binomial(static_cast<std::int64_t>(p), lower--);
    }
    return m;
}

/// T: colored composition to binary word of length nu + dk - 1 with (d+1)k - 1 ones.
inline BinaryWord to_binary(const ColoredComposition& alpha) {
    validate(alpha);
    std::string text;
    for (std::size_t i = 0; i < alpha.parts.size(); ++i) {
        if (i > 0) text += '1';
        const auto& p = alpha.parts[i];
        text += unrank_word(p.color, p.size + alpha.d - 1, alpha.d).text();
    }
    return BinaryWord::from_text(text);
}

/// T^{-1}: cut strictly before every (d+1)-th one, drop that separator, decode each segment.
inline ColoredComposition from_binary(const BinaryWord& beta, std::int64_t d) {
    if (d < 1) throw domain_error("from_binary needs d >= 1");
    if (beta.size() == 0) throw input_error("empty binary word");
    // Only the last segment can come up short of d ones, so a successful cut
    // implies (d+1)k - 1 ones overall.
    const std::string text = beta.text();
    ColoredComposition alpha;
    alpha.d = d;
    std::string segment;
    std::int64_t seen = 0;
    auto emit = [&] {
        const std::size_t index = alpha.parts.size() + 1;
        if (segment.empty()) throw input_error("segment " + std::to_string(index) + " is empty");
        const auto word = BinaryWord::from_text(segment);
        if (static_cast<std::int64_t>(word.ones()) != d) {
            throw input_error("segment " + std::to_string(index) + " (" + segment + ") of " + beta.text() +
                              " does not carry " + std::to_string(d) + " ones");
        }
        const auto size = static_cast<std::int64_t>(segment.size()) - d + 1;
        if (size < 1) throw input_error("segment " + std::to_string(index) + " gives part size < 1");
        alpha.parts.push_back({size, rank_word(word, d)});
        segment.clear();
        seen = 0;
    };
    for (char ch : text) {
        if (ch == '1' && seen == d) {
            emit();
            continue;
        }
        segment += ch;
        if (ch == '1') ++seen;
    }
    emit();
    return alpha;
}

enum class MapTarget { OnesAndM, OneModM, AtLeastM };

namespace detail {

inline std::vector<std::int64_t> run_lengths(const std::string& text, char separator) {
    std::vector<std::int64_t> runs{0};
    for (char ch : text) {
        if (ch == separator) {
            runs.push_back(0);
        } else {
            ++runs.back();
        }
    }
    return runs;
}

inline std::string join_runs(const std::vector<std::int64_t>& runs, char fill, char separator) {
    std::string text;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (i > 0) text += separator;
        text.append(static_cast<std::size_t>(runs[i]), fill);
    }
    return text;
}

inline void check_inverse_input(const Composition& c, std::int64_t d) {
    if (d < 1) throw domain_error("d must be >= 1");
    if (c.parts.empty()) throw input_error("empty composition");
}

}  // namespace detail

/// Each '1' of T(alpha) becomes a part 1, each '0' a part d+1. Total (d+1)nu - 1.
inline Composition map_ones_m(const ColoredComposition& alpha) {
    const std::string text = to_binary(alpha).text();
    Composition out;
    out.parts.reserve(text.size());
    for (char ch : text) out.parts.push_back(ch == '1' ? 1 : alpha.d + 1);
    return out;
}

inline ColoredComposition unmap_ones_m(const Composition& c, std::int64_t d) {
    detail::check_inverse_input(c, d);
    if ((c.total() + 1) % (d + 1) != 0) {
        throw input_error("total " + std::to_string(c.total()) + " is not (d+1)nu - 1 for d=" + std::to_string(d));
    }
    std::string text;
    for (auto p : c.parts) {
        if (p == 1) {
            text += '1';
        } else if (p == d + 1) {
            text += '0';
        } else {
            throw input_error("part " + std::to_string(p) + " not in {1, " + std::to_string(d + 1) + "}");
        }
    }
    return from_binary(BinaryWord::from_text(text), d);
}

/// The zero-run layout of T(alpha) where each run of j zeros is widened to (d+1)j + 1.
inline std::string widened_zero_runs(const ColoredComposition& alpha) {
    auto runs = detail::run_lengths(to_binary(alpha).text(), '1');
    for (auto& r : runs) r = (alpha.d + 1) * r + 1;
    return detail::join_runs(runs, '0', '1');
}

/// Each of the (d+1)k zero runs of T(alpha) (empty ones included) becomes a
/// part (d+1)j + 1. Total (d+1)nu.
inline Composition map_mod_m(const ColoredComposition& alpha) {
    Composition out;
    for (auto r : detail::run_lengths(to_binary(alpha).text(), '1')) out.parts.push_back((alpha.d + 1) * r + 1);
    return out;
}

inline ColoredComposition unmap_mod_m(const Composition& c, std::int64_t d) {
    detail::check_inverse_input(c, d);
    if (c.total() % (d + 1) != 0) {
        throw input_error("total " + std::to_string(c.total()) + " is not (d+1)nu for d=" + std::to_string(d));
    }
    std::vector<std::int64_t> runs;
    for (auto p : c.parts) {
        if (p < 1 || (p - 1) % (d + 1) != 0) {
            throw input_error("part " + std::to_string(p) + " is not 1 mod " + std::to_string(d + 1));
        }
        runs.push_back((p - 1) / (d + 1));
    }
    return from_binary(BinaryWord::from_text(detail::join_runs(runs, '0', '1')), d);
}

/// The one-run layout of T(alpha) where each run of j ones is widened to j + d + 1.
inline std::string widened_one_runs(const ColoredComposition& alpha) {
    auto runs = detail::run_lengths(to_binary(alpha).text(), '0');
    for (auto& r : runs) r += alpha.d + 1;
    return detail::join_runs(runs, '1', '0');
}

/// Each of the nu - k + 1 one runs of T(alpha) (empty ones included) becomes a
/// part j + d + 1. Total (d+1)nu + d.
inline Composition map_ge_m(const ColoredComposition& alpha) {
    Composition out;
    for (auto r : detail::run_lengths(to_binary(alpha).text(), '0')) out.parts.push_back(r + alpha.d + 1);
    return out;
}

inline ColoredComposition unmap_ge_m(const Composition& c, std::int64_t d) {
    detail::check_inverse_input(c, d);
    if (c.total() < 2 * d + 1 || (c.total() - d) % (d + 1) != 0) {
        throw input_error("total " + std::to_string(c.total()) + " is not (d+1)nu + d for d=" + std::to_string(d));
    }
    std::vector<std::int64_t> runs;
    for (auto p : c.parts) {
        if (p < d + 1) throw input_error("part " + std::to_string(p) + " is below " + std::to_string(d + 1));
        runs.push_back(p - d - 1);
    }
    return from_binary(BinaryWord::from_text(detail::join_runs(runs, '1', '0')), d);
}

inline Composition map_to(MapTarget target, const ColoredComposition& alpha) {
    switch (target) {
        case MapTarget::OnesAndM: return map_ones_m(alpha);
        case MapTarget::OneModM: return map_mod_m(alpha);
        case MapTarget::AtLeastM: return map_ge_m(alpha);
    }
    throw domain_error("unknown map target");
}

inline ColoredComposition map_from(MapTarget target, const Composition& c, std::int64_t d) {
    switch (target) {
        case MapTarget::OnesAndM: return unmap_ones_m(c, d);
        case MapTarget::OneModM: return unmap_mod_m(c, d);
        case MapTarget::AtLeastM: return unmap_ge_m(c, d);
    }
    throw domain_error("unknown map target");
}

/// The family and integer that `target` maps the p(d)-color compositions of nu onto.
inline std::pair<FamilyId, std::int64_t> map_codomain(MapTarget target, std::int64_t nu, std::int64_t d) {
    switch (target) {
        case MapTarget::OnesAndM: return {FamilyId::ones_and(d + 1), (d + 1) * nu - 1};
        case MapTarget::OneModM: return {FamilyId::one_mod(d + 1), (d + 1) * nu};
        case MapTarget::AtLeastM: return {FamilyId::at_least(d + 1), (d + 1) * nu + d};
    }
    throw domain_error("unknown map target");
}

inline MapTarget target_of(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::OnesAndM: return MapTarget::OnesAndM;
        case FamilyKind::OneModM: return MapTarget::OneModM;
        case FamilyKind::AtLeastM: return MapTarget::AtLeastM;
    }
    throw domain_error("unknown family kind");
}

// Text forms ----------------------------------------------------------------

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> out;
    for (;;) {
        const auto pos = s.find(',');
        out.push_back(trim(s.substr(0, pos)));
        if (pos == std::string_view::npos) break;
        s.remove_prefix(pos + 1);
    }
    return out;
}

inline std::int64_t parse_int(std::string_view token, std::string_view what) {
    std::int64_t v = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (token.empty() || ec != std::errc{} || ptr != end) {
        throw input_error("bad " + std::string(what) + " '" + std::string(token) + "'");
    }
    return v;
}

inline Count parse_count(std::string_view token, std::string_view what) {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw input_error("bad " + std::string(what) + " '" + std::string(token) + "'");
    }
    return Count(std::string(token));
}

}  // namespace detail

/// "1,3,1" (whitespace tolerated).
inline Composition parse_composition(std::string_view text) {
    Composition c;
    for (auto token : detail::split_commas(text)) {
        const auto v = detail::parse_int(token, "part");
        if (v < 1) throw input_error("part " + std::string(token) + " is not positive");
        c.parts.push_back(v);
    }
    return c;
}

inline std::string format_composition(const Composition& c) {
    std::string s;
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(c.parts[i]);
    }
    return s;
}

/// "3^2,1^1" (whitespace tolerated). Colors are not range-checked here.
inline ColoredComposition parse_colored(std::string_view text, std::int64_t d) {
    ColoredComposition alpha;
    alpha.d = d;
    for (auto token : detail::split_commas(text)) {
        const auto caret = token.find('^');
        if (caret == std::string_view::npos) throw input_error("part '" + std::string(token) + "' lacks '^color'");
        const auto size = detail::parse_int(detail::trim(token.substr(0, caret)), "part size");
        if (size < 1) throw input_error("part size in '" + std::string(token) + "' is not positive");
        alpha.parts.push_back({size, detail::parse_count(detail::trim(token.substr(caret + 1)), "color")});
    }
    return alpha;
}

inline std::string format_colored(const ColoredComposition& alpha) {
    std::string s;
    for (std::size_t i = 0; i < alpha.parts.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(alpha.parts[i].size) + '^' + alpha.parts[i].color.str();
    }
    return s;
}

}  // namespace pdcolor
