// pdcolor: count, list, rank/unrank, map and verify p(d)-color compositions.
//
// Exit codes: 0 success, 1 domain error or failed check, 2 usage error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pdcolor/pdcolor.hpp"

namespace {

using namespace pdcolor;

enum class Format { plain, json, csv };

const std::map<std::string, Format> kFormats{{"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};
const std::map<std::string, FamilyKind> kKinds{
    {"ones", FamilyKind::OnesAndM}, {"mod", FamilyKind::OneModM}, {"ge", FamilyKind::AtLeastM}};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

nlohmann::json color_json(const Count& c) {
    if (c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
    return c.str();
}

WeightSeq load_weights(const std::string& spec) {
    std::vector<Count> values;
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) {
        std::ifstream in(spec);
        std::string line;
        std::int64_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto token = detail::trim(line);
            if (token.empty()) continue;
            try {
                values.push_back(detail::parse_count(token, "weight"));
            } catch (const input_error& e) {
                throw input_error(spec + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }
    } else {
        for (auto token : detail::split_commas(spec)) values.push_back(detail::parse_count(token, "weight"));
    }
    return WeightSeq(std::move(values));
}

// count ------------------------------------------------------------------------

struct CountArgs {
    std::int64_t nu = 0, d = 0, m = 0, n = 0;
    std::optional<std::int64_t> k;
    FamilyKind kind = FamilyKind::OnesAndM;
    std::string weights;
    bool by_parts = false;
    Format format = Format::plain;
};

void print_count(const std::string& what, const nlohmann::json& params, const Count& total,
                 const std::vector<std::pair<std::int64_t, Count>>& parts, bool by_parts, Format format) {
    switch (format) {
        case Format::plain:
            if (by_parts) {
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    std::cout << (i ? " " : "") << "k=" << parts[i].first << ':' << parts[i].second;
                }
                std::cout << '\n';
            } else {
                std::cout << total << '\n';
            }
            break;
        case Format::json: {
            nlohmann::json j{{"count", what}, {"params", params}, {"total", total.str()}};
            if (by_parts) {
                j["by_parts"] = nlohmann::json::array();
                for (const auto& [k, c] : parts) j["by_parts"].push_back({{"k", k}, {"count", c.str()}});
            }
            std::cout << j.dump() << '\n';
            break;
        }
        case Format::csv:
            if (by_parts) {
                std::cout << "k,count\n";
                for (const auto& [k, c] : parts) std::cout << k << ',' << c << '\n';
            } else {
                std::cout << "count\n" << total << '\n';
            }
            break;
    }
}

int run_count_pd(const CountArgs& a) {
    std::vector<std::pair<std::int64_t, Count>> parts;
    Count total;
    if (a.k) {
        total = count_pd_k(a.nu, a.d, *a.k);
        parts.emplace_back(*a.k, total);
    } else {
        for (std::int64_t k = 1; k <= a.nu; ++k) parts.emplace_back(k, count_pd_k(a.nu, a.d, k));
        total = count_pd(a.nu, a.d);
    }
    nlohmann::json params{{"nu", a.nu}, {"d", a.d}};
    if (a.k) params["k"] = *a.k;
    print_count("pd", params, total, parts, a.by_parts, a.format);
    return 0;
}

int run_count_family(const CountArgs& a) {
    const FamilyId f(a.kind, a.m);
    const Count total = count_family(f, a.n);
    print_count("family", {{"kind", std::string(kind_name(a.kind))}, {"m", a.m}, {"n", a.n}}, total, {}, false,
                a.format);
    return 0;
}

int run_count_weighted(const CountArgs& a) {
    const auto w = load_weights(a.weights);
    std::vector<std::pair<std::int64_t, Count>> parts;
    Count total;
    if (a.k) {
        total = weighted_count_k(w, a.n, *a.k);
        parts.emplace_back(*a.k, total);
    } else {
        for (std::int64_t k = 1; k <= a.n; ++k) parts.emplace_back(k, weighted_count_k(w, a.n, k));
        total = weighted_count(w, a.n);
    }
    nlohmann::json params{{"n", a.n}, {"prefix", w.size()}};
    if (a.k) params["k"] = *a.k;
    print_count("weighted", params, total, parts, a.by_parts, a.format);
    return 0;
}

// list -------------------------------------------------------------------------

struct ListArgs {
    std::int64_t nu = 0, d = 0, m = 0, n = 0;
    std::optional<std::int64_t> k;
    FamilyKind kind = FamilyKind::OnesAndM;
    std::optional<FamilyKind> map_to;
    std::string weights;
    bool with_word = false;
    Format format = Format::plain;
};

int run_list_colored(const ListArgs& a) {
    const bool word = a.with_word || a.map_to.has_value();
    if (a.format == Format::csv) {
        std::cout << "parts,d" << (word ? ",word" : "") << (a.map_to ? ",image" : "") << '\n';
    }
    for (const auto& alpha : enum_colored(a.nu, a.d, a.k)) {
        const std::string source = format_colored(alpha);
        std::string beta;
        std::optional<Composition> image;
        if (word) beta = to_binary(alpha).text();
        if (a.map_to) image = map_to(target_of(*a.map_to), alpha);
        switch (a.format) {
            case Format::plain:
                std::cout << source;
                if (word) std::cout << " | " << beta;
                if (image) std::cout << " | " << format_composition(*image);
                std::cout << '\n';
                break;
            case Format::json: {
                nlohmann::json j;
                j["parts"] = nlohmann::json::array();
                for (const auto& p : alpha.parts) j["parts"].push_back({{"size", p.size}, {"color", color_json(p.color)}});
                j["d"] = alpha.d;
                if (word) j["word"] = beta;
                if (image) j["image"] = image->parts;
                std::cout << j.dump() << '\n';
                break;
            }
            case Format::csv:
                std::cout << csv_field(source) << ',' << alpha.d;
                if (word) std::cout << ',' << beta;
                if (image) std::cout << ',' << csv_field(format_composition(*image));
                std::cout << '\n';
                break;
        }
    }
    return 0;
}

int run_list_family(const ListArgs& a) {
    if (a.format == Format::csv) std::cout << "parts\n";
    for (const auto& c : enum_family(FamilyId(a.kind, a.m), a.n)) {
        switch (a.format) {
            case Format::plain: std::cout << format_composition(c) << '\n'; break;
            case Format::json: std::cout << nlohmann::json{{"parts", c.parts}}.dump() << '\n'; break;
            case Format::csv: std::cout << csv_field(format_composition(c)) << '\n'; break;
        }
    }
    return 0;
}

int run_list_weighted(const ListArgs& a) {
    const auto w = load_weights(a.weights);
    if (a.format == Format::csv) std::cout << "parts\n";
    for (const auto& alpha : enum_weighted(w, a.n)) {
        switch (a.format) {
            case Format::plain: std::cout << format_colored(alpha) << '\n'; break;
            case Format::json: {
                nlohmann::json parts = nlohmann::json::array();
                for (const auto& p : alpha.parts) parts.push_back({{"size", p.size}, {"color", color_json(p.color)}});
                std::cout << nlohmann::json{{"parts", parts}}.dump() << '\n';
                break;
            }
            case Format::csv: std::cout << csv_field(format_colored(alpha)) << '\n'; break;
        }
    }
    return 0;
}

// verify -----------------------------------------------------------------------

int run_verify(std::int64_t nu_max, std::int64_t d_max, Format format) {
    CheckReport report = golden_tables();
    report.append(check_counts(nu_max, d_max));
    report.append(check_bijections(nu_max, d_max));
    switch (format) {
        case Format::plain: std::cout << to_text(report); break;
        case Format::json: std::cout << to_json(report).dump(2) << '\n'; break;
        case Format::csv:
            std::cout << "name,range,passed,cases,counterexample\n";
            for (const auto& c : report.checks) {
                std::cout << c.name << ',' << csv_field(c.range) << ',' << (c.passed ? "true" : "false") << ','
                          << c.cases << ','
                          << csv_field(c.passed ? "" : detail::tuple_text(c.parameters, *c.witness) + ": " + c.failure)
                          << '\n';
            }
            break;
    }
    return report.passed() ? 0 : 1;
}

void add_format(CLI::App* cmd, Format& format) {
    cmd->add_option("--format", format, "Output format: plain, json (one object per row) or csv")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Count, list, rank and map p(d)-color compositions of integers"};
    app.require_subcommand(1);
    int status = 0;

    // count
    CountArgs ca;
    auto* count = app.add_subcommand("count", "Exact counts")->require_subcommand(1);
    auto* count_pd_cmd = count->add_subcommand("pd", "p(d)-color compositions of nu");
    count_pd_cmd->add_option("--nu,--n", ca.nu, "Integer being composed")->required()->check(CLI::PositiveNumber);
    count_pd_cmd->add_option("--d", ca.d, "Color dimension d")->required()->check(CLI::PositiveNumber);
    count_pd_cmd->add_option("--k", ca.k, "Only compositions with exactly k parts")->check(CLI::PositiveNumber);
    count_pd_cmd->add_flag("--by-parts", ca.by_parts, "Break the count down by number of parts");
    add_format(count_pd_cmd, ca.format);
    count_pd_cmd->callback([&] { status = run_count_pd(ca); });

    auto* count_family_cmd = count->add_subcommand("family", "Restricted compositions of n");
    count_family_cmd->add_option("--kind", ca.kind, "ones: parts in {1,m}; mod: parts = 1 mod m; ge: parts >= m")
        ->required()
        ->transform(CLI::CheckedTransformer(kKinds));
    count_family_cmd->add_option("--m,--d", ca.m, "Family parameter m >= 2")->required();
    count_family_cmd->add_option("--n,--nu", ca.n, "Integer being composed")->required()->check(CLI::PositiveNumber);
    add_format(count_family_cmd, ca.format);
    count_family_cmd->callback([&] { status = run_count_family(ca); });

    auto* count_weighted_cmd = count->add_subcommand("weighted", "w-color compositions of n");
    count_weighted_cmd->add_option("--weights", ca.weights, "Comma list w_1,w_2,... or file with one w_n per line")
        ->required();
    count_weighted_cmd->add_option("--n,--nu", ca.n, "Integer being composed")->required()->check(CLI::PositiveNumber);
    count_weighted_cmd->add_option("--k", ca.k, "Only compositions with exactly k parts")->check(CLI::PositiveNumber);
    count_weighted_cmd->add_flag("--by-parts", ca.by_parts, "Break the count down by number of parts");
    add_format(count_weighted_cmd, ca.format);
    count_weighted_cmd->callback([&] { status = run_count_weighted(ca); });

    // list
    ListArgs la;
    auto* list = app.add_subcommand("list", "Enumerate in canonical order")->require_subcommand(1);
    auto* list_colored = list->add_subcommand("colored", "p(d)-color compositions of nu");
    list_colored->add_option("--nu,--n", la.nu, "Integer being composed")->required()->check(CLI::PositiveNumber);
    list_colored->add_option("--d", la.d, "Color dimension d")->required()->check(CLI::PositiveNumber);
    list_colored->add_option("--k", la.k, "Only compositions with exactly k parts")->check(CLI::PositiveNumber);
    list_colored->add_flag("--with-word", la.with_word, "Show the binary word of each composition");
    list_colored->add_option("--map-to", la.map_to, "Also show the image under the ones, mod or ge map")
        ->transform(CLI::CheckedTransformer(kKinds));
    add_format(list_colored, la.format);
    list_colored->callback([&] { status = run_list_colored(la); });

    auto* list_family = list->add_subcommand("family", "Restricted compositions of n, lexicographic");
    list_family->add_option("--kind", la.kind, "ones, mod or ge")->required()->transform(CLI::CheckedTransformer(kKinds));
    list_family->add_option("--m,--d", la.m, "Family parameter m >= 2")->required();
    list_family->add_option("--n,--nu", la.n, "Integer being composed")->required()->check(CLI::PositiveNumber);
    add_format(list_family, la.format);
    list_family->callback([&] { status = run_list_family(la); });

    auto* list_weighted = list->add_subcommand("weighted", "w-color compositions of n");
    list_weighted->add_option("--weights", la.weights, "Comma list or file")->required();
    list_weighted->add_option("--n,--nu", la.n, "Integer being composed")->required()->check(CLI::PositiveNumber);
    add_format(list_weighted, la.format);
    list_weighted->callback([&] { status = run_list_weighted(la); });

    // rank / unrank
    std::string word_text, rank_text;
    std::int64_t codec_n = 0, codec_d = 0;
    auto* rank = app.add_subcommand("rank", "Rank of a binary word among words with d ones");
    rank->add_option("--word", word_text, "Binary word, highest position first")->required();
    rank->add_option("--d", codec_d, "Number of ones")->required()->check(CLI::PositiveNumber);
    rank->callback([&] { std::cout << rank_word(BinaryWord::from_text(word_text), codec_d) << '\n'; });

    auto* unrank = app.add_subcommand("unrank", "Binary word of length n with d ones at rank m");
    unrank->add_option("--m", rank_text, "1-based rank")->required();
    unrank->add_option("--n", codec_n, "Word length")->required()->check(CLI::PositiveNumber);
    unrank->add_option("--d", codec_d, "Number of ones")->required()->check(CLI::PositiveNumber);
    unrank->callback([&] {
        std::cout << unrank_word(detail::parse_count(detail::trim(rank_text), "rank"), codec_n, codec_d).text() << '\n';
    });

    // map
    FamilyKind map_kind = FamilyKind::OnesAndM;
    std::string map_input;
    bool inverse = false;
    auto* map = app.add_subcommand("map", "Map a colored composition into a restricted family, or back");
    map->add_option("--to", map_kind, "ones, mod or ge")->required()->transform(CLI::CheckedTransformer(kKinds));
    map->add_option("--d", codec_d, "Color dimension d")->required()->check(CLI::PositiveNumber);
    map->add_option("--input", map_input, "Colored composition like 3^2,1^1 (or a composition with --inverse)")
        ->required();
    map->add_flag("--inverse", inverse, "Map a family composition back to its colored composition");
    map->callback([&] {
        const auto target = target_of(map_kind);
        if (inverse) {
            std::cout << format_colored(map_from(target, parse_composition(map_input), codec_d)) << '\n';
        } else {
            std::cout << format_composition(map_to(target, parse_colored(map_input, codec_d))) << '\n';
        }
    });

    // verify
    std::int64_t nu_max = 8, d_max = 4;
    Format verify_format = Format::plain;
    auto* verify = app.add_subcommand("verify", "Run the golden tables and all cross-checks");
    verify->add_option("--nu-max", nu_max, "Largest nu in the grid")->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_option("--d-max", d_max, "Largest d in the grid")->capture_default_str()->check(CLI::PositiveNumber);
    add_format(verify, verify_format);
    verify->callback([&] { status = run_verify(nu_max, d_max, verify_format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return status;
}
