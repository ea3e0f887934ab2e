// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Every criterion is exact; the runtime bound of each is part of the criterion.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pdcolor/pdcolor.hpp"

using namespace pdcolor;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<Outcome()> run;
};

Outcome from_report(const CheckReport& report) {
    Outcome out;
    for (const auto& c : report.checks) {
        out.require(c.cases > 0, c.name + " ran no cases");
        if (!c.passed) out.require(false, c.name + " at " + detail::tuple_text(c.parameters, *c.witness) + ": " + c.failure);
    }
    return out;
}

// 1. The three nu = 3, d = 2 correspondence tables, all columns.
Outcome golden() { return from_report(golden_tables()); }

// 2. P_nu(d) = |C_{1,d+1}((d+1)nu-1)| = |C_{=1(d+1)}((d+1)nu)| = |C_{>=d+1}((d+1)nu+d)|.
Outcome four_way() {
    const auto report = check_counts(12, 5);
    Outcome out;
    const auto* c = report.find("four_way_identity");
    out.require(c && c->passed && c->cases == 12 * 5, "four-way identity failed or incomplete");
    for (const auto& other : report.checks) {
        if (!other.passed) out.require(false, other.name + ": " + other.failure);
    }
    return out;
}

// 3. k!/nu! B_{nu,k}(1!p_1(d), 2!p_2(d), ...) = C(nu+dk-1, nu-k), Bell side by recurrence.
Outcome bell_identity() {
    Outcome out;
    for (std::int64_t d = 1; d <= 4; ++d) {
        std::vector<Count> x;
        for (std::int64_t j = 1; j <= 30; ++j) x.push_back(factorial(j) * binomial(j + d - 1, d));
        for (std::int64_t nu = 1; nu <= 30; ++nu) {
            for (std::int64_t k = 1; k <= nu; ++k) {
                const Count bell = exact_div(factorial(k) * partial_bell(nu, k, x), factorial(nu), "acceptance");
                out.require(bell == binomial(nu + d * k - 1, nu - k),
                            "nu=" + std::to_string(nu) + " d=" + std::to_string(d) + " k=" + std::to_string(k));
            }
        }
    }
    return out;
}

// 4. Closed-form family sizes vs enumeration (n <= 20, m <= 6); count_pd vs |enum_colored| (nu <= 9, d <= 4).
Outcome oracle_equivalence() {
    Outcome out = from_report(check_family_counts(20, 6));
    for (std::int64_t nu = 1; nu <= 9; ++nu) {
        for (std::int64_t d = 1; d <= 4; ++d) {
            std::uint64_t listed = 0;
            for (auto s = enum_colored(nu, d); s.next();) ++listed;
            out.require(count_pd(nu, d) == listed, "nu=" + std::to_string(nu) + " d=" + std::to_string(d));
        }
    }
    return out;
}

// 5. phi_d over n <= 16, d <= 5; T and the three maps over nu <= 8, d <= 4.
Outcome bijections() {
    auto report = check_rank_codec(16, 5);
    report.append(check_bijections(8, 4));
    Outcome out = from_report(report);
    out.require(report.find("phi_bijective")->range.find("n<=16") != std::string::npos, "phi grid too small");
    return out;
}

// 6. invert transform, Bell count and partition sum agree for n <= 12 over the weight suite.
Outcome theorem_cross_check() {
    Outcome out;
    const std::vector<std::pair<std::string, WeightSeq>> suite{
        {"ones", WeightSeq::ones(12)},
        {"one_two", WeightSeq::indicator(12, [](std::int64_t j) { return j <= 2; })},
        {"p1", WeightSeq::polytopic(1, 12)},
        {"p2", WeightSeq::polytopic(2, 12)},
        {"p3", WeightSeq::polytopic(3, 12)}};
    for (const auto& [name, w] : suite) {
        const auto inverted = invert_transform(w, 12);
        for (std::int64_t n = 1; n <= 12; ++n) {
            Count partition_sum = 0;
            for (std::int64_t k = 1; k <= n; ++k) {
                const auto bell = weighted_count_k(w, n, k);
                const auto direct = hoggatt_lind_count(w, n, k);
                out.require(bell == direct, name + " n=" + std::to_string(n) + " k=" + std::to_string(k));
                partition_sum += direct;
            }
            const auto bell_total = weighted_count(w, n);
            out.require(bell_total == inverted[n - 1] && bell_total == partition_sum, name + " n=" + std::to_string(n));
        }
    }
    return out;
}

// 7. count_pd(nu, 1) = F_{2nu}, Fibonacci by its own recurrence.
Outcome fibonacci() {
    Outcome out;
    for (std::int64_t nu = 1; nu <= 20; ++nu) {
        out.require(count_pd(nu, 1) == oracle::fibonacci(2 * nu), "nu=" + std::to_string(nu));
    }
    return out;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "golden tables nu=3 d=2 (13 rows x 3 maps, words included)", 1.0, golden},
        {2, "four-way count identity, nu<=12, d<=5", 10.0, four_way},
        {3, "Bell recurrence vs closed form, nu<=30, d<=4", 30.0, bell_identity},
        {4, "closed forms vs enumeration (families n<=20 m<=6; colored nu<=9 d<=4)", 60.0, oracle_equivalence},
        {5, "bijections: phi n<=16 d<=5; T and three maps nu<=8 d<=4", 60.0, bijections},
        {6, "invert transform = Bell = partition sum, n<=12, five weight sequences", 60.0, theorem_cross_check},
        {7, "count_pd(nu,1) = F_{2nu}, nu<=20", 60.0, fibonacci},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.require(seconds < c.budget_seconds, "runtime " + std::to_string(seconds) + " s over budget");
        if (!out.ok) ++failures;
        std::cout << (out.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  (" << seconds
                  << " s, budget " << c.budget_seconds << " s)";
        if (!out.ok) std::cout << "  -- " << out.detail;
        std::cout << std::endl;
    }
    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
