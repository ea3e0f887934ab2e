// Walks through the nu = 3, d = 2 example: counts, the binary words, and the
// images in the three restricted families.

#include <iostream>

#include "pdcolor/pdcolor.hpp"

int main() {
    using namespace pdcolor;
    constexpr std::int64_t nu = 3;
    constexpr std::int64_t d = 2;

    std::cout << "P_3(2) = " << count_pd(nu, d) << " = |C_{1,3}(8)| = " << count_family(FamilyId::ones_and(3), 8)
              << " = |C_{=1(3)}(9)| = " << count_family(FamilyId::one_mod(3), 9)
              << " = |C_{>=3}(11)| = " << count_family(FamilyId::at_least(3), 11) << "\n\n";

    for (const auto& alpha : enum_colored(nu, d)) {
        std::cout << format_colored(alpha) << "\t" << to_binary(alpha).text() << "\t"
                  << format_composition(map_ones_m(alpha)) << "\t" << format_composition(map_mod_m(alpha)) << "\t"
                  << format_composition(map_ge_m(alpha)) << '\n';
    }
}
