// Exploratory printer, not a test. The fixed point of zeta^2 projects onto
// the Thue-Morse sequence, and Thue-Morse also induces a 3-block morphism
// on six letters; this program prints both constructions side by side so
// their relationship can be eyeballed. Nothing here asserts.

#include <cstdio>
#include <string>

#include "stdform/canonical.hpp"
#include "stdform/core.hpp"
#include "stdform/generate.hpp"
#include "stdform/transform.hpp"

using namespace stdform;

namespace {

std::string csv(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

void show(const char* label, const Morphism& m) {
    std::printf("%-22s %s\n", label, format_morphism(m).c_str());
    std::printf("%-22s %s\n", "  standard form:", standardize_morphism(m).key.c_str());
}

}  // namespace

int main() {
    const Morphism zeta = parse_morphism("1->23,2->14,3->21,4->56,5->63,6->54");
    const Morphism zeta2 = power(zeta, 2);
    show("zeta", zeta);
    show("zeta^2", zeta2);

    MorphicSequence x2(zeta2, 1);
    std::printf("%-22s %s\n", "fix(zeta^2) [24]:", csv(x2.prefix(24)).c_str());
    const LetterMap parity({0, 1, 0, 1, 0, 1});
    std::string proj;
    for (int v : project(x2.prefix(24), parity)) {
        if (!proj.empty()) proj += ',';
        proj += std::to_string(v);
    }
    std::printf("%-22s %s\n", "  mod-2 projection:", proj.c_str());

    const Morphism tm = parse_morphism("1->12,2->21");
    const auto tm3 = block_morphism(tm, 1, 3);
    show("3-block of 1->12,2->21", tm3.morphism);
    std::printf("coding:\n%s", format_block_coding(tm3.coding).c_str());

    MorphicSequence y(tm3.morphism, 1);
    std::printf("%-22s %s\n", "fix(3-block) [24]:", csv(y.prefix(24)).c_str());
    std::printf("%-22s %s\n", "  decoded [24]:",
                csv(decode_blocks(y.prefix(24), tm3.coding)).c_str());
    std::printf("%-22s %s\n", "fix(1->12,2->21) [24]:",
                csv(MorphicSequence(tm, 1).prefix(24)).c_str());

    std::printf("\nsame standard form: %s\n",
                equivalent_morphisms(zeta2, tm3.morphism) ? "yes" : "no");
    return 0;
}
