#include "cosmetic/citations.hpp"

#include <algorithm>
#include <array>

namespace cosmetic {

namespace {

constexpr std::array kCitations{
    Citation{cite::boyer_lines, "Boyer-Lines: if Delta''(1) != 0 no two distinct slopes give orientation-preserving homeomorphic surgeries"},
    Citation{cite::niwu_opposite, "Ni-Wu: truly cosmetic slopes on a nontrivial knot in S^3 satisfy r = -s"},
    Citation{cite::niwu_congruence, "Ni-Wu: a truly cosmetic slope p/q satisfies q^2 = -1 mod p"},
    Citation{cite::niwu_tau, "Ni-Wu: a knot with truly cosmetic surgeries has tau = 0"},
    Citation{cite::lackenby_meyerhoff, "Lackenby-Meyerhoff: exceptional slopes of a one-cusped hyperbolic manifold are at distance <= 8"},
    Citation{cite::linking_form, "linking form: meridian self-linking -q/p is preserved up to unit squares, q = q' u^2 mod p"},
    Citation{cite::distance_table, "distance bounds between exceptional filling types (Culler-Gordon-Luecke-Shalen, Boyer-Zhang, Gordon-Luecke, Lackenby-Meyerhoff)"},
    Citation{cite::lspace_gap_chain, "Seifert-fibred cosmetic surgery forces an L-space knot, whose gap-form Alexander polynomial has Delta''(1) != 0"},
    Citation{cite::toroidal_denominator, "Gordon-Luecke: a toroidal slope p/q on a hyperbolic knot in S^3 has |q| <= 2"},
    Citation{cite::half_integral, "Gordon-Luecke: non-integral toroidal surgery occurs only on Eudave-Munoz knots, at a unique half-integral slope"},
    Citation{cite::gordon_wu, "Gordon-Wu: hyperbolic knots in S^3 with toroidal slopes at distance >= 4 are L1(n), L2(n), L3(n) or the figure-8"},
    Citation{cite::h1_comparison, "|H1| of the two distance-4 toroidal fillings differ: |2-9n| != |2+9n| for n != 0, and 0 != 4"},
    Citation{cite::ichihara_masai, "Ichihara-Masai: exceptional surgeries on hyperbolic alternating knots"},
    Citation{cite::wu_montesinos, "Wu: toroidal surgeries on length-3 Montesinos knots"},
    Citation{cite::wu_arborescent, "Wu: exceptional surgeries on type II arborescent knots"},
    Citation{cite::figure8_exceptional, "exceptional slopes of the figure-8 exterior: inf, 0, +-1, +-2, +-3, +-4"},
    Citation{cite::d_monotone, "Ozsvath-Szabo: d_1/2(Y_0) - 1/2 <= d(Y(1/(n+1))) <= d(Y(1/n)) <= d(Y)"},
    Citation{cite::d_half, "Ozsvath-Szabo: d_1/2(S^3_K(0)) - 1/2 = d(S^3_K(+1))"},
    Citation{cite::torsion_bound, "Ozsvath-Szabo torsion bound with Rustamov and the Casson surgery formula: |t0| + 2 sum |ti| <= rank HF_red(S^3_K(+1))"},
    Citation{cite::exceptional_narrowing, "an exceptional truly cosmetic pair on a hyperbolic knot in S^3 is {+1,-1}, toroidal and not Seifert fibred, combining the removals of the narrowing stages"},
    Citation{cite::scope, "the obstructions concern nontrivial knots; the unknot is outside their scope"},
};

} // namespace

std::span<const Citation> citations() { return kCitations; }

bool is_known_citation(std::string_view key) {
    return std::any_of(kCitations.begin(), kCitations.end(), [&](const Citation& c) { return c.key == key; });
}

} // namespace cosmetic
