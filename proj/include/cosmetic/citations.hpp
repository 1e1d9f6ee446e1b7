#pragma once

#include <span>
#include <string_view>

namespace cosmetic {

/// A result from the literature that a table row or a pipeline verdict
/// rests on. Keys are stable and appear verbatim in reports and dumps.
struct Citation {
    std::string_view key;
    std::string_view statement;
};

namespace cite {
inline constexpr std::string_view boyer_lines = "boyer-lines";
inline constexpr std::string_view niwu_opposite = "ni-wu:r=-s";
inline constexpr std::string_view niwu_congruence = "ni-wu:q^2=-1";
inline constexpr std::string_view niwu_tau = "ni-wu:tau=0";
inline constexpr std::string_view lackenby_meyerhoff = "lackenby-meyerhoff";
inline constexpr std::string_view linking_form = "linking-form";
inline constexpr std::string_view distance_table = "distance-table";
inline constexpr std::string_view lspace_gap_chain = "lspace-gap-chain";
inline constexpr std::string_view toroidal_denominator = "gordon-luecke:|q|<=2";
inline constexpr std::string_view half_integral = "gordon-luecke:half-integral";
inline constexpr std::string_view gordon_wu = "gordon-wu:distance>=4";
inline constexpr std::string_view h1_comparison = "h1-order-comparison";
inline constexpr std::string_view ichihara_masai = "ichihara-masai:alternating";
inline constexpr std::string_view wu_montesinos = "wu:montesinos-length3";
inline constexpr std::string_view wu_arborescent = "wu:arborescent-type2";
inline constexpr std::string_view figure8_exceptional = "figure8-exceptional-set";
inline constexpr std::string_view d_monotone = "ozsvath-szabo:d(1/n)-chain";
inline constexpr std::string_view d_half = "ozsvath-szabo:d_1/2(0)-1/2=d(+1)";
inline constexpr std::string_view torsion_bound = "ozsvath-szabo:torsion-bound";
inline constexpr std::string_view exceptional_narrowing = "exceptional-narrowing";
inline constexpr std::string_view scope = "scope:nontrivial-knot";
} // namespace cite

/// Every citation key used anywhere in the library, in a fixed order.
std::span<const Citation> citations();

/// Whether key appears in citations().
bool is_known_citation(std::string_view key);

} // namespace cosmetic
