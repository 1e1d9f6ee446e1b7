#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cosmetic/homology.hpp"
#include "cosmetic/obstructions.hpp"

namespace cosmetic {

/// Malformed input. The message names the offending position: a byte offset
/// for syntax errors, a field path such as "floer.d_values[2]" otherwise.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Knot file (JSON):
///   { "name": "trefoil",
///     "seifert": {"size": 2, "entries": [-1, 1, 0, -1]},   -- or --
///     "alexander": [[0, -1], [1, 1]],
///     "flags": {"hyperbolic": "no", "amphicheiral": "no", "nontrivial": true},
///     "floer": {"tau": 0, "rank_hfred": {"1/1": 4}, "d_values": ["0", "0"],
///               "d_half": ["1/2", "-1/2"]} }
/// Exactly one of seifert / alexander; flags and floer are optional.
KnotRecord parse_knot_file(std::string_view text);
KnotRecord read_knot_file(const std::string& path);
std::string emit_knot_file(const KnotRecord& k);

/// Framed link (JSON):
///   {"components": 2, "linking": [0, 2, 2, 0], "framings": ["3/1", "5/1"]}
/// with linking row-major and "inf" allowed as a framing.
FramedLink parse_framed_link(std::string_view text);
FramedLink read_framed_link(const std::string& path);

/// "[[i, a_i], ...]" with i >= 0.
SymmetricLaurent parse_alexander(std::string_view text);
/// "size:e00,e01,..." or a JSON object {"size": n, "entries": [...]}.
SeifertMatrix parse_seifert(std::string_view text);
std::vector<Integer> parse_integer_list(std::string_view csv);

Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& r);

/// Built-in records: unknot, trefoil, figure-8, twist knots n = +-1, +-2,
/// the torus knots T(2,5) and T(3,4), and a hyperbolic record whose
/// Alexander polynomial has Delta''(1) = 0.
const std::vector<KnotRecord>& catalog();
const KnotRecord& catalog_entry(std::string_view name);

} // namespace cosmetic
