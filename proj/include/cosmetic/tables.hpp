#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cosmetic/slope.hpp"

namespace cosmetic {

// ---------------------------------------------------------------------------
// Distance bounds between exceptional filling types

enum class SurgeryType { Reducible, Cyclic, Finite, Toroidal, SmallSeifert };

std::string_view to_string(SurgeryType t);
/// Accepts "reducible", "cyclic", "finite", "toroidal", "small-seifert".
SurgeryType parse_surgery_type(std::string_view name);

/// Maximum distance between exceptional slopes of the two types on a
/// one-cusped hyperbolic manifold. Symmetric.
Integer distance_bound(SurgeryType a, SurgeryType b);

// ---------------------------------------------------------------------------
// Toroidal slopes at distance >= 4

enum class ToroidalFamily { L1, L2, L3, Figure8 };

std::string_view to_string(ToroidalFamily f);
ToroidalFamily parse_toroidal_family(std::string_view name);

/// Whether n is admissible for the family. L1 needs n != 0, 1 and L2 needs
/// n != 0, +-1 (other values give non-hyperbolic or repeated knots); L3
/// accepts every n; the figure-8 takes no parameter.
bool family_parameter_ok(ToroidalFamily f, std::optional<Integer> n);

/// The two toroidal slopes (r1, r2) of the family member. Throws
/// std::invalid_argument when n is inadmissible.
SlopePair gordon_wu_slopes(ToroidalFamily f, std::optional<Integer> n = std::nullopt);

/// For the distance-4 families: |2 - 9n| != |2 + 9n| and 0 != 4, i.e. the two
/// toroidal fillings have different |H1|. Rejects n = 0.
bool h1_discriminates_distance4(Integer n);

/// Integer solutions of |a + b n| = |c + d n|. Returns nullopt when every n
/// is a solution.
std::optional<std::vector<Integer>> affine_abs_equal_solutions(Integer a, Integer b, Integer c, Integer d);

/// |q| <= 2 for a toroidal slope on a hyperbolic knot in S^3.
bool toroidal_denominator_ok(const Slope& s);

/// Both slopes half-integral: always false, since a half-integral toroidal
/// slope is unique. Throws std::invalid_argument otherwise.
bool half_integral_unique_rule(const SlopePair& pair);

/// True iff the set does not contain both +1 and -1.
bool no_pm1_pair(const std::set<Slope>& slopes);

/// inf, 0, +-1, +-2, +-3, +-4.
const std::set<Slope>& figure8_exceptional_slopes();

// ---------------------------------------------------------------------------
// Alternating knots

struct TwistKnot {
    Integer n;  ///< K[2n, +-2], n != 0
};
struct TwoBridgeKnot {
    Integer a, b;  ///< K[a, b], |a|, |b| > 2, ab even
};
struct PretzelKnot {
    Integer a, b, c;  ///< P(a, b, c), none in {0, +-1}, at most one even
};
using AlternatingKnot = std::variant<TwistKnot, TwoBridgeKnot, PretzelKnot>;

struct AlternatingSlopes {
    std::set<Slope> slopes;
    std::string verdict;
};

/// Exceptional slopes of the hyperbolic alternating knot. Twist knots are
/// settled by their Alexander polynomial and report no slopes. Throws
/// std::invalid_argument on a parameter constraint violation.
AlternatingSlopes alternating_exceptional_slopes(const AlternatingKnot& knot);

// ---------------------------------------------------------------------------
// Length-3 Montesinos and type II arborescent knots

/// Parameters a table row expects.
enum class MontesinosParams { None, N, Q1Q2Q3 };

struct MontesinosEntry {
    std::string id;          ///< "M1".."M13" for single-slope rows, "D1".."D5" for two-slope rows
    std::string knot;        ///< e.g. "K(-1/2,1/3,1/(6+1/n))"
    std::string constraint;  ///< human-readable
    std::string formula;     ///< slope formula
    MontesinosParams params;
    bool three_toroidal = false;  ///< knot has three toroidal slopes, not all listed
};

const std::vector<MontesinosEntry>& montesinos_entries();

struct MontesinosSlopes {
    std::set<Slope> slopes;
    /// Set when the knot has toroidal slopes the table does not list.
    bool incomplete = false;
    std::string note;
};

/// Toroidal slopes of a table row. params is empty, {n}, or {q1, q2, q3}
/// depending on the row. Throws std::invalid_argument on an unknown id or a
/// constraint violation.
MontesinosSlopes montesinos_toroidal_slopes(std::string_view id, const std::vector<Integer>& params = {});

/// Every toroidal slope listed for a parameter-free knot such as
/// "K(-1/3,1/3,1/7)", merged across all rows naming it. Whitespace is ignored.
MontesinosSlopes montesinos_knot_slopes(std::string_view knot);

struct ArborescentEntry {
    std::string knot;
    Slope slope;
};

/// The three type II arborescent knots with an exceptional slope, one each.
const std::vector<ArborescentEntry>& arborescent_typeII_slopes();

/// Knot id owning the slope in the type II list, if any.
std::optional<std::string> arborescent_typeII_lookup(const Slope& s);

// ---------------------------------------------------------------------------
// Dump

struct TableRow {
    std::string id;
    std::string citation;
    std::string constraint;
    std::string formula;
};

inline constexpr std::string_view kTablesVersion = "cosmetic-tables v1";

/// One row per encoded list item, in a fixed order.
std::vector<TableRow> table_rows();

/// Tab-separated dump: a version line, a header, then one line per row.
std::string dump_tables();

} // namespace cosmetic
