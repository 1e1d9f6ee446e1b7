#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cosmetic/alexander.hpp"
#include "cosmetic/homology.hpp"
#include "cosmetic/slope.hpp"

namespace cosmetic {

enum class Tristate { No, Yes, Unknown };

std::string_view to_string(Tristate t);
/// Accepts yes/no/unknown and true/false.
Tristate parse_tristate(std::string_view s);

/// Heegaard Floer data supplied by the user. Nothing here is computed.
struct FloerData {
    std::optional<Integer> tau;
    /// rank HF_red of S^3_K(slope), keyed by slope.
    std::map<Slope, Integer> rank_hfred;
    /// d(S^3_K(1/n)) for n = 1, 2, ..., in order.
    std::vector<Rational> d_values;
    /// (d_{+1/2}, d_{-1/2}) of S^3_K(0).
    std::optional<std::pair<Rational, Rational>> d_half;

    friend bool operator==(const FloerData&, const FloerData&) = default;
};

struct KnotFlags {
    Tristate hyperbolic = Tristate::Unknown;
    Tristate amphicheiral = Tristate::Unknown;
    bool nontrivial = true;

    friend bool operator==(const KnotFlags&, const KnotFlags&) = default;
};

/// A knot given by a Seifert matrix or directly by its Alexander polynomial,
/// with hypothesis flags and optional Floer data.
class KnotRecord {
public:
    using Source = std::variant<SeifertMatrix, SymmetricLaurent>;

    KnotRecord(std::string name, Source source, KnotFlags flags = {}, std::optional<FloerData> floer = std::nullopt);

    const std::string& name() const { return name_; }
    const Source& source() const { return source_; }
    const KnotFlags& flags() const { return flags_; }
    const std::optional<FloerData>& floer() const { return floer_; }
    /// Alexander polynomial, derived at construction for Seifert input.
    const SymmetricLaurent& polynomial() const { return polynomial_; }

    friend bool operator==(const KnotRecord&, const KnotRecord&) = default;

private:
    std::string name_;
    Source source_;
    KnotFlags flags_;
    std::optional<FloerData> floer_;
    SymmetricLaurent polynomial_;
};

enum class Status { Excludes, Passes, NotApplicable, DataMissing };

std::string_view to_string(Status s);

struct Verdict {
    std::string criterion;
    Status status;
    std::string citation;
    std::string detail;
};

struct NarrowingStep {
    int stage;
    std::string description;
    std::string citation;
    std::vector<SlopePair> removed;
    std::vector<SlopePair> remaining;
};

struct NarrowingResult {
    std::vector<SlopePair> survivors;
    std::string tag;
    /// Stage 0 is the linking-form filtered candidate table; stages 1-4 remove pairs.
    std::vector<NarrowingStep> steps;
};

/// Narrows the truly cosmetic exceptional slope pairs of a hyperbolic knot
/// in S^3, starting from all r = -s pairs within distance 8. Every removal
/// is computed from the slope, homology and table modules.
NarrowingResult narrow_exceptional_pairs();

enum class Overall { Excluded, Unresolved };

std::string_view to_string(Overall o);

struct ObstructionReport {
    std::string knot;
    std::string polynomial;
    std::vector<std::string> assumptions;
    std::vector<Verdict> verdicts;
    /// Meaningful only when constrained is set.
    std::vector<SlopePair> surviving_pairs;
    std::string surviving_tag;
    /// False when the exceptional narrowing did not apply, so any r = -s pair
    /// allowed by the other criteria may remain.
    bool constrained = false;
    Overall overall = Overall::Unresolved;
};

/// Excludes iff Delta''(1) != 0.
Verdict boyer_lines(const SymmetricLaurent& p);

/// Excludes iff tau is present and nonzero.
Verdict niwu_tau(const std::optional<FloerData>& f);

/// If p is in L-space gap form with k >= 1, Delta''(1) from the gap formula is
/// nonzero, so a Seifert-fibred cosmetic surgery is impossible and the knot
/// is excluded outright.
Verdict lspace_gap(const SymmetricLaurent& p);

/// The d-invariant chain, the torsion bound against rank HF_red(S^3_K(+1)),
/// and the half-grading relation between 0- and +1-surgery, in that order.
std::vector<Verdict> floer_consistency(const SymmetricLaurent& p, const FloerData& f);

/// Runs every obstruction in a fixed order and aggregates the verdicts.
ObstructionReport analyze(const KnotRecord& k);

std::string format_text(const ObstructionReport& r);
/// criterion TAB status TAB citation TAB detail, one verdict per line,
/// followed by "surviving" and "overall" lines in the same shape.
std::string format_machine(const ObstructionReport& r);

std::string pairs_str(const std::vector<SlopePair>& pairs);

} // namespace cosmetic
