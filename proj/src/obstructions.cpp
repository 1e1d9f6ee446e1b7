#include "cosmetic/obstructions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cosmetic/citations.hpp"
#include "cosmetic/tables.hpp"

namespace cosmetic {

namespace {

std::string rational_str(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string gaps_str(const GapSequence& g) {
    std::string out = "(";
    const char* sep = "";
    for (Integer n : g.gaps()) {
        out += sep + std::to_string(n);
        sep = ",";
    }
    return out + ")";
}

Verdict make(std::string_view criterion, Status status, std::string_view citation, std::string detail) {
    return {std::string(criterion), status, std::string(citation), std::move(detail)};
}

template <typename Pred>
void partition_step(NarrowingStep& step, const std::vector<SlopePair>& input, Pred keep) {
    for (const auto& pair : input) (keep(pair) ? step.remaining : step.removed).push_back(pair);
}

// Both H1 routes for the distance-4 toroidal pairs: the symbolic solution set
// of |2 - 9n| = |2 + 9n|, and a scan that computes each |H1| as the Watson
// order of the filling of a knot exterior.
void verify_distance4_discrimination() {
    const auto roots = affine_abs_equal_solutions(2, -9, 2, 9);
    if (!roots || *roots != std::vector<Integer>{0}) {
        throw std::logic_error("distance-4 discrimination: |2-9n| = |2+9n| has solutions other than n = 0");
    }
    const Slope longitude = Slope::integral(0);
    for (Integer n = -100; n <= 100; ++n) {
        if (n == 0) continue;
        const Integer h_first = watson_order(1, longitude, Slope::integral(2 - 9 * n));
        const Integer h_second = watson_order(1, longitude, Slope::integral(-2 - 9 * n));
        if (h_first == h_second || !h1_discriminates_distance4(n)) {
            throw std::logic_error("distance-4 discrimination fails at n = " + std::to_string(n));
        }
    }
    const auto [l1_first, l1_second] = gordon_wu_slopes(ToroidalFamily::L1, 2);
    if (watson_order(1, longitude, l1_first) == watson_order(1, longitude, l1_second)) {
        throw std::logic_error("distance-4 discrimination fails for L1");
    }
}

} // namespace

std::string_view to_string(Tristate t) {
    switch (t) {
    case Tristate::No: return "no";
    case Tristate::Yes: return "yes";
    case Tristate::Unknown: return "unknown";
    }
    return "?";
}

Tristate parse_tristate(std::string_view s) {
    if (s == "yes" || s == "true") return Tristate::Yes;
    if (s == "no" || s == "false") return Tristate::No;
    if (s == "unknown") return Tristate::Unknown;
    throw std::invalid_argument("expected yes, no or unknown, got '" + std::string(s) + "'");
}

std::string_view to_string(Status s) {
    switch (s) {
    case Status::Excludes: return "EXCLUDES";
    case Status::Passes: return "PASSES";
    case Status::NotApplicable: return "NOT-APPLICABLE";
    case Status::DataMissing: return "DATA-MISSING";
    }
    return "?";
}

std::string_view to_string(Overall o) { return o == Overall::Excluded ? "EXCLUDED" : "UNRESOLVED"; }

KnotRecord::KnotRecord(std::string name, Source source, KnotFlags flags, std::optional<FloerData> floer)
    : name_(std::move(name)),
      source_(std::move(source)),
      flags_(flags),
      floer_(std::move(floer)),
      polynomial_(std::visit(
          [](const auto& s) -> SymmetricLaurent {
              if constexpr (std::is_same_v<std::decay_t<decltype(s)>, SeifertMatrix>) return from_seifert_matrix(s);
              else return s;
          },
          source_)) {
    if (!flags_.nontrivial && !polynomial_.is_trivial()) {
        throw std::invalid_argument("knot '" + name_ + "' is flagged trivial but has Alexander polynomial " +
                                    polynomial_.str());
    }
}

std::string pairs_str(const std::vector<SlopePair>& pairs) {
    std::string out = "{";
    const char* sep = "";
    for (const auto& [r, s] : pairs) {
        out += sep;
        out += "(" + r.str() + "," + s.str() + ")";
        sep = ", ";
    }
    return out + "}";
}

NarrowingResult narrow_exceptional_pairs() {
    NarrowingResult result;

    NarrowingStep table{0, "r = -s with distance 2pq <= 8, filtered by q = q' u^2 mod p", std::string(cite::linking_form),
                        {}, {}};
    // s = -p/q is written p/q' with q' = -q.
    partition_step(table, enumerate_candidate_pairs(8), [](const SlopePair& pr) {
        return linking_form_compatible(pr.first.num(), pr.first.den(), -pr.first.den());
    });
    result.steps.push_back(table);

    // Reducible fillings are at distance <= 1 from each other, but every
    // candidate pair is at distance >= 2; Seifert-fibred fillings are ruled
    // out by the L-space gap chain. What remains is toroidal.
    Integer min_distance = 8;
    for (const auto& [r, s] : table.remaining) min_distance = std::min(min_distance, distance(r, s));
    if (distance_bound(SurgeryType::Reducible, SurgeryType::Reducible) >= min_distance) {
        throw std::logic_error("reducible fillings not excluded by the distance table");
    }
    NarrowingStep denominator{1, "filling is toroidal (reducible: distance bound 1 < 2; Seifert: L-space gap chain); "
                                 "toroidal slopes have |q| <= 2",
                              std::string(cite::toroidal_denominator), {}, {}};
    partition_step(denominator, table.remaining, [](const SlopePair& pr) {
        return toroidal_denominator_ok(pr.first) && toroidal_denominator_ok(pr.second);
    });
    result.steps.push_back(denominator);

    NarrowingStep half{2, "a half-integral toroidal slope is unique, so no half-integral pair",
                       std::string(cite::half_integral), {}, {}};
    partition_step(half, denominator.remaining, [](const SlopePair& pr) {
        if (pr.first.den() == 2 && pr.second.den() == 2) return half_integral_unique_rule(pr);
        return true;
    });
    result.steps.push_back(half);

    NarrowingStep h1{3, "distance-4 toroidal pairs are (L1(n); 0, 4) or (L2(n); 2-9n, -2-9n), whose fillings have "
                        "different |H1|",
                     std::string(cite::h1_comparison), {}, {}};
    verify_distance4_discrimination();
    partition_step(h1, half.remaining, [](const SlopePair& pr) {
        const Integer d = distance(pr.first, pr.second);
        if (d > 4) throw std::logic_error("narrowing: unhandled toroidal pair at distance " + std::to_string(d));
        return d < 4;
    });
    result.steps.push_back(h1);

    NarrowingStep congruence{4, "q^2 = -1 mod p on each survivor", std::string(cite::niwu_congruence), {}, {}};
    partition_step(congruence, h1.remaining, [](const SlopePair& pr) { return niwu_congruence(pr.first); });
    result.steps.push_back(congruence);

    result.survivors = congruence.remaining;
    result.tag = "toroidal, not Seifert fibred";
    return result;
}

Verdict boyer_lines(const SymmetricLaurent& p) {
    const Integer d2 = second_derivative_at_one(p);
    if (d2 != 0) return make("boyer_lines", Status::Excludes, cite::boyer_lines, "Delta''(1) = " + std::to_string(d2) + " != 0");
    return make("boyer_lines", Status::Passes, cite::boyer_lines,
                p.is_trivial() ? "Delta''(1) = 0 (trivial polynomial)" : "Delta''(1) = 0");
}

Verdict niwu_tau(const std::optional<FloerData>& f) {
    if (!f || !f->tau) return make("niwu_tau", Status::DataMissing, cite::niwu_tau, "tau not supplied");
    const Integer tau = *f->tau;
    if (tau != 0) return make("niwu_tau", Status::Excludes, cite::niwu_tau, "tau = " + std::to_string(tau) + " != 0");
    return make("niwu_tau", Status::Passes, cite::niwu_tau, "tau = 0");
}

Verdict lspace_gap(const SymmetricLaurent& p) {
    const auto gaps = lspace_form(p);
    if (!gaps) {
        return make("lspace_gap", Status::Passes, cite::lspace_gap_chain,
                    "not in L-space form; Seifert-fibred cosmetic surgery impossible");
    }
    if (gaps->empty()) return make("lspace_gap", Status::Passes, cite::lspace_gap_chain, "Delta = 1");
    const Integer from_gaps = second_derivative_from_gaps(*gaps);
    if (from_gaps != second_derivative_at_one(p) || from_gaps == 0) {
        throw std::logic_error("gap formula disagrees with Delta''(1) for " + p.str());
    }
    return make("lspace_gap", Status::Excludes, cite::lspace_gap_chain,
                "L-space form with gaps " + gaps_str(*gaps) + "; Delta''(1) = " + std::to_string(from_gaps) + " != 0");
}

std::vector<Verdict> floer_consistency(const SymmetricLaurent& p, const FloerData& f) {
    std::vector<Verdict> out;

    if (f.d_values.empty()) {
        out.push_back(make("floer_d_chain", Status::DataMissing, cite::d_monotone, "d(S^3_K(1/n)) not supplied"));
    } else {
        std::string failure;
        if (f.d_values[0] > Rational(0)) failure = "d(1/1) = " + rational_str(f.d_values[0]) + " > d(S^3) = 0";
        for (std::size_t i = 1; i < f.d_values.size() && failure.empty(); ++i) {
            if (f.d_values[i] > f.d_values[i - 1]) {
                failure = "d(1/" + std::to_string(i + 1) + ") = " + rational_str(f.d_values[i]) + " > d(1/" +
                          std::to_string(i) + ") = " + rational_str(f.d_values[i - 1]);
            }
        }
        for (std::size_t i = 0; i < f.d_values.size() && failure.empty(); ++i) {
            if (f.d_values[i] != Rational(0)) {
                failure = "d(1/" + std::to_string(i + 1) + ") = " + rational_str(f.d_values[i]) + " != 0";
            }
        }
        if (failure.empty()) {
            out.push_back(make("floer_d_chain", Status::Passes, cite::d_monotone,
                               "d(1/n) = 0 for n = 1.." + std::to_string(f.d_values.size())));
        } else {
            out.push_back(make("floer_d_chain", Status::Excludes, cite::d_monotone, failure));
        }
    }

    const auto rank = f.rank_hfred.find(Slope::integral(1));
    const Integer bound = torsion_norm(p);
    const std::string casson = "lambda(S^3_K(+1)) = " + std::to_string(casson_plus_one_surgery(p));
    if (rank == f.rank_hfred.end()) {
        out.push_back(make("floer_torsion_bound", Status::DataMissing, cite::torsion_bound,
                           "rank HF_red(S^3_K(+1)) not supplied; |t0| + 2 sum |ti| = " + std::to_string(bound)));
    } else if (bound <= rank->second) {
        out.push_back(make("floer_torsion_bound", Status::Passes, cite::torsion_bound,
                           std::to_string(bound) + " <= rank " + std::to_string(rank->second) + "; " + casson));
    } else {
        out.push_back(make("floer_torsion_bound", Status::Excludes, cite::torsion_bound,
                           std::to_string(bound) + " > rank " + std::to_string(rank->second) + "; " + casson));
    }

    if (!f.d_half || f.d_values.empty()) {
        out.push_back(make("floer_half_grading", Status::DataMissing, cite::d_half,
                           "needs d_1/2(S^3_K(0)) and d(S^3_K(+1))"));
    } else {
        const Rational lhs = f.d_half->first - Rational(1, 2);
        const Rational rhs = f.d_values[0];
        const std::string detail = "d_1/2 - 1/2 = " + rational_str(lhs) + ", d(+1) = " + rational_str(rhs);
        out.push_back(make("floer_half_grading", lhs == rhs ? Status::Passes : Status::Excludes, cite::d_half, detail));
    }
    return out;
}

ObstructionReport analyze(const KnotRecord& k) {
    ObstructionReport report;
    report.knot = k.name();
    const SymmetricLaurent& p = k.polynomial();
    report.polynomial = p.str();
    const bool in_scope = k.flags().nontrivial;
    const bool hyperbolic = k.flags().hyperbolic == Tristate::Yes;

    report.assumptions = {
        "ambient manifold S^3; slopes exceptional (not certified)",
        "hyperbolic=" + std::string(to_string(k.flags().hyperbolic)),
        "amphicheiral=" + std::string(to_string(k.flags().amphicheiral)),
        std::string("nontrivial=") + (in_scope ? "yes" : "no"),
    };

    auto out_of_scope = [](std::string_view criterion) {
        return make(criterion, Status::NotApplicable, cite::scope, "trivial knot");
    };

    Verdict bl = boyer_lines(p);
    if (!in_scope) bl.detail += "; trivial knot, outside scope";
    report.verdicts.push_back(bl);

    report.verdicts.push_back(in_scope ? niwu_tau(k.floer()) : out_of_scope("niwu_tau"));

    if (in_scope) {
        Verdict gap = lspace_gap(p);
        if (gap.status == Status::Excludes && bl.status != Status::Excludes) {
            throw std::logic_error("L-space gap form without a Boyer-Lines exclusion for " + p.str());
        }
        report.verdicts.push_back(gap);
    } else {
        report.verdicts.push_back(out_of_scope("lspace_gap"));
    }

    std::optional<NarrowingResult> narrowing;
    if (!in_scope) {
        report.verdicts.push_back(out_of_scope("exceptional_narrowing"));
    } else if (!hyperbolic) {
        report.verdicts.push_back(make("exceptional_narrowing", Status::NotApplicable, cite::exceptional_narrowing,
                                       "requires hyperbolic=yes"));
    } else {
        narrowing = narrow_exceptional_pairs();
        report.verdicts.push_back(make("exceptional_narrowing", Status::Passes, cite::exceptional_narrowing,
                                       "candidates narrowed to " + pairs_str(narrowing->survivors) + ": " +
                                           narrowing->tag));
    }

    static constexpr std::string_view kFloer[] = {"floer_d_chain", "floer_torsion_bound", "floer_half_grading"};
    static constexpr std::string_view kFloerCite[] = {cite::d_monotone, cite::torsion_bound, cite::d_half};
    if (!in_scope) {
        for (auto c : kFloer) report.verdicts.push_back(out_of_scope(c));
    } else if (!hyperbolic) {
        for (std::size_t i = 0; i < 3; ++i) {
            report.verdicts.push_back(make(kFloer[i], Status::NotApplicable, kFloerCite[i], "requires hyperbolic=yes"));
        }
    } else if (!k.floer()) {
        for (std::size_t i = 0; i < 3; ++i) {
            report.verdicts.push_back(make(kFloer[i], Status::DataMissing, kFloerCite[i], "no Floer data"));
        }
    } else {
        for (auto& v : floer_consistency(p, *k.floer())) report.verdicts.push_back(std::move(v));
    }

    const bool excluded = std::any_of(report.verdicts.begin(), report.verdicts.end(),
                                      [](const Verdict& v) { return v.status == Status::Excludes; });
    report.overall = excluded ? Overall::Excluded : Overall::Unresolved;
    if (!excluded && narrowing) {
        report.constrained = true;
        report.surviving_pairs = narrowing->survivors;
        report.surviving_tag = narrowing->tag;
    }
    return report;
}

std::string format_text(const ObstructionReport& r) {
    std::ostringstream os;
    os << "knot: " << r.knot << '\n';
    os << "alexander: " << r.polynomial << '\n';
    for (const auto& a : r.assumptions) os << "assume: " << a << '\n';
    for (const auto& v : r.verdicts) {
        os << "  [" << to_string(v.status) << "] " << v.criterion << " (" << v.citation << "): " << v.detail << '\n';
    }
    os << "surviving pairs: ";
    if (r.overall == Overall::Excluded) os << "none";
    else if (!r.constrained) os << "unconstrained";
    else os << pairs_str(r.surviving_pairs) << " [" << r.surviving_tag << "]";
    os << '\n';
    os << "overall: " << to_string(r.overall) << '\n';
    return os.str();
}

std::string format_machine(const ObstructionReport& r) {
    std::ostringstream os;
    for (const auto& v : r.verdicts) {
        os << v.criterion << '\t' << to_string(v.status) << '\t' << v.citation << '\t' << v.detail << '\n';
    }
    std::string surviving = r.overall == Overall::Excluded ? "none"
                            : !r.constrained               ? "unconstrained"
                                                           : pairs_str(r.surviving_pairs);
    os << "surviving\t" << (r.constrained ? r.surviving_tag : "-") << "\t-\t" << surviving << '\n';
    const auto first = std::find_if(r.verdicts.begin(), r.verdicts.end(),
                                    [](const Verdict& v) { return v.status == Status::Excludes; });
    os << "overall\t" << to_string(r.overall) << "\t-\t" << (first == r.verdicts.end() ? "-" : first->criterion) << '\n';
    return os.str();
}

} // namespace cosmetic
