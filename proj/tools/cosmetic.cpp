// cosmetic: command-line front end for the cosmetic surgery obstruction library.
//
// Exit codes: 0 success (analyze: UNRESOLVED), 10 analyze: EXCLUDED, 2 input error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cosmetic/alexander.hpp"
#include "cosmetic/citations.hpp"
#include "cosmetic/homology.hpp"
#include "cosmetic/io.hpp"
#include "cosmetic/obstructions.hpp"
#include "cosmetic/slope.hpp"
#include "cosmetic/tables.hpp"

using namespace cosmetic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitExcluded = 10;

std::string join(const std::vector<Integer>& v, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::string slope_set(const std::set<Slope>& s) {
    std::string out = "{";
    const char* sep = "";
    for (const auto& x : s) {
        out += sep + x.str();
        sep = ", ";
    }
    return out + "}";
}

void print_matrix(std::ostream& os, const MatrixXi64& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << "]\n";
    }
}

// ---------------------------------------------------------------------------

struct AnalyzeOptions {
    std::vector<std::string> paths;
    std::vector<std::string> catalog_names;
    std::string format = "text";
    std::string assume_hyperbolic;
};

int run_analyze(const AnalyzeOptions& o) {
    std::vector<KnotRecord> records;
    for (const auto& name : o.catalog_names) records.push_back(catalog_entry(name));
    for (const auto& path : o.paths) records.push_back(read_knot_file(path));
    if (records.empty()) throw InputError("analyze: no knot files given");

    bool all_excluded = true;
    for (std::size_t i = 0; i < records.size(); ++i) {
        KnotRecord k = records[i];
        if (!o.assume_hyperbolic.empty()) {
            KnotFlags flags = k.flags();
            flags.hyperbolic = parse_tristate(o.assume_hyperbolic);
            k = KnotRecord(k.name(), k.source(), flags, k.floer());
        }
        const ObstructionReport report = analyze(k);
        if (i > 0 && o.format == "text") std::cout << '\n';
        std::cout << (o.format == "machine" ? format_machine(report) : format_text(report));
        all_excluded = all_excluded && report.overall == Overall::Excluded;
    }
    return all_excluded ? kExitExcluded : kExitOk;
}

// ---------------------------------------------------------------------------

struct SlopesOptions {
    std::vector<std::string> args;
    Integer max_delta = 8;
    std::string filter = "none";
};

int run_slopes(const std::string& sub, const SlopesOptions& o) {
    auto need = [&](std::size_t n) {
        if (o.args.size() != n) throw InputError("slopes " + sub + ": expected " + std::to_string(n) + " argument(s)");
    };
    if (sub == "distance") {
        need(2);
        std::cout << distance(Slope::parse(o.args[0]), Slope::parse(o.args[1])) << '\n';
    } else if (sub == "enumerate") {
        need(0);
        for (const auto& [r, s] : enumerate_candidate_pairs(o.max_delta)) {
            bool keep = true;
            if (o.filter == "linking") keep = linking_form_compatible(r.num(), r.den(), -r.den());
            else if (o.filter == "niwu") keep = niwu_congruence(r);
            else if (o.filter != "none") throw InputError("slopes enumerate: unknown filter '" + o.filter + "'");
            if (keep) std::cout << r << '\t' << s << '\t' << "distance " << distance(r, s) << '\n';
        }
    } else if (sub == "niwu") {
        need(1);
        std::cout << (niwu_congruence(Slope::parse(o.args[0])) ? "true" : "false") << '\n';
    } else if (sub == "linking") {
        need(3);
        const auto p = parse_integer_list(o.args[0]), q = parse_integer_list(o.args[1]),
                   q2 = parse_integer_list(o.args[2]);
        std::cout << (linking_form_compatible(p.at(0), q.at(0), q2.at(0)) ? "true" : "false") << '\n';
    } else if (sub == "classify") {
        need(3);
        const auto p = parse_integer_list(o.args[0]), q = parse_integer_list(o.args[1]),
                   q2 = parse_integer_list(o.args[2]);
        std::cout << to_string(classify_exceptional_pair(p.at(0), q.at(0), q2.at(0))) << '\n';
    } else if (sub == "narrow") {
        need(0);
        const auto result = narrow_exceptional_pairs();
        for (const auto& step : result.steps) {
            std::cout << "stage " << step.stage << " [" << step.citation << "] " << step.description << '\n';
            std::cout << "  removed:   " << pairs_str(step.removed) << '\n';
            std::cout << "  remaining: " << pairs_str(step.remaining) << '\n';
        }
        std::cout << "survivors: " << pairs_str(result.survivors) << " [" << result.tag << "]\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct HomologyOptions {
    std::string path;
    std::optional<Integer> components;
    std::string linking;
    std::string framings;
};

int run_homology(const HomologyOptions& o) {
    FramedLink link;
    if (!o.path.empty()) {
        link = read_framed_link(o.path);
    } else {
        if (!o.components) throw InputError("homology: give a framed-link file or --components/--linking/--framings");
        const Integer n = *o.components;
        const auto lk = o.linking.empty() ? std::vector<Integer>{} : parse_integer_list(o.linking);
        if (static_cast<Integer>(lk.size()) != n * n && !(n == 1 && lk.empty())) {
            throw InputError("--linking: expected " + std::to_string(n * n) + " integers");
        }
        link.linking = MatrixXi64::Zero(n, n);
        for (Integer k = 0; k < static_cast<Integer>(lk.size()); ++k) link.linking(k / n, k % n) = lk[static_cast<std::size_t>(k)];
        std::stringstream ss(o.framings);
        for (std::string item; std::getline(ss, item, ',');) link.framings.push_back(Slope::parse(item));
        try {
            link.validate();
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    const FramedLink reduced = link.without_infinite_framings();
    if (reduced.components() != link.components()) {
        std::cout << "erased " << link.components() - reduced.components() << " component(s) with framing inf\n";
    }
    std::cout << "framing matrix:\n";
    print_matrix(std::cout, framing_matrix(reduced));
    std::cout << "|H1| = " << h1_order(reduced) << (h1_order(reduced) == 0 ? " (infinite)" : "") << '\n';
    const AbelianGroup g = h1_group(reduced);
    std::cout << "invariant factors: (" << join(g.invariant_factors) << ")";
    if (g.free_rank > 0) std::cout << " free rank " << g.free_rank;
    std::cout << '\n' << "H1 = " << g.str() << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct AlexOptions {
    std::string seifert;
    std::string alexander;
    std::string knot;
    std::optional<Integer> twist;
    std::string gaps;
};

SymmetricLaurent alex_input(const AlexOptions& o) {
    const int given = !o.seifert.empty() + !o.alexander.empty() + !o.knot.empty() + o.twist.has_value() + !o.gaps.empty();
    if (given != 1) throw InputError("alex: give exactly one of --seifert, --alexander, --knot, --twist, --gaps");
    if (!o.seifert.empty()) return from_seifert_matrix(parse_seifert(o.seifert));
    if (!o.alexander.empty()) return parse_alexander(o.alexander);
    if (!o.knot.empty()) return read_knot_file(o.knot).polynomial();
    if (!o.gaps.empty()) return lspace_polynomial(GapSequence(parse_integer_list(o.gaps)));
    return twist_knot_polynomial(*o.twist);
}

int run_alex(const std::string& sub, const AlexOptions& o) {
    const SymmetricLaurent p = alex_input(o);
    if (sub == "poly") {
        std::cout << p.str() << '\n';
        std::cout << "coefficients (a0..ad): " << join(p.coefficients()) << '\n';
        if (p.is_trivial()) std::cout << "note: trivial polynomial\n";
    } else if (sub == "d2") {
        std::cout << second_derivative_at_one(p) << '\n';
    } else if (sub == "torsion") {
        const auto t = torsion_invariants(p);
        for (std::size_t i = 0; i < t.size(); ++i) std::cout << "t" << i << " = " << t[i] << '\n';
        std::cout << "|t0| + 2 sum |ti| = " << torsion_norm(p) << '\n';
    } else if (sub == "lspace") {
        const auto g = lspace_form(p);
        if (!g) {
            std::cout << "not L-space form\n";
        } else {
            std::cout << "gaps: (" << join(g->gaps()) << ")\n";
            if (!g->empty()) std::cout << "Delta''(1) from gaps = " << second_derivative_from_gaps(*g) << '\n';
        }
    } else if (sub == "casson") {
        std::cout << casson_plus_one_surgery(p) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct TablesOptions {
    std::vector<std::string> args;
    std::optional<Integer> n;
    std::string q;
    std::string slope;
};

int run_tables(const std::string& sub, const TablesOptions& o) {
    if (sub == "dump") {
        std::cout << dump_tables();
    } else if (sub == "distance-bounds") {
        if (o.args.size() != 2) throw InputError("tables distance-bounds: expected two surgery types");
        std::cout << distance_bound(parse_surgery_type(o.args[0]), parse_surgery_type(o.args[1])) << '\n';
    } else if (sub == "gordon-wu") {
        if (o.args.size() != 1) throw InputError("tables gordon-wu: expected a family (L1, L2, L3, Fig8)");
        const auto [r1, r2] = gordon_wu_slopes(parse_toroidal_family(o.args[0]), o.n);
        std::cout << "r1 = " << r1 << "\nr2 = " << r2 << "\ndistance = " << distance(r1, r2) << '\n';
    } else if (sub == "montesinos") {
        if (o.args.size() != 1) throw InputError("tables montesinos: expected an entry id or a knot such as K(-1/3,1/3,1/7)");
        const std::string& what = o.args[0];
        MontesinosSlopes out;
        if (!what.empty() && what[0] == 'K') {
            out = montesinos_knot_slopes(what);
        } else {
            std::vector<Integer> params;
            if (o.n) params.push_back(*o.n);
            if (!o.q.empty()) params = parse_integer_list(o.q);
            out = montesinos_toroidal_slopes(what, params);
        }
        std::cout << slope_set(out.slopes) << '\n';
        if (out.incomplete) std::cout << "note: " << out.note << '\n';
        std::cout << "no +-1 pair: " << (no_pm1_pair(out.slopes) ? "true" : "false") << '\n';
    } else if (sub == "alternating") {
        if (o.args.size() < 2) throw InputError("tables alternating: expected twist N | two-bridge A B | pretzel A B C");
        std::vector<Integer> v;
        for (std::size_t i = 1; i < o.args.size(); ++i) v.push_back(parse_integer_list(o.args[i]).at(0));
        AlternatingKnot knot;
        const std::string& kind = o.args[0];
        if (kind == "twist" && v.size() == 1) knot = TwistKnot{v[0]};
        else if (kind == "two-bridge" && v.size() == 2) knot = TwoBridgeKnot{v[0], v[1]};
        else if (kind == "pretzel" && v.size() == 3) knot = PretzelKnot{v[0], v[1], v[2]};
        else throw InputError("tables alternating: bad kind or parameter count");
        const auto out = alternating_exceptional_slopes(knot);
        std::cout << slope_set(out.slopes) << '\n' << out.verdict << '\n';
    } else if (sub == "arborescent") {
        if (o.slope.empty()) {
            for (const auto& e : arborescent_typeII_slopes()) std::cout << e.knot << '\t' << e.slope << '\n';
        } else {
            const auto hit = arborescent_typeII_lookup(Slope::parse(o.slope));
            std::cout << (hit ? *hit : "none") << '\n';
        }
    }
    return kExitOk;
}

int run_catalog(const std::string& sub, const std::vector<std::string>& args) {
    if (sub == "list") {
        for (const auto& k : catalog()) std::cout << k.name() << '\t' << k.polynomial().str() << '\n';
    } else {
        if (args.size() != 1) throw InputError("catalog emit: expected one entry name");
        std::cout << emit_knot_file(catalog_entry(args[0]));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Obstructions to truly cosmetic Dehn surgery on knots in S^3"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    AnalyzeOptions analyze_opts;
    auto* analyze_cmd = app.add_subcommand("analyze", "Run every obstruction on knot files");
    analyze_cmd->add_option("files", analyze_opts.paths, "Knot files (JSON)");
    analyze_cmd->add_option("--catalog", analyze_opts.catalog_names, "Analyze a built-in catalog entry");
    analyze_cmd->add_option("--format", analyze_opts.format, "Report format")->check(CLI::IsMember({"text", "machine"}));
    analyze_cmd->add_option("--assume-hyperbolic", analyze_opts.assume_hyperbolic, "Override the hyperbolic flag")
        ->check(CLI::IsMember({"yes", "no", "unknown"}));
    analyze_cmd->callback([&] { exit_code = run_analyze(analyze_opts); });

    SlopesOptions slopes_opts;
    auto* slopes_cmd = app.add_subcommand("slopes", "Slope arithmetic");
    slopes_cmd->require_subcommand(1);
    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"distance", "Distance between two slopes p/q"},
             {"enumerate", "Candidate pairs (p/q, -p/q) with 2pq <= max-delta"},
             {"niwu", "q^2 = -1 mod p for a slope p/q"},
             {"linking", "Linking-form compatibility of p, q, q'"},
             {"classify", "Case label for exceptional slopes p/q, p/q' with q < q'"},
             {"narrow", "Narrowing log for exceptional truly cosmetic pairs"}}) {
        auto* sub = slopes_cmd->add_subcommand(name, help);
        sub->add_option("args", slopes_opts.args, "Arguments")->allow_extra_args();
        if (name == "enumerate") {
            sub->add_option("--max-delta", slopes_opts.max_delta, "Distance bound")->check(CLI::PositiveNumber);
            sub->add_option("--filter", slopes_opts.filter, "none, linking or niwu");
        }
        sub->callback([&, name = name] { exit_code = run_slopes(name, slopes_opts); });
    }

    HomologyOptions homology_opts;
    auto* homology_cmd = app.add_subcommand("homology", "H1 of surgery on a framed link");
    homology_cmd->add_option("file", homology_opts.path, "Framed-link file (JSON)");
    homology_cmd->add_option("--components", homology_opts.components, "Component count");
    homology_cmd->add_option("--linking", homology_opts.linking, "Row-major linking numbers, comma separated");
    homology_cmd->add_option("--framings", homology_opts.framings, "Framings p/q or inf, comma separated");
    homology_cmd->callback([&] { exit_code = run_homology(homology_opts); });

    AlexOptions alex_opts;
    auto* alex_cmd = app.add_subcommand("alex", "Alexander polynomial invariants");
    alex_cmd->require_subcommand(1);
    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"poly", "Normalized symmetric Alexander polynomial"},
             {"d2", "Delta''(1)"},
             {"torsion", "Torsion invariants t_i"},
             {"lspace", "L-space gap form, if any"},
             {"casson", "Casson invariant of +1 surgery"}}) {
        auto* sub = alex_cmd->add_subcommand(name, help);
        sub->add_option("--seifert", alex_opts.seifert, "Seifert matrix 'size:e00,e01,...'");
        sub->add_option("--alexander", alex_opts.alexander, "Coefficients '[[i,a_i],...]'");
        sub->add_option("--knot", alex_opts.knot, "Knot file");
        sub->add_option("--twist", alex_opts.twist, "Twist knot parameter n");
        sub->add_option("--gaps", alex_opts.gaps, "L-space gap sequence, comma separated");
        sub->callback([&, name = name] { exit_code = run_alex(name, alex_opts); });
    }

    TablesOptions tables_opts;
    auto* tables_cmd = app.add_subcommand("tables", "Classification tables");
    tables_cmd->require_subcommand(1);
    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"dump", "All table rows with citations"},
             {"gordon-wu", "Toroidal slopes at distance >= 4: FAMILY [--n N]"},
             {"montesinos", "Toroidal slopes of a length-3 Montesinos entry"},
             {"alternating", "Exceptional slopes of an alternating knot"},
             {"distance-bounds", "Distance bound between two surgery types"},
             {"arborescent", "Type II arborescent exceptional slopes"}}) {
        auto* sub = tables_cmd->add_subcommand(name, help);
        sub->add_option("args", tables_opts.args, "Arguments")->allow_extra_args();
        if (name == "gordon-wu" || name == "montesinos") sub->add_option("--n", tables_opts.n, "Family parameter n");
        if (name == "montesinos") sub->add_option("--q", tables_opts.q, "q1,q2,q3 for the K(1/q1,1/q2,1/q3) rows");
        if (name == "arborescent") sub->add_option("--slope", tables_opts.slope, "Look up the knot with this slope");
        sub->callback([&, name = name] { exit_code = run_tables(name, tables_opts); });
    }

    std::vector<std::string> catalog_args;
    auto* catalog_cmd = app.add_subcommand("catalog", "Built-in knot records");
    catalog_cmd->require_subcommand(1);
    auto* catalog_list = catalog_cmd->add_subcommand("list", "List entries");
    catalog_list->callback([&] { exit_code = run_catalog("list", catalog_args); });
    auto* catalog_emit = catalog_cmd->add_subcommand("emit", "Print an entry as a knot file");
    catalog_emit->add_option("name", catalog_args, "Entry name")->required();
    catalog_emit->callback([&] { exit_code = run_catalog("emit", catalog_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return exit_code;
}
