#include "cosmetic/tables.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "cosmetic/alexander.hpp"
#include "cosmetic/citations.hpp"

namespace cosmetic {

namespace {

constexpr std::array<SurgeryType, 5> kTypes{SurgeryType::Reducible, SurgeryType::Cyclic, SurgeryType::Finite,
                                            SurgeryType::Toroidal, SurgeryType::SmallSeifert};

// Upper triangle, row-major over kTypes.
constexpr Integer kDistanceTable[5][5] = {
    {1, 1, 1, 3, 4},
    {1, 1, 2, 8, 8},
    {1, 2, 3, 8, 8},
    {3, 8, 8, 8, 8},
    {4, 8, 8, 8, 8},
};

bool is_odd(Integer v) { return v % 2 != 0; }

Slope integral(Integer v) { return Slope::integral(v); }

[[noreturn]] void constraint_violation(std::string_view what, std::string_view constraint) {
    throw std::invalid_argument(std::string(what) + ": parameters violate '" + std::string(constraint) + "'");
}

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t') out.push_back(c);
    return out;
}

using MontesinosEval = std::function<std::set<Slope>(const std::vector<Integer>&)>;

struct MontesinosRow {
    MontesinosEntry entry;
    std::function<bool(const std::vector<Integer>&)> admissible;
    MontesinosEval eval;
};

std::set<Slope> single(Integer v) { return {integral(v)}; }

const std::vector<MontesinosRow>& montesinos_rows() {
    using P = std::vector<Integer>;
    auto no_params = [](const P&) { return true; };
    static const std::vector<MontesinosRow> rows = {
        {{"M1", "K(1/q1,1/q2,1/q3)", "q_i odd, |q_i| > 1", "0", MontesinosParams::Q1Q2Q3},
         [](const P& q) {
             return std::all_of(q.begin(), q.end(), [](Integer v) { return is_odd(v) && std::abs(v) > 1; });
         },
         [](const P&) { return single(0); }},
        {{"M2", "K(1/q1,1/q2,1/q3)", "q1 even, q2 q3 odd, |q_i| > 1", "2(q2+q3)", MontesinosParams::Q1Q2Q3},
         [](const P& q) {
             return !is_odd(q[0]) && is_odd(q[1]) && is_odd(q[2]) &&
                    std::all_of(q.begin(), q.end(), [](Integer v) { return std::abs(v) > 1; });
         },
         [](const P& q) { return single(2 * (q[1] + q[2])); }},
        {{"M3", "K(-1/2,1/3,1/(6+1/n))", "n != 0, -1", "16 if n odd, 0 if n even", MontesinosParams::N},
         [](const P& n) { return n[0] != 0 && n[0] != -1; },
         [](const P& n) { return single(is_odd(n[0]) ? 16 : 0); }},
        {{"M4", "K(-1/3,-1/(3+1/n),2/3)", "n != 0, -1", "-12 if n odd, 4 if n even", MontesinosParams::N},
         [](const P& n) { return n[0] != 0 && n[0] != -1; },
         [](const P& n) { return single(is_odd(n[0]) ? -12 : 4); }},
        {{"M5", "K(-1/2,1/5,1/(3+1/n))", "n even, n != 0", "5-2n", MontesinosParams::N},
         [](const P& n) { return !is_odd(n[0]) && n[0] != 0; },
         [](const P& n) { return single(5 - 2 * n[0]); }},
        {{"M6", "K(-1/2,1/3,1/(5+1/n))", "n even, n != 0", "1-2n", MontesinosParams::N},
         [](const P& n) { return !is_odd(n[0]) && n[0] != 0; },
         [](const P& n) { return single(1 - 2 * n[0]); }},
        {{"M7", "K(-1/(2+1/n),1/3,1/3)", "n odd, n != -1", "2n", MontesinosParams::N},
         [](const P& n) { return is_odd(n[0]) && n[0] != -1; },
         [](const P& n) { return single(2 * n[0]); }},
        {{"M8", "K(-1/2,1/3,1/(3+1/n))", "n even, n != 0", "2-2n", MontesinosParams::N},
         [](const P& n) { return !is_odd(n[0]) && n[0] != 0; },
         [](const P& n) { return single(2 - 2 * n[0]); }},
        {{"M9", "K(-1/2,2/5,1/9)", "-", "15", MontesinosParams::None}, no_params,
         [](const P&) { return single(15); }},
        {{"M10", "K(-1/2,2/5,1/7)", "-", "12", MontesinosParams::None}, no_params,
         [](const P&) { return single(12); }},
        {{"M11", "K(-1/2,1/3,1/7)", "-", "37/2 (one of three toroidal slopes)", MontesinosParams::None, true},
         no_params, [](const P&) { return std::set<Slope>{Slope::normalize(37, 2)}; }},
        {{"M12", "K(-2/3,1/3,1/4)", "-", "13", MontesinosParams::None}, no_params,
         [](const P&) { return single(13); }},
        {{"M13", "K(-1/3,1/3,1/7)", "-", "1", MontesinosParams::None}, no_params,
         [](const P&) { return single(1); }},
        {{"D1", "K(-1/2,1/3,2/11)", "-", "0 and -3", MontesinosParams::None}, no_params,
         [](const P&) { return std::set<Slope>{integral(0), integral(-3)}; }},
        {{"D2", "K(-1/3,1/3,1/3)", "-", "0 and 2", MontesinosParams::None}, no_params,
         [](const P&) { return std::set<Slope>{integral(0), integral(2)}; }},
        {{"D3", "K(-1/3,1/3,1/7)", "-", "0 and 1", MontesinosParams::None}, no_params,
         [](const P&) { return std::set<Slope>{integral(0), integral(1)}; }},
        {{"D4", "K(-2/3,1/3,1/4)", "-", "12 and 13", MontesinosParams::None}, no_params,
         [](const P&) { return std::set<Slope>{integral(12), integral(13)}; }},
        {{"D5", "K(-1/3,-2/5,2/3)", "-", "4 and 6", MontesinosParams::None}, no_params,
         [](const P&) { return std::set<Slope>{integral(4), integral(6)}; }},
    };
    return rows;
}

std::size_t expected_param_count(MontesinosParams p) {
    switch (p) {
    case MontesinosParams::None: return 0;
    case MontesinosParams::N: return 1;
    case MontesinosParams::Q1Q2Q3: return 3;
    }
    return 0;
}

std::string slope_set_str(const std::set<Slope>& s) {
    std::string out = "{";
    const char* sep = "";
    for (const Slope& x : s) {
        out += sep + x.str();
        sep = ", ";
    }
    return out + "}";
}

} // namespace

std::string_view to_string(SurgeryType t) {
    switch (t) {
    case SurgeryType::Reducible: return "reducible";
    case SurgeryType::Cyclic: return "cyclic";
    case SurgeryType::Finite: return "finite";
    case SurgeryType::Toroidal: return "toroidal";
    case SurgeryType::SmallSeifert: return "small-seifert";
    }
    return "?";
}

SurgeryType parse_surgery_type(std::string_view name) {
    for (SurgeryType t : kTypes)
        if (to_string(t) == name) return t;
    if (name == "small_seifert" || name == "seifert") return SurgeryType::SmallSeifert;
    throw std::invalid_argument("unknown surgery type '" + std::string(name) + "'");
}

Integer distance_bound(SurgeryType a, SurgeryType b) {
    return kDistanceTable[static_cast<int>(a)][static_cast<int>(b)];
}

std::string_view to_string(ToroidalFamily f) {
    switch (f) {
    case ToroidalFamily::L1: return "L1";
    case ToroidalFamily::L2: return "L2";
    case ToroidalFamily::L3: return "L3";
    case ToroidalFamily::Figure8: return "Fig8";
    }
    return "?";
}

ToroidalFamily parse_toroidal_family(std::string_view name) {
    if (name == "L1") return ToroidalFamily::L1;
    if (name == "L2") return ToroidalFamily::L2;
    if (name == "L3") return ToroidalFamily::L3;
    if (name == "Fig8" || name == "figure-8" || name == "figure8") return ToroidalFamily::Figure8;
    throw std::invalid_argument("unknown toroidal family '" + std::string(name) + "'");
}

bool family_parameter_ok(ToroidalFamily f, std::optional<Integer> n) {
    switch (f) {
    case ToroidalFamily::L1: return n && *n != 0 && *n != 1;
    case ToroidalFamily::L2: return n && *n != 0 && *n != 1 && *n != -1;
    case ToroidalFamily::L3: return n.has_value();
    case ToroidalFamily::Figure8: return !n.has_value();
    }
    return false;
}

SlopePair gordon_wu_slopes(ToroidalFamily f, std::optional<Integer> n) {
    if (!family_parameter_ok(f, n)) {
        throw std::invalid_argument(std::string(to_string(f)) + ": inadmissible parameter" +
                                    (n ? " n = " + std::to_string(*n) : std::string(" (missing or unexpected n)")));
    }
    switch (f) {
    case ToroidalFamily::L1: return {integral(0), integral(4)};
    case ToroidalFamily::L2: return {integral(2 - 9 * *n), integral(-2 - 9 * *n)};
    case ToroidalFamily::L3: return {integral(-9 - 25 * *n), Slope::normalize(-13 - 50 * *n, 2)};
    case ToroidalFamily::Figure8: return {integral(4), integral(-4)};
    }
    throw std::logic_error("unreachable");
}

bool h1_discriminates_distance4(Integer n) {
    if (n == 0) throw std::invalid_argument("h1_discriminates_distance4 needs n != 0");
    const Integer l1_first = 0;  // |H1| of 0-surgery is infinite, encoded 0
    const Integer l1_second = 4;
    return std::abs(2 - 9 * n) != std::abs(2 + 9 * n) && l1_first != l1_second;
}

std::optional<std::vector<Integer>> affine_abs_equal_solutions(Integer a, Integer b, Integer c, Integer d) {
    // |a + bn| = |c + dn|  <=>  (a + bn)^2 - (c + dn)^2 = 0
    //                      <=>  (b^2 - d^2) n^2 + 2(ab - cd) n + (a^2 - c^2) = 0.
    const Integer qa = b * b - d * d;
    const Integer qb = 2 * (a * b - c * d);
    const Integer qc = a * a - c * c;
    if (qa == 0 && qb == 0) {
        if (qc == 0) return std::nullopt;
        return std::vector<Integer>{};
    }
    std::vector<Integer> roots;
    if (qa == 0) {
        if (qc % qb == 0) roots.push_back(-qc / qb);
        return roots;
    }
    // Factor as the product of the two linear forms and solve each.
    for (auto [u, v] : {std::pair{a - c, b - d}, std::pair{a + c, b + d}}) {
        if (v == 0) continue;
        if (u % v == 0) roots.push_back(-u / v);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

bool toroidal_denominator_ok(const Slope& s) { return s.den() <= 2; }

bool half_integral_unique_rule(const SlopePair& pair) {
    if (pair.first.den() != 2 || pair.second.den() != 2) {
        throw std::invalid_argument("half_integral_unique_rule: " + pair.first.str() + ", " + pair.second.str() +
                                    " are not both half-integral");
    }
    return false;
}

bool no_pm1_pair(const std::set<Slope>& slopes) {
    return !(slopes.contains(integral(1)) && slopes.contains(integral(-1)));
}

const std::set<Slope>& figure8_exceptional_slopes() {
    static const std::set<Slope> slopes = {Slope::infinity(), integral(0),  integral(1),  integral(-1),
                                           integral(2),       integral(-2), integral(3),  integral(-3),
                                           integral(4),       integral(-4)};
    return slopes;
}

AlternatingSlopes alternating_exceptional_slopes(const AlternatingKnot& knot) {
    return std::visit(
        [](const auto& k) -> AlternatingSlopes {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, TwistKnot>) {
                if (k.n == 0) constraint_violation("twist knot", "n != 0");
                const Integer d2 = second_derivative_at_one(twist_knot_polynomial(k.n));
                return {{}, "excluded by Delta''(1) = " + std::to_string(d2) + " != 0"};
            } else if constexpr (std::is_same_v<T, TwoBridgeKnot>) {
                if (std::abs(k.a) <= 2 || std::abs(k.b) <= 2) constraint_violation("two-bridge K[a,b]", "|a|,|b| > 2");
                if (is_odd(k.a) && is_odd(k.b)) constraint_violation("two-bridge K[a,b]", "ab even (a knot)");
                if (!is_odd(k.a) && !is_odd(k.b)) return {{integral(0)}, "toroidal slope 0; not +-1"};
                if (is_odd(k.a)) return {{integral(2 * k.b)}, "toroidal slope 2b; not +-1"};
                return {{}, "no exceptional slope listed for a even, b odd"};
            } else {
                const std::array<Integer, 3> v{k.a, k.b, k.c};
                for (Integer x : v)
                    if (x == 0 || std::abs(x) == 1) constraint_violation("pretzel P(a,b,c)", "a,b,c not in {0,+-1}");
                const auto evens = std::count_if(v.begin(), v.end(), [](Integer x) { return !is_odd(x); });
                if (evens > 1) constraint_violation("pretzel P(a,b,c)", "at most one even entry (a knot)");
                if (evens == 0) return {{integral(0)}, "toroidal slope 0; not +-1"};
                // Rotate the even entry to the front; P(a,b,c) = P(b,c,a).
                const auto even = std::find_if(v.begin(), v.end(), [](Integer x) { return !is_odd(x); }) - v.begin();
                const Integer b = v[static_cast<std::size_t>((even + 1) % 3)];
                const Integer c = v[static_cast<std::size_t>((even + 2) % 3)];
                return {{integral(2 * (b + c))}, "toroidal slope 2(b+c); not +-1"};
            }
        },
        knot);
}

const std::vector<MontesinosEntry>& montesinos_entries() {
    static const std::vector<MontesinosEntry> entries = [] {
        std::vector<MontesinosEntry> out;
        for (const auto& row : montesinos_rows()) out.push_back(row.entry);
        return out;
    }();
    return entries;
}

MontesinosSlopes montesinos_toroidal_slopes(std::string_view id, const std::vector<Integer>& params) {
    const auto& rows = montesinos_rows();
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const MontesinosRow& r) { return r.entry.id == id; });
    if (it == rows.end()) throw std::invalid_argument("unknown Montesinos entry '" + std::string(id) + "'");
    if (params.size() != expected_param_count(it->entry.params)) {
        throw std::invalid_argument("Montesinos entry " + it->entry.id + " expects " +
                                    std::to_string(expected_param_count(it->entry.params)) + " parameter(s)");
    }
    if (!it->admissible(params)) constraint_violation(it->entry.id, it->entry.constraint);
    MontesinosSlopes out{it->eval(params), it->entry.three_toroidal, {}};
    if (out.incomplete) out.note = "three toroidal surgeries; the other two slopes are not listed";
    return out;
}

MontesinosSlopes montesinos_knot_slopes(std::string_view knot) {
    const std::string wanted = strip_spaces(knot);
    MontesinosSlopes out;
    bool found = false;
    for (const auto& row : montesinos_rows()) {
        if (row.entry.params != MontesinosParams::None || strip_spaces(row.entry.knot) != wanted) continue;
        found = true;
        const auto s = row.eval({});
        out.slopes.insert(s.begin(), s.end());
        if (row.entry.three_toroidal) {
            out.incomplete = true;
            out.note = "three toroidal surgeries; the other two slopes are not listed";
        }
    }
    if (!found) throw std::invalid_argument("no parameter-free Montesinos entry for '" + std::string(knot) + "'");
    return out;
}

const std::vector<ArborescentEntry>& arborescent_typeII_slopes() {
    static const std::vector<ArborescentEntry> entries = {
        {"K1", integral(3)},
        {"K2", integral(0)},
        {"K3", integral(-3)},
    };
    return entries;
}

std::optional<std::string> arborescent_typeII_lookup(const Slope& s) {
    for (const auto& e : arborescent_typeII_slopes())
        if (e.slope == s) return e.knot;
    return std::nullopt;
}

std::vector<TableRow> table_rows() {
    std::vector<TableRow> rows;
    const std::string dt(cite::distance_table);
    for (std::size_t i = 0; i < kTypes.size(); ++i) {
        for (std::size_t j = i; j < kTypes.size(); ++j) {
            rows.push_back({"distance/" + std::string(to_string(kTypes[i])) + "/" + std::string(to_string(kTypes[j])),
                            dt, "-", std::to_string(distance_bound(kTypes[i], kTypes[j]))});
        }
    }
    rows.push_back({"distance/max", std::string(cite::lackenby_meyerhoff), "-", "8"});

    const std::string gw(cite::gordon_wu);
    rows.push_back({"gordon-wu/L1", gw, "n != 0, 1", "r1 = 0, r2 = 4"});
    rows.push_back({"gordon-wu/L2", gw, "n != 0, +-1", "r1 = 2-9n, r2 = -2-9n"});
    rows.push_back({"gordon-wu/L3", gw, "n any", "r1 = -9-25n, r2 = -13/2-25n"});
    rows.push_back({"gordon-wu/Fig8", gw, "-", "r1 = 4, r2 = -4"});
    rows.push_back({"h1/distance4", std::string(cite::h1_comparison), "n != 0", "|2-9n| != |2+9n|; 0 != 4"});
    rows.push_back({"toroidal/denominator", std::string(cite::toroidal_denominator), "hyperbolic K", "|q| <= 2"});
    rows.push_back({"toroidal/half-integral", std::string(cite::half_integral), "|q| = 2",
                    "at most one half-integral toroidal slope"});
    rows.push_back({"figure8/exceptional", std::string(cite::figure8_exceptional), "-",
                    slope_set_str(figure8_exceptional_slopes())});

    const std::string im(cite::ichihara_masai);
    rows.push_back({"alternating/twist", im, "K[2n,+-2], n != 0", "Delta = 2n+1 - n(T+T^-1); Delta''(1) = -2n"});
    rows.push_back({"alternating/two-bridge/even-even", im, "K[a,b], |a|,|b| > 2, a b even", "0"});
    rows.push_back({"alternating/two-bridge/odd-even", im, "K[a,b], |a|,|b| > 2, a odd, b even", "2b"});
    rows.push_back({"alternating/pretzel/odd", im, "P(a,b,c), a,b,c odd, not 0 or +-1", "0"});
    rows.push_back({"alternating/pretzel/even", im, "P(a,b,c), a even, b,c odd, not 0 or +-1", "2(b+c)"});

    const std::string wm(cite::wu_montesinos);
    for (const auto& e : montesinos_entries()) {
        rows.push_back({"montesinos/" + e.id, wm, e.knot + "; " + e.constraint, e.formula});
    }
    const std::string wa(cite::wu_arborescent);
    for (const auto& e : arborescent_typeII_slopes()) {
        rows.push_back({"arborescent-II/" + e.knot, wa, "-", e.slope.str()});
    }
    return rows;
}

std::string dump_tables() {
    std::ostringstream os;
    os << "# " << kTablesVersion << "\n";
    os << "id\tcitation\tconstraint\tslope-formula\n";
    for (const auto& r : table_rows()) os << r.id << '\t' << r.citation << '\t' << r.constraint << '\t' << r.formula << '\n';
    os << "# citations\n";
    for (const auto& c : citations()) os << "cite\t" << c.key << '\t' << "-" << '\t' << c.statement << '\n';
    return os.str();
}

} // namespace cosmetic
