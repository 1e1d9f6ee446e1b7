#include "cosmetic/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace cosmetic {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InputError(where + ": " + what);
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw InputError("byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Integer as_integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<Integer>();
}

std::string as_string(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
}

void check_keys(const json& obj, const std::string& where, std::initializer_list<std::string_view> allowed) {
    if (!obj.is_object()) fail(where.empty() ? "<root>" : where, "expected an object");
    for (const auto& [key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            fail(where.empty() ? key : where + "." + key, "unknown field");
        }
    }
}

template <typename F>
auto guarded(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

SeifertMatrix seifert_from_json(const json& j, const std::string& where) {
    check_keys(j, where, {"size", "entries"});
    if (!j.contains("size") || !j.contains("entries")) fail(where, "needs size and entries");
    const Integer n = as_integer(j["size"], where + ".size");
    if (n < 0) fail(where + ".size", "negative");
    const json& entries = j["entries"];
    if (!entries.is_array() || static_cast<Integer>(entries.size()) != n * n) {
        fail(where + ".entries", "expected " + std::to_string(n * n) + " integers");
    }
    MatrixXi64 v(n, n);
    for (Integer k = 0; k < n * n; ++k) {
        v(k / n, k % n) = as_integer(entries[static_cast<std::size_t>(k)], where + ".entries[" + std::to_string(k) + "]");
    }
    return guarded(where, [&] { return SeifertMatrix(std::move(v)); });
}

SymmetricLaurent alexander_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) fail(where, "expected a non-empty list of [i, a_i] pairs");
    std::vector<Integer> coeffs;
    std::set<Integer> seen;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string at = where + "[" + std::to_string(k) + "]";
        const json& pair = j[k];
        if (!pair.is_array() || pair.size() != 2) fail(at, "expected [i, a_i]");
        const Integer i = as_integer(pair[0], at + "[0]");
        const Integer a = as_integer(pair[1], at + "[1]");
        if (i < 0) fail(at, "index must be >= 0");
        if (i > 4096) fail(at, "index too large");
        if (!seen.insert(i).second) fail(at, "duplicate index " + std::to_string(i));
        if (coeffs.size() <= static_cast<std::size_t>(i)) coeffs.resize(static_cast<std::size_t>(i) + 1, 0);
        coeffs[static_cast<std::size_t>(i)] = a;
    }
    return guarded(where, [&] { return SymmetricLaurent::from_coefficients(std::move(coeffs)); });
}

Tristate tristate_from_json(const json& j, const std::string& where) {
    if (j.is_boolean()) return j.get<bool>() ? Tristate::Yes : Tristate::No;
    return guarded(where, [&] { return parse_tristate(as_string(j, where)); });
}

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<Integer>());
    return guarded(where, [&] { return parse_rational(as_string(j, where)); });
}

FloerData floer_from_json(const json& j, const std::string& where) {
    check_keys(j, where, {"tau", "rank_hfred", "d_values", "d_half"});
    FloerData f;
    if (j.contains("tau")) f.tau = as_integer(j["tau"], where + ".tau");
    if (j.contains("rank_hfred")) {
        const json& r = j["rank_hfred"];
        if (!r.is_object()) fail(where + ".rank_hfred", "expected an object keyed by slope");
        for (const auto& [key, value] : r.items()) {
            const std::string at = where + ".rank_hfred." + key;
            const Slope s = guarded(at, [&] { return Slope::parse(key); });
            const Integer rank = as_integer(value, at);
            if (rank < 0) fail(at, "rank must be >= 0");
            f.rank_hfred[s] = rank;
        }
    }
    if (j.contains("d_values")) {
        const json& d = j["d_values"];
        if (!d.is_array()) fail(where + ".d_values", "expected a list");
        for (std::size_t k = 0; k < d.size(); ++k) {
            f.d_values.push_back(rational_from_json(d[k], where + ".d_values[" + std::to_string(k) + "]"));
        }
    }
    if (j.contains("d_half")) {
        const json& d = j["d_half"];
        if (!d.is_array() || d.size() != 2) fail(where + ".d_half", "expected [d_+1/2, d_-1/2]");
        f.d_half = std::pair{rational_from_json(d[0], where + ".d_half[0]"),
                             rational_from_json(d[1], where + ".d_half[1]")};
    }
    return f;
}

ordered_json rational_json(const Rational& r) { return rational_to_string(r); }

} // namespace

Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        Integer v = 0;
        const char* first = s.data();
        const char* last = s.data() + s.size();
        if (first != last && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || first == last) {
            throw std::invalid_argument("bad rational '" + std::string(text) + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("bad rational '" + std::string(text) + "': zero denominator");
    return Rational(parse_int(text.substr(0, slash)), den);
}

std::string rational_to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

KnotRecord parse_knot_file(std::string_view text) {
    const json j = parse_json(text);
    check_keys(j, "", {"name", "seifert", "alexander", "flags", "floer"});
    if (!j.contains("name")) fail("name", "missing");
    const std::string name = as_string(j["name"], "name");

    const bool has_seifert = j.contains("seifert");
    const bool has_alexander = j.contains("alexander");
    if (has_seifert == has_alexander) fail("seifert/alexander", "exactly one of the two must be present");
    KnotRecord::Source source = has_seifert ? KnotRecord::Source(seifert_from_json(j["seifert"], "seifert"))
                                            : KnotRecord::Source(alexander_from_json(j["alexander"], "alexander"));

    KnotFlags flags;
    if (j.contains("flags")) {
        const json& fl = j["flags"];
        check_keys(fl, "flags", {"hyperbolic", "amphicheiral", "nontrivial"});
        if (fl.contains("hyperbolic")) flags.hyperbolic = tristate_from_json(fl["hyperbolic"], "flags.hyperbolic");
        if (fl.contains("amphicheiral")) flags.amphicheiral = tristate_from_json(fl["amphicheiral"], "flags.amphicheiral");
        if (fl.contains("nontrivial")) {
            if (!fl["nontrivial"].is_boolean()) fail("flags.nontrivial", "expected true or false");
            flags.nontrivial = fl["nontrivial"].get<bool>();
        }
    }
    std::optional<FloerData> floer;
    if (j.contains("floer")) floer = floer_from_json(j["floer"], "floer");
    return guarded("<record>", [&] { return KnotRecord(name, std::move(source), flags, std::move(floer)); });
}

KnotRecord read_knot_file(const std::string& path) {
    const std::string text = slurp(path);
    try {
        return parse_knot_file(text);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string emit_knot_file(const KnotRecord& k) {
    ordered_json j;
    j["name"] = k.name();
    if (const auto* v = std::get_if<SeifertMatrix>(&k.source())) {
        const MatrixXi64& m = v->matrix();
        ordered_json entries = ordered_json::array();
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(m(r, c));
        j["seifert"] = {{"size", m.rows()}, {"entries", entries}};
    } else {
        const auto& p = std::get<SymmetricLaurent>(k.source());
        ordered_json pairs = ordered_json::array();
        for (int i = 0; i <= p.degree(); ++i)
            if (p.coefficient(i) != 0 || i == 0) pairs.push_back({i, p.coefficient(i)});
        j["alexander"] = pairs;
    }
    j["flags"] = {{"hyperbolic", to_string(k.flags().hyperbolic)},
                  {"amphicheiral", to_string(k.flags().amphicheiral)},
                  {"nontrivial", k.flags().nontrivial}};
    if (k.floer()) {
        const FloerData& f = *k.floer();
        ordered_json fj = ordered_json::object();
        if (f.tau) fj["tau"] = *f.tau;
        if (!f.rank_hfred.empty()) {
            ordered_json ranks = ordered_json::object();
            for (const auto& [s, r] : f.rank_hfred) ranks[s.str()] = r;
            fj["rank_hfred"] = ranks;
        }
        if (!f.d_values.empty()) {
            ordered_json d = ordered_json::array();
            for (const auto& v : f.d_values) d.push_back(rational_json(v));
            fj["d_values"] = d;
        }
        if (f.d_half) fj["d_half"] = {rational_json(f.d_half->first), rational_json(f.d_half->second)};
        j["floer"] = fj;
    }
    return j.dump(2) + "\n";
}

FramedLink parse_framed_link(std::string_view text) {
    const json j = parse_json(text);
    check_keys(j, "", {"components", "linking", "framings"});
    for (const char* key : {"components", "linking", "framings"})
        if (!j.contains(key)) fail(key, "missing");
    const Integer n = as_integer(j["components"], "components");
    if (n < 0) fail("components", "negative");
    const json& lk = j["linking"];
    if (!lk.is_array() || static_cast<Integer>(lk.size()) != n * n) {
        fail("linking", "expected " + std::to_string(n * n) + " integers (row-major)");
    }
    const json& fr = j["framings"];
    if (!fr.is_array() || static_cast<Integer>(fr.size()) != n) {
        fail("framings", "expected " + std::to_string(n) + " slopes");
    }
    FramedLink link;
    link.linking.resize(n, n);
    for (Integer k = 0; k < n * n; ++k) {
        link.linking(k / n, k % n) = as_integer(lk[static_cast<std::size_t>(k)], "linking[" + std::to_string(k) + "]");
    }
    for (Integer k = 0; k < n; ++k) {
        const std::string at = "framings[" + std::to_string(k) + "]";
        const std::string s = as_string(fr[static_cast<std::size_t>(k)], at);
        link.framings.push_back(guarded(at, [&] { return Slope::parse(s); }));
    }
    guarded("linking", [&] {
        link.validate();
        return 0;
    });
    return link;
}

FramedLink read_framed_link(const std::string& path) {
    const std::string text = slurp(path);
    try {
        return parse_framed_link(text);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

SymmetricLaurent parse_alexander(std::string_view text) { return alexander_from_json(parse_json(text), "alexander"); }

SeifertMatrix parse_seifert(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string_view::npos && text[first] == '{') return seifert_from_json(parse_json(text), "seifert");
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) fail("seifert", "expected 'size:entries' or a JSON object");
    const std::vector<Integer> size = guarded("seifert", [&] { return parse_integer_list(text.substr(0, colon)); });
    if (size.size() != 1 || size[0] < 0) fail("seifert", "bad size");
    const std::vector<Integer> entries =
        colon + 1 == text.size() ? std::vector<Integer>{} : guarded("seifert", [&] { return parse_integer_list(text.substr(colon + 1)); });
    const Integer n = size[0];
    if (static_cast<Integer>(entries.size()) != n * n) fail("seifert", "expected " + std::to_string(n * n) + " entries");
    MatrixXi64 v(n, n);
    for (Integer k = 0; k < n * n; ++k) v(k / n, k % n) = entries[static_cast<std::size_t>(k)];
    return guarded("seifert", [&] { return SeifertMatrix(std::move(v)); });
}

std::vector<Integer> parse_integer_list(std::string_view csv) {
    std::vector<Integer> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const auto comma = csv.find(',', start);
        std::string_view item = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        Integer v = 0;
        const char* first = item.data();
        const char* last = item.data() + item.size();
        if (first != last && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || first == last) {
            throw std::invalid_argument("bad integer '" + std::string(item) + "' at position " + std::to_string(out.size()));
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

const std::vector<KnotRecord>& catalog() {
    static const std::vector<KnotRecord> records = [] {
        auto seifert = [](Integer a, Integer b, Integer c, Integer d) {
            MatrixXi64 v(2, 2);
            v << a, b, c, d;
            return SeifertMatrix(v);
        };
        auto poly = [](std::vector<Integer> c) { return SymmetricLaurent::from_coefficients(std::move(c)); };
        using T = Tristate;
        std::vector<KnotRecord> out;
        out.emplace_back("unknot", poly({1}), KnotFlags{T::No, T::Yes, false});
        out.emplace_back("trefoil", seifert(-1, 1, 0, -1), KnotFlags{T::No, T::No, true});
        out.emplace_back("figure-8", seifert(1, 1, 0, -1), KnotFlags{T::Yes, T::Yes, true});
        out.emplace_back("twist(1)", twist_knot_polynomial(1), KnotFlags{T::Yes, T::Yes, true});
        out.emplace_back("twist(-1)", twist_knot_polynomial(-1), KnotFlags{T::No, T::No, true});
        out.emplace_back("twist(2)", twist_knot_polynomial(2), KnotFlags{T::Yes, T::No, true});
        out.emplace_back("twist(-2)", twist_knot_polynomial(-2), KnotFlags{T::Yes, T::No, true});
        out.emplace_back("torus(2,5)", poly({1, -1, 1}), KnotFlags{T::No, T::No, true});
        out.emplace_back("torus(3,4)", poly({1, 0, -1, 1}), KnotFlags{T::No, T::No, true});
        out.emplace_back("d2-zero", poly({5, -1, -2, 1}), KnotFlags{T::Yes, T::Unknown, true});
        return out;
    }();
    return records;
}

const KnotRecord& catalog_entry(std::string_view name) {
    for (const auto& k : catalog())
        if (k.name() == name) return k;
    throw InputError("no catalog entry '" + std::string(name) + "'");
}

} // namespace cosmetic
