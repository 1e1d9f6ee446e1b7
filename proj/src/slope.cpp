#include "cosmetic/slope.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cosmetic {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    Integer value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        throw std::invalid_argument("bad slope '" + std::string(whole) + "'");
    }
    return value;
}

void require_coprime(Integer p, Integer q, const char* what) {
    if (std::gcd(p, q) != 1) {
        throw std::invalid_argument(std::string(what) + ": gcd(" + std::to_string(p) + ", " +
                                    std::to_string(q) + ") != 1");
    }
}

} // namespace

Slope Slope::normalize(Integer p, Integer q) {
    if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0 is undefined");
    if (q == 0) return Slope(1, 0);
    const Integer g = std::gcd(p, q);
    p /= g;
    q /= g;
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return Slope(p, q);
}

Slope Slope::parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "1/0") return infinity();
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return normalize(parse_integer(text, text), 1);
    const Integer p = parse_integer(text.substr(0, slash), text);
    const Integer q = parse_integer(text.substr(slash + 1), text);
    if (q < 0) throw std::invalid_argument("bad slope '" + std::string(text) + "': sign belongs on the numerator");
    return normalize(p, q);
}

std::string Slope::str() const {
    if (is_infinity()) return "inf";
    return std::to_string(num_) + "/" + std::to_string(den_);
}

bool operator<(const Slope& a, const Slope& b) {
    if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

Integer distance(const Slope& a, const Slope& b) {
    const Integer det = a.num() * b.den() - a.den() * b.num();
    return det < 0 ? -det : det;
}

std::vector<SlopePair> enumerate_candidate_pairs(Integer max_delta) {
    if (max_delta < 1) throw std::invalid_argument("max_delta must be >= 1");
    std::vector<SlopePair> pairs;
    for (Integer p = 1; 2 * p <= max_delta; ++p) {
        for (Integer q = 1; 2 * p * q <= max_delta; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const Slope r = Slope::normalize(p, q);
            pairs.emplace_back(r, -r);
        }
    }
    return pairs;
}

bool niwu_congruence(const Slope& s) {
    if (s.num() <= 0) throw std::invalid_argument("niwu_congruence needs p >= 1, got " + s.str());
    const Integer p = s.num();
    const Integer q = mod_floor(s.den(), p);
    return mod_floor(q * q + 1, p) == 0;
}

bool linking_form_compatible(Integer p, Integer q, Integer q2) {
    if (p < 1) throw std::invalid_argument("linking_form_compatible needs p >= 1");
    require_coprime(p, q, "linking_form_compatible");
    require_coprime(p, q2, "linking_form_compatible");
    if (p == 1) return true;
    const Integer target = mod_floor(q, p);
    const Integer base = mod_floor(q2, p);
    for (Integer u = 1; u < p; ++u) {
        if (std::gcd(u, p) != 1) continue;
        if (mod_floor(base * u % p * u, p) == target) return true;
    }
    return false;
}

std::string_view to_string(ExceptionalPairCase c) {
    switch (c) {
    case ExceptionalPairCase::A_p1_within8: return "(a) p=1, |q-q'|<=8";
    case ExceptionalPairCase::B_p5or7_adjacent: return "(b) p in {5,7}, q'=q+1";
    case ExceptionalPairCase::C_p3or4_within2: return "(c) p in {3,4}, q' in {q+1,q+2}";
    case ExceptionalPairCase::D_p2_step2or4: return "(d) p=2, q' in {q+2,q+4}";
    case ExceptionalPairCase::CyclicOrReducibleForced: return "cyclic/reducible: p=1, q'=q+1";
    case ExceptionalPairCase::ViolatesDistanceBound: return "violates distance bound";
    }
    return "?";
}

ExceptionalPairCase classify_exceptional_pair(Integer p, Integer q, Integer q2, bool cyclic_or_reducible) {
    if (p <= 0) throw std::invalid_argument("classify_exceptional_pair needs p > 0");
    if (q >= q2) throw std::invalid_argument("classify_exceptional_pair needs q < q'");
    require_coprime(p, q, "classify_exceptional_pair");
    require_coprime(p, q2, "classify_exceptional_pair");

    const Integer delta = distance(Slope::normalize(p, q), Slope::normalize(p, q2));

    if (cyclic_or_reducible) {
        return delta <= 1 ? ExceptionalPairCase::CyclicOrReducibleForced
                          : ExceptionalPairCase::ViolatesDistanceBound;
    }
    if (delta > 8) return ExceptionalPairCase::ViolatesDistanceBound;

    // With both fractions reduced, p = 6 and p = 8 cannot occur (one of q, q+1
    // is even), and p = 2 forces an even gap.
    switch (p) {
    case 1: return ExceptionalPairCase::A_p1_within8;
    case 2: return ExceptionalPairCase::D_p2_step2or4;
    case 3:
    case 4: return ExceptionalPairCase::C_p3or4_within2;
    case 5:
    case 7: return ExceptionalPairCase::B_p5or7_adjacent;
    default: break;
    }
    return ExceptionalPairCase::ViolatesDistanceBound;
}

} // namespace cosmetic
