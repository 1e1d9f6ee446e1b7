#pragma once

#include <cstdint>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cosmetic {

using Integer = std::int64_t;

/// A slope p/q on a boundary torus, written in the meridian-longitude basis
/// as p*mu + q*lambda. Always stored reduced with the sign on the numerator;
/// infinity (the meridian) is 1/0.
class Slope {
public:
    /// Reduces (p, q) to canonical form. Throws std::invalid_argument on (0, 0).
    static Slope normalize(Integer p, Integer q);

    static Slope infinity() { return Slope(1, 0); }
    static Slope integral(Integer p) { return Slope(p, 1); }

    /// Parses "p/q", "p" or "inf".
    static Slope parse(std::string_view text);

    Integer num() const { return num_; }
    Integer den() const { return den_; }

    bool is_infinity() const { return den_ == 0; }
    bool is_integral() const { return den_ == 1; }

    Slope operator-() const { return is_infinity() ? *this : Slope(-num_, den_); }

    std::string str() const;

    friend bool operator==(const Slope&, const Slope&) = default;
    /// Orders by rational value with infinity last; used only for sorted containers.
    friend bool operator<(const Slope& a, const Slope& b);

private:
    Slope(Integer p, Integer q) : num_(p), den_(q) {}

    Integer num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

using SlopePair = std::pair<Slope, Slope>;

/// Geometric intersection number |p q' - q p'|.
Integer distance(const Slope& a, const Slope& b);

/// All (p/q, -p/q) with p, q > 0 coprime and 2pq <= max_delta, ordered by
/// (p, q). Assumes r = -s has already been imposed.
std::vector<SlopePair> enumerate_candidate_pairs(Integer max_delta = 8);

/// q^2 == -1 (mod p) for the slope p/q. Requires p >= 1.
bool niwu_congruence(const Slope& s);

/// Whether some unit u of Z/pZ satisfies q == q2 * u^2 (mod p), i.e. whether
/// the meridian self-linkings -q/p and -q2/p can be matched by an isometry of
/// the linking forms of the p/q and p/q2 fillings. Exhaustive over units.
bool linking_form_compatible(Integer p, Integer q, Integer q2);

/// Case labels for two homeomorphic exceptional fillings p/q and p/q' (q < q')
/// of a one-cusped hyperbolic exterior with b1 = 1, measured against the
/// rational longitude.
enum class ExceptionalPairCase {
    A_p1_within8,           ///< p = 1 and |q - q'| <= 8
    B_p5or7_adjacent,       ///< p in {5, 7} and q' = q + 1
    C_p3or4_within2,        ///< p in {3, 4} and q' in {q + 1, q + 2}
    D_p2_step2or4,          ///< p = 2 and q' in {q + 2, q + 4}
    CyclicOrReducibleForced, ///< p = 1 and q' = q + 1 (cyclic/reducible filling)
    ViolatesDistanceBound,
};

std::string_view to_string(ExceptionalPairCase c);

/// Throws std::invalid_argument if p <= 0, q >= q2 or either q is not coprime to p.
/// With cyclic_or_reducible set the distance bound tightens from 8 to 1.
ExceptionalPairCase classify_exceptional_pair(Integer p, Integer q, Integer q2,
                                              bool cyclic_or_reducible = false);

/// Non-negative residue of a modulo m (m >= 1).
inline Integer mod_floor(Integer a, Integer m) {
    Integer r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace cosmetic
