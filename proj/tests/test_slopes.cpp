#include "doctest.h"

#include <numeric>
#include <set>
#include <stdexcept>

#include "cosmetic/slope.hpp"
#include "generators.hpp"

using namespace cosmetic;

namespace {

// Brute-force oracles, written without any helper from the library.

bool niwu_oracle(Integer p, Integer q) {
    for (Integer x = 0; x < p; ++x)
        if ((((q % p) + p) % p) == x) return (x * x + 1) % p == 0;
    return false;
}

bool linking_oracle(Integer p, Integer q, Integer q2) {
    std::set<Integer> orbit;
    for (Integer u = 1; u < p; ++u)
        if (std::gcd(u, p) == 1) orbit.insert((((q2 * u * u) % p) + p) % p);
    return orbit.count(((q % p) + p) % p) > 0;
}

std::vector<SlopePair> pairs_oracle(Integer max_delta) {
    std::vector<SlopePair> out;
    for (Integer p = 1; 2 * p <= max_delta; ++p)
        for (Integer q = 1; 2 * p * q <= max_delta; ++q)
            if (std::gcd(p, q) == 1) out.emplace_back(Slope::normalize(p, q), Slope::normalize(-p, q));
    return out;
}

} // namespace

TEST_SUITE("slopes") {

TEST_CASE("normalize reduces and moves the sign to the numerator") {
    CHECK(Slope::normalize(4, -6) == Slope::normalize(-2, 3));
    CHECK(Slope::normalize(-4, -6).num() == 2);
    CHECK(Slope::normalize(-4, -6).den() == 3);
    CHECK(Slope::normalize(0, -5) == Slope::integral(0));
    CHECK(Slope::normalize(-7, 0) == Slope::infinity());
    CHECK_THROWS_AS(Slope::normalize(0, 0), std::invalid_argument);
}

TEST_CASE("parse and print") {
    CHECK(Slope::parse("2/1") == Slope::integral(2));
    CHECK(Slope::parse("-2") == Slope::integral(-2));
    CHECK(Slope::parse("inf").is_infinity());
    CHECK(Slope::parse("6/4") == Slope::normalize(3, 2));
    CHECK(Slope::parse("-1/2").str() == "-1/2");
    CHECK(Slope::infinity().str() == "inf");
    CHECK_THROWS_AS(Slope::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Slope::parse("0/0"), std::invalid_argument);
    CHECK_THROWS_AS(Slope::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Slope::parse(""), std::invalid_argument);
}

TEST_CASE("round trip through str") {
    for (int i = 0; i < 500; ++i) {
        const Slope s = gen::slope(50);
        CHECK(Slope::parse(s.str()) == s);
    }
}

TEST_CASE("distance examples") {
    CHECK(distance(Slope::integral(2), Slope::integral(-2)) == 4);
    CHECK(distance(Slope::normalize(1, 2), Slope::normalize(-1, 2)) == 4);
    CHECK(distance(Slope::infinity(), Slope::normalize(5, 3)) == 3);
    CHECK(distance(Slope::integral(1), Slope::integral(1)) == 0);
}

TEST_CASE("distance properties") {
    for (int i = 0; i < 1000; ++i) {
        const Slope a = gen::slope(40), b = gen::slope(40);
        CHECK(distance(a, b) == distance(b, a));
        CHECK(distance(a, a) == 0);
        CHECK(distance(a, b) == distance(-a, -b));
        if (!a.is_infinity()) CHECK(distance(a, -a) == 2 * std::abs(a.num()) * a.den());
        CHECK(distance(Slope::infinity(), a) == a.den());
    }
}

TEST_CASE("ordering is by value with infinity last") {
    CHECK(Slope::normalize(-1, 2) < Slope::integral(0));
    CHECK(Slope::normalize(1, 3) < Slope::normalize(1, 2));
    CHECK(Slope::integral(1000) < Slope::infinity());
    CHECK_FALSE(Slope::infinity() < Slope::infinity());
}

TEST_CASE("candidate pairs agree with the brute-force oracle") {
    for (Integer m = 1; m <= 40; ++m) CHECK(enumerate_candidate_pairs(m) == pairs_oracle(m));
    CHECK(enumerate_candidate_pairs(8).size() == 7);
    CHECK(enumerate_candidate_pairs(1).empty());
    CHECK_THROWS_AS(enumerate_candidate_pairs(0), std::invalid_argument);
}

TEST_CASE("every candidate pair is r = -s at distance 2pq") {
    for (const auto& [r, s] : enumerate_candidate_pairs(60)) {
        CHECK(s == -r);
        CHECK(distance(r, s) == 2 * r.num() * r.den());
        CHECK(distance(r, s) <= 60);
    }
}

TEST_CASE("Ni-Wu congruence examples") {
    CHECK(niwu_congruence(Slope::normalize(5, 2)));
    CHECK_FALSE(niwu_congruence(Slope::normalize(3, 1)));
    CHECK(niwu_congruence(Slope::integral(1)));
    CHECK(niwu_congruence(Slope::integral(2)));
    CHECK(niwu_congruence(Slope::normalize(13, 5)));
    CHECK_THROWS_AS(niwu_congruence(Slope::normalize(-5, 2)), std::invalid_argument);
    CHECK_THROWS_AS(niwu_congruence(Slope::integral(0)), std::invalid_argument);
}

TEST_CASE("Ni-Wu congruence agrees with the residue scan") {
    for (Integer p = 1; p <= 60; ++p)
        for (Integer q = 1; q <= 60; ++q)
            if (std::gcd(p, q) == 1) CHECK(niwu_congruence(Slope::normalize(p, q)) == niwu_oracle(p, q));
}

TEST_CASE("linking-form compatibility examples") {
    CHECK(linking_form_compatible(1, 5, -5));
    CHECK(linking_form_compatible(2, 1, -1));
    CHECK_FALSE(linking_form_compatible(3, 1, -1));
    CHECK_FALSE(linking_form_compatible(4, 1, -1));
    for (Integer q = 1; q < 40; q += 2) CHECK_FALSE(linking_form_compatible(4, q, q + 2));
    CHECK_THROWS_AS(linking_form_compatible(4, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(linking_form_compatible(0, 1, 1), std::invalid_argument);
}

TEST_CASE("linking-form compatibility agrees with the orbit oracle") {
    for (Integer p = 1; p <= 30; ++p)
        for (Integer q = -30; q <= 30; ++q)
            for (Integer q2 = -30; q2 <= 30; q2 += 7) {
                if (std::gcd(p, q) != 1 || std::gcd(p, q2) != 1) continue;
                CHECK(linking_form_compatible(p, q, q2) == (p == 1 || linking_oracle(p, q, q2)));
            }
}

TEST_CASE("linking-form compatibility is an equivalence on units") {
    for (int i = 0; i < 300; ++i) {
        const Integer p = gen::integer(2, 40);
        Integer a = gen::integer(1, 200), b = gen::integer(1, 200), c = gen::integer(1, 200);
        if (std::gcd(a, p) != 1 || std::gcd(b, p) != 1 || std::gcd(c, p) != 1) continue;
        CHECK(linking_form_compatible(p, a, a));
        CHECK(linking_form_compatible(p, a, b) == linking_form_compatible(p, b, a));
        if (linking_form_compatible(p, a, b) && linking_form_compatible(p, b, c))
            CHECK(linking_form_compatible(p, a, c));
    }
}

TEST_CASE("exceptional pair case labels") {
    CHECK(classify_exceptional_pair(1, 0, 8) == ExceptionalPairCase::A_p1_within8);
    CHECK(classify_exceptional_pair(1, 0, 9) == ExceptionalPairCase::ViolatesDistanceBound);
    CHECK(classify_exceptional_pair(5, 1, 2) == ExceptionalPairCase::B_p5or7_adjacent);
    CHECK(classify_exceptional_pair(7, 3, 4) == ExceptionalPairCase::B_p5or7_adjacent);
    CHECK(classify_exceptional_pair(3, 1, 2) == ExceptionalPairCase::C_p3or4_within2);
    CHECK(classify_exceptional_pair(4, 1, 3) == ExceptionalPairCase::C_p3or4_within2);
    CHECK(classify_exceptional_pair(2, 1, 3) == ExceptionalPairCase::D_p2_step2or4);
    CHECK(classify_exceptional_pair(2, 1, 5) == ExceptionalPairCase::D_p2_step2or4);
    CHECK(classify_exceptional_pair(6, 1, 7) == ExceptionalPairCase::ViolatesDistanceBound);
    CHECK(classify_exceptional_pair(1, 0, 1, true) == ExceptionalPairCase::CyclicOrReducibleForced);
    CHECK(classify_exceptional_pair(1, 0, 2, true) == ExceptionalPairCase::ViolatesDistanceBound);
    CHECK_THROWS_AS(classify_exceptional_pair(0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(classify_exceptional_pair(3, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(classify_exceptional_pair(4, 1, 2), std::invalid_argument);
}

TEST_CASE("every labelled pair respects distance p |q - q'| <= 8") {
    for (Integer p = 1; p <= 10; ++p)
        for (Integer q = -10; q <= 10; ++q)
            for (Integer q2 = q + 1; q2 <= q + 10; ++q2) {
                if (std::gcd(p, q) != 1 || std::gcd(p, q2) != 1) continue;
                const auto c = classify_exceptional_pair(p, q, q2);
                const Integer d = distance(Slope::normalize(p, q), Slope::normalize(p, q2));
                if (c != ExceptionalPairCase::ViolatesDistanceBound) CHECK(d <= 8);
            }
}

}
