#include "doctest.h"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

#include "cosmetic/alexander.hpp"
#include "cosmetic/polynomial.hpp"
#include "generators.hpp"

using namespace cosmetic;
using boost::multiprecision::cpp_rational;

namespace {

// Laurent coefficients c_k for k = -d..d, stored at index k + d.
std::vector<Integer> laurent(const SymmetricLaurent& p) {
    const int d = p.degree();
    std::vector<Integer> c(static_cast<std::size_t>(2 * d + 1));
    for (int k = -d; k <= d; ++k) c[static_cast<std::size_t>(k + d)] = p.coefficient(k);
    return c;
}

// d^2/dT^2 of sum c_k T^k at T = 1, term by term: sum c_k k (k - 1).
Integer symbolic_second_derivative(const SymmetricLaurent& p) {
    const auto c = laurent(p);
    const int d = p.degree();
    Integer sum = 0;
    for (int k = -d; k <= d; ++k) sum += c[static_cast<std::size_t>(k + d)] * k * (k - 1);
    return sum;
}

// Central second difference at T = 1 with step h, evaluated exactly.
cpp_rational second_difference(const SymmetricLaurent& p, const cpp_rational& h) {
    auto eval = [&](const cpp_rational& t) {
        cpp_rational sum = 0;
        for (int k = -p.degree(); k <= p.degree(); ++k) {
            cpp_rational power = 1;
            for (int e = 0; e < std::abs(k); ++e) power *= (k > 0 ? t : 1 / t);
            sum += p.coefficient(k) * power;
        }
        return sum;
    };
    return (eval(1 + h) - 2 * eval(cpp_rational(1)) + eval(1 - h)) / (h * h);
}

// det(tV - V^T) for V = [[a, b], [c, d]], expanded by hand:
// (a t - a)(d t - d) - (b t - c)(c t - b)
//   = (ad - bc) t^2 + (-2ad + b^2 + c^2) t + (ad - bc).
std::vector<Integer> two_by_two(Integer a, Integer b, Integer c, Integer d) {
    return {a * d - b * c, -2 * a * d + b * b + c * c, a * d - b * c};
}

} // namespace

TEST_SUITE("alexander") {

TEST_CASE("normalization is enforced") {
    CHECK_NOTHROW(SymmetricLaurent::from_coefficients({-1, 1}));
    CHECK_THROWS_AS(SymmetricLaurent::from_coefficients({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricLaurent::from_coefficients({}), std::invalid_argument);
    CHECK(SymmetricLaurent::from_coefficients({1, 0, 0}) == SymmetricLaurent::one());
    CHECK(SymmetricLaurent::from_coefficients({-1, 1}).coefficient(-1) == 1);
    CHECK(SymmetricLaurent::from_coefficients({-1, 1}).coefficient(5) == 0);
}

TEST_CASE("printing") {
    CHECK(SymmetricLaurent::from_coefficients({-1, 1}).str() == "T - 1 + T^-1");
    CHECK(SymmetricLaurent::from_coefficients({3, -1}).str() == "-T + 3 - T^-1");
    CHECK(SymmetricLaurent::one().str() == "1");
    CHECK(SymmetricLaurent::from_coefficients({1, -1, 1}).str() == "T^2 - T + 1 - T^-1 + T^-2");
}

TEST_CASE("trefoil and figure-8 from Seifert matrices") {
    MatrixXi64 v(2, 2);
    v << -1, 1, 0, -1;
    const auto trefoil = from_seifert_matrix(SeifertMatrix(v));
    CHECK(trefoil.coefficients() == std::vector<Integer>{-1, 1});
    CHECK(second_derivative_at_one(trefoil) == 2);

    v << 1, 1, 0, -1;
    const auto fig8 = from_seifert_matrix(SeifertMatrix(v));
    CHECK(fig8.coefficients() == std::vector<Integer>{3, -1});
    CHECK(second_derivative_at_one(fig8) == -2);
}

TEST_CASE("Seifert matrix validation") {
    CHECK_THROWS_AS(SeifertMatrix(MatrixXi64::Zero(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(SeifertMatrix(MatrixXi64::Zero(2, 2)), std::invalid_argument);
    MatrixXi64 sym(2, 2);
    sym << 1, 1, 1, 1;
    CHECK_THROWS_AS(SeifertMatrix{sym}, std::invalid_argument);
    CHECK(from_seifert_matrix(SeifertMatrix(MatrixXi64(0, 0))) == SymmetricLaurent::one());
}

TEST_CASE("2x2 Seifert polynomials agree with the hand expansion") {
    int checked = 0;
    for (Integer a = -4; a <= 4; ++a)
        for (Integer b = -4; b <= 4; ++b)
            for (Integer d = -4; d <= 4; ++d)
                for (Integer c : {b - 1, b + 1}) {
                    MatrixXi64 v(2, 2);
                    v << a, b, c, d;
                    const auto expected = two_by_two(a, b, c, d);
                    const auto p = from_seifert_matrix(SeifertMatrix(v));
                    CHECK(p.coefficient(0) == expected[1]);
                    CHECK(p.coefficient(1) == expected[0]);
                    ++checked;
                }
    CHECK(checked > 0);
}

TEST_CASE("block sums of Seifert matrices multiply polynomials") {
    MatrixXi64 trefoil(2, 2), fig8(2, 2);
    trefoil << -1, 1, 0, -1;
    fig8 << 1, 1, 0, -1;
    MatrixXi64 v = MatrixXi64::Zero(4, 4);
    v.topLeftCorner(2, 2) = trefoil;
    v.bottomRightCorner(2, 2) = fig8;
    const auto product = from_seifert_matrix(SeifertMatrix(v));
    // (T - 1 + T^-1)(-T + 3 - T^-1) = -T^2 + 4T - 5 + 4T^-1 - T^-2
    CHECK(product.coefficients() == std::vector<Integer>{-5, 4, -1});
    CHECK(product.degree() == 2);
}

TEST_CASE("second derivative agrees with term-by-term differentiation") {
    for (int t = 0; t < 1000; ++t) {
        const auto p = gen::symmetric_polynomial(12, 20);
        CHECK(second_derivative_at_one(p) == symbolic_second_derivative(p));
    }
}

TEST_CASE("second derivative agrees with a shrinking finite difference") {
    const cpp_rational h1(1, 1024), h2(1, 2048);
    for (int t = 0; t < 50; ++t) {
        const auto p = gen::symmetric_polynomial(6, 5);
        const cpp_rational exact = second_derivative_at_one(p);
        // The central difference error is O(h^2); Richardson extrapolation removes it
        // to O(h^4), which is far below 1/2 at this step size.
        const cpp_rational richardson = (4 * second_difference(p, h2) - second_difference(p, h1)) / 3;
        const cpp_rational err = richardson - exact;
        CHECK(abs(err) < cpp_rational(1, 1000));
    }
}

TEST_CASE("twist knots") {
    const auto p = twist_knot_polynomial(2);
    CHECK(p.coefficients() == std::vector<Integer>{5, -2});
    CHECK(second_derivative_at_one(p) == -4);
    CHECK(twist_knot_polynomial(-1).coefficients() == std::vector<Integer>{-1, 1});
    CHECK(twist_knot_polynomial(1).coefficients() == std::vector<Integer>{3, -1});
    CHECK_THROWS_AS(twist_knot_polynomial(0), std::invalid_argument);
    for (Integer n = -50; n <= 50; ++n)
        if (n != 0) CHECK(second_derivative_at_one(twist_knot_polynomial(n)) == -2 * n);
}

TEST_CASE("torsion invariants") {
    const auto trefoil = SymmetricLaurent::from_coefficients({-1, 1});
    CHECK(torsion_invariants(trefoil) == std::vector<Integer>{1, 0});
    CHECK(torsion_norm(trefoil) == 1);
    const auto t25 = SymmetricLaurent::from_coefficients({1, -1, 1});
    // t0 = 1*(-1) + 2*1, t1 = 1*1
    CHECK(torsion_invariants(t25) == std::vector<Integer>{1, 1, 0});
    CHECK(torsion_norm(t25) == 3);
    CHECK(torsion_invariants(SymmetricLaurent::one()) == std::vector<Integer>{0});
}

TEST_CASE("torsion identity t0 + 2 sum t_i = Delta''(1) / 2") {
    for (int t = 0; t < 2000; ++t) {
        const auto p = gen::symmetric_polynomial(12, 30);
        const auto ts = torsion_invariants(p);
        Integer lhs = ts[0];
        for (std::size_t i = 1; i < ts.size(); ++i) lhs += 2 * ts[i];
        CHECK(2 * lhs == second_derivative_at_one(p));
        CHECK(ts.back() == 0);
    }
}

TEST_CASE("L-space form recognition") {
    const auto trefoil = SymmetricLaurent::from_coefficients({-1, 1});
    REQUIRE(lspace_form(trefoil));
    CHECK(lspace_form(trefoil)->gaps() == std::vector<Integer>{1});
    const auto t25 = SymmetricLaurent::from_coefficients({1, -1, 1});
    REQUIRE(lspace_form(t25));
    CHECK(lspace_form(t25)->gaps() == std::vector<Integer>{1, 2});
    CHECK(lspace_form(SymmetricLaurent::one())->empty());
    CHECK_FALSE(lspace_form(SymmetricLaurent::from_coefficients({3, -1})));
    CHECK_FALSE(lspace_form(SymmetricLaurent::from_coefficients({5, -1, -1})));
    // T(3,4): T^3 - T^2 + 1 - T^-2 + T^-3
    const auto t34 = SymmetricLaurent::from_coefficients({1, 0, -1, 1});
    REQUIRE(lspace_form(t34));
    CHECK(lspace_form(t34)->gaps() == std::vector<Integer>{2, 3});
}

TEST_CASE("gap sequence validation") {
    CHECK_THROWS_AS(GapSequence({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(GapSequence({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(GapSequence({3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(second_derivative_from_gaps(GapSequence({})), std::invalid_argument);
}

TEST_CASE("gap formula matches the reconstructed polynomial") {
    CHECK(second_derivative_from_gaps(GapSequence({1})) == 2);
    CHECK(second_derivative_from_gaps(GapSequence({1, 2})) == 6);
    for (const auto& s : gen::increasing_subsets(10)) {
        const GapSequence g(s);
        const auto p = lspace_polynomial(g);
        CHECK(lspace_form(p) == g);
        if (g.empty()) continue;
        CHECK(second_derivative_from_gaps(g) == second_derivative_at_one(p));
        CHECK(second_derivative_from_gaps(g) != 0);
    }
}

TEST_CASE("Casson value of +1 surgery") {
    CHECK(casson_plus_one_surgery(SymmetricLaurent::from_coefficients({-1, 1})) == 2);
    CHECK(casson_plus_one_surgery(SymmetricLaurent::one()) == 0);
    for (int t = 0; t < 200; ++t) {
        const auto p = gen::symmetric_polynomial(8, 10);
        CHECK((casson_plus_one_surgery(p) == 0) == (second_derivative_at_one(p) == 0));
    }
}

TEST_CASE("integer polynomials") {
    const IntPolynomial x({0, 1});
    const IntPolynomial a = x * x - IntPolynomial(1);
    CHECK(a / (x - IntPolynomial(1)) == x + IntPolynomial(1));
    CHECK_THROWS_AS(a / (x * IntPolynomial(2)), std::domain_error);
    CHECK(a.evaluate(3) == 8);
    CHECK((a - a).degree() < 0);
}

}
