#include "doctest.h"

#include <stdexcept>

#include "cosmetic/homology.hpp"
#include "generators.hpp"

using namespace cosmetic;

namespace {

// Cofactor expansion along the first row.
Integer cofactor_det(const MatrixXi64& m) {
    const Eigen::Index n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Integer sum = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        MatrixXi64 minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r)
            for (Eigen::Index c = 0, k = 0; c < n; ++c)
                if (c != j) minor(r - 1, k++) = m(r, c);
        sum += (j % 2 ? -1 : 1) * m(0, j) * cofactor_det(minor);
    }
    return sum;
}

FramedLink link_of(MatrixXi64 lk, std::vector<Slope> framings) {
    return FramedLink{std::move(lk), std::move(framings)};
}

// Multiply by a random unimodular matrix built from elementary operations.
MatrixXi64 scramble(MatrixXi64 m) {
    for (int k = 0; k < 6; ++k) {
        const Eigen::Index i = gen::integer(0, m.rows() - 1), j = gen::integer(0, m.rows() - 1);
        if (i != j) m.row(i) += gen::integer(-2, 2) * m.row(j);
        const Eigen::Index a = gen::integer(0, m.cols() - 1), b = gen::integer(0, m.cols() - 1);
        if (a != b) m.col(a) += gen::integer(-2, 2) * m.col(b);
    }
    return m;
}

} // namespace

TEST_SUITE("homology") {

TEST_CASE("framing matrix and H1 of small links") {
    MatrixXi64 lk(2, 2);
    lk << 0, 2, 2, 0;
    const FramedLink link = link_of(lk, {Slope::integral(3), Slope::integral(5)});
    MatrixXi64 expected(2, 2);
    expected << 3, 2, 2, 5;
    CHECK(framing_matrix(link) == expected);
    CHECK(h1_order(link) == 11);
    CHECK(h1_group(link).invariant_factors == std::vector<Integer>{11});

    const FramedLink single = link_of(MatrixXi64::Zero(1, 1), {Slope::normalize(7, 2)});
    CHECK(h1_order(single) == 7);
}

TEST_CASE("rational framings put q_j in column j") {
    MatrixXi64 lk(2, 2);
    lk << 0, 1, 1, 0;
    const FramedLink link = link_of(lk, {Slope::normalize(3, 2), Slope::normalize(5, 3)});
    MatrixXi64 expected(2, 2);
    expected << 3, 3, 2, 5;
    CHECK(framing_matrix(link) == expected);
    CHECK(h1_order(link) == 9);
}

TEST_CASE("infinite framings erase their component") {
    MatrixXi64 lk(2, 2);
    lk << 0, 4, 4, 0;
    const FramedLink link = link_of(lk, {Slope::integral(3), Slope::infinity()});
    CHECK(h1_order(link) == 3);
    CHECK(h1_group(link).str() == "Z/3");
    CHECK_THROWS_AS(framing_matrix(link), std::invalid_argument);
    CHECK(h1_group(link_of(MatrixXi64::Zero(1, 1), {Slope::infinity()})).is_trivial());
}

TEST_CASE("zero framing gives infinite H1") {
    const FramedLink link = link_of(MatrixXi64::Zero(1, 1), {Slope::integral(0)});
    CHECK(h1_order(link) == 0);
    const AbelianGroup g = h1_group(link);
    CHECK(g.free_rank == 1);
    CHECK(g.order() == 0);
    CHECK(g.str() == "Z");
}

TEST_CASE("validation") {
    MatrixXi64 lk(2, 2);
    lk << 0, 2, 1, 0;
    CHECK_THROWS_AS(link_of(lk, {Slope::integral(1), Slope::integral(1)}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(link_of(MatrixXi64::Zero(2, 2), {Slope::integral(1)}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(link_of(MatrixXi64::Zero(2, 3), {Slope::integral(1), Slope::integral(1)}).validate(),
                    std::invalid_argument);
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
    for (int t = 0; t < 400; ++t) {
        const Eigen::Index n = gen::integer(1, 5);
        const MatrixXi64 m = gen::matrix(n, n, -9, 9);
        CHECK(determinant_bareiss(m) == cofactor_det(m));
    }
    CHECK(determinant_bareiss(MatrixXi64(0, 0)) == 1);
    MatrixXi64 swap(2, 2);
    swap << 0, 1, 1, 0;
    CHECK(determinant_bareiss(swap) == -1);
}

TEST_CASE("Smith form of hand-computed matrices") {
    MatrixXi64 m(2, 2);
    m << 2, 0, 0, 3;
    CHECK(smith_normal_form(m) == AbelianGroup{{6}, 0});
    m << 2, 4, 4, 8;
    CHECK(smith_normal_form(m) == AbelianGroup{{2}, 1});
    m << 4, 0, 0, 6;
    CHECK(smith_normal_form(m) == AbelianGroup{{2, 12}, 0});
    MatrixXi64 z = MatrixXi64::Zero(3, 3);
    CHECK(smith_normal_form(z) == AbelianGroup{{}, 3});
    CHECK(smith_normal_form(MatrixXi64::Identity(4, 4)).is_trivial());
    MatrixXi64 rect(2, 3);
    rect << 2, 0, 0, 0, 2, 0;
    CHECK_THROWS_AS(smith_normal_form(rect), std::invalid_argument);
}

TEST_CASE("Smith form is invariant under unimodular change of basis") {
    for (int t = 0; t < 300; ++t) {
        const Eigen::Index n = gen::integer(1, 4);
        const MatrixXi64 m = gen::matrix(n, n, -6, 6);
        CHECK(smith_normal_form(scramble(m)) == smith_normal_form(m));
    }
}

TEST_CASE("invariant factors form a divisibility chain whose product is |det|") {
    for (int t = 0; t < 500; ++t) {
        const FramedLink link = gen::framed_link(gen::integer(1, 4), -9, 9, gen::integer(0, 1) == 1);
        const AbelianGroup g = h1_group(link);
        for (std::size_t i = 1; i < g.invariant_factors.size(); ++i)
            CHECK(g.invariant_factors[i] % g.invariant_factors[i - 1] == 0);
        for (Integer d : g.invariant_factors) CHECK(d >= 2);
        CHECK(g.order() == h1_order(link));
        CHECK(std::abs(cofactor_det(framing_matrix(link))) == h1_order(link));
    }
}

TEST_CASE("Watson order") {
    CHECK(watson_order(1, Slope::integral(0), Slope::integral(5)) == 5);
    CHECK(watson_order(2, Slope::integral(0), Slope::normalize(3, 2)) == 6);
    CHECK(watson_order(1, Slope::integral(0), Slope::integral(0)) == 0);
    CHECK_THROWS_AS(watson_order(0, Slope::integral(0), Slope::integral(1)), std::invalid_argument);
}

TEST_CASE("Watson order matches one-component surgery") {
    for (int t = 0; t < 200; ++t) {
        const Slope s = gen::slope(30);
        if (s.is_infinity()) continue;
        const FramedLink link = link_of(MatrixXi64::Zero(1, 1), {s});
        CHECK(watson_order(1, Slope::integral(0), s) == h1_order(link));
    }
}

TEST_CASE("meridian self-linking") {
    CHECK(meridian_self_linking(5, 2) == Rational(3, 5));
    CHECK(meridian_self_linking(1, 7) == Rational(0));
    CHECK(meridian_self_linking(4, -1) == Rational(1, 4));
    for (Integer p = 1; p < 30; ++p)
        for (Integer q = -30; q <= 30; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const Rational r = meridian_self_linking(p, q);
            CHECK(r >= Rational(0));
            CHECK(r < Rational(1));
            const Rational shifted = r + Rational(q, p);
            CHECK(shifted.denominator() == 1);
        }
}

}
