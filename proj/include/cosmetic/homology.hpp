#pragma once

#include <Eigen/Core>
#include <boost/rational.hpp>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cosmetic/slope.hpp"

namespace cosmetic {

template <typename Scalar>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using MatrixXi64 = IntMatrix<Integer>;

using Rational = boost::rational<Integer>;

/// A framed link in an integral homology sphere: pairwise linking numbers
/// (diagonal ignored) and one framing slope per component. An infinite
/// framing means the component carries no surgery.
struct FramedLink {
    MatrixXi64 linking;
    std::vector<Slope> framings;

    Eigen::Index components() const { return static_cast<Eigen::Index>(framings.size()); }

    /// Throws std::invalid_argument unless the linking matrix is square,
    /// matches the framing count, and is symmetric off the diagonal.
    void validate() const;

    /// Drops every component with an infinite framing.
    FramedLink without_infinite_framings() const;
};

/// Finitely generated abelian group Z^free_rank + Z/d1 + ... + Z/dk with
/// d1 | d2 | ... | dk and each di >= 2.
struct AbelianGroup {
    std::vector<Integer> invariant_factors;
    Integer free_rank = 0;

    bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
    /// Order of the group, 0 when infinite.
    Integer order() const;
    std::string str() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// F[i][i] = p_i, F[i][j] = q_j lk(K_i, K_j). Rejects infinite framings.
MatrixXi64 framing_matrix(const FramedLink& link);

/// |det F|, with 0 standing for infinite H1. Infinite framings are erased first.
Integer h1_order(const FramedLink& link);

/// Full H1 of the surgered manifold via Smith form of the framing matrix.
AbelianGroup h1_group(const FramedLink& link);

/// c * Delta(alpha, lambda_M): the order of H1 of the filling M(alpha) when
/// c = |Tor H1(M)| * ord(i_* lambda_M).
Integer watson_order(Integer c, const Slope& lambda_M, const Slope& alpha);

/// The class of -q/p in Q/Z, as a reduced fraction in [0, 1). This is the
/// self-linking of the meridian in the p/q filling of a knot exterior.
Rational meridian_self_linking(Integer p, Integer q);

/// Fraction-free (Bareiss) determinant; exact for integral scalars.
template <typename Derived>
typename Derived::Scalar determinant_bareiss(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const Eigen::Index n = input.rows();
    if (n == 0) return Scalar(1);
    IntMatrix<Scalar> a = input;
    Scalar sign(1);
    Scalar previous(1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == Scalar(0)) {
            Eigen::Index swap = k + 1;
            while (swap < n && a(swap, k) == Scalar(0)) ++swap;
            if (swap == n) return Scalar(0);
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
            }
        }
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// Invariant factors and free rank of the cokernel of a square integer matrix.
/// The divisibility chain is checked before returning.
template <typename Derived>
AbelianGroup smith_normal_form(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    if (input.rows() != input.cols()) throw std::invalid_argument("smith_normal_form expects a square matrix");
    IntMatrix<Scalar> a = input;
    const Eigen::Index n = a.rows();
    auto magnitude = [](Scalar v) { return v < Scalar(0) ? Scalar(-v) : v; };

    for (Eigen::Index t = 0; t < n; ++t) {
        for (;;) {
            // Pivot on the smallest nonzero entry of the trailing block.
            Eigen::Index pr = -1, pc = -1;
            for (Eigen::Index i = t; i < n; ++i)
                for (Eigen::Index j = t; j < n; ++j)
                    if (a(i, j) != Scalar(0) && (pr < 0 || magnitude(a(i, j)) < magnitude(a(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr < 0) break;
            a.row(t).swap(a.row(pr));
            a.col(t).swap(a.col(pc));

            bool clean = true;
            for (Eigen::Index i = t + 1; i < n; ++i) {
                const Scalar f = a(i, t) / a(t, t);
                a.row(i) -= f * a.row(t);
                if (a(i, t) != Scalar(0)) clean = false;
            }
            for (Eigen::Index j = t + 1; j < n; ++j) {
                const Scalar f = a(t, j) / a(t, t);
                a.col(j) -= f * a.col(t);
                if (a(t, j) != Scalar(0)) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the whole trailing block; otherwise fold the
            // offending row in and reduce again.
            Eigen::Index bad = -1;
            for (Eigen::Index i = t + 1; i < n && bad < 0; ++i)
                for (Eigen::Index j = t + 1; j < n; ++j)
                    if (a(i, j) % a(t, t) != Scalar(0)) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            a.row(t) += a.row(bad);
        }
    }

    AbelianGroup group;
    for (Eigen::Index i = 0; i < n; ++i) {
        const Scalar d = magnitude(a(i, i));
        if (d == Scalar(0)) {
            ++group.free_rank;
        } else if (d != Scalar(1)) {
            group.invariant_factors.push_back(static_cast<Integer>(d));
        }
    }
    std::sort(group.invariant_factors.begin(), group.invariant_factors.end());
    for (std::size_t i = 1; i < group.invariant_factors.size(); ++i) {
        if (group.invariant_factors[i] % group.invariant_factors[i - 1] != 0) {
            throw std::logic_error("smith_normal_form: divisibility chain broken");
        }
    }
    return group;
}

} // namespace cosmetic
