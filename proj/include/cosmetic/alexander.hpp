#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cosmetic/homology.hpp"
#include "cosmetic/polynomial.hpp"
#include "cosmetic/slope.hpp"

namespace cosmetic {

/// Symmetric Laurent polynomial a0 + sum_{i>=1} a_i (T^i + T^-i), stored as
/// (a0, a1, ..., ad) with ad != 0 unless d = 0, and normalized so that the
/// value at T = 1 is 1.
class SymmetricLaurent {
public:
    /// Throws std::invalid_argument if a0 + 2 sum a_i != 1. Trailing zeros are dropped.
    static SymmetricLaurent from_coefficients(std::vector<Integer> coefficients);

    /// The constant polynomial 1.
    static SymmetricLaurent one() { return SymmetricLaurent({1}); }

    const std::vector<Integer>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// a_i for i >= 0 (and a_{-i} = a_i); zero beyond the degree.
    Integer coefficient(int i) const;

    /// Degree 0 means Delta = 1, which every knot with a trivial polynomial
    /// (in particular the unknot) has.
    bool is_trivial() const { return coeffs_.size() == 1; }

    /// Human-readable form such as "T - 1 + T^-1".
    std::string str() const;

    friend bool operator==(const SymmetricLaurent&, const SymmetricLaurent&) = default;

private:
    explicit SymmetricLaurent(std::vector<Integer> c) : coeffs_(std::move(c)) {}

    std::vector<Integer> coeffs_;
};

/// Square integer matrix of even size 2g with det(V - V^T) = 1.
class SeifertMatrix {
public:
    /// Throws std::invalid_argument on odd size or det(V - V^T) != 1.
    explicit SeifertMatrix(MatrixXi64 v);

    const MatrixXi64& matrix() const { return v_; }
    Eigen::Index genus() const { return v_.rows() / 2; }

    friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) { return a.v_ == b.v_; }

private:
    MatrixXi64 v_;
};

/// Strictly increasing positive integers n1 < n2 < ... < nk.
class GapSequence {
public:
    /// Throws std::invalid_argument unless strictly increasing and positive.
    explicit GapSequence(std::vector<Integer> gaps);

    const std::vector<Integer>& gaps() const { return gaps_; }
    bool empty() const { return gaps_.empty(); }
    std::size_t size() const { return gaps_.size(); }

    friend bool operator==(const GapSequence&, const GapSequence&) = default;

private:
    std::vector<Integer> gaps_;
};

/// det(t V - V^T) recentred by t^-g. Symmetric and normalized by construction.
SymmetricLaurent from_seifert_matrix(const SeifertMatrix& v);

/// Delta''(1) = 2 sum_{i>=1} i^2 a_i.
Integer second_derivative_at_one(const SymmetricLaurent& p);

/// t_i = sum_{j>=1} j a_{i+j} for i = 0..d. The last entry, t_d, is always 0.
std::vector<Integer> torsion_invariants(const SymmetricLaurent& p);

/// |t0| + 2 sum_{i>=1} |t_i|, the left side of the torsion bound on rank HF_red.
Integer torsion_norm(const SymmetricLaurent& p);

/// If p = (-1)^k + sum_{j=1}^k (-1)^{k-j} (T^{n_j} + T^{-n_j}) for some
/// 0 < n1 < ... < nk, returns (n1, ..., nk); the constant 1 gives the empty
/// sequence. Otherwise nullopt.
std::optional<GapSequence> lspace_form(const SymmetricLaurent& p);

/// The polynomial with the given gap sequence in L-space form.
SymmetricLaurent lspace_polynomial(const GapSequence& gaps);

/// 2 sum_{j=1}^k (-1)^{k-j} n_j^2. Throws on an empty sequence.
Integer second_derivative_from_gaps(const GapSequence& gaps);

/// 2n + 1 - n (T + T^-1), the polynomial of the twist knot K[2n, +-2]. Rejects n = 0.
SymmetricLaurent twist_knot_polynomial(Integer n);

/// Casson invariant of +1 surgery, written as
///   lambda(S^3) + lambda(L(1,1)) + Delta''(1) = Delta''(1).
/// The conventional surgery formula carries a factor 1/2 on Delta''(1); the
/// only use here is the test lambda = 0 <=> Delta''(1) = 0, which is
/// indifferent to the factor, so the unhalved value is returned.
Integer casson_plus_one_surgery(const SymmetricLaurent& p);

} // namespace cosmetic
