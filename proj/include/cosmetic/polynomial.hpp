#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "cosmetic/slope.hpp"

namespace cosmetic {

/// Dense polynomial in one variable with integer coefficients, lowest degree
/// first and no trailing zeros. Division is exact division and throws when
/// the quotient is not integral, which is what fraction-free elimination needs.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(Integer constant);  // NOLINT: implicit, so it works as an Eigen scalar
    explicit IntPolynomial(std::vector<Integer> coefficients);

    const std::vector<Integer>& coefficients() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Integer coefficient(int power) const;
    Integer evaluate(Integer t) const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);
    IntPolynomial& operator/=(const IntPolynomial& rhs);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    friend IntPolynomial operator/(IntPolynomial a, const IntPolynomial& b) { return a /= b; }
    IntPolynomial operator-() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    std::string str() const;

private:
    void trim();

    std::vector<Integer> coeffs_;
};

} // namespace cosmetic

namespace Eigen {

template <>
struct NumTraits<cosmetic::IntPolynomial> : GenericNumTraits<cosmetic::IntPolynomial> {
    using Real = cosmetic::IntPolynomial;
    using NonInteger = cosmetic::IntPolynomial;
    using Nested = cosmetic::IntPolynomial;
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 16,
    };
};

} // namespace Eigen
