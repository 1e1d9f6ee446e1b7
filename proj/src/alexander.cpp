#include "cosmetic/alexander.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace cosmetic {

SymmetricLaurent SymmetricLaurent::from_coefficients(std::vector<Integer> coefficients) {
    if (coefficients.empty()) throw std::invalid_argument("Alexander polynomial: no coefficients");
    while (coefficients.size() > 1 && coefficients.back() == 0) coefficients.pop_back();
    Integer at_one = coefficients[0];
    for (std::size_t i = 1; i < coefficients.size(); ++i) at_one += 2 * coefficients[i];
    if (at_one != 1) {
        throw std::invalid_argument("Alexander polynomial: value at T=1 is " + std::to_string(at_one) +
                                    ", expected 1");
    }
    return SymmetricLaurent(std::move(coefficients));
}

Integer SymmetricLaurent::coefficient(int i) const {
    i = std::abs(i);
    return i <= degree() ? coeffs_[static_cast<std::size_t>(i)] : 0;
}

std::string SymmetricLaurent::str() const {
    // Highest power first: a_d T^d + ... + a_0 + ... + a_d T^-d.
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= -degree(); --k) {
        const Integer c = coefficient(k);
        if (c == 0) continue;
        const Integer mag = std::abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) os << mag;
        if (k == 1) os << "T";
        else if (k != 0) os << "T^" << k;
        first = false;
    }
    return first ? "0" : os.str();
}

SeifertMatrix::SeifertMatrix(MatrixXi64 v) : v_(std::move(v)) {
    if (v_.rows() != v_.cols()) throw std::invalid_argument("Seifert matrix must be square");
    if (v_.rows() % 2 != 0) throw std::invalid_argument("Seifert matrix must have even size");
    const MatrixXi64 form = v_ - v_.transpose();
    const Integer det = determinant_bareiss(form);
    if (det != 1) {
        throw std::invalid_argument("Seifert matrix: det(V - V^T) = " + std::to_string(det) + ", expected 1");
    }
}

GapSequence::GapSequence(std::vector<Integer> gaps) : gaps_(std::move(gaps)) {
    for (std::size_t i = 0; i < gaps_.size(); ++i) {
        if (gaps_[i] <= 0) throw std::invalid_argument("gap sequence entries must be positive");
        if (i > 0 && gaps_[i] <= gaps_[i - 1]) throw std::invalid_argument("gap sequence must strictly increase");
    }
}

SymmetricLaurent from_seifert_matrix(const SeifertMatrix& seifert) {
    const MatrixXi64& v = seifert.matrix();
    const Eigen::Index n = v.rows();
    if (n == 0) return SymmetricLaurent::one();

    IntMatrix<IntPolynomial> pencil(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) pencil(i, j) = IntPolynomial({-v(j, i), v(i, j)});

    const IntPolynomial det = determinant_bareiss(pencil);
    const int g = static_cast<int>(seifert.genus());
    for (int i = 1; i <= g; ++i) {
        if (det.coefficient(g + i) != det.coefficient(g - i)) {
            throw std::logic_error("det(tV - V^T) is not palindromic: " + det.str());
        }
    }
    std::vector<Integer> coeffs;
    for (int i = 0; i <= g; ++i) coeffs.push_back(det.coefficient(g + i));
    // det(V - V^T) = 1 was checked at ingestion, so no sign flip is needed here.
    return SymmetricLaurent::from_coefficients(std::move(coeffs));
}

Integer second_derivative_at_one(const SymmetricLaurent& p) {
    Integer sum = 0;
    for (int i = 1; i <= p.degree(); ++i) sum += static_cast<Integer>(i) * i * p.coefficient(i);
    return 2 * sum;
}

std::vector<Integer> torsion_invariants(const SymmetricLaurent& p) {
    const int d = p.degree();
    std::vector<Integer> t(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i <= d; ++i) {
        Integer sum = 0;
        for (int j = 1; i + j <= d; ++j) sum += j * p.coefficient(i + j);
        t[static_cast<std::size_t>(i)] = sum;
    }
    return t;
}

Integer torsion_norm(const SymmetricLaurent& p) {
    const auto t = torsion_invariants(p);
    Integer sum = std::abs(t[0]);
    for (std::size_t i = 1; i < t.size(); ++i) sum += 2 * std::abs(t[i]);
    return sum;
}

std::optional<GapSequence> lspace_form(const SymmetricLaurent& p) {
    std::vector<Integer> gaps;
    for (int i = 1; i <= p.degree(); ++i)
        if (p.coefficient(i) != 0) gaps.push_back(i);
    const auto k = static_cast<int>(gaps.size());
    for (int j = 1; j <= k; ++j) {
        const Integer expected = (k - j) % 2 == 0 ? 1 : -1;
        if (p.coefficient(static_cast<int>(gaps[static_cast<std::size_t>(j - 1)])) != expected) return std::nullopt;
    }
    const Integer constant = k % 2 == 0 ? 1 : -1;
    if (p.coefficient(0) != constant) return std::nullopt;
    return GapSequence(std::move(gaps));
}

SymmetricLaurent lspace_polynomial(const GapSequence& gaps) {
    const auto k = static_cast<int>(gaps.size());
    std::vector<Integer> coeffs(gaps.empty() ? 1 : static_cast<std::size_t>(gaps.gaps().back()) + 1, 0);
    coeffs[0] = k % 2 == 0 ? 1 : -1;
    for (int j = 1; j <= k; ++j) {
        coeffs[static_cast<std::size_t>(gaps.gaps()[static_cast<std::size_t>(j - 1)])] = (k - j) % 2 == 0 ? 1 : -1;
    }
    return SymmetricLaurent::from_coefficients(std::move(coeffs));
}

Integer second_derivative_from_gaps(const GapSequence& gaps) {
    if (gaps.empty()) throw std::invalid_argument("second_derivative_from_gaps: empty gap sequence");
    const auto k = gaps.size();
    Integer sum = 0;
    for (std::size_t j = 1; j <= k; ++j) {
        const Integer n = gaps.gaps()[j - 1];
        sum += ((k - j) % 2 == 0 ? 1 : -1) * n * n;
    }
    return 2 * sum;
}

SymmetricLaurent twist_knot_polynomial(Integer n) {
    if (n == 0) throw std::invalid_argument("twist_knot_polynomial: n = 0 is the unknot");
    return SymmetricLaurent::from_coefficients({2 * n + 1, -n});
}

Integer casson_plus_one_surgery(const SymmetricLaurent& p) {
    constexpr Integer casson_s3 = 0;
    constexpr Integer casson_l11 = 0;
    return casson_s3 + casson_l11 + second_derivative_at_one(p);
}

} // namespace cosmetic
