#include "cosmetic/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace cosmetic {

IntPolynomial::IntPolynomial(Integer constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(int power) const {
    if (power < 0 || power > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(power)];
}

Integer IntPolynomial::evaluate(Integer t) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator/=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.empty()) throw std::domain_error("polynomial division by zero");
    if (coeffs_.empty()) return *this;
    if (degree() < rhs.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<Integer> rem = coeffs_;
    std::vector<Integer> quot(static_cast<std::size_t>(degree() - rhs.degree() + 1), 0);
    const Integer lead = rhs.coeffs_.back();
    for (int k = degree() - rhs.degree(); k >= 0; --k) {
        const auto top = static_cast<std::size_t>(k + rhs.degree());
        if (rem[top] % lead != 0) throw std::domain_error("inexact polynomial division");
        const Integer c = rem[top] / lead;
        quot[static_cast<std::size_t>(k)] = c;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= c * rhs.coeffs_[j];
    }
    for (Integer r : rem)
        if (r != 0) throw std::domain_error("inexact polynomial division");
    coeffs_ = std::move(quot);
    trim();
    return *this;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out = *this;
    for (Integer& c : out.coeffs_) c = -c;
    return out;
}

std::string IntPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Integer c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const Integer mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) os << mag;
        if (k >= 1) os << "t";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

} // namespace cosmetic
