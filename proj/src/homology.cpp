#include "cosmetic/homology.hpp"

#include <numeric>
#include <sstream>

namespace cosmetic {

void FramedLink::validate() const {
    const Eigen::Index n = components();
    if (linking.rows() != n || linking.cols() != n) {
        throw std::invalid_argument("framed link: linking matrix is " + std::to_string(linking.rows()) + "x" +
                                    std::to_string(linking.cols()) + " but there are " + std::to_string(n) +
                                    " framings");
    }
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            if (linking(i, j) != linking(j, i)) {
                throw std::invalid_argument("framed link: lk(" + std::to_string(i) + "," + std::to_string(j) +
                                            ") != lk(" + std::to_string(j) + "," + std::to_string(i) + ")");
            }
}

FramedLink FramedLink::without_infinite_framings() const {
    validate();
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < components(); ++i)
        if (!framings[static_cast<std::size_t>(i)].is_infinity()) keep.push_back(i);

    FramedLink out;
    const auto m = static_cast<Eigen::Index>(keep.size());
    out.linking.resize(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        out.framings.push_back(framings[static_cast<std::size_t>(keep[i])]);
        for (Eigen::Index j = 0; j < m; ++j) out.linking(i, j) = linking(keep[i], keep[j]);
    }
    return out;
}

Integer AbelianGroup::order() const {
    if (free_rank > 0) return 0;
    return std::accumulate(invariant_factors.begin(), invariant_factors.end(), Integer{1}, std::multiplies<>());
}

std::string AbelianGroup::str() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    const char* sep = "";
    if (free_rank == 1) {
        os << "Z";
        sep = " + ";
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        sep = " + ";
    }
    for (Integer d : invariant_factors) {
        os << sep << "Z/" << d;
        sep = " + ";
    }
    return os.str();
}

MatrixXi64 framing_matrix(const FramedLink& link) {
    link.validate();
    const Eigen::Index n = link.components();
    MatrixXi64 f(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Slope& s = link.framings[static_cast<std::size_t>(i)];
        if (s.is_infinity()) {
            throw std::invalid_argument("framing_matrix: component " + std::to_string(i) +
                                        " has framing inf; erase it first");
        }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            f(i, j) = i == j ? link.framings[static_cast<std::size_t>(i)].num()
                             : link.framings[static_cast<std::size_t>(j)].den() * link.linking(i, j);
        }
    }
    return f;
}

Integer h1_order(const FramedLink& link) {
    const Integer det = determinant_bareiss(framing_matrix(link.without_infinite_framings()));
    return det < 0 ? -det : det;
}

AbelianGroup h1_group(const FramedLink& link) {
    return smith_normal_form(framing_matrix(link.without_infinite_framings()));
}

Integer watson_order(Integer c, const Slope& lambda_M, const Slope& alpha) {
    if (c < 1) throw std::invalid_argument("watson_order: c_M must be positive");
    return c * distance(alpha, lambda_M);
}

Rational meridian_self_linking(Integer p, Integer q) {
    if (p <= 0) throw std::invalid_argument("meridian_self_linking needs p >= 1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("meridian_self_linking needs gcd(p, q) = 1");
    return Rational(mod_floor(-q, p), p);
}

} // namespace cosmetic
