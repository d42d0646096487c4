#ifndef POLYALG_BUILTIN_ALGEBRAS_HPP
#define POLYALG_BUILTIN_ALGEBRAS_HPP

#include "polyalg/polynomial.hpp"

#include <charconv>
#include <string>
#include <string_view>

namespace polyalg {

namespace detail {

template <typename Scalar>
typename Algebra<Scalar>::StructureConstants zero_constants(std::size_t n) {
    return typename Algebra<Scalar>::StructureConstants(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
}

inline std::string matrix_unit_name(std::size_t m, std::size_t i, std::size_t k) {
    if (m < 10) return "E" + std::to_string(i) + std::to_string(k);
    return "E" + std::to_string(i) + "_" + std::to_string(k);
}

}  // namespace detail

/// Full matrix algebra M_m with basis E_11, E_12, ..., E_mm in row-major
/// order and E_ij E_kl = delta_jk E_il.
template <typename Scalar>
AlgebraPtr<Scalar> matrix_algebra(std::size_t m) {
    if (m == 0) throw IndexOutOfRange("matrix size must be positive");
    const std::size_t n = m * m;
    auto c = detail::zero_constants<Scalar>(n);
    Vector<Scalar> unit = Vector<Scalar>::Zero(static_cast<Eigen::Index>(n));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) {
        unit(static_cast<Eigen::Index>(i * m + i)) = Scalar(1);
        for (std::size_t j = 0; j < m; ++j) {
            names.push_back(detail::matrix_unit_name(m, i + 1, j + 1));
            for (std::size_t l = 0; l < m; ++l) c[i * m + j][j * m + l][i * m + l] = Scalar(1);
        }
    }
    return new_algebra<Scalar>(n, c, std::move(unit), std::move(names));
}

/// Side length of a matrix algebra built by matrix_algebra().
template <typename Scalar>
std::size_t matrix_size(const Algebra<Scalar>& alg) {
    std::size_t m = 1;
    while (m * m < alg.dim()) ++m;
    if (m * m != alg.dim()) throw ShapeMismatch("algebra dimension is not a perfect square");
    return m;
}

/// Matrix unit E_ik, indices 1-based.
template <typename Scalar>
Element<Scalar> matrix_unit(const AlgebraPtr<Scalar>& alg, std::size_t i, std::size_t k) {
    const std::size_t m = matrix_size(*alg);
    if (i < 1 || i > m || k < 1 || k > m) {
        throw IndexOutOfRange("matrix unit E(" + std::to_string(i) + "," + std::to_string(k) + ") outside " +
                              std::to_string(m) + "x" + std::to_string(m));
    }
    return Element<Scalar>::basis(alg, (i - 1) * m + (k - 1));
}

/// Coordinates of a matrix-algebra element laid out as an m x m matrix.
template <typename Scalar>
Matrix<Scalar> to_matrix(const Element<Scalar>& a) {
    const auto m = static_cast<Eigen::Index>(matrix_size(*a.algebra()));
    Matrix<Scalar> out(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index k = 0; k < m; ++k) out(i, k) = a.coords()(i * m + k);
    return out;
}

template <typename Scalar>
Element<Scalar> from_matrix(const AlgebraPtr<Scalar>& alg, const Matrix<Scalar>& mat) {
    const auto m = static_cast<Eigen::Index>(matrix_size(*alg));
    if (mat.rows() != m || mat.cols() != m) throw ShapeMismatch("matrix has the wrong size for this algebra");
    Vector<Scalar> v(m * m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index k = 0; k < m; ++k) v(i * m + k) = mat(i, k);
    return Element<Scalar>(alg, std::move(v));
}

/// Hamilton quaternions, basis 1, i, j, k.
template <typename Scalar>
AlgebraPtr<Scalar> quaternions() {
    auto c = detail::zero_constants<Scalar>(4);
    // sign and index of e_a e_b for a, b in {1, i, j, k}
    const int table[4][4][2] = {{{1, 0}, {1, 1}, {1, 2}, {1, 3}},
                                {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
                                {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
                                {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}};
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) c[a][b][static_cast<std::size_t>(table[a][b][1])] = Scalar(table[a][b][0]);
    Vector<Scalar> unit = Vector<Scalar>::Zero(4);
    unit(0) = Scalar(1);
    return new_algebra<Scalar>(4, c, std::move(unit), {"1", "i", "j", "k"});
}

/// Complex numbers as a 2-dimensional algebra, basis 1, i.
template <typename Scalar>
AlgebraPtr<Scalar> complex_algebra() {
    auto c = detail::zero_constants<Scalar>(2);
    c[0][0][0] = Scalar(1);
    c[0][1][1] = Scalar(1);
    c[1][0][1] = Scalar(1);
    c[1][1][0] = Scalar(-1);
    Vector<Scalar> unit = Vector<Scalar>::Zero(2);
    unit(0) = Scalar(1);
    return new_algebra<Scalar>(2, c, std::move(unit), {"1", "i"});
}

/// Dual numbers, basis 1, eps with eps^2 = 0.
template <typename Scalar>
AlgebraPtr<Scalar> dual_numbers() {
    auto c = detail::zero_constants<Scalar>(2);
    c[0][0][0] = Scalar(1);
    c[0][1][1] = Scalar(1);
    c[1][0][1] = Scalar(1);
    Vector<Scalar> unit = Vector<Scalar>::Zero(2);
    unit(0) = Scalar(1);
    return new_algebra<Scalar>(2, c, std::move(unit), {"1", "eps"});
}

/// A (+) B with block-diagonal structure constants and unit (1_A, 1_B). Basis
/// names are prefixed with "a_" and "b_".
template <typename Scalar>
AlgebraPtr<Scalar> direct_sum(const Algebra<Scalar>& a, const Algebra<Scalar>& b) {
    const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
    auto c = detail::zero_constants<Scalar>(n);
    for (const auto& e : a.nonzero_constants()) c[e.i][e.j][e.k] = e.value;
    for (const auto& e : b.nonzero_constants()) c[na + e.i][na + e.j][na + e.k] = e.value;
    Vector<Scalar> unit(static_cast<Eigen::Index>(n));
    unit << a.unit(), b.unit();
    std::vector<std::string> names;
    for (const auto& s : a.basis_names()) names.push_back("a_" + s);
    for (const auto& s : b.basis_names()) names.push_back("b_" + s);
    return new_algebra<Scalar>(n, c, std::move(unit), std::move(names));
}

/// The polynomial E_ii x E_kk over the given matrix algebra. Its value at X is
/// X(i,k) E_ik, so it vanishes exactly where that entry is zero even though
/// E_ii is a left zero divisor.
template <typename Scalar>
Polynomial<Scalar> exe_example(const AlgebraPtr<Scalar>& alg, std::size_t i, std::size_t k) {
    return Polynomial<Scalar>::monomial({matrix_unit(alg, i, i), matrix_unit(alg, k, k)});
}

template <typename Scalar>
Polynomial<Scalar> exe_example(std::size_t m, std::size_t i, std::size_t k) {
    return exe_example(matrix_algebra<Scalar>(m), i, k);
}

/// Looks up "matrix<m>" (e.g. "matrix3"), "quaternions", "complex" or "dual".
template <typename Scalar>
AlgebraPtr<Scalar> builtin_algebra(std::string_view name) {
    if (name == "quaternions") return quaternions<Scalar>();
    if (name == "complex") return complex_algebra<Scalar>();
    if (name == "dual") return dual_numbers<Scalar>();
    if (name.starts_with("matrix")) {
        std::size_t m = 0;
        const auto digits = name.substr(6);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && m > 0) return matrix_algebra<Scalar>(m);
    }
    throw FormatError("unknown builtin algebra '" + std::string(name) +
                      "' (expected matrix<m>, quaternions, complex or dual)");
}

}  // namespace polyalg

#endif  // POLYALG_BUILTIN_ALGEBRAS_HPP
