#ifndef POLYALG_EXACT_LINALG_HPP
#define POLYALG_EXACT_LINALG_HPP

// Exact dense linear algebra over a field. Eigen supplies storage and
// products; elimination is done here because Eigen's decompositions pivot on
// magnitude, which is meaningless for exact scalars.

#include "polyalg/rational.hpp"

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

namespace polyalg {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Hooks that let elimination keep entries integral for fraction fields.
/// The generic version treats the scalar as an opaque field.
template <typename Scalar>
struct FieldTraits {
    template <typename Derived>
    static Scalar clear_denominators(Eigen::DenseBase<Derived>&) {
        return Scalar(1);
    }
    template <typename Derived>
    static void normalize_direction(Eigen::DenseBase<Derived>& v) {
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            if (v.derived().coeff(i) != Scalar(0)) {
                Scalar lead = v.derived().coeff(i);
                for (Eigen::Index j = 0; j < v.size(); ++j) v.derived().coeffRef(j) /= lead;
                return;
            }
        }
    }
};

template <>
struct FieldTraits<Rational> {
    template <typename Derived>
    static Rational clear_denominators(Eigen::DenseBase<Derived>& row) {
        return polyalg::clear_denominators(row);
    }
    template <typename Derived>
    static void normalize_direction(Eigen::DenseBase<Derived>& v) {
        polyalg::normalize_direction(v);
    }
};

template <typename Derived>
bool is_zero(const Eigen::DenseBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!(m.derived().coeff(i, j) == Scalar(0))) return false;
    return true;
}

template <typename Scalar>
struct RowEchelon {
    Matrix<Scalar> reduced;              // reduced row echelon form
    std::vector<Eigen::Index> pivots;    // pivot column of each nonzero row
    Scalar determinant = Scalar(0);      // only meaningful for square input

    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Fraction-free (Bareiss) elimination with first-nonzero pivoting, followed
/// by back substitution to reduced row echelon form.
///
/// Rows are first scaled to integral entries, so for rational input every
/// intermediate of the forward pass is an integer minor. The reduced form is
/// unique, which makes kernels and particular solutions deterministic.
template <typename Scalar>
RowEchelon<Scalar> row_echelon(const Matrix<Scalar>& input) {
    RowEchelon<Scalar> out;
    Matrix<Scalar>& a = out.reduced;
    a = input;
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();

    Scalar scale(1);
    for (Eigen::Index i = 0; i < rows; ++i) {
        auto row = a.row(i);
        scale *= FieldTraits<Scalar>::clear_denominators(row);
    }

    bool negate = false;
    Scalar previous(1);
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = r;
        while (p < rows && a(p, c) == Scalar(0)) ++p;
        if (p == rows) continue;
        if (p != r) {
            a.row(p).swap(a.row(r));
            negate = !negate;
        }
        const Scalar pivot = a(r, c);
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            const Scalar factor = a(i, c);
            for (Eigen::Index j = c + 1; j < cols; ++j) {
                a(i, j) = (pivot * a(i, j) - factor * a(r, j)) / previous;
            }
            a(i, c) = Scalar(0);
        }
        previous = pivot;
        out.pivots.push_back(c);
        ++r;
    }

    if (rows == cols && out.rank() == rows) {
        Scalar det = rows == 0 ? Scalar(1) : a(rows - 1, cols - 1);
        out.determinant = (negate ? -det : det) / scale;
    }

    for (Eigen::Index k = out.rank() - 1; k >= 0; --k) {
        const Eigen::Index c = out.pivots[static_cast<std::size_t>(k)];
        const Scalar pivot = a(k, c);
        for (Eigen::Index j = c; j < cols; ++j) a(k, j) /= pivot;
        for (Eigen::Index i = 0; i < k; ++i) {
            const Scalar factor = a(i, c);
            if (factor == Scalar(0)) continue;
            for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= factor * a(k, j);
        }
    }
    return out;
}

template <typename Scalar>
Scalar determinant(const Matrix<Scalar>& m) {
    return row_echelon(m).determinant;
}

template <typename Scalar>
Eigen::Index rank(const Matrix<Scalar>& m) {
    return row_echelon(m).rank();
}

/// Kernel basis read off the reduced form: one vector per non-pivot column,
/// in increasing column order, with a 1 in that column.
template <typename Scalar>
std::vector<Vector<Scalar>> kernel_basis(const Matrix<Scalar>& m) {
    const RowEchelon<Scalar> e = row_echelon(m);
    std::vector<Vector<Scalar>> basis;
    std::size_t next_pivot = 0;
    for (Eigen::Index f = 0; f < m.cols(); ++f) {
        if (next_pivot < e.pivots.size() && e.pivots[next_pivot] == f) {
            ++next_pivot;
            continue;
        }
        Vector<Scalar> v = Vector<Scalar>::Zero(m.cols());
        v(f) = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v(e.pivots[r]) = -e.reduced(static_cast<Eigen::Index>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Deterministic nonzero kernel vector: the basis vector of the smallest free
/// column, scaled to a primitive integer vector with positive leading entry.
template <typename Scalar>
std::optional<Vector<Scalar>> kernel_vector(const Matrix<Scalar>& m) {
    const RowEchelon<Scalar> e = row_echelon(m);
    if (e.rank() == m.cols()) return std::nullopt;
    Eigen::Index f = 0;
    for (std::size_t r = 0; r < e.pivots.size() && e.pivots[r] == f; ++r) ++f;
    Vector<Scalar> v = Vector<Scalar>::Zero(m.cols());
    v(f) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] < f) v(e.pivots[r]) = -e.reduced(static_cast<Eigen::Index>(r), f);
    }
    FieldTraits<Scalar>::normalize_direction(v);
    return v;
}

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

template <typename Scalar>
struct LinearSolve {
    SolveStatus status = SolveStatus::Inconsistent;
    Vector<Scalar> solution;  // particular solution with free variables zero
};

template <typename Scalar>
LinearSolve<Scalar> solve(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
    Matrix<Scalar> augmented(a.rows(), a.cols() + 1);
    augmented << a, b;
    const RowEchelon<Scalar> e = row_echelon(augmented);
    LinearSolve<Scalar> out;
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return out;
    out.solution = Vector<Scalar>::Zero(a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        out.solution(e.pivots[r]) = e.reduced(static_cast<Eigen::Index>(r), a.cols());
    }
    out.status = e.rank() == a.cols() ? SolveStatus::Unique : SolveStatus::Underdetermined;
    return out;
}

template <typename Scalar>
std::optional<Matrix<Scalar>> inverse(const Matrix<Scalar>& a) {
    const Eigen::Index n = a.rows();
    Matrix<Scalar> augmented(n, 2 * n);
    augmented << a, Matrix<Scalar>::Identity(n, n);
    const RowEchelon<Scalar> e = row_echelon(augmented);
    if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
    return Matrix<Scalar>(e.reduced.rightCols(n));
}

}  // namespace polyalg

#endif  // POLYALG_EXACT_LINALG_HPP
