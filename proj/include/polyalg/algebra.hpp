#ifndef POLYALG_ALGEBRA_HPP
#define POLYALG_ALGEBRA_HPP

#include "polyalg/errors.hpp"
#include "polyalg/exact_linalg.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace polyalg {

template <typename Scalar>
class Algebra;

template <typename Scalar>
using AlgebraPtr = std::shared_ptr<const Algebra<Scalar>>;

/// Finite-dimensional associative unital algebra over a field, given by
/// structure constants in a fixed basis: e_i e_j = sum_k C(i,j,k) e_k.
///
/// Construction validates associativity and the two-sided unit exhaustively,
/// so every Algebra that exists is a valid one. Instances are immutable and
/// shared through AlgebraPtr.
template <typename Scalar>
class Algebra {
   public:
    /// Indexed [i][j][k] for the coefficient of e_k in e_i e_j.
    using StructureConstants = std::vector<std::vector<std::vector<Scalar>>>;

    struct Entry {
        std::size_t i, j, k;
        Scalar value;
    };

    struct Slot {
        std::size_t index;  // the index not fixed by the lookup
        std::size_t k;
        Scalar value;
    };

    static AlgebraPtr<Scalar> create(std::size_t dim, const StructureConstants& constants, Vector<Scalar> unit,
                                     std::vector<std::string> basis_names = {}) {
        return AlgebraPtr<Scalar>(new Algebra(dim, constants, std::move(unit), std::move(basis_names)));
    }

    std::size_t dim() const noexcept { return dim_; }
    const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
        return left_[i](static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
    }
    /// Matrix of x -> e_i x.
    const Matrix<Scalar>& left_basis(std::size_t i) const { return left_[i]; }
    /// Matrix of x -> x e_j.
    const Matrix<Scalar>& right_basis(std::size_t j) const { return right_[j]; }
    const Vector<Scalar>& unit() const noexcept { return unit_; }
    const std::vector<std::string>& basis_names() const noexcept { return names_; }

    const std::vector<Entry>& nonzero_constants() const noexcept { return nonzero_; }
    /// Nonzero (j, k, C(i,j,k)) for fixed i.
    const std::vector<Slot>& by_left(std::size_t i) const { return by_left_[i]; }
    /// Nonzero (k, C(i,j,k)) for fixed (i, j); `index` is unused.
    const std::vector<Slot>& by_pair(std::size_t i, std::size_t j) const { return by_pair_[i * dim_ + j]; }

    bool same_structure(const Algebra& other) const {
        if (this == &other) return true;
        if (dim_ != other.dim_ || unit_ != other.unit_) return false;
        if (nonzero_.size() != other.nonzero_.size()) return false;
        for (std::size_t s = 0; s < nonzero_.size(); ++s) {
            const Entry& a = nonzero_[s];
            const Entry& b = other.nonzero_[s];
            if (a.i != b.i || a.j != b.j || a.k != b.k || !(a.value == b.value)) return false;
        }
        return true;
    }

   private:
    Algebra(std::size_t dim, const StructureConstants& constants, Vector<Scalar> unit,
            std::vector<std::string> basis_names)
        : dim_(dim), unit_(std::move(unit)), names_(std::move(basis_names)) {
        if (dim_ == 0) throw ShapeMismatch("algebra dimension must be positive");
        if (constants.size() != dim_) throw ShapeMismatch("structure constants: expected " + std::to_string(dim_) + " rows");
        for (const auto& row : constants) {
            if (row.size() != dim_) throw ShapeMismatch("structure constants: ragged second index");
            for (const auto& v : row) {
                if (v.size() != dim_) throw ShapeMismatch("structure constants: ragged third index");
            }
        }
        if (static_cast<std::size_t>(unit_.size()) != dim_) throw ShapeMismatch("unit has wrong length");
        if (names_.empty()) {
            for (std::size_t i = 0; i < dim_; ++i) names_.push_back("e" + std::to_string(i + 1));
        }
        if (names_.size() != dim_) throw ShapeMismatch("basis names: expected " + std::to_string(dim_));

        const auto n = static_cast<Eigen::Index>(dim_);
        left_.assign(dim_, Matrix<Scalar>::Zero(n, n));
        right_.assign(dim_, Matrix<Scalar>::Zero(n, n));
        by_left_.resize(dim_);
        by_pair_.resize(dim_ * dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) {
                    const Scalar& c = constants[i][j][k];
                    if (c == Scalar(0)) continue;
                    left_[i](static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = c;
                    right_[j](static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) = c;
                    nonzero_.push_back({i, j, k, c});
                    by_left_[i].push_back({j, k, c});
                    by_pair_[i * dim_ + j].push_back({0, k, c});
                }
        check_associative(constants);
        check_unit(constants);
    }

    void check_associative(const StructureConstants& c) const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    for (std::size_t m = 0; m < dim_; ++m) {
                        Scalar lhs(0), rhs(0);
                        for (std::size_t p = 0; p < dim_; ++p) {
                            lhs += c[i][j][p] * c[p][k][m];
                            rhs += c[j][k][p] * c[i][p][m];
                        }
                        if (!(lhs == rhs)) {
                            std::ostringstream l, r;
                            l << lhs;
                            r << rhs;
                            throw AssociativityViolation(i, j, k, m, l.str(), r.str());
                        }
                    }
    }

    void check_unit(const StructureConstants& c) const {
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                Scalar left(0), right(0);
                for (std::size_t i = 0; i < dim_; ++i) {
                    left += unit_(static_cast<Eigen::Index>(i)) * c[i][j][k];
                    right += unit_(static_cast<Eigen::Index>(i)) * c[j][i][k];
                }
                const Scalar delta(j == k ? 1 : 0);
                if (!(left == delta)) throw UnitViolation("left", j, k);
                if (!(right == delta)) throw UnitViolation("right", j, k);
            }
    }

    std::size_t dim_;
    Vector<Scalar> unit_;
    std::vector<std::string> names_;
    std::vector<Matrix<Scalar>> left_;
    std::vector<Matrix<Scalar>> right_;
    std::vector<Entry> nonzero_;
    std::vector<std::vector<Slot>> by_left_;
    std::vector<std::vector<Slot>> by_pair_;
};

template <typename Scalar>
AlgebraPtr<Scalar> new_algebra(std::size_t dim, const typename Algebra<Scalar>::StructureConstants& constants,
                               Vector<Scalar> unit, std::vector<std::string> basis_names = {}) {
    return Algebra<Scalar>::create(dim, constants, std::move(unit), std::move(basis_names));
}

/// `table[i][j]` holds the coordinates of e_i e_j.
template <typename Scalar>
AlgebraPtr<Scalar> from_multiplication_table(std::size_t dim, const std::vector<std::vector<Vector<Scalar>>>& table,
                                             Vector<Scalar> unit, std::vector<std::string> basis_names = {}) {
    typename Algebra<Scalar>::StructureConstants c(dim, std::vector<std::vector<Scalar>>(dim));
    if (table.size() != dim) throw ShapeMismatch("multiplication table: expected " + std::to_string(dim) + " rows");
    for (std::size_t i = 0; i < dim; ++i) {
        if (table[i].size() != dim) throw ShapeMismatch("multiplication table: ragged row");
        for (std::size_t j = 0; j < dim; ++j) {
            if (static_cast<std::size_t>(table[i][j].size()) != dim) {
                throw ShapeMismatch("multiplication table: product vector has wrong length");
            }
            c[i][j].assign(table[i][j].data(), table[i][j].data() + dim);
        }
    }
    return new_algebra<Scalar>(dim, c, std::move(unit), std::move(basis_names));
}

template <typename Scalar>
bool same_algebra(const AlgebraPtr<Scalar>& a, const AlgebraPtr<Scalar>& b) {
    return a == b || (a && b && a->same_structure(*b));
}

template <typename Scalar>
void require_same_algebra(const AlgebraPtr<Scalar>& a, const AlgebraPtr<Scalar>& b) {
    if (!same_algebra(a, b)) throw AlgebraMismatch("operands belong to different algebras");
}

/// An element of an algebra, stored by its coordinates in the algebra's basis.
template <typename Scalar>
class Element {
   public:
    Element(AlgebraPtr<Scalar> algebra, Vector<Scalar> coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
        if (static_cast<std::size_t>(coords_.size()) != algebra_->dim()) {
            throw ShapeMismatch("element has " + std::to_string(coords_.size()) + " coordinates, algebra dimension is " +
                                std::to_string(algebra_->dim()));
        }
    }

    static Element zero(const AlgebraPtr<Scalar>& algebra) {
        return Element(algebra, Vector<Scalar>::Zero(static_cast<Eigen::Index>(algebra->dim())));
    }
    static Element one(const AlgebraPtr<Scalar>& algebra) { return Element(algebra, algebra->unit()); }
    static Element basis(const AlgebraPtr<Scalar>& algebra, std::size_t i) {
        if (i >= algebra->dim()) throw IndexOutOfRange("basis index " + std::to_string(i + 1) + " out of range");
        Vector<Scalar> v = Vector<Scalar>::Zero(static_cast<Eigen::Index>(algebra->dim()));
        v(static_cast<Eigen::Index>(i)) = Scalar(1);
        return Element(algebra, std::move(v));
    }

    const AlgebraPtr<Scalar>& algebra() const noexcept { return algebra_; }
    const Vector<Scalar>& coords() const noexcept { return coords_; }
    const Scalar& operator[](std::size_t i) const { return coords_(static_cast<Eigen::Index>(i)); }
    std::size_t dim() const noexcept { return algebra_->dim(); }
    bool is_zero() const { return polyalg::is_zero(coords_); }

    friend bool operator==(const Element& a, const Element& b) {
        return same_algebra(a.algebra_, b.algebra_) && a.coords_ == b.coords_;
    }

    Element operator-() const { return Element(algebra_, -coords_); }

    friend Element operator+(const Element& a, const Element& b) {
        require_same_algebra(a.algebra_, b.algebra_);
        return Element(a.algebra_, a.coords_ + b.coords_);
    }
    friend Element operator-(const Element& a, const Element& b) {
        require_same_algebra(a.algebra_, b.algebra_);
        return Element(a.algebra_, a.coords_ - b.coords_);
    }
    friend Element operator*(const Scalar& s, const Element& a) { return Element(a.algebra_, s * a.coords_); }

    /// Algebra product: (ab)^k = sum_{i,j} a^i b^j C(i,j,k).
    friend Element operator*(const Element& a, const Element& b) {
        require_same_algebra(a.algebra_, b.algebra_);
        Vector<Scalar> r = Vector<Scalar>::Zero(a.coords_.size());
        for (const auto& e : a.algebra_->nonzero_constants()) {
            const Scalar& ai = a.coords_(static_cast<Eigen::Index>(e.i));
            if (ai == Scalar(0)) continue;
            const Scalar& bj = b.coords_(static_cast<Eigen::Index>(e.j));
            if (bj == Scalar(0)) continue;
            r(static_cast<Eigen::Index>(e.k)) += ai * bj * e.value;
        }
        return Element(a.algebra_, std::move(r));
    }

   private:
    AlgebraPtr<Scalar> algebra_;
    Vector<Scalar> coords_;
};

template <typename Scalar>
Element<Scalar> add(const Element<Scalar>& a, const Element<Scalar>& b) {
    return a + b;
}

template <typename Scalar>
Element<Scalar> scale(const Scalar& s, const Element<Scalar>& a) {
    return s * a;
}

template <typename Scalar>
Element<Scalar> mul(const Element<Scalar>& a, const Element<Scalar>& b) {
    return a * b;
}

/// Matrix of x -> a x, so that (a b).coords() == L(a) * b.coords().
template <typename Scalar>
Matrix<Scalar> left_mul_matrix(const Element<Scalar>& a) {
    const auto n = static_cast<Eigen::Index>(a.dim());
    Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
    for (const auto& e : a.algebra()->nonzero_constants()) {
        const Scalar& ai = a[e.i];
        if (ai == Scalar(0)) continue;
        m(static_cast<Eigen::Index>(e.k), static_cast<Eigen::Index>(e.j)) += ai * e.value;
    }
    return m;
}

/// Matrix of x -> x a, so that (b a).coords() == R(a) * b.coords().
template <typename Scalar>
Matrix<Scalar> right_mul_matrix(const Element<Scalar>& a) {
    const auto n = static_cast<Eigen::Index>(a.dim());
    Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
    for (const auto& e : a.algebra()->nonzero_constants()) {
        const Scalar& aj = a[e.j];
        if (aj == Scalar(0)) continue;
        m(static_cast<Eigen::Index>(e.k), static_cast<Eigen::Index>(e.i)) += aj * e.value;
    }
    return m;
}

/// Returns b != 0 with a b = 0, or nullopt when a is not a left zero divisor.
/// In finite dimension a is a left zero divisor exactly when L(a) is
/// singular; the witness is the normalized kernel vector of L(a).
template <typename Scalar>
std::optional<Element<Scalar>> is_left_zero_divisor(const Element<Scalar>& a) {
    if (a.is_zero()) throw ZeroInput("zero is excluded from zero-divisor tests");
    auto w = kernel_vector(left_mul_matrix(a));
    if (!w) return std::nullopt;
    return Element<Scalar>(a.algebra(), std::move(*w));
}

/// Returns c != 0 with c a = 0, or nullopt.
template <typename Scalar>
std::optional<Element<Scalar>> is_right_zero_divisor(const Element<Scalar>& a) {
    if (a.is_zero()) throw ZeroInput("zero is excluded from zero-divisor tests");
    auto w = kernel_vector(right_mul_matrix(a));
    if (!w) return std::nullopt;
    return Element<Scalar>(a.algebra(), std::move(*w));
}

}  // namespace polyalg

#endif  // POLYALG_ALGEBRA_HPP
