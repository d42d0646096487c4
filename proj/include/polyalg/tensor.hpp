#ifndef POLYALG_TENSOR_HPP
#define POLYALG_TENSOR_HPP

#include "polyalg/algebra.hpp"

#include <atomic>
#include <optional>
#include <string>
#include <vector>

namespace polyalg {

namespace detail {
inline std::atomic<std::size_t> max_arity_setting{6};
}  // namespace detail

/// Upper bound on tensor arity (degree + 1). Dense storage is n^arity, so the
/// cap bounds memory; creating a larger tensor throws ArityCapExceeded.
inline std::size_t max_arity() noexcept { return detail::max_arity_setting.load(std::memory_order_relaxed); }

inline void set_max_arity(std::size_t arity) {
    if (arity == 0) throw ArityCapExceeded("maximum arity must be at least 1");
    detail::max_arity_setting.store(arity, std::memory_order_relaxed);
}

inline std::size_t checked_power(std::size_t n, std::size_t arity) {
    if (arity == 0) throw ArityMismatch("tensor arity must be positive");
    if (arity > max_arity()) {
        throw ArityCapExceeded("arity " + std::to_string(arity) + " exceeds the configured maximum " +
                               std::to_string(max_arity()));
    }
    std::size_t size = 1;
    for (std::size_t s = 0; s < arity; ++s) size *= n;
    return size;
}

/// Element of the tensor power A^{(x) arity}, the coefficient of a
/// homogeneous polynomial of degree arity - 1.
///
/// Coordinates are dense and row-major: slot 0 is outermost, so the entry for
/// e_{i0} (x) ... (x) e_{ik} sits at ((i0 n + i1) n + ...) n + ik. Dense form is
/// canonical; `provenance` only records the decomposable terms a tensor was
/// built from and takes no part in equality.
template <typename Scalar>
class Tensor {
   public:
    using Term = std::vector<Element<Scalar>>;

    Tensor(AlgebraPtr<Scalar> algebra, std::size_t arity, Vector<Scalar> coords)
        : algebra_(std::move(algebra)), arity_(arity), coords_(std::move(coords)) {
        const std::size_t expected = checked_power(algebra_->dim(), arity_);
        if (static_cast<std::size_t>(coords_.size()) != expected) {
            throw ShapeMismatch("tensor of arity " + std::to_string(arity_) + " needs " + std::to_string(expected) +
                                " coordinates");
        }
    }

    static Tensor zero(const AlgebraPtr<Scalar>& algebra, std::size_t arity) {
        const std::size_t size = checked_power(algebra->dim(), arity);
        return Tensor(algebra, arity, Vector<Scalar>::Zero(static_cast<Eigen::Index>(size)));
    }

    /// 1 (x) 1 (x) ... (x) 1, whose polynomial is x^(arity-1).
    static Tensor unit(const AlgebraPtr<Scalar>& algebra, std::size_t arity);

    /// Arity-1 tensor holding a constant.
    static Tensor constant(const Element<Scalar>& c) { return Tensor(c.algebra(), 1, c.coords()); }

    const AlgebraPtr<Scalar>& algebra() const noexcept { return algebra_; }
    std::size_t arity() const noexcept { return arity_; }
    std::size_t degree() const noexcept { return arity_ - 1; }
    std::size_t dim() const noexcept { return algebra_->dim(); }
    const Vector<Scalar>& coords() const noexcept { return coords_; }
    const std::optional<std::vector<Term>>& provenance() const noexcept { return provenance_; }
    bool is_zero() const { return polyalg::is_zero(coords_); }

    const Scalar& at(const std::vector<std::size_t>& index) const { return coords_(flat_index(index)); }

    Eigen::Index flat_index(const std::vector<std::size_t>& index) const {
        if (index.size() != arity_) throw ArityMismatch("index length differs from tensor arity");
        std::size_t flat = 0;
        for (std::size_t s : index) {
            if (s >= dim()) throw IndexOutOfRange("tensor index out of range");
            flat = flat * dim() + s;
        }
        return static_cast<Eigen::Index>(flat);
    }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.arity_ == b.arity_ && same_algebra(a.algebra_, b.algebra_) && a.coords_ == b.coords_;
    }

    Tensor operator-() const { return Tensor(algebra_, arity_, -coords_); }

    friend Tensor operator+(const Tensor& a, const Tensor& b) {
        check_compatible(a, b);
        Tensor r(a.algebra_, a.arity_, a.coords_ + b.coords_);
        if (a.provenance_ && b.provenance_) {
            std::vector<Term> terms = *a.provenance_;
            terms.insert(terms.end(), b.provenance_->begin(), b.provenance_->end());
            r.provenance_ = std::move(terms);
        }
        return r;
    }
    friend Tensor operator-(const Tensor& a, const Tensor& b) {
        check_compatible(a, b);
        return Tensor(a.algebra_, a.arity_, a.coords_ - b.coords_);
    }
    friend Tensor operator*(const Scalar& s, const Tensor& a) { return Tensor(a.algebra_, a.arity_, s * a.coords_); }

    template <typename S>
    friend Tensor<S> from_decomposables(const AlgebraPtr<S>& algebra, const std::vector<std::vector<Element<S>>>& terms,
                                        std::size_t arity);

   private:
    static void check_compatible(const Tensor& a, const Tensor& b) {
        require_same_algebra(a.algebra_, b.algebra_);
        if (a.arity_ != b.arity_) throw ArityMismatch("tensor arities differ");
    }

    AlgebraPtr<Scalar> algebra_;
    std::size_t arity_;
    Vector<Scalar> coords_;
    std::optional<std::vector<Term>> provenance_;
};

/// Dense form of sum_t a_{t,0} (x) ... (x) a_{t,arity-1}:
/// coords[i0..ik] = sum_t prod_s a_{t,s}^{i_s}.
template <typename Scalar>
Tensor<Scalar> from_decomposables(const AlgebraPtr<Scalar>& algebra,
                                  const std::vector<std::vector<Element<Scalar>>>& terms, std::size_t arity) {
    const std::size_t n = algebra->dim();
    const std::size_t size = checked_power(n, arity);
    Vector<Scalar> coords = Vector<Scalar>::Zero(static_cast<Eigen::Index>(size));
    for (const auto& term : terms) {
        if (term.size() != arity) {
            throw ArityMismatch("decomposable term has " + std::to_string(term.size()) + " factors, expected " +
                                std::to_string(arity));
        }
        for (const auto& factor : term) require_same_algebra(algebra, factor.algebra());
        // Iterated Kronecker product, slot 0 outermost.
        Vector<Scalar> outer = term[0].coords();
        for (std::size_t s = 1; s < arity; ++s) {
            const Vector<Scalar>& next = term[s].coords();
            Vector<Scalar> grown = Vector<Scalar>::Zero(outer.size() * static_cast<Eigen::Index>(n));
            for (Eigen::Index p = 0; p < outer.size(); ++p) {
                if (outer(p) == Scalar(0)) continue;
                grown.segment(p * static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) = outer(p) * next;
            }
            outer = std::move(grown);
        }
        coords += outer;
    }
    Tensor<Scalar> t(algebra, arity, std::move(coords));
    t.provenance_ = terms;
    return t;
}

template <typename Scalar>
Tensor<Scalar> from_decomposables(const std::vector<std::vector<Element<Scalar>>>& terms, std::size_t arity) {
    if (terms.empty() || terms.front().empty()) {
        throw ArityMismatch("cannot infer the algebra of an empty decomposable sum");
    }
    return from_decomposables(terms.front().front().algebra(), terms, arity);
}

template <typename Scalar>
Tensor<Scalar> Tensor<Scalar>::unit(const AlgebraPtr<Scalar>& algebra, std::size_t arity) {
    return from_decomposables(algebra, {std::vector<Element<Scalar>>(arity, Element<Scalar>::one(algebra))}, arity);
}

namespace detail {

/// Row-major block of `rows` algebra elements, each of length n.
template <typename Scalar>
using ElementRows = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// One step of evaluation: given rows v[I, i] (prefix I, trailing slot i),
/// returns w[I] = sum_i e_i * x * v[I, i].
template <typename Scalar>
ElementRows<Scalar> fold_last_slot(const Algebra<Scalar>& alg, const Matrix<Scalar>& left_x,
                                   const ElementRows<Scalar>& v) {
    const auto n = static_cast<Eigen::Index>(alg.dim());
    const Eigen::Index out_rows = v.rows() / n;

    std::vector<std::pair<Eigen::Index, Eigen::Index>> lx_support;
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index m = 0; m < n; ++m)
            if (!(left_x(m, j) == Scalar(0))) lx_support.emplace_back(m, j);

    ElementRows<Scalar> w = ElementRows<Scalar>::Zero(out_rows, n);
    Vector<Scalar> y(n);
    for (Eigen::Index r = 0; r < v.rows(); ++r) {
        if (is_zero(v.row(r))) continue;
        y.setZero();
        for (const auto& [m, j] : lx_support) {
            const Scalar& vj = v(r, j);
            if (!(vj == Scalar(0))) y(m) += left_x(m, j) * vj;
        }
        const Eigen::Index prefix = r / n;
        const auto i = static_cast<std::size_t>(r % n);
        for (const auto& s : alg.by_left(i)) {
            const Scalar& yj = y(static_cast<Eigen::Index>(s.index));
            if (!(yj == Scalar(0))) w(prefix, static_cast<Eigen::Index>(s.k)) += s.value * yj;
        }
    }
    return w;
}

}  // namespace detail

/// Evaluates the homogeneous polynomial of the tensor: the multilinear
/// extension of (a0 (x) ... (x) ak) o x = a0 x a1 x ... x ak.
template <typename Scalar>
Element<Scalar> apply(const Tensor<Scalar>& a, const Element<Scalar>& x) {
    require_same_algebra(a.algebra(), x.algebra());
    const auto n = static_cast<Eigen::Index>(a.dim());
    if (a.arity() == 1) return Element<Scalar>(a.algebra(), a.coords());
    const Matrix<Scalar> left_x = left_mul_matrix(x);
    detail::ElementRows<Scalar> v =
        Eigen::Map<const detail::ElementRows<Scalar>>(a.coords().data(), a.coords().size() / n, n);
    for (std::size_t level = a.degree(); level >= 1; --level) {
        v = detail::fold_last_slot(*a.algebra(), left_x, v);
    }
    return Element<Scalar>(a.algebra(), Vector<Scalar>(v.row(0).transpose()));
}

/// Glues the last slot of `a` to the first slot of `b` by algebra
/// multiplication: (a0..an) o (b0..bm) = a0 (x) .. (x) (an b0) (x) .. (x) bm.
/// The polynomial of the result is the product of the two polynomials.
template <typename Scalar>
Tensor<Scalar> contract_product(const Tensor<Scalar>& a, const Tensor<Scalar>& b) {
    require_same_algebra(a.algebra(), b.algebra());
    const std::size_t arity = a.arity() + b.arity() - 1;
    Tensor<Scalar> out = Tensor<Scalar>::zero(a.algebra(), arity);
    const std::size_t n = a.dim();
    const std::size_t prefixes = static_cast<std::size_t>(a.coords().size()) / n;
    const std::size_t suffixes = static_cast<std::size_t>(b.coords().size()) / n;
    Vector<Scalar> coords = out.coords();
    const Scalar* bdata = b.coords().data();
    for (std::size_t prefix = 0; prefix < prefixes; ++prefix) {
        for (std::size_t p = 0; p < n; ++p) {
            const Scalar& ap = a.coords()(static_cast<Eigen::Index>(prefix * n + p));
            if (ap == Scalar(0)) continue;
            for (std::size_t q = 0; q < n; ++q) {
                const Scalar* brow = bdata + q * suffixes;
                for (const auto& s : a.algebra()->by_pair(p, q)) {
                    const Scalar coef = ap * s.value;
                    Scalar* dst = coords.data() + (prefix * n + s.k) * suffixes;
                    for (std::size_t j = 0; j < suffixes; ++j) {
                        if (!(brow[j] == Scalar(0))) dst[j] += coef * brow[j];
                    }
                }
            }
        }
    }
    return Tensor<Scalar>(a.algebra(), arity, std::move(coords));
}

/// Standard form of x -> a o x for an arity-2 tensor:
/// M(k, j) = sum_{i,l,p} a(i,l) C(i,j,p) C(p,l,k).
template <typename Scalar>
Matrix<Scalar> operator_matrix(const Tensor<Scalar>& a) {
    if (a.arity() != 2) throw ArityMismatch("operator_matrix needs an arity-2 tensor");
    const auto& alg = *a.algebra();
    const std::size_t n = alg.dim();
    Matrix<Scalar> m = Matrix<Scalar>::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            const Scalar& ail = a.coords()(static_cast<Eigen::Index>(i * n + l));
            if (ail == Scalar(0)) continue;
            for (const auto& first : alg.by_left(i)) {  // e_i e_j = sum_p c e_p
                const Scalar coef = ail * first.value;
                for (const auto& second : alg.by_pair(first.k, l)) {
                    m(static_cast<Eigen::Index>(second.k), static_cast<Eigen::Index>(first.index)) +=
                        coef * second.value;
                }
            }
        }
    return m;
}

template <typename Scalar>
bool is_nonsingular(const Tensor<Scalar>& a) {
    return !(determinant(operator_matrix(a)) == Scalar(0));
}

/// True iff a o x = 0 for every x.
template <typename Scalar>
bool vanishes_identically(const Tensor<Scalar>& a) {
    return is_zero(operator_matrix(a));
}

/// Arity-2 tensor c whose operator is the inverse of a's operator.
///
/// Solves the n^2 x n^2 system sum_{p,q} c(p,q) M(e_p (x) e_q) = M(a)^{-1} for
/// the dense components; free variables of an underdetermined system are set
/// to zero.
template <typename Scalar>
Tensor<Scalar> invert_tensor(const Tensor<Scalar>& a) {
    const Matrix<Scalar> m = operator_matrix(a);
    auto inv = inverse(m);
    if (!inv) throw SingularTensor("tensor operator is singular");
    const AlgebraPtr<Scalar>& alg = a.algebra();
    const auto n = static_cast<Eigen::Index>(alg->dim());
    const Eigen::Index n2 = n * n;
    Matrix<Scalar> system(n2, n2);
    for (Eigen::Index pq = 0; pq < n2; ++pq) {
        Vector<Scalar> basis = Vector<Scalar>::Zero(n2);
        basis(pq) = Scalar(1);
        const Matrix<Scalar> op = operator_matrix(Tensor<Scalar>(alg, 2, std::move(basis)));
        for (Eigen::Index k = 0; k < n; ++k)
            for (Eigen::Index j = 0; j < n; ++j) system(k * n + j, pq) = op(k, j);
    }
    Vector<Scalar> target(n2);
    for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index j = 0; j < n; ++j) target(k * n + j) = (*inv)(k, j);
    LinearSolve<Scalar> sol = solve(system, target);
    if (sol.status == SolveStatus::Inconsistent) {
        throw NotRepresentable("inverse operator is not of the form x -> sum c(p,q) e_p x e_q");
    }
    return Tensor<Scalar>(alg, 2, std::move(sol.solution));
}

/// The equation lhs o x = rhs.
template <typename Scalar>
struct LinearEquation {
    LinearEquation(Tensor<Scalar> lhs_, Element<Scalar> rhs_) : lhs(std::move(lhs_)), rhs(std::move(rhs_)) {
        if (lhs.arity() != 2) throw ArityMismatch("linear equation needs an arity-2 tensor");
        require_same_algebra(lhs.algebra(), rhs.algebra());
    }
    Tensor<Scalar> lhs;
    Element<Scalar> rhs;
};

enum class SingularPolicy {
    Reject,   // singular lhs throws SingularTensor
    Attempt,  // solve anyway; NoSolution / ManySolutions distinguish failures
};

template <typename Scalar>
Element<Scalar> solve_linear(const LinearEquation<Scalar>& eq, SingularPolicy policy = SingularPolicy::Reject) {
    const Matrix<Scalar> m = operator_matrix(eq.lhs);
    LinearSolve<Scalar> sol = solve(m, eq.rhs.coords());
    switch (sol.status) {
        case SolveStatus::Unique:
            return Element<Scalar>(eq.rhs.algebra(), std::move(sol.solution));
        case SolveStatus::Inconsistent:
            if (policy == SingularPolicy::Reject) throw SingularTensor("equation tensor is singular");
            throw NoSolution("a o x = b has no solution");
        case SolveStatus::Underdetermined:
            if (policy == SingularPolicy::Reject) throw SingularTensor("equation tensor is singular");
            throw ManySolutions("a o x = b has infinitely many solutions");
    }
    throw SingularTensor("unreachable");
}

}  // namespace polyalg

#endif  // POLYALG_TENSOR_HPP
