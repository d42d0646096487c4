#ifndef POLYALG_REDUCTION_HPP
#define POLYALG_REDUCTION_HPP

// Reduction of a polynomial r by a degree-1 divisor p(x) = p0 + p1 o x with
// nonsingular p1. With c the inverse tensor of p1 and s = c o p0, every x
// satisfies
//
//     x = sum_{p,q} c(p,q) e_p (p(x) - p0) e_q = c o p(x) - s.
//
// Substituting this for one indeterminate slot of each homogeneous piece of r
// moves a factor p(x) out and leaves a piece of lower degree, so after deg r
// steps
//
//     r(x) = remainder + sum_j u_j(x) p(x) v_j          (Side::Right)
//     r(x) = remainder + sum_j v_j p(x) u_j(x)          (Side::Left)
//
// with a constant remainder. The remainder always equals r evaluated at the
// unique root -s of p.

#include "polyalg/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace polyalg {

enum class Side {
    Right,  // the last indeterminate is replaced; terms read u(x) p(x) v
    Left,   // the first indeterminate is replaced; terms read v p(x) u(x)
};

template <typename Scalar>
struct ReductionTerm {
    Polynomial<Scalar> u;
    Element<Scalar> v;
};

template <typename Scalar>
struct ReductionResult {
    Element<Scalar> remainder;
    std::vector<ReductionTerm<Scalar>> terms;
    Polynomial<Scalar> divisor;
    Side side = Side::Right;

    /// remainder + sum of the three-factor terms, evaluated at x.
    Element<Scalar> evaluate(const Element<Scalar>& x) const {
        const Element<Scalar> px = eval(divisor, x);
        Element<Scalar> sum = remainder;
        for (const auto& t : terms) {
            sum = sum + (side == Side::Right ? eval(t.u, x) * px * t.v : t.v * px * eval(t.u, x));
        }
        return sum;
    }
};

namespace detail {

struct KernelEntry {
    std::size_t a, b, m;
};

/// Sparse map (a, b) -> m with weights, used to merge two adjacent tensor
/// slots into one.
template <typename Scalar>
struct SlotKernel {
    std::vector<KernelEntry> index;
    std::vector<Scalar> weight;

    void add(std::size_t a, std::size_t b, std::size_t m, const Scalar& w) {
        index.push_back({a, b, m});
        weight.push_back(w);
    }
    bool empty() const { return index.empty(); }
};

/// out[.., m, ..] = sum_{a,b} t[.., a, b, ..] K(a, b, m), where (a, b) are the
/// slots at positions pos and pos + 1.
template <typename Scalar>
Tensor<Scalar> merge_slots(const Tensor<Scalar>& t, std::size_t pos, const SlotKernel<Scalar>& kernel) {
    const std::size_t n = t.dim();
    std::size_t outer = 1, inner = 1;
    for (std::size_t s = 0; s < pos; ++s) outer *= n;
    for (std::size_t s = pos + 2; s < t.arity(); ++s) inner *= n;
    Vector<Scalar> out = Vector<Scalar>::Zero(static_cast<Eigen::Index>(outer * n * inner));
    const Scalar* src = t.coords().data();
    Scalar* dst = out.data();
    for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t e = 0; e < kernel.index.size(); ++e) {
            const KernelEntry& k = kernel.index[e];
            const Scalar& w = kernel.weight[e];
            const Scalar* from = src + ((o * n + k.a) * n + k.b) * inner;
            Scalar* to = dst + (o * n + k.m) * inner;
            for (std::size_t i = 0; i < inner; ++i) {
                if (!(from[i] == Scalar(0))) to[i] += w * from[i];
            }
        }
    }
    return Tensor<Scalar>(t.algebra(), t.arity() - 1, std::move(out));
}

/// Kernel of (a, b) -> coordinates of e_a y e_b.
template <typename Scalar>
SlotKernel<Scalar> sandwich_kernel(const Element<Scalar>& y) {
    const Algebra<Scalar>& alg = *y.algebra();
    const std::size_t n = alg.dim();
    SlotKernel<Scalar> kernel;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Element<Scalar> prod = Element<Scalar>::basis(y.algebra(), a) * y * Element<Scalar>::basis(y.algebra(), b);
            for (std::size_t m = 0; m < n; ++m)
                if (!(prod[m] == Scalar(0))) kernel.add(a, b, m, prod[m]);
        }
    return kernel;
}

/// Kernels splitting e_a x e_b, with x = sum c(p,q) e_p P e_q, into
/// (new slot m) P e_j (right side) or e_j P (new slot m) (left side); one
/// kernel per j.
template <typename Scalar>
std::vector<SlotKernel<Scalar>> split_kernels(const Tensor<Scalar>& c, Side side) {
    const Algebra<Scalar>& alg = *c.algebra();
    const std::size_t n = alg.dim();
    std::vector<Vector<Scalar>> dense(n, Vector<Scalar>::Zero(static_cast<Eigen::Index>(n * n * n)));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const Scalar& cpq = c.coords()(static_cast<Eigen::Index>(p * n + q));
            if (cpq == Scalar(0)) continue;
            for (std::size_t a = 0; a < n; ++a)
                for (const auto& first : alg.by_pair(a, p))        // e_a e_p
                    for (std::size_t b = 0; b < n; ++b)
                        for (const auto& second : alg.by_pair(q, b)) {  // e_q e_b
                            const Scalar w = cpq * first.value * second.value;
                            const std::size_t m = side == Side::Right ? first.k : second.k;
                            const std::size_t j = side == Side::Right ? second.k : first.k;
                            dense[j]((static_cast<Eigen::Index>(a * n + b)) * static_cast<Eigen::Index>(n) +
                                     static_cast<Eigen::Index>(m)) += w;
                        }
        }
    std::vector<SlotKernel<Scalar>> kernels(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t m = 0; m < n; ++m) {
                    const Scalar& w = dense[j](static_cast<Eigen::Index>((a * n + b) * n + m));
                    if (!(w == Scalar(0))) kernels[j].add(a, b, m, w);
                }
    return kernels;
}

/// lambda with M(t) = lambda M(p1), if one exists.
template <typename Scalar>
std::optional<Scalar> operator_ratio(const Tensor<Scalar>& t, const Matrix<Scalar>& divisor_op) {
    const Matrix<Scalar> op = operator_matrix(t);
    for (Eigen::Index j = 0; j < divisor_op.cols(); ++j)
        for (Eigen::Index i = 0; i < divisor_op.rows(); ++i) {
            if (divisor_op(i, j) == Scalar(0)) continue;
            const Scalar lambda = op(i, j) / divisor_op(i, j);
            if (op == Matrix<Scalar>(lambda * divisor_op)) return lambda;
            return std::nullopt;
        }
    return std::nullopt;
}

}  // namespace detail

/// Reduces r modulo the degree-1 divisor p0 + p1 o x.
///
/// Pieces are processed from the top degree down. Each piece r_k gives
/// degree-(k-1) contributions to u_j for every basis vector v_j = e_j, and,
/// when p0 != 0, pushes r_k with the replaced slot evaluated at the root into
/// r_{k-1}. A degree-1 piece whose operator is lambda times that of p1 is
/// emitted as the single term (lambda, 1). Finally, terms with identical u are
/// merged by adding their v; terms that end up zero are dropped.
template <typename Scalar>
ReductionResult<Scalar> reduce_by_linear_affine(const Polynomial<Scalar>& r, const Element<Scalar>& p0,
                                                const Tensor<Scalar>& p1, Side side = Side::Right) {
    require_same_algebra(r.algebra(), p0.algebra());
    require_same_algebra(r.algebra(), p1.algebra());
    if (p1.arity() != 2) throw ArityMismatch("divisor coefficient must be an arity-2 tensor");
    const AlgebraPtr<Scalar>& alg = r.algebra();
    const std::size_t n = alg->dim();

    const Tensor<Scalar> c = invert_tensor(p1);
    const Element<Scalar> root = -apply(c, p0);
    const Matrix<Scalar> divisor_op = operator_matrix(p1);
    const auto kernels = detail::split_kernels(c, side);
    const detail::SlotKernel<Scalar> residue = detail::sandwich_kernel(root);

    std::vector<Tensor<Scalar>> work = r.coeffs();
    const std::size_t top = work.size();
    // u_ladders[j][k - 1] collects the degree-(k-1) coefficient of u_j.
    std::vector<std::vector<Tensor<Scalar>>> u_ladders(n);
    std::optional<Scalar> unit_term;

    for (std::size_t k = top == 0 ? 0 : top - 1; k >= 1; --k) {
        const Tensor<Scalar> piece = work[k];
        if (piece.is_zero()) continue;
        const std::size_t pos = side == Side::Right ? k - 1 : 0;
        std::optional<Scalar> lambda;
        if (k == 1) lambda = detail::operator_ratio(piece, divisor_op);
        if (lambda) {
            unit_term = *lambda;
        } else {
            for (std::size_t j = 0; j < n; ++j) {
                if (kernels[j].empty()) continue;
                Tensor<Scalar> part = detail::merge_slots(piece, pos, kernels[j]);
                if (part.is_zero()) continue;
                auto& ladder = u_ladders[j];
                while (ladder.size() < k) ladder.push_back(Tensor<Scalar>::zero(alg, ladder.size() + 1));
                ladder[k - 1] = ladder[k - 1] + part;
            }
        }
        if (!root.is_zero() && !residue.empty()) work[k - 1] = work[k - 1] + detail::merge_slots(piece, pos, residue);
    }

    ReductionResult<Scalar> result{top == 0 ? Element<Scalar>::zero(alg) : Element<Scalar>(alg, work[0].coords()),
                                   {},
                                   Polynomial<Scalar>(alg, {Tensor<Scalar>::constant(p0), p1}),
                                   side};

    std::vector<ReductionTerm<Scalar>> raw;
    if (unit_term) raw.push_back({Polynomial<Scalar>::constant(*unit_term * Element<Scalar>::one(alg)), Element<Scalar>::one(alg)});
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial<Scalar> u(alg, std::move(u_ladders[j]));
        if (!u.is_zero()) raw.push_back({std::move(u), Element<Scalar>::basis(alg, j)});
    }
    for (auto& term : raw) {
        auto same = std::find_if(result.terms.begin(), result.terms.end(),
                                 [&](const ReductionTerm<Scalar>& t) { return t.u == term.u; });
        if (same != result.terms.end()) {
            same->v = same->v + term.v;
        } else {
            result.terms.push_back(std::move(term));
        }
    }
    std::erase_if(result.terms, [](const ReductionTerm<Scalar>& t) { return t.v.is_zero(); });
    return result;
}

/// Reduction by the homogeneous divisor p1 o x; the remainder is r(0).
template <typename Scalar>
ReductionResult<Scalar> reduce_by_linear_homogeneous(const Polynomial<Scalar>& r, const Tensor<Scalar>& p1,
                                                     Side side = Side::Right) {
    return reduce_by_linear_affine(r, Element<Scalar>::zero(r.algebra()), p1, side);
}

/// True iff r = sum_j u_j(x) p(x) v_j exactly, i.e. the reduction leaves no
/// remainder.
template <typename Scalar>
bool is_reducible_to_zero(const Polynomial<Scalar>& r, const Element<Scalar>& p0, const Tensor<Scalar>& p1,
                          Side side = Side::Right) {
    return reduce_by_linear_affine(r, p0, p1, side).remainder.is_zero();
}

/// Checks remainder + sum u_j(x) p(x) v_j == r(x) at each point.
template <typename Scalar>
bool verify_reduction(const ReductionResult<Scalar>& result, const Polynomial<Scalar>& r,
                      const std::vector<Element<Scalar>>& points) {
    for (const auto& x : points) {
        if (!(result.evaluate(x) == eval(r, x))) return false;
    }
    return true;
}

}  // namespace polyalg

#endif  // POLYALG_REDUCTION_HPP
