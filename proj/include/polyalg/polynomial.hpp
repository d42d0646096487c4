#ifndef POLYALG_POLYNOMIAL_HPP
#define POLYALG_POLYNOMIAL_HPP

#include "polyalg/tensor.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace polyalg {

/// Polynomial in one indeterminate over a noncommutative algebra, stored as
/// the ladder of homogeneous coefficients: coeffs[i] has arity i + 1 and
/// contributes coeffs[i] o x^i. The ladder never ends in a zero tensor; the
/// zero polynomial has no coefficients.
template <typename Scalar>
class Polynomial {
   public:
    explicit Polynomial(AlgebraPtr<Scalar> algebra, std::vector<Tensor<Scalar>> coeffs = {})
        : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].arity() != i + 1) {
                throw ArityLadderViolation("coefficient " + std::to_string(i) + " has arity " +
                                           std::to_string(coeffs_[i].arity()) + ", expected " + std::to_string(i + 1));
            }
            require_same_algebra(algebra_, coeffs_[i].algebra());
        }
        trim();
    }

    static Polynomial zero(const AlgebraPtr<Scalar>& algebra) { return Polynomial(algebra); }
    static Polynomial constant(const Element<Scalar>& c) { return Polynomial(c.algebra(), {Tensor<Scalar>::constant(c)}); }
    /// The polynomial x, with coefficient 1 (x) 1.
    static Polynomial variable(const AlgebraPtr<Scalar>& algebra) {
        return Polynomial(algebra, {Tensor<Scalar>::zero(algebra, 1), Tensor<Scalar>::unit(algebra, 2)});
    }
    /// The monomial factors[0] x factors[1] x ... x factors[k].
    static Polynomial monomial(const std::vector<Element<Scalar>>& factors) {
        if (factors.empty()) throw ArityMismatch("a monomial needs at least one constant");
        const AlgebraPtr<Scalar>& alg = factors.front().algebra();
        const std::size_t k = factors.size() - 1;
        std::vector<Tensor<Scalar>> coeffs;
        for (std::size_t i = 0; i < k; ++i) coeffs.push_back(Tensor<Scalar>::zero(alg, i + 1));
        coeffs.push_back(from_decomposables(alg, {factors}, k + 1));
        return Polynomial(alg, std::move(coeffs));
    }
    /// Homogeneous polynomial t o x^(arity-1).
    static Polynomial homogeneous(const Tensor<Scalar>& t) {
        std::vector<Tensor<Scalar>> coeffs;
        for (std::size_t i = 0; i + 1 < t.arity(); ++i) coeffs.push_back(Tensor<Scalar>::zero(t.algebra(), i + 1));
        coeffs.push_back(t);
        return Polynomial(t.algebra(), std::move(coeffs));
    }

    const AlgebraPtr<Scalar>& algebra() const noexcept { return algebra_; }
    const std::vector<Tensor<Scalar>>& coeffs() const noexcept { return coeffs_; }
    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of degree i; a zero tensor beyond the degree.
    Tensor<Scalar> coefficient(std::size_t i) const {
        if (i < coeffs_.size()) return coeffs_[i];
        return Tensor<Scalar>::zero(algebra_, i + 1);
    }
    const Tensor<Scalar>& leading() const {
        if (coeffs_.empty()) throw ArityMismatch("the zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_algebra(a.algebra_, b.algebra_) && a.coeffs_ == b.coeffs_;
    }

    Polynomial operator-() const {
        std::vector<Tensor<Scalar>> c;
        for (const auto& t : coeffs_) c.push_back(-t);
        return Polynomial(algebra_, std::move(c));
    }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) { return combine(p, q, false); }
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return combine(p, q, true); }
    friend Polynomial operator*(const Scalar& s, const Polynomial& p) {
        std::vector<Tensor<Scalar>> c;
        for (const auto& t : p.coeffs_) c.push_back(s * t);
        return Polynomial(p.algebra_, std::move(c));
    }

    /// r_h = sum_{i+j=h} p_i o q_j.
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        require_same_algebra(p.algebra_, q.algebra_);
        if (p.is_zero() || q.is_zero()) return Polynomial(p.algebra_);
        const std::size_t top = p.coeffs_.size() + q.coeffs_.size() - 1;
        std::vector<std::optional<Tensor<Scalar>>> acc(top);
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
            if (p.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
                if (q.coeffs_[j].is_zero()) continue;
                Tensor<Scalar> term = contract_product(p.coeffs_[i], q.coeffs_[j]);
                acc[i + j] = acc[i + j] ? *acc[i + j] + term : std::move(term);
            }
        }
        // Trailing empty slots are trimmed away without ever allocating them.
        std::size_t used = top;
        while (used > 0 && !acc[used - 1]) --used;
        std::vector<Tensor<Scalar>> c;
        for (std::size_t h = 0; h < used; ++h) {
            c.push_back(acc[h] ? std::move(*acc[h]) : Tensor<Scalar>::zero(p.algebra_, h + 1));
        }
        return Polynomial(p.algebra_, std::move(c));
    }

   private:
    static Polynomial combine(const Polynomial& p, const Polynomial& q, bool subtract) {
        require_same_algebra(p.algebra_, q.algebra_);
        const std::size_t len = std::max(p.coeffs_.size(), q.coeffs_.size());
        std::vector<Tensor<Scalar>> c;
        for (std::size_t i = 0; i < len; ++i) {
            if (i >= q.coeffs_.size()) {
                c.push_back(p.coeffs_[i]);
            } else if (i >= p.coeffs_.size()) {
                c.push_back(subtract ? -q.coeffs_[i] : q.coeffs_[i]);
            } else {
                c.push_back(subtract ? p.coeffs_[i] - q.coeffs_[i] : p.coeffs_[i] + q.coeffs_[i]);
            }
        }
        return Polynomial(p.algebra_, std::move(c));
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    AlgebraPtr<Scalar> algebra_;
    std::vector<Tensor<Scalar>> coeffs_;
};

template <typename Scalar>
Polynomial<Scalar> poly_from_coeffs(const AlgebraPtr<Scalar>& algebra, std::vector<Tensor<Scalar>> coeffs) {
    return Polynomial<Scalar>(algebra, std::move(coeffs));
}

template <typename Scalar>
Polynomial<Scalar> add_poly(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
    return p + q;
}

template <typename Scalar>
Polynomial<Scalar> mul_poly(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
    return p * q;
}

template <typename Scalar>
Element<Scalar> eval(const Polynomial<Scalar>& p, const Element<Scalar>& x) {
    require_same_algebra(p.algebra(), x.algebra());
    Element<Scalar> sum = Element<Scalar>::zero(p.algebra());
    for (const auto& t : p.coeffs()) {
        if (!t.is_zero()) sum = sum + apply(t, x);
    }
    return sum;
}

}  // namespace polyalg

#endif  // POLYALG_POLYNOMIAL_HPP
