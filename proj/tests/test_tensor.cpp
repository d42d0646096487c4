#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace polyalg;
using polyalg::testing::Rng;

namespace {

RTensor pair(const RElement& a, const RElement& b) { return from_decomposables(a.algebra(), {{a, b}}, 2); }

RTensor one_one(const RAlgebraPtr& alg) { return RTensor::unit(alg, 2); }

Matrix<Rational> identity(const RAlgebraPtr& alg) {
    const auto n = static_cast<Eigen::Index>(alg->dim());
    return Matrix<Rational>::Identity(n, n);
}

}  // namespace

TEST(FromDecomposables, Examples) {
    const auto dual = dual_numbers<Rational>();
    const RElement one = RElement::one(dual), eps = RElement::basis(dual, 1);
    const RTensor t = pair(one, one);
    EXPECT_EQ(t.arity(), 2u);
    EXPECT_EQ(t.at({0, 0}), Rational(1));
    EXPECT_EQ(t.coords().sum(), Rational(1));
    ASSERT_TRUE(t.provenance());
    EXPECT_EQ(t.provenance()->size(), 1u);

    const RElement a(dual, Vector<Rational>::LinSpaced(2, 1, 2)), b = one + Rational(3) * eps;
    const RTensor sym = from_decomposables(dual, {{a, b}, {b, a}}, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(sym.at({i, j}), sym.at({j, i}));

    const auto m2 = matrix_algebra<Rational>(2);
    const RTensor e = pair(matrix_unit(m2, 1, 1), matrix_unit(m2, 2, 2));
    EXPECT_EQ(e.at({0, 3}), Rational(1));
    EXPECT_EQ(e.coords().sum(), Rational(1));
}

TEST(FromDecomposables, Errors) {
    const auto m2 = matrix_algebra<Rational>(2);
    const RElement a = RElement::one(m2);
    EXPECT_THROW(from_decomposables(m2, {{a, a, a}}, 2), ArityMismatch);
    EXPECT_THROW(from_decomposables(m2, {{a, RElement::one(dual_numbers<Rational>())}}, 2), AlgebraMismatch);
    EXPECT_THROW((from_decomposables<Rational>({}, 2)), ArityMismatch);
}

TEST(FromDecomposables, MultilinearInEachSlot) {
    Rng rng(1);
    const auto m2 = matrix_algebra<Rational>(2);
    for (int t = 0; t < 30; ++t) {
        const RElement a = polyalg::testing::random_element(m2, rng), a2 = polyalg::testing::random_element(m2, rng);
        const RElement b = polyalg::testing::random_element(m2, rng), c = polyalg::testing::random_element(m2, rng);
        const Rational s = polyalg::testing::random_fraction(rng);
        const RTensor lhs = from_decomposables(m2, {{b, s * a + a2, c}}, 3);
        const RTensor rhs = s * from_decomposables(m2, {{b, a, c}}, 3) + from_decomposables(m2, {{b, a2, c}}, 3);
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(ArityCap, EnforcedAndConfigurable) {
    const auto m2 = matrix_algebra<Rational>(2);
    EXPECT_EQ(max_arity(), 6u);
    EXPECT_THROW(RTensor::zero(m2, 7), ArityCapExceeded);
    set_max_arity(7);
    EXPECT_NO_THROW(RTensor::zero(m2, 7));
    set_max_arity(6);
    EXPECT_THROW(set_max_arity(0), ArityCapExceeded);
    const RPolynomial x5 = RPolynomial::homogeneous(RTensor::unit(m2, 6));
    EXPECT_THROW(x5 * RPolynomial::variable(m2), ArityCapExceeded);
}

TEST(Apply, Examples) {
    Rng rng(2);
    const auto m2 = matrix_algebra<Rational>(2);
    const RElement c = polyalg::testing::random_element(m2, rng);
    for (int t = 0; t < 10; ++t) {
        const RElement x = polyalg::testing::random_element(m2, rng, true);
        EXPECT_EQ(apply(RTensor::constant(c), x), c);
        EXPECT_EQ(apply(one_one(m2), x), x);
        const RElement e11 = matrix_unit(m2, 1, 1), e22 = matrix_unit(m2, 2, 2);
        const Matrix<Rational> oracle = to_matrix(e11) * to_matrix(x) * to_matrix(e22);
        EXPECT_EQ(to_matrix(apply(pair(e11, e22), x)), oracle);
    }
    EXPECT_THROW(apply(one_one(m2), RElement::one(dual_numbers<Rational>())), AlgebraMismatch);
}

TEST(Apply, LinearInTensor) {
    Rng rng(3);
    const auto m2 = matrix_algebra<Rational>(2);
    for (int t = 0; t < 20; ++t) {
        const RTensor a = polyalg::testing::random_tensor(m2, 3, rng), b = polyalg::testing::random_tensor(m2, 3, rng);
        const RElement x = polyalg::testing::random_element(m2, rng, true);
        EXPECT_EQ(apply(a + b, x), apply(a, x) + apply(b, x));
        EXPECT_EQ(apply(Rational(3) * a, x), Rational(3) * apply(a, x));
    }
}

TEST(ContractProduct, Examples) {
    const auto m2 = matrix_algebra<Rational>(2);
    const RTensor sq = contract_product(one_one(m2), one_one(m2));
    EXPECT_EQ(sq, RTensor::unit(m2, 3));

    const RElement c = matrix_unit(m2, 1, 2), d = matrix_unit(m2, 2, 1);
    EXPECT_EQ(contract_product(RTensor::constant(c), RTensor::constant(d)), RTensor::constant(c * d));

    const RTensor lhs = pair(matrix_unit(m2, 1, 1), matrix_unit(m2, 1, 2));
    const RTensor rhs = pair(matrix_unit(m2, 2, 1), matrix_unit(m2, 2, 2));
    const RTensor expected =
        from_decomposables(m2, {{matrix_unit(m2, 1, 1), matrix_unit(m2, 1, 1), matrix_unit(m2, 2, 2)}}, 3);
    EXPECT_EQ(contract_product(lhs, rhs), expected);
}

TEST(ContractProduct, HomomorphismAndAssociativity) {
    Rng rng(4);
    for (const auto& alg : {matrix_algebra<Rational>(2), dual_numbers<Rational>(), quaternions<Rational>()}) {
        for (int t = 0; t < 25; ++t) {
            const RTensor a = polyalg::testing::random_tensor(alg, 1 + rng() % 3, rng);
            const RTensor b = polyalg::testing::random_tensor(alg, 1 + rng() % 3, rng);
            const RTensor c = polyalg::testing::random_tensor(alg, 2, rng);
            const RElement x = polyalg::testing::random_element(alg, rng, true);
            EXPECT_EQ(apply(contract_product(a, b), x), apply(a, x) * apply(b, x));
            EXPECT_EQ(contract_product(contract_product(a, b), c), contract_product(a, contract_product(b, c)));
        }
    }
}

TEST(OperatorMatrix, Examples) {
    const auto dual = dual_numbers<Rational>();
    const RElement eps = RElement::basis(dual, 1);
    EXPECT_EQ(operator_matrix(one_one(dual)), identity(dual));
    EXPECT_TRUE(is_zero(operator_matrix(pair(eps, eps))));

    const auto m2 = matrix_algebra<Rational>(2);
    const RTensor proj = pair(matrix_unit(m2, 1, 1), matrix_unit(m2, 1, 1)) + pair(matrix_unit(m2, 2, 2), matrix_unit(m2, 2, 2));
    const Matrix<Rational> m = operator_matrix(proj);
    EXPECT_EQ(rank(m), 2);
    Matrix<Rational> diag = Matrix<Rational>::Zero(4, 4);
    diag(0, 0) = Rational(1);
    diag(3, 3) = Rational(1);
    EXPECT_EQ(m, diag);
    EXPECT_THROW(operator_matrix(RTensor::unit(m2, 3)), ArityMismatch);
}

TEST(OperatorMatrix, MatchesSumOfLeftRightProducts) {
    Rng rng(5);
    for (const auto& alg : {matrix_algebra<Rational>(2), dual_numbers<Rational>(), matrix_algebra<Rational>(3)}) {
        for (int t = 0; t < 15; ++t) {
            const RTensor a = polyalg::testing::random_tensor(alg, 2, rng);
            const auto n = static_cast<Eigen::Index>(alg->dim());
            Matrix<Rational> sum = Matrix<Rational>::Zero(n, n);
            for (const auto& term : *a.provenance()) sum += left_mul_matrix(term[0]) * right_mul_matrix(term[1]);
            EXPECT_EQ(operator_matrix(a), sum);
            const RElement x = polyalg::testing::random_element(alg, rng, true);
            EXPECT_EQ(Vector<Rational>(operator_matrix(a) * x.coords()), apply(a, x).coords());
        }
    }
}

TEST(Nonsingular, Examples) {
    const auto dual = dual_numbers<Rational>();
    EXPECT_TRUE(is_nonsingular(one_one(dual)));
    const RElement eps = RElement::basis(dual, 1);
    EXPECT_FALSE(is_nonsingular(pair(eps, eps)));
    const auto m2 = matrix_algebra<Rational>(2);
    EXPECT_FALSE(is_nonsingular(pair(matrix_unit(m2, 1, 1), matrix_unit(m2, 1, 1)) +
                                pair(matrix_unit(m2, 2, 2), matrix_unit(m2, 2, 2))));
}

TEST(InvertTensor, Examples) {
    const auto m2 = matrix_algebra<Rational>(2);
    EXPECT_EQ(invert_tensor(one_one(m2)), one_one(m2));
    EXPECT_EQ(invert_tensor(Rational(3) * one_one(m2)), Rational(1, 3) * one_one(m2));

    Rng rng(6);
    for (int t = 0; t < 10; ++t) {
        const Matrix<Rational> g = polyalg::testing::random_invertible_matrix(2, rng);
        const Matrix<Rational> g_inv = *inverse(g);
        const RTensor a = pair(from_matrix(m2, g), RElement::one(m2));
        const RTensor c = invert_tensor(a);
        EXPECT_EQ(operator_matrix(c), operator_matrix(pair(from_matrix(m2, g_inv), RElement::one(m2))));
        EXPECT_EQ(Matrix<Rational>(operator_matrix(c) * operator_matrix(a)), identity(m2));
    }
    const RElement eps = RElement::basis(dual_numbers<Rational>(), 1);
    EXPECT_THROW(invert_tensor(pair(eps, eps)), SingularTensor);
}

TEST(InvertTensor, RandomNonsingular) {
    Rng rng(7);
    for (const auto& alg : {matrix_algebra<Rational>(2), quaternions<Rational>()}) {
        int done = 0;
        while (done < 25) {
            const RTensor a = polyalg::testing::random_tensor(alg, 2, rng);
            if (!is_nonsingular(a)) continue;
            const RTensor c = invert_tensor(a);
            EXPECT_EQ(Matrix<Rational>(operator_matrix(c) * operator_matrix(a)), identity(alg));
            for (std::size_t i = 0; i < alg->dim(); ++i) {
                const RElement x = RElement::basis(alg, i);
                EXPECT_EQ(apply(c, apply(a, x)), x);
            }
            ++done;
        }
    }
}

TEST(InvertTensor, InverseStaysInSmallImage) {
    // Over the dual numbers the operators x -> sum a x b span only a
    // 2-dimensional subalgebra of End(A). An invertible element of a
    // finite-dimensional unital algebra has its inverse in that algebra, so
    // inversion still succeeds.
    const auto dual = dual_numbers<Rational>();
    const RElement one = RElement::one(dual), eps = RElement::basis(dual, 1);
    const RTensor a = pair(one, one) + pair(eps, one);
    const RTensor c = invert_tensor(a);
    EXPECT_EQ(Matrix<Rational>(operator_matrix(c) * operator_matrix(a)), identity(dual));
    EXPECT_EQ(apply(c, one), one - eps);
}

TEST(SolveLinear, Examples) {
    Rng rng(8);
    const auto m2 = matrix_algebra<Rational>(2);
    const RElement b = polyalg::testing::random_element(m2, rng, true);
    EXPECT_EQ(solve_linear(LinearEquation<Rational>(one_one(m2), b)), b);
    EXPECT_EQ(solve_linear(LinearEquation<Rational>(Rational(2) * one_one(m2), b)), Rational(1, 2) * b);
    for (int t = 0; t < 10; ++t) {
        const Matrix<Rational> g = polyalg::testing::random_invertible_matrix(2, rng);
        const Matrix<Rational> h = polyalg::testing::random_invertible_matrix(2, rng);
        const RTensor lhs = pair(from_matrix(m2, g), from_matrix(m2, h));
        const RElement x = solve_linear(LinearEquation<Rational>(lhs, b));
        EXPECT_EQ(to_matrix(x), Matrix<Rational>(*inverse(g) * to_matrix(b) * *inverse(h)));
    }
}

TEST(SolveLinear, SingularCases) {
    const auto dual = dual_numbers<Rational>();
    const RElement one = RElement::one(dual), eps = RElement::basis(dual, 1);
    const RTensor lhs = pair(eps, one);  // x -> eps x
    EXPECT_THROW(solve_linear(LinearEquation<Rational>(lhs, one)), SingularTensor);
    EXPECT_THROW(solve_linear(LinearEquation<Rational>(lhs, one), SingularPolicy::Attempt), NoSolution);
    EXPECT_THROW(solve_linear(LinearEquation<Rational>(lhs, eps), SingularPolicy::Attempt), ManySolutions);
    EXPECT_THROW(LinearEquation<Rational>(RTensor::unit(dual, 3), one), ArityMismatch);
}

TEST(VanishesIdentically, Examples) {
    const auto dual = dual_numbers<Rational>();
    const RElement eps = RElement::basis(dual, 1);
    EXPECT_TRUE(vanishes_identically(pair(eps, eps)));
    EXPECT_FALSE(vanishes_identically(one_one(dual)));
    const auto m2 = matrix_algebra<Rational>(2);
    const RTensor e = pair(matrix_unit(m2, 1, 1), matrix_unit(m2, 2, 2));
    EXPECT_FALSE(vanishes_identically(e));
    EXPECT_EQ(apply(e, matrix_unit(m2, 1, 2)), matrix_unit(m2, 1, 2));
}

TEST(VanishesIdentically, ImpliesZeroOnBasisAndLeftZeroDivisor) {
    // Exhaustive over coordinates in {-1, 0, 1}: a x b == 0 for all x forces a
    // to be a left zero divisor (and b a right one).
    for (const auto& alg : {dual_numbers<Rational>(), matrix_algebra<Rational>(2)}) {
        const std::size_t n = alg->dim();
        std::vector<RElement> grid;
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            Vector<Rational> v(static_cast<Eigen::Index>(n));
            std::size_t c = code;
            for (std::size_t i = 0; i < n; ++i, c /= 3) v(static_cast<Eigen::Index>(i)) = Rational(static_cast<int>(c % 3) - 1);
            RElement e(alg, v);
            if (!e.is_zero()) grid.push_back(e);
        }
        int vanishing = 0;
        for (const auto& a : grid)
            for (const auto& b : grid) {
                const RTensor t = pair(a, b);
                if (!vanishes_identically(t)) continue;
                ++vanishing;
                for (std::size_t i = 0; i < n; ++i) EXPECT_TRUE(apply(t, RElement::basis(alg, i)).is_zero());
                EXPECT_TRUE(is_left_zero_divisor(a).has_value());
                EXPECT_TRUE(is_right_zero_divisor(b).has_value());
            }
        if (n == 2) EXPECT_GT(vanishing, 0);
    }
}
