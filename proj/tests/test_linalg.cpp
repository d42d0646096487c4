#include "polyalg/exact_linalg.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using polyalg::Matrix;
using polyalg::Rational;
using polyalg::Vector;

namespace {

Matrix<Rational> mat(std::initializer_list<std::initializer_list<long long>> rows) {
    Matrix<Rational> m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (long long v : row) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

// Cofactor expansion, independent of elimination.
Rational cofactor_det(const Matrix<Rational>& m) {
    const Eigen::Index n = m.rows();
    if (n == 1) return m(0, 0);
    Rational sum(0);
    for (Eigen::Index j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        Matrix<Rational> minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r)
            for (Eigen::Index c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        const Rational term = m(0, j) * cofactor_det(minor);
        sum = (j % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

}  // namespace

TEST(Linalg, DeterminantAndRank) {
    EXPECT_EQ(polyalg::determinant(mat({{2, 1}, {1, 1}})), Rational(1));
    EXPECT_EQ(polyalg::determinant(mat({{0, 1}, {1, 0}})), Rational(-1));
    EXPECT_EQ(polyalg::determinant(mat({{1, 2}, {2, 4}})), Rational(0));
    EXPECT_EQ(polyalg::rank(mat({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}})), 2);
    EXPECT_EQ(polyalg::rank(Matrix<Rational>(Matrix<Rational>::Zero(3, 4))), 0);
}

TEST(Linalg, KernelVectorIsPrimitiveWithPositiveLead) {
    Matrix<Rational> m(1, 3);
    m << Rational(2), Rational(4), Rational(6);
    const auto v = polyalg::kernel_vector(m);
    ASSERT_TRUE(v);
    // Smallest free column is 1: x1 = 1, x0 = -2, then the sign is flipped.
    EXPECT_EQ((*v)(0), Rational(2));
    EXPECT_EQ((*v)(1), Rational(-1));
    EXPECT_EQ((*v)(2), Rational(0));
    EXPECT_FALSE(polyalg::kernel_vector(mat({{1, 0}, {0, 1}})));

    Matrix<Rational> f(1, 2);
    f << Rational(1, 2), Rational(1, 3);
    const auto w = polyalg::kernel_vector(f);
    ASSERT_TRUE(w);
    EXPECT_EQ((*w)(0), Rational(2));
    EXPECT_EQ((*w)(1), Rational(-3));
}

TEST(Linalg, SolveStatuses) {
    Vector<Rational> b(2);
    b << Rational(3), Rational(2);
    auto s = polyalg::solve(mat({{1, 1}, {0, 1}}), b);
    EXPECT_EQ(s.status, polyalg::SolveStatus::Unique);
    EXPECT_EQ(s.solution(0), Rational(1));
    EXPECT_EQ(s.solution(1), Rational(2));

    s = polyalg::solve(mat({{1, 1}, {2, 2}}), b);
    EXPECT_EQ(s.status, polyalg::SolveStatus::Inconsistent);

    Vector<Rational> c(2);
    c << Rational(3), Rational(6);
    s = polyalg::solve(mat({{1, 1}, {2, 2}}), c);
    EXPECT_EQ(s.status, polyalg::SolveStatus::Underdetermined);
    EXPECT_EQ(s.solution(0), Rational(3));
    EXPECT_EQ(s.solution(1), Rational(0));
}

TEST(Linalg, InverseAndKernelOnRandomMatrices) {
    polyalg::testing::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 5);
        Matrix<Rational> m(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                m(i, j) = (rng() % 3 == 0) ? Rational(0) : polyalg::testing::random_fraction(rng);
        const Rational det = polyalg::determinant(m);
        EXPECT_EQ(det, cofactor_det(m));
        const auto inv = polyalg::inverse(m);
        EXPECT_EQ(inv.has_value(), !det.is_zero());
        if (inv) {
            EXPECT_EQ(Matrix<Rational>(m * *inv), Matrix<Rational>(Matrix<Rational>::Identity(n, n)));
        }
        for (const auto& v : polyalg::kernel_basis(m)) EXPECT_TRUE(polyalg::is_zero(Vector<Rational>(m * v)));
        EXPECT_EQ(static_cast<Eigen::Index>(polyalg::kernel_basis(m).size()) + polyalg::rank(m), n);
        if (auto v = polyalg::kernel_vector(m)) {
            EXPECT_TRUE(polyalg::is_zero(Vector<Rational>(m * *v)));
            EXPECT_FALSE(polyalg::is_zero(*v));
        }
    }
}

TEST(Linalg, DeterminantIsMultiplicative) {
    polyalg::testing::Rng rng(12);
    for (int t = 0; t < 50; ++t) {
        Matrix<Rational> a(4, 4), b(4, 4);
        for (Eigen::Index i = 0; i < 4; ++i)
            for (Eigen::Index j = 0; j < 4; ++j) {
                a(i, j) = polyalg::testing::random_fraction(rng);
                b(i, j) = polyalg::testing::random_int(rng);
            }
        EXPECT_EQ(polyalg::determinant(Matrix<Rational>(a * b)), polyalg::determinant(a) * polyalg::determinant(b));
    }
}
