#include "qutrit_geom/mat3.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "qutrit_geom/error.hpp"
#include "test_util.hpp"

using namespace qg;
using qg::testutil::code_of;

namespace {

Matrix3 unit_norm(Matrix3 m) {
    return m * (1.0 / frobenius_norm(m));
}

}  // namespace

TEST(Mat3, det_and_adj_of_identity) {
    EXPECT_EQ(det3(Matrix3::identity()), cplx(1.0));
    EXPECT_EQ(adj3(Matrix3::identity()), Matrix3::identity());
}

TEST(Mat3, det_of_diagonal) {
    EXPECT_EQ(det3(Matrix3::diagonal(2.0, 3.0, cplx(0.0, 5.0))), cplx(0.0, 30.0));
}

TEST(Mat3, dagger_is_involution) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        const Matrix3 m = oracle::ginibre(rng);
        EXPECT_EQ(dagger(dagger(m)), m);
    }
}

TEST(Mat3, trace_and_norm) {
    const Matrix3 m{{1.0, 2.0, 0.0}, {0.0, cplx(0.0, 1.0), 0.0}, {0.0, 0.0, -3.0}};
    EXPECT_EQ(trace(m), cplx(-2.0, 1.0));
    EXPECT_DOUBLE_EQ(frobenius_norm(m), std::sqrt(15.0));
}

TEST(Mat3, adjugate_identity_on_random_unit_norm_matrices) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 1000; ++k) {
        const Matrix3 m = unit_norm(oracle::ginibre(rng));
        const Matrix3 lhs = m * adj3(m);
        const Matrix3 rhs = Matrix3::identity() * det3(m);
        EXPECT_LE(max_abs_entry(lhs - rhs), 1e-12);
        EXPECT_LE(max_abs_entry(adj3(m) * m - rhs), 1e-12);
    }
}

TEST(Mat3, eig_of_diagonal) {
    const Spectrum s = eig_hermitian(Matrix3::diagonal(0.2, 0.5, 0.3));
    EXPECT_NEAR(s[0], 0.5, 1e-15);
    EXPECT_NEAR(s[1], 0.3, 1e-15);
    EXPECT_NEAR(s[2], 0.2, 1e-15);
}

TEST(Mat3, eig_of_scalar_matrix) {
    const Spectrum s = eig_hermitian(Matrix3::identity() * (1.0 / 3.0));
    for (double l : s.lambda) {
        EXPECT_NEAR(l, 1.0 / 3.0, 1e-15);
    }
}

TEST(Mat3, eig_is_unitarily_invariant_against_jacobi) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
        const Matrix3 rho = oracle::rotate_diagonal(oracle::random_unitary(rng), 0.6, 0.4, 0.0);
        const auto ref = oracle::jacobi_hermitian(rho);
        EXPECT_NEAR(ref[0], 0.6, 1e-12);
        EXPECT_NEAR(ref[1], 0.4, 1e-12);
        const Spectrum s = eig_hermitian(rho);
        EXPECT_NEAR(s[0], 0.6, 1e-12);
        EXPECT_NEAR(s[1], 0.4, 1e-12);
        EXPECT_NEAR(s[2], 0.0, 1e-12);
    }
}

TEST(Mat3, eig_agrees_with_jacobi_on_random_density_matrices) {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 1000; ++k) {
        const auto l = oracle::random_simplex_point(rng);
        const Matrix3 rho = oracle::rotate_diagonal(oracle::random_unitary(rng), l[0], l[1], l[2]);
        const auto ref = oracle::jacobi_hermitian(rho);
        const Spectrum s = eig_hermitian(rho);
        for (int i = 0; i < 3; ++i) {
            EXPECT_NEAR(s[i], std::max(ref[i], 0.0), 1e-10) << "sample " << k;
        }
        // Characteristic coefficients round trip.
        const double tr = trace(rho).real();
        const double tr2 = trace(rho * rho).real();
        EXPECT_NEAR(s.sum(), tr, 1e-10);
        EXPECT_NEAR(s.pair_sum(), (tr * tr - tr2) / 2.0, 1e-10);
        EXPECT_NEAR(s.product(), det3(rho).real(), 1e-10);
    }
}

TEST(Mat3, discriminant_matches_squared_differences) {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 1000; ++k) {
        const auto l = oracle::random_simplex_point(rng);
        const double s2 = l[0] * l[1] + l[1] * l[2] + l[0] * l[2];
        const double s3 = l[0] * l[1] * l[2];
        const double delta = 18 * s2 * s3 - 4 * s3 + s2 * s2 - 4 * s2 * s2 * s2 - 27 * s3 * s3;
        EXPECT_NEAR(delta, oracle::squared_difference_product(l), 1e-10);
    }
}

TEST(Mat3, eig_errors) {
    Matrix3 not_herm = Matrix3::diagonal(0.5, 0.3, 0.2);
    not_herm(0, 1) = 0.1;
    EXPECT_EQ(code_of([&] { eig_hermitian(not_herm); }), ErrorCode::NotHermitian);
    EXPECT_EQ(code_of([&] { eig_hermitian(Matrix3::diagonal(0.5, 0.3, 0.3)); }), ErrorCode::NotUnitTrace);
    EXPECT_EQ(code_of([&] { eig_hermitian(Matrix3::diagonal(0.7, 0.5, -0.2)); }), ErrorCode::NotPSD);
}

TEST(Mat3, tiny_negative_eigenvalues_are_clamped) {
    const Spectrum s = eig_hermitian(Matrix3::diagonal(0.6, 0.4 + 5e-11, -5e-11));
    EXPECT_EQ(s[2], 0.0);
    EXPECT_EQ(code_of([] { Spectrum::from_values(0.6, 0.4 + 2e-10, -2e-10); }), ErrorCode::NotPSD);
}

TEST(Mat3, adjugate_eigenvector_diagonal_middle) {
    const Matrix3 rho = Matrix3::diagonal(0.5, 0.3, 0.2);
    const Matrix3 adj = adj3(rho - Matrix3::identity() * 0.3);
    EXPECT_NEAR(std::abs(adj(1, 1) - cplx(-0.02)), 0.0, 1e-15);
    EXPECT_NEAR(max_abs_entry(adj - Matrix3::diagonal(0.0, adj(1, 1), 0.0)), 0.0, 1e-15);

    const Vec3 v = adjugate_eigenvector(rho, 0.3);
    EXPECT_NEAR(std::abs(v[1]), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(v[0]) + std::abs(v[2]), 0.0, 1e-15);
}

TEST(Mat3, adjugate_eigenvector_diagonal_top) {
    const Vec3 v = adjugate_eigenvector(Matrix3::diagonal(0.6, 0.3, 0.1), 0.6);
    EXPECT_NEAR(std::abs(v[0]), 1.0, 1e-15);
}

TEST(Mat3, adjugate_eigenvector_degenerate) {
    EXPECT_EQ(code_of([] { adjugate_eigenvector(Matrix3::identity() * (1.0 / 3.0), 1.0 / 3.0); }),
              ErrorCode::DegenerateEigenvalue);
}

TEST(Mat3, adjugate_eigenvector_residual_on_random_states) {
    std::mt19937_64 rng(29);
    for (int k = 0; k < 500; ++k) {
        const auto l = oracle::random_simplex_point(rng);
        const Matrix3 rho = oracle::rotate_diagonal(oracle::random_unitary(rng), l[0], l[1], l[2]);
        const Spectrum s = eig_hermitian(rho);
        for (double lambda : s.lambda) {
            Vec3 v;
            try {
                v = adjugate_eigenvector(rho, lambda);
            } catch (const Error &e) {
                ASSERT_EQ(e.code(), ErrorCode::DegenerateEigenvalue);
                continue;
            }
            const Vec3 rv = rho * v;
            const Vec3 diff{rv[0] - lambda * v[0], rv[1] - lambda * v[1], rv[2] - lambda * v[2]};
            EXPECT_LE(norm(diff), 1e-8);
            EXPECT_NEAR(norm(v), 1.0, 1e-12);
        }
    }
}

TEST(Mat3, nullspace_fallback_for_repeated_eigenvalue) {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 100; ++k) {
        const Matrix3 rho = oracle::rotate_diagonal(oracle::random_unitary(rng), 0.5, 0.25, 0.25);
        const Vec3 v = eigenvector(rho, 0.25);
        const Vec3 rv = rho * v;
        const Vec3 diff{rv[0] - 0.25 * v[0], rv[1] - 0.25 * v[1], rv[2] - 0.25 * v[2]};
        EXPECT_LE(norm(diff), 1e-8);
        EXPECT_NEAR(norm(v), 1.0, 1e-12);
    }
    const Vec3 any = eigenvector(Matrix3::identity() * (1.0 / 3.0), 1.0 / 3.0);
    EXPECT_NEAR(norm(any), 1.0, 1e-15);
}

TEST(Mat3, eig_is_accurate_at_repeated_eigenvalues) {
    std::mt19937_64 rng(37);
    const std::array<std::array<double, 3>, 6> spectra{{{1.0, 0.0, 0.0},
                                                        {0.5, 0.5, 0.0},
                                                        {0.4, 0.3, 0.3},
                                                        {0.5, 0.25, 0.25},
                                                        {0.6, 0.2 + 1e-9, 0.2 - 1e-9},
                                                        {1.0 / 3 + 2e-9, 1.0 / 3 - 1e-9, 1.0 / 3 - 1e-9}}};
    for (const auto &l : spectra) {
        for (int k = 0; k < 200; ++k) {
            const Matrix3 rho = oracle::rotate_diagonal(oracle::random_unitary(rng), l[0], l[1], l[2]);
            const Spectrum s = eig_hermitian(rho);
            for (int i = 0; i < 3; ++i) {
                EXPECT_NEAR(s[i], l[i], 1e-14) << l[0] << ' ' << l[1] << ' ' << l[2];
            }
        }
    }
    const Spectrum prod = eig_hermitian(Matrix3::diagonal(1.0, 0.0, 0.0));
    EXPECT_EQ(prod[0], 1.0);
    EXPECT_EQ(prod[2], 0.0);
}
