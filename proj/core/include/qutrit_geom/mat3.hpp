#pragma once

#include <array>
#include <complex>
#include <initializer_list>

namespace qg {

using cplx = std::complex<double>;
using Vec3 = std::array<cplx, 3>;

/// Dense 3x3 complex matrix, row-major.
class Matrix3 {
public:
    Matrix3() = default;
    Matrix3(std::initializer_list<std::initializer_list<cplx>> rows);

    static Matrix3 identity();
    static Matrix3 zero() {
        return {};
    }
    static Matrix3 diagonal(cplx a, cplx b, cplx c);
    static Matrix3 from_columns(const Vec3 &c0, const Vec3 &c1, const Vec3 &c2);

    cplx &operator()(int row, int col) {
        return data_[3 * row + col];
    }
    const cplx &operator()(int row, int col) const {
        return data_[3 * row + col];
    }

    Vec3 column(int col) const;
    bool all_finite() const;

    Matrix3 &operator+=(const Matrix3 &rhs);
    Matrix3 &operator-=(const Matrix3 &rhs);
    Matrix3 &operator*=(cplx s);

    friend bool operator==(const Matrix3 &, const Matrix3 &) = default;

private:
    std::array<cplx, 9> data_{};
};

Matrix3 operator+(Matrix3 lhs, const Matrix3 &rhs);
Matrix3 operator-(Matrix3 lhs, const Matrix3 &rhs);
Matrix3 operator*(const Matrix3 &lhs, const Matrix3 &rhs);
Matrix3 operator*(Matrix3 m, cplx s);
Matrix3 operator*(cplx s, Matrix3 m);
Vec3 operator*(const Matrix3 &m, const Vec3 &v);

Matrix3 dagger(const Matrix3 &m);
cplx trace(const Matrix3 &m);
cplx det3(const Matrix3 &m);
/// Transpose of the cofactor matrix; m * adj3(m) == det3(m) * I.
Matrix3 adj3(const Matrix3 &m);
double frobenius_norm(const Matrix3 &m);
/// Largest elementwise |m_ij - conj(m_ji)|.
double hermitian_defect(const Matrix3 &m);
double max_abs_entry(const Matrix3 &m);

double norm(const Vec3 &v);
/// <a|b>, conjugate-linear in the first argument.
cplx inner(const Vec3 &a, const Vec3 &b);
Vec3 normalized(const Vec3 &v);

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kNegativeEigenTol = 1e-10;
inline constexpr double kAdjugateColumnTol = 1e-12;

/// Three real eigenvalues, sorted descending, summing to one.
struct Spectrum {
    std::array<double, 3> lambda{};

    double operator[](int i) const {
        return lambda[i];
    }
    double sum() const {
        return lambda[0] + lambda[1] + lambda[2];
    }
    double pair_sum() const {
        return lambda[0] * lambda[1] + lambda[1] * lambda[2] + lambda[0] * lambda[2];
    }
    double product() const {
        return lambda[0] * lambda[1] * lambda[2];
    }

    /// Validates, clamps rounding negatives to zero and sorts descending.
    static Spectrum from_values(double a, double b, double c);

    friend bool operator==(const Spectrum &, const Spectrum &) = default;
};

/// Eigenvalues of a unit-trace positive semidefinite Hermitian matrix.
///
/// Uses the closed-form trigonometric solution of the characteristic cubic,
/// built from the trace invariants of the shifted matrix rho - (tr/3) I so the
/// depressed-cubic scale is a sum of squares and never negative. The acos
/// argument is clamped to [-1, 1]. Only the root isolated from the other two
/// is taken from the cubic; the remaining pair is the spectrum of the 2x2
/// compression onto the complement of its eigenvector.
///
/// Throws NotHermitian, NotUnitTrace, or NotPSD.
Spectrum eig_hermitian(const Matrix3 &rho);

/// Descending, unclamped eigenvalues of any Hermitian matrix (no trace or sign checks).
std::array<double, 3> hermitian_eigenvalues(const Matrix3 &h);

/// Unit eigenvector for a simple eigenvalue, taken from the largest column of
/// adj(rho - lambda I). Throws DegenerateEigenvalue when every column norm is
/// below 1e-12, which happens at multiplicity >= 2.
Vec3 adjugate_eigenvector(const Matrix3 &rho, double lambda);

/// Unit vector in the (approximate) null space of a Hermitian matrix of rank <= 1.
/// This is the fallback for adjugate_eigenvector at repeated eigenvalues.
Vec3 nullspace_direction(const Matrix3 &a);

/// adjugate_eigenvector, falling back to nullspace_direction(rho - lambda I).
Vec3 eigenvector(const Matrix3 &rho, double lambda);

}  // namespace qg
