#include "qutrit_geom/mat3.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qutrit_geom/error.hpp"

namespace qg {

Matrix3::Matrix3(std::initializer_list<std::initializer_list<cplx>> rows) {
    if (rows.size() != 3) {
        throw Error(ErrorCode::InvalidArgument, "Matrix3 needs exactly 3 rows");
    }
    int r = 0;
    for (const auto &row : rows) {
        if (row.size() != 3) {
            throw Error(ErrorCode::InvalidArgument, "Matrix3 rows need exactly 3 entries");
        }
        int c = 0;
        for (const auto &v : row) {
            (*this)(r, c++) = v;
        }
        ++r;
    }
}

Matrix3 Matrix3::identity() {
    return diagonal(1.0, 1.0, 1.0);
}

Matrix3 Matrix3::diagonal(cplx a, cplx b, cplx c) {
    Matrix3 m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
}

Matrix3 Matrix3::from_columns(const Vec3 &c0, const Vec3 &c1, const Vec3 &c2) {
    Matrix3 m;
    for (int r = 0; r < 3; ++r) {
        m(r, 0) = c0[r];
        m(r, 1) = c1[r];
        m(r, 2) = c2[r];
    }
    return m;
}

Vec3 Matrix3::column(int col) const {
    return {(*this)(0, col), (*this)(1, col), (*this)(2, col)};
}

bool Matrix3::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const cplx &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

Matrix3 &Matrix3::operator+=(const Matrix3 &rhs) {
    for (size_t k = 0; k < data_.size(); ++k) {
        data_[k] += rhs.data_[k];
    }
    return *this;
}

Matrix3 &Matrix3::operator-=(const Matrix3 &rhs) {
    for (size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= rhs.data_[k];
    }
    return *this;
}

Matrix3 &Matrix3::operator*=(cplx s) {
    for (auto &v : data_) {
        v *= s;
    }
    return *this;
}

Matrix3 operator+(Matrix3 lhs, const Matrix3 &rhs) {
    return lhs += rhs;
}

Matrix3 operator-(Matrix3 lhs, const Matrix3 &rhs) {
    return lhs -= rhs;
}

Matrix3 operator*(const Matrix3 &lhs, const Matrix3 &rhs) {
    Matrix3 out;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            out(r, c) = lhs(r, 0) * rhs(0, c) + lhs(r, 1) * rhs(1, c) + lhs(r, 2) * rhs(2, c);
        }
    }
    return out;
}

Matrix3 operator*(Matrix3 m, cplx s) {
    return m *= s;
}

Matrix3 operator*(cplx s, Matrix3 m) {
    return m *= s;
}

Vec3 operator*(const Matrix3 &m, const Vec3 &v) {
    Vec3 out;
    for (int r = 0; r < 3; ++r) {
        out[r] = m(r, 0) * v[0] + m(r, 1) * v[1] + m(r, 2) * v[2];
    }
    return out;
}

Matrix3 dagger(const Matrix3 &m) {
    Matrix3 out;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            out(r, c) = std::conj(m(c, r));
        }
    }
    return out;
}

cplx trace(const Matrix3 &m) {
    return m(0, 0) + m(1, 1) + m(2, 2);
}

cplx det3(const Matrix3 &m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Matrix3 adj3(const Matrix3 &m) {
    Matrix3 a;
    a(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    a(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    a(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    a(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    a(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    a(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    a(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    a(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    a(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return a;
}

double frobenius_norm(const Matrix3 &m) {
    double acc = 0.0;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            acc += std::norm(m(r, c));
        }
    }
    return std::sqrt(acc);
}

double hermitian_defect(const Matrix3 &m) {
    double worst = 0.0;
    for (int r = 0; r < 3; ++r) {
        for (int c = r; c < 3; ++c) {
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return worst;
}

double max_abs_entry(const Matrix3 &m) {
    double worst = 0.0;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            worst = std::max(worst, std::abs(m(r, c)));
        }
    }
    return worst;
}

double norm(const Vec3 &v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

cplx inner(const Vec3 &a, const Vec3 &b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

Vec3 normalized(const Vec3 &v) {
    double n = norm(v);
    if (!(n > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero vector");
    }
    return {v[0] / n, v[1] / n, v[2] / n};
}

Spectrum Spectrum::from_values(double a, double b, double c) {
    std::array<double, 3> l{a, b, c};
    for (double v : l) {
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::InvalidArgument, "non-finite eigenvalue");
        }
        if (v < -kNegativeEigenTol) {
            throw Error(ErrorCode::NotPSD, "eigenvalue below -1e-10");
        }
    }
    if (std::abs(a + b + c - 1.0) > kTraceTol) {
        throw Error(ErrorCode::NotUnitTrace, "eigenvalues must sum to 1");
    }
    for (double &v : l) {
        v = std::max(v, 0.0);
    }
    std::sort(l.begin(), l.end(), std::greater<>());
    return Spectrum{l};
}

namespace {

Vec3 conj_cross(const Vec3 &a, const Vec3 &b) {
    return {std::conj(a[1] * b[2] - a[2] * b[1]), std::conj(a[2] * b[0] - a[0] * b[2]),
            std::conj(a[0] * b[1] - a[1] * b[0])};
}

}  // namespace

// The trigonometric root farthest from the other two is accurate to rounding;
// the remaining pair comes from the 2x2 compression of h onto the orthogonal
// complement of its eigenvector, which avoids the sqrt(eps) loss of acos near
// a repeated root.
std::array<double, 3> hermitian_eigenvalues(const Matrix3 &h) {
    const double q = (h(0, 0).real() + h(1, 1).real() + h(2, 2).real()) / 3.0;
    const double off = std::norm(h(0, 1)) + std::norm(h(0, 2)) + std::norm(h(1, 2));
    const double d0 = h(0, 0).real() - q;
    const double d1 = h(1, 1).real() - q;
    const double d2 = h(2, 2).real() - q;
    const double p2 = d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * off;
    if (p2 == 0.0) {
        return {q, q, q};
    }
    const double p = std::sqrt(p2 / 6.0);

    Matrix3 b = h;
    for (int i = 0; i < 3; ++i) {
        b(i, i) = cplx(b(i, i).real() - q, 0.0);
    }
    b *= 1.0 / p;
    const double r = std::clamp(det3(b).real() / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    // r >= 0: the largest root is isolated, otherwise the smallest.
    const double beta = r >= 0.0 ? 2.0 * std::cos(phi) : 2.0 * std::cos(phi + 2.0 * std::numbers::pi / 3.0);

    const Vec3 v = adjugate_eigenvector(b, beta);
    int k = 0;
    for (int i = 1; i < 3; ++i) {
        if (std::abs(v[i]) < std::abs(v[k])) {
            k = i;
        }
    }
    Vec3 u1{};
    u1[k] = 1.0;
    const cplx vk = std::conj(v[k]);
    for (int i = 0; i < 3; ++i) {
        u1[i] -= vk * v[i];
    }
    u1 = normalized(u1);
    const Vec3 u2 = normalized(conj_cross(v, u1));

    const double iso = inner(v, h * v).real();
    const double a = inner(u1, h * u1).real();
    const double d = inner(u2, h * u2).real();
    const double half = std::hypot((a - d) / 2.0, std::abs(inner(u1, h * u2)));
    const double m = (a + d) / 2.0;
    std::array<double, 3> l{iso, m + half, m - half};
    std::sort(l.begin(), l.end(), std::greater<>());
    return l;
}

Spectrum eig_hermitian(const Matrix3 &rho) {
    if (!rho.all_finite()) {
        throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
    }
    if (hermitian_defect(rho) > kHermitianTol) {
        throw Error(ErrorCode::NotHermitian, "matrix differs from its adjoint by more than 1e-10");
    }
    const cplx tr = trace(rho);
    if (std::abs(tr - 1.0) > kTraceTol) {
        throw Error(ErrorCode::NotUnitTrace, "trace differs from 1 by more than 1e-10");
    }
    const auto l = hermitian_eigenvalues(rho);
    return Spectrum::from_values(l[0], l[1], l[2]);
}

namespace {

Matrix3 shifted(const Matrix3 &m, double lambda) {
    Matrix3 a = m;
    for (int i = 0; i < 3; ++i) {
        a(i, i) -= lambda;
    }
    return a;
}

// Index and norm of the largest-norm column.
std::pair<int, double> largest_column(const Matrix3 &m) {
    int best = 0;
    double best_norm = -1.0;
    for (int c = 0; c < 3; ++c) {
        double n = norm(m.column(c));
        if (n > best_norm) {
            best = c;
            best_norm = n;
        }
    }
    return {best, best_norm};
}

}  // namespace

Vec3 adjugate_eigenvector(const Matrix3 &rho, double lambda) {
    const Matrix3 adj = adj3(shifted(rho, lambda));
    auto [col, n] = largest_column(adj);
    if (n < kAdjugateColumnTol) {
        throw Error(ErrorCode::DegenerateEigenvalue, "adj(rho - lambda I) vanishes; eigenvalue is repeated");
    }
    Vec3 v = adj.column(col);
    return {v[0] / n, v[1] / n, v[2] / n};
}

Vec3 nullspace_direction(const Matrix3 &a) {
    auto [col, n] = largest_column(a);
    if (n < kAdjugateColumnTol) {
        return {1.0, 0.0, 0.0};
    }
    const Vec3 u = a.column(col);
    // Start from the basis vector least aligned with the range of a.
    int k = 0;
    for (int i = 1; i < 3; ++i) {
        if (std::abs(u[i]) < std::abs(u[k])) {
            k = i;
        }
    }
    Vec3 v{};
    v[k] = 1.0;
    const cplx proj = std::conj(u[k]) / (n * n);
    for (int i = 0; i < 3; ++i) {
        v[i] -= proj * u[i];
    }
    return normalized(v);
}

Vec3 eigenvector(const Matrix3 &rho, double lambda) {
    try {
        return adjugate_eigenvector(rho, lambda);
    } catch (const Error &e) {
        if (e.code() != ErrorCode::DegenerateEigenvalue) {
            throw;
        }
    }
    return nullspace_direction(shifted(rho, lambda));
}

}  // namespace qg
