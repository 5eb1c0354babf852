#include "qutrit_geom/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "qutrit_geom/error.hpp"

namespace qg {

double cubic_discriminant(double s2, double s3) {
    return 18.0 * s2 * s3 - 4.0 * s3 + s2 * s2 - 4.0 * s2 * s2 * s2 - 27.0 * s3 * s3;
}

InvariantSet invariants_from_symmetric(double s2, double s3) {
    InvariantSet inv;
    inv.s1 = 1.0;
    inv.s2 = s2;
    inv.s3 = s3;
    inv.c_i = std::sqrt(4.0 * std::max(s2, 0.0));
    inv.g = std::sqrt(27.0 * std::max(s3, 0.0));
    inv.discriminant = cubic_discriminant(s2, s3);
    inv.physical = inv.discriminant >= -kBoundaryTol;
    return inv;
}

InvariantSet invariants_from_spectrum(const Spectrum &spec) {
    InvariantSet inv = invariants_from_symmetric(spec.pair_sum(), spec.product());
    inv.s1 = spec.sum();
    return inv;
}

InvariantSet invariants_from_state(const TwoQutritState &state) {
    const Spectrum spec = eig_hermitian(reduced_density(state));
    InvariantSet inv = invariants_from_symmetric(spec.pair_sum(), std::norm(det3(state.coeff())));
    inv.s1 = spec.sum();
    return inv;
}

double concurrence_from_purity(const Matrix3 &rho) {
    const double purity = trace(rho * rho).real();
    return std::sqrt(std::max(2.0 * (1.0 - purity), 0.0));
}

std::string_view to_string(Membership m) {
    switch (m) {
        case Membership::Interior:
            return "interior";
        case Membership::Boundary:
            return "boundary";
        case Membership::Exterior:
            return "exterior";
        case Membership::OutOfRange:
            return "out_of_range";
    }
    return "out_of_range";
}

Membership region_membership(double c_i, double g, double tol) {
    if (c_i < 0.0 || g < 0.0 || std::isnan(c_i) || std::isnan(g)) {
        throw Error(ErrorCode::NegativeInput, "C_I and G must be non-negative");
    }
    if (c_i > kMaxConcurrence + kBoundaryTol || g > 1.0 + kBoundaryTol) {
        return Membership::OutOfRange;
    }
    const double delta = cubic_discriminant(c_i * c_i / 4.0, g * g / 27.0);
    if (delta > tol) {
        return Membership::Interior;
    }
    if (delta < -tol) {
        return Membership::Exterior;
    }
    return Membership::Boundary;
}

double printed_eq16_lhs(double c_i, double g) {
    const double c2 = c_i * c_i;
    const double g2 = g * g;
    return c2 * c2 * c2 - c2 * c2 - 72.0 * c2 * g2 + 432.0 * g2 * g2 + 64.0 * g2;
}

double derived_constraint_lhs(double c_i, double g) {
    const double c2 = c_i * c_i;
    const double g2 = g * g;
    return 27.0 * c2 * c2 * c2 - 27.0 * c2 * c2 - 72.0 * c2 * g2 + 16.0 * g2 * g2 + 64.0 * g2;
}

bool weak_necessary_eq15(double s2, double s3, double tol) {
    return 27.0 * s3 * s3 - 4.0 * s2 * s2 * s2 <= tol;
}

bool maclaurin_bound(double s2, double s3, double tol) {
    return 27.0 * s3 * s3 - s2 * s2 * s2 <= tol;
}

BoundaryPoint boundary_point(double a) {
    const double s2 = 2.0 * a - 3.0 * a * a;
    const double s3 = a * a * (1.0 - 2.0 * a);
    return {a, std::sqrt(4.0 * std::max(s2, 0.0)), std::sqrt(27.0 * std::max(s3, 0.0))};
}

std::vector<BoundaryPoint> boundary_curve(int n_points) {
    if (n_points < 2) {
        throw Error(ErrorCode::InvalidArgument, "boundary curve needs at least 2 points");
    }
    std::vector<BoundaryPoint> out;
    out.reserve(n_points);
    for (int k = 0; k < n_points; ++k) {
        const double a = k == n_points - 1 ? 0.5 : 0.5 * k / (n_points - 1);
        out.push_back(boundary_point(a));
    }
    return out;
}

std::array<double, 2> admissible_g_range(double c_i) {
    if (c_i < 0.0 || c_i > kMaxConcurrence + kBoundaryTol) {
        throw Error(ErrorCode::InvalidArgument, "C_I must lie in [0, 2/sqrt(3)]");
    }
    const double s2 = c_i * c_i / 4.0;
    const double root = std::sqrt(std::max(1.0 - 3.0 * s2, 0.0));
    const double a_small = (1.0 - root) / 3.0;
    const double a_large = (1.0 + root) / 3.0;
    const double g_max = boundary_point(a_small).g;
    const double g_min = a_large >= 0.5 ? 0.0 : boundary_point(a_large).g;
    return {g_min, g_max};
}

}  // namespace qg
