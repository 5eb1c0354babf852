#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "qutrit_geom/mat3.hpp"
#include "qutrit_geom/states.hpp"

namespace qg {

inline constexpr double kBoundaryTol = 1e-10;
/// 2/sqrt(3): largest I-concurrence of a two-qutrit pure state.
inline constexpr double kMaxConcurrence = 1.1547005383792515;

/// Entanglement invariants of one spectrum.
///
/// s1, s2, s3 are the elementary symmetric polynomials of the eigenvalues,
/// c_i = 2 sqrt(s2) is the I-concurrence, g = 3 sqrt(3) sqrt(s3) is the
/// determinant invariant (1 at maximal entanglement, 0 on rank-2 states), and
/// discriminant is the discriminant of x^3 - x^2 + s2 x - s3.
struct InvariantSet {
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
    double c_i = 0.0;
    double g = 0.0;
    double discriminant = 0.0;
    bool physical = false;
};

/// Discriminant of x^3 - x^2 + s2 x - s3:
/// 18 s2 s3 - 4 s3 + s2^2 - 4 s2^3 - 27 s3^2.
double cubic_discriminant(double s2, double s3);

/// Invariants built from (s2, s3); s1 is taken as 1.
InvariantSet invariants_from_symmetric(double s2, double s3);

InvariantSet invariants_from_spectrum(const Spectrum &spec);

/// Invariants of a pure state. s2 comes from the spectrum of rho_A and s3 from
/// |det C|^2, which keeps g at rounding level for rank-deficient C.
InvariantSet invariants_from_state(const TwoQutritState &state);

/// I-concurrence through the purity route, sqrt(2 (1 - Tr rho^2)).
double concurrence_from_purity(const Matrix3 &rho);

enum class Membership { Interior, Boundary, Exterior, OutOfRange };

std::string_view to_string(Membership m);

/// Classifies a point of the (C_I, G) plane by the sign of the cubic
/// discriminant at s2 = C_I^2/4, s3 = G^2/27. Throws NegativeInput.
Membership region_membership(double c_i, double g, double tol = kBoundaryTol);

/// The (C_I, G) constraint exactly as typeset in the source:
/// C^6 - C^4 - 72 C^2 G^2 + 432 G^4 + 64 G^2. Kept for auditing only.
double printed_eq16_lhs(double c_i, double g);

/// -432 times the discriminant after substituting s2 = C^2/4, s3 = G^2/27:
/// 27 C^6 - 27 C^4 - 72 C^2 G^2 + 16 G^4 + 64 G^2. Non-positive exactly on
/// the physical region.
double derived_constraint_lhs(double c_i, double g);

/// Printed necessary condition 27 s3^2 <= 4 s2^3 (plus tol).
bool weak_necessary_eq15(double s2, double s3, double tol = 0.0);

/// Maclaurin bound 27 s3^2 <= s2^3 (plus tol), valid for every spectrum.
bool maclaurin_bound(double s2, double s3, double tol = 0.0);

struct BoundaryPoint {
    double a = 0.0;  // value of the repeated eigenvalue
    double c_i = 0.0;
    double g = 0.0;
};

/// Point of the degeneracy curve for spectrum (a, a, 1 - 2a), a in [0, 1/2].
BoundaryPoint boundary_point(double a);

/// n_points values of a spaced uniformly on [0, 1/2], endpoints included.
std::vector<BoundaryPoint> boundary_curve(int n_points);

/// Range {g_min, g_max} of admissible G at a given C_I in [0, 2/sqrt(3)].
/// g_max lies on the branch with two equal small eigenvalues. g_min is 0 for
/// C_I <= 1 (the rank-2 edge), otherwise on the branch with two equal large
/// eigenvalues. At C_I = 1 the range is [0, 1/sqrt(2)].
std::array<double, 2> admissible_g_range(double c_i);

}  // namespace qg
