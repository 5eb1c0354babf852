#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "qutrit_geom/mat3.hpp"

namespace qg {

inline constexpr double kZeroSuccessTol = 1e-15;
inline constexpr double kUnitTol = 1e-12;

/// Path-marker state sum_i sqrt(t_i) c_i |path_i>|marker_i>.
/// t holds intensity transmittances; amplitudes pick up sqrt(t_i).
class MarkedState {
public:
    /// Throws InvalidArgument unless sum |c_i|^2 = 1, each marker is a unit
    /// vector and each t_i lies in [0, 1].
    static MarkedState make(const Vec3 &c, const std::array<double, 3> &t,
                            const std::array<Vec3, 3> &markers);
    /// Markers are the computational basis.
    static MarkedState make(const Vec3 &c, const std::array<double, 3> &t);

    const Vec3 &c() const {
        return c_;
    }
    const std::array<double, 3> &t() const {
        return t_;
    }
    const std::array<Vec3, 3> &markers() const {
        return markers_;
    }
    bool markers_orthonormal() const;

private:
    MarkedState() = default;

    Vec3 c_{};
    std::array<double, 3> t_{};
    std::array<Vec3, 3> markers_{};
};

std::array<Vec3, 3> computational_markers();

/// Overlaps of the erasure state with each marker.
struct ErasureSetup {
    std::optional<Vec3> e;  // absent when built directly from overlaps
    Vec3 alpha{};           // alpha_i = <e|marker_i>
    std::array<double, 3> tau{};

    /// Throws InvalidArgument unless e has unit norm.
    static ErasureSetup project(const Vec3 &e, const std::array<Vec3, 3> &markers);
    static ErasureSetup from_overlaps(const Vec3 &alpha);
};

struct ConditionalQuantities {
    std::array<double, 3> p_cond{};
    double pred_cond = 0.0;
    double vis_cond = 0.0;
    double comp_lhs = 0.0;  // pred^2 + vis^2 + g_t^2
};

struct ErasureReport {
    double p_e = 0.0;
    double g_t = 0.0;
    /// Empty when the post-selection succeeds with probability <= 1e-15.
    std::optional<ConditionalQuantities> cond;

    bool zero_success() const {
        return !cond.has_value();
    }
};

/// Interferometer intensity sum_i rho_ii + 2 Re sum_{i<j} e^{i(phi_i - phi_j)} rho_ij.
/// Throws NotHermitian.
double intensity(const Matrix3 &rho, const std::array<double, 3> &phases);

/// sqrt(3/2 sum_i (p_i - 1/3)^2). Throws NotAProbabilityVector.
double predictability(const std::array<double, 3> &p);

/// 3 sqrt(3) sqrt(t1 t2 t3) sqrt(l1 l2 l3).
double g_t(const std::array<double, 3> &t, const Spectrum &spec);

/// Normalized path state Tr_marker(|Psi><Psi|)/<Psi|Psi> of the transmitted state.
/// Throws InvalidArgument if nothing is transmitted.
Matrix3 transmitted_path_state(const MarkedState &ms);

ErasureReport erase(const MarkedState &ms, const ErasureSetup &setup);

enum class SweepFamily {
    /// e(tau) = sqrt(tau) m1 + sqrt((1 - tau)/2) (m2 + m3); needs orthonormal markers.
    Pivot,
    /// tau_i = tau for every path.
    Uniform,
};

std::string_view to_string(SweepFamily f);
SweepFamily parse_sweep_family(std::string_view text);

ErasureSetup family_setup(const MarkedState &ms, SweepFamily family, double tau);

struct SweepPoint {
    double tau = 0.0;
    ErasureReport report;
};

/// Reports on the inclusive grid tau_k = k/(steps - 1). Throws
/// NonOrthonormalMarkers for Pivot with non-orthonormal markers.
std::vector<SweepPoint> erasure_sweep(const MarkedState &ms, SweepFamily family, int steps);

}  // namespace qg
