#include "qutrit_geom/erasure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qutrit_geom/error.hpp"

namespace qg {

MarkedState MarkedState::make(const Vec3 &c, const std::array<double, 3> &t,
                              const std::array<Vec3, 3> &markers) {
    if (std::abs(norm(c) * norm(c) - 1.0) > kUnitTol) {
        throw Error(ErrorCode::InvalidArgument, "path amplitudes must satisfy sum |c_i|^2 = 1");
    }
    for (double ti : t) {
        if (!(ti >= 0.0 && ti <= 1.0)) {
            throw Error(ErrorCode::InvalidArgument, "transmittances must lie in [0, 1]");
        }
    }
    for (const auto &m : markers) {
        if (std::abs(norm(m) - 1.0) > kUnitTol) {
            throw Error(ErrorCode::InvalidArgument, "marker states must be unit vectors");
        }
    }
    MarkedState ms;
    ms.c_ = c;
    ms.t_ = t;
    ms.markers_ = markers;
    return ms;
}

MarkedState MarkedState::make(const Vec3 &c, const std::array<double, 3> &t) {
    return make(c, t, computational_markers());
}

bool MarkedState::markers_orthonormal() const {
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double expected = i == j ? 1.0 : 0.0;
            if (std::abs(inner(markers_[i], markers_[j]) - expected) > kUnitTol) {
                return false;
            }
        }
    }
    return true;
}

std::array<Vec3, 3> computational_markers() {
    return {Vec3{1.0, 0.0, 0.0}, Vec3{0.0, 1.0, 0.0}, Vec3{0.0, 0.0, 1.0}};
}

ErasureSetup ErasureSetup::project(const Vec3 &e, const std::array<Vec3, 3> &markers) {
    if (std::abs(norm(e) - 1.0) > kUnitTol) {
        throw Error(ErrorCode::InvalidArgument, "erasure state must be a unit vector");
    }
    ErasureSetup s;
    s.e = e;
    for (int i = 0; i < 3; ++i) {
        s.alpha[i] = inner(e, markers[i]);
        s.tau[i] = std::norm(s.alpha[i]);
    }
    return s;
}

ErasureSetup ErasureSetup::from_overlaps(const Vec3 &alpha) {
    ErasureSetup s;
    s.alpha = alpha;
    for (int i = 0; i < 3; ++i) {
        s.tau[i] = std::norm(alpha[i]);
    }
    return s;
}

double intensity(const Matrix3 &rho, const std::array<double, 3> &phases) {
    if (hermitian_defect(rho) > kHermitianTol) {
        throw Error(ErrorCode::NotHermitian, "density matrix differs from its adjoint by more than 1e-10");
    }
    double total = rho(0, 0).real() + rho(1, 1).real() + rho(2, 2).real();
    cplx coherent = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            coherent += std::polar(1.0, phases[i] - phases[j]) * rho(i, j);
        }
    }
    return total + 2.0 * coherent.real();
}

double predictability(const std::array<double, 3> &p) {
    double sum = 0.0;
    for (double v : p) {
        if (!(v >= -kUnitTol)) {
            throw Error(ErrorCode::NotAProbabilityVector, "probabilities must be non-negative");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-10) {
        throw Error(ErrorCode::NotAProbabilityVector, "probabilities must sum to 1");
    }
    double acc = 0.0;
    for (double v : p) {
        acc += (v - 1.0 / 3.0) * (v - 1.0 / 3.0);
    }
    return std::sqrt(1.5 * acc);
}

double g_t(const std::array<double, 3> &t, const Spectrum &spec) {
    for (double ti : t) {
        if (!(ti >= 0.0 && ti <= 1.0)) {
            throw Error(ErrorCode::InvalidArgument, "transmittances must lie in [0, 1]");
        }
    }
    return std::sqrt(27.0 * t[0] * t[1] * t[2] * spec.product());
}

Matrix3 transmitted_path_state(const MarkedState &ms) {
    Vec3 amp;
    double total = 0.0;
    for (int i = 0; i < 3; ++i) {
        amp[i] = std::sqrt(ms.t()[i]) * ms.c()[i];
        total += std::norm(amp[i]);
    }
    if (!(total > kZeroSuccessTol)) {
        throw Error(ErrorCode::InvalidArgument, "no amplitude is transmitted");
    }
    Matrix3 rho;
    for (int i = 0; i < 3; ++i) {
        rho(i, i) = std::norm(amp[i]) / total;
        for (int j = i + 1; j < 3; ++j) {
            rho(i, j) = amp[i] * std::conj(amp[j]) * inner(ms.markers()[j], ms.markers()[i]) / total;
            rho(j, i) = std::conj(rho(i, j));
        }
    }
    return rho;
}

ErasureReport erase(const MarkedState &ms, const ErasureSetup &setup) {
    const auto &c = ms.c();
    const auto &t = ms.t();
    const auto &tau = setup.tau;

    std::array<double, 3> weight{};
    double p_e = 0.0;
    for (int i = 0; i < 3; ++i) {
        weight[i] = std::norm(c[i]) * t[i] * tau[i];
        p_e += weight[i];
    }

    ErasureReport report;
    report.p_e = p_e;
    double total = 0.0;
    for (int i = 0; i < 3; ++i) {
        total += std::norm(c[i]) * t[i];
    }
    if (total > kZeroSuccessTol) {
        report.g_t = g_t(t, eig_hermitian(transmitted_path_state(ms)));
    }
    if (!(p_e > kZeroSuccessTol)) {
        return report;
    }

    ConditionalQuantities q;
    for (int i = 0; i < 3; ++i) {
        q.p_cond[i] = weight[i] / p_e;
    }
    q.pred_cond = predictability(q.p_cond);
    double coherence = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            coherence += 2.0 * std::abs(c[i] * c[j]) * std::sqrt(t[i] * t[j]) * std::sqrt(tau[i] * tau[j]);
        }
    }
    q.vis_cond = coherence / p_e;
    q.comp_lhs = q.pred_cond * q.pred_cond + q.vis_cond * q.vis_cond + report.g_t * report.g_t;
    report.cond = q;
    return report;
}

std::string_view to_string(SweepFamily f) {
    switch (f) {
        case SweepFamily::Pivot:
            return "pivot";
        case SweepFamily::Uniform:
            return "uniform";
    }
    return "pivot";
}

SweepFamily parse_sweep_family(std::string_view text) {
    if (text == "pivot") {
        return SweepFamily::Pivot;
    }
    if (text == "uniform") {
        return SweepFamily::Uniform;
    }
    throw Error(ErrorCode::InvalidArgument, "family must be pivot or uniform");
}

ErasureSetup family_setup(const MarkedState &ms, SweepFamily family, double tau) {
    if (!(tau >= 0.0 && tau <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "erasure parameter must lie in [0, 1]");
    }
    if (family == SweepFamily::Uniform) {
        const double a = std::sqrt(tau);
        return ErasureSetup::from_overlaps({a, a, a});
    }
    if (!ms.markers_orthonormal()) {
        throw Error(ErrorCode::NonOrthonormalMarkers, "pivot family needs orthonormal markers");
    }
    const auto &m = ms.markers();
    const double head = std::sqrt(tau);
    const double tail = std::sqrt((1.0 - tau) / 2.0);
    Vec3 e;
    for (int k = 0; k < 3; ++k) {
        e[k] = head * m[0][k] + tail * (m[1][k] + m[2][k]);
    }
    return ErasureSetup::project(normalized(e), m);
}

std::vector<SweepPoint> erasure_sweep(const MarkedState &ms, SweepFamily family, int steps) {
    if (steps < 2) {
        throw Error(ErrorCode::InvalidArgument, "sweep needs at least 2 steps");
    }
    if (family == SweepFamily::Pivot && !ms.markers_orthonormal()) {
        throw Error(ErrorCode::NonOrthonormalMarkers, "pivot family needs orthonormal markers");
    }
    std::vector<SweepPoint> out;
    out.reserve(steps);
    for (int k = 0; k < steps; ++k) {
        const double tau = k == steps - 1 ? 1.0 : static_cast<double>(k) / (steps - 1);
        out.push_back({tau, erase(ms, family_setup(ms, family, tau))});
    }
    return out;
}

}  // namespace qg
