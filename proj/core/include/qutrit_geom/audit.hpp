#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qutrit_geom/erasure.hpp"
#include "qutrit_geom/invariants.hpp"
#include "qutrit_geom/states.hpp"

namespace qg {

inline constexpr double kAuditTol = 1e-10;

/// One sampled state with its invariants.
struct SampleRecord {
    uint64_t seed = 0;
    int64_t index = 0;
    Spectrum lambda;
    InvariantSet inv;
    int rank_label = 3;  // 2 iff inv.g <= 1e-10
    /// Largest deviation among the exact identities checked for this state.
    double identity_residual = 0.0;
};

/// Residual of the identities that only need a spectrum and its invariants:
/// cubic roots and discriminant versus squared eigenvalue differences.
double spectral_identity_residual(const Spectrum &lambda, const InvariantSet &inv);

/// Adds the state-level identities: det(rho) = |det C|^2 = prod(lambda),
/// purity and pair-sum C_I routes, and the eigenvalue round trip.
SampleRecord make_record(uint64_t seed, int64_t index, const TwoQutritState &state);

/// Record for a bare spectrum (no coefficient matrix available).
SampleRecord record_from_spectrum(uint64_t seed, int64_t index, const Spectrum &lambda);

std::vector<SampleRecord> run_scatter(const SampleSpec &spec);

struct ErasureGridSpec {
    int tau_steps = 11;
    int draws = 50;
    uint64_t seed = 0;
    /// Also evaluate uniform c, unit t at tau_i = 1/3 (reported as index -1).
    bool include_symmetric_probe = true;
};

/// Where an extreme value was seen.
struct Fingerprint {
    double value = 0.0;
    uint64_t seed = 0;
    int64_t index = 0;
    std::array<double, 3> lambda{};
    std::optional<double> tau;  // erasure claims only
};

struct Extrema {
    std::optional<Fingerprint> min;
    std::optional<Fingerprint> max;

    void observe(const Fingerprint &fp);
    void merge(const Extrema &other);
};

/// Counters over sample records. merge() is associative and commutative, so
/// any partition of the records produces the same totals.
struct AuditAccumulator {
    uint64_t n_total = 0;
    uint64_t n_exterior = 0;
    uint64_t n_eq15_violations = 0;
    uint64_t n_eq15_maclaurin_violations = 0;
    uint64_t n_eq16_printed_violations = 0;
    double max_abs_identity_residual = 0.0;
    Extrema discriminant;
    Extrema eq15;
    Extrema eq15_maclaurin;
    Extrema eq16_printed;

    void add(const SampleRecord &r, double tol = kAuditTol);
    void merge(const AuditAccumulator &other);
};

struct ErasureAudit {
    uint64_t n_points = 0;
    uint64_t n_violations = 0;
    Extrema comp_lhs;
};

/// Evaluates P^2 + V^2 + G_T^2 <= 1 over the pivot family on random (c, t).
ErasureAudit run_erasure_audit(const ErasureGridSpec &grid, double tol = kAuditTol);

struct Eq16Probe {
    double c_i = 0.0;
    double g = 0.0;
    double lhs = 0.0;
};

struct AuditReport {
    AuditAccumulator samples;
    ErasureAudit erasure;
    /// Printed constraint evaluated at the maximally entangled point.
    Eq16Probe eq16_probe;

    uint64_t n_total() const {
        return samples.n_total;
    }
    uint64_t n_exterior() const {
        return samples.n_exterior;
    }
    double eq15_satisfied_fraction() const;
    double eq15_maclaurin_satisfied_fraction() const;
    double eq16_printed_satisfied_fraction() const;
    double eq26_satisfied_fraction() const;
    double max_abs_identity_residual() const {
        return samples.max_abs_identity_residual;
    }
    /// Printed-claim failures are data; only identity residuals fail an audit.
    bool identities_hold(double tol = kAuditTol) const {
        return samples.max_abs_identity_residual <= tol;
    }
};

/// Throws EmptyInput for no records. `chunks` = 0 uses worker_count().
AuditReport run_audit(std::span<const SampleRecord> records, const ErasureGridSpec &grid,
                      double tol = kAuditTol, unsigned chunks = 0);

}  // namespace qg
