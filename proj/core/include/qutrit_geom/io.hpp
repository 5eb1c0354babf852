#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "qutrit_geom/audit.hpp"
#include "qutrit_geom/erasure.hpp"
#include "qutrit_geom/invariants.hpp"

namespace qg::io {

/// 17 significant digits ("%.17g"); "nan"/"inf"/"-inf" for non-finite values.
std::string format_double(double v);

void write_scatter_csv(std::ostream &out, std::span<const SampleRecord> records, double tol = kBoundaryTol);
void write_boundary_csv(std::ostream &out, std::span<const BoundaryPoint> points);
/// Conditional columns are "nan" where the post-selection never succeeds.
void write_sweep_csv(std::ostream &out, std::span<const SweepPoint> points);

void write_scatter_json(std::ostream &out, std::span<const SampleRecord> records, double tol = kBoundaryTol);
void write_boundary_json(std::ostream &out, std::span<const BoundaryPoint> points);
void write_sweep_json(std::ostream &out, std::span<const SweepPoint> points);

/// Audit report with exactly the top-level keys n_total, n_exterior,
/// eq15_satisfied_fraction, eq15_maclaurin_satisfied_fraction,
/// eq16_printed_satisfied_fraction, eq26_satisfied_fraction,
/// max_abs_identity_residual and extrema.
std::string audit_report_json(const AuditReport &report);

/// Human-readable analysis of one state (text) or the same fields as JSON.
void write_analysis_text(std::ostream &out, const Spectrum &lambda, const InvariantSet &inv, Membership m,
                         double normalization_factor);
void write_analysis_csv(std::ostream &out, const Spectrum &lambda, const InvariantSet &inv, Membership m,
                        double normalization_factor);
void write_analysis_json(std::ostream &out, const Spectrum &lambda, const InvariantSet &inv, Membership m,
                         double normalization_factor);

/// Parses `{"c": [[re, im] x3], "t": [t1, t2, t3], "markers": [[[re, im] x3] x3]}`.
/// "t" defaults to unit transmittance and "markers" to the computational basis.
MarkedState parse_marked_state_json(std::string_view text);

}  // namespace qg::io
