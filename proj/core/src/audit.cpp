#include "qutrit_geom/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "qutrit_geom/error.hpp"
#include "qutrit_geom/parallel.hpp"

namespace qg {

namespace {

constexpr double kRank2Tol = 1e-10;
constexpr uint64_t kErasureStream = 0x6572617375726531ULL;

// Strict total order so extrema do not depend on visiting order.
auto order_key(const Fingerprint &fp) {
    return std::make_tuple(fp.value, fp.seed, fp.index, fp.tau.value_or(-1.0));
}

double fraction_satisfied(uint64_t violations, uint64_t total) {
    if (total == 0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return static_cast<double>(total - violations) / static_cast<double>(total);
}

Fingerprint fingerprint(const SampleRecord &r, double value) {
    return {value, r.seed, r.index, r.lambda.lambda, std::nullopt};
}

}  // namespace

double spectral_identity_residual(const Spectrum &lambda, const InvariantSet &inv) {
    double worst = 0.0;
    for (double x : lambda.lambda) {
        worst = std::max(worst, std::abs(((x - 1.0) * x + inv.s2) * x - inv.s3));
    }
    const auto &l = lambda.lambda;
    const double d01 = l[0] - l[1];
    const double d12 = l[1] - l[2];
    const double d02 = l[0] - l[2];
    const double diff = d01 * d01 * d12 * d12 * d02 * d02;
    worst = std::max(worst, std::abs(inv.discriminant - diff));
    worst = std::max(worst, std::abs(inv.c_i - std::sqrt(4.0 * inv.s2)));
    worst = std::max(worst, std::abs(inv.g - std::sqrt(27.0 * inv.s3)));
    return worst;
}

SampleRecord make_record(uint64_t seed, int64_t index, const TwoQutritState &state) {
    const Matrix3 rho = reduced_density(state);
    SampleRecord r;
    r.seed = seed;
    r.index = index;
    r.lambda = eig_hermitian(rho);
    r.inv = invariants_from_state(state);
    r.rank_label = r.inv.g <= kRank2Tol ? 2 : 3;

    const double det_rho = det3(rho).real();
    const double det_c2 = std::norm(det3(state.coeff()));
    const double tr = trace(rho).real();
    const double tr_sq = trace(rho * rho).real();

    double worst = spectral_identity_residual(r.lambda, r.inv);
    worst = std::max(worst, std::abs(det_rho - r.lambda.product()));
    worst = std::max(worst, std::abs(det_rho - det_c2));
    worst = std::max(worst, std::abs(concurrence_from_purity(rho) - r.inv.c_i));
    worst = std::max(worst, std::abs(r.lambda.sum() - tr));
    worst = std::max(worst, std::abs(r.lambda.pair_sum() - (tr * tr - tr_sq) / 2.0));
    r.identity_residual = worst;
    return r;
}

SampleRecord record_from_spectrum(uint64_t seed, int64_t index, const Spectrum &lambda) {
    SampleRecord r;
    r.seed = seed;
    r.index = index;
    r.lambda = lambda;
    r.inv = invariants_from_spectrum(lambda);
    r.rank_label = r.inv.g <= kRank2Tol ? 2 : 3;
    r.identity_residual = spectral_identity_residual(lambda, r.inv);
    return r;
}

std::vector<SampleRecord> run_scatter(const SampleSpec &spec) {
    if (spec.count < 1) {
        throw Error(ErrorCode::InvalidArgument, "sample count must be >= 1");
    }
    std::vector<SampleRecord> out(spec.count);
    parallel_for(spec.count, [&](uint64_t i) {
        out[i] = make_record(spec.seed, static_cast<int64_t>(i), sample_state(spec.seed, i, spec.rank));
    });
    return out;
}

void Extrema::observe(const Fingerprint &fp) {
    if (!min || order_key(fp) < order_key(*min)) {
        min = fp;
    }
    if (!max || order_key(*max) < order_key(fp)) {
        max = fp;
    }
}

void Extrema::merge(const Extrema &other) {
    if (other.min) {
        observe(*other.min);
    }
    if (other.max) {
        observe(*other.max);
    }
}

void AuditAccumulator::add(const SampleRecord &r, double tol) {
    const double s2 = r.inv.s2;
    const double s3 = r.inv.s3;
    const double eq15_gap = 27.0 * s3 * s3 - 4.0 * s2 * s2 * s2;
    const double maclaurin_gap = 27.0 * s3 * s3 - s2 * s2 * s2;
    const double eq16 = printed_eq16_lhs(r.inv.c_i, r.inv.g);

    ++n_total;
    n_exterior += r.inv.discriminant < -tol ? 1 : 0;
    n_eq15_violations += eq15_gap > tol ? 1 : 0;
    n_eq15_maclaurin_violations += maclaurin_gap > tol ? 1 : 0;
    n_eq16_printed_violations += eq16 > tol ? 1 : 0;
    max_abs_identity_residual = std::max(max_abs_identity_residual, r.identity_residual);

    discriminant.observe(fingerprint(r, r.inv.discriminant));
    eq15.observe(fingerprint(r, eq15_gap));
    eq15_maclaurin.observe(fingerprint(r, maclaurin_gap));
    eq16_printed.observe(fingerprint(r, eq16));
}

void AuditAccumulator::merge(const AuditAccumulator &other) {
    n_total += other.n_total;
    n_exterior += other.n_exterior;
    n_eq15_violations += other.n_eq15_violations;
    n_eq15_maclaurin_violations += other.n_eq15_maclaurin_violations;
    n_eq16_printed_violations += other.n_eq16_printed_violations;
    max_abs_identity_residual = std::max(max_abs_identity_residual, other.max_abs_identity_residual);
    discriminant.merge(other.discriminant);
    eq15.merge(other.eq15);
    eq15_maclaurin.merge(other.eq15_maclaurin);
    eq16_printed.merge(other.eq16_printed);
}

namespace {

void observe_sweep(ErasureAudit &audit, const MarkedState &ms, uint64_t seed, int64_t index,
                   double tau, const ErasureReport &rep, double tol) {
    if (rep.zero_success()) {
        return;
    }
    const double lhs = rep.cond->comp_lhs;
    ++audit.n_points;
    audit.n_violations += lhs > 1.0 + tol ? 1 : 0;
    const Spectrum path_spec = eig_hermitian(transmitted_path_state(ms));
    audit.comp_lhs.observe({lhs, seed, index, path_spec.lambda, tau});
}

}  // namespace

ErasureAudit run_erasure_audit(const ErasureGridSpec &grid, double tol) {
    if (grid.tau_steps < 2 || grid.draws < 0) {
        throw Error(ErrorCode::InvalidArgument, "erasure grid needs >= 2 tau steps and >= 0 draws");
    }
    ErasureAudit audit;
    if (grid.include_symmetric_probe) {
        const double a = 1.0 / std::sqrt(3.0);
        const MarkedState ms = MarkedState::make({a, a, a}, {1.0, 1.0, 1.0});
        const double tau = 1.0 / 3.0;
        observe_sweep(audit, ms, grid.seed, -1, tau, erase(ms, family_setup(ms, SweepFamily::Pivot, tau)), tol);
    }
    for (int d = 0; d < grid.draws; ++d) {
        SampleRng rng(grid.seed ^ kErasureStream, static_cast<uint64_t>(d));
        Vec3 c;
        for (auto &ci : c) {
            ci = rng.complex_gaussian();
        }
        c = normalized(c);
        std::array<double, 3> t{};
        for (auto &ti : t) {
            ti = rng.uniform();
        }
        const MarkedState ms = MarkedState::make(c, t);
        for (const auto &pt : erasure_sweep(ms, SweepFamily::Pivot, grid.tau_steps)) {
            observe_sweep(audit, ms, grid.seed, d, pt.tau, pt.report, tol);
        }
    }
    return audit;
}

double AuditReport::eq15_satisfied_fraction() const {
    return fraction_satisfied(samples.n_eq15_violations, samples.n_total);
}

double AuditReport::eq15_maclaurin_satisfied_fraction() const {
    return fraction_satisfied(samples.n_eq15_maclaurin_violations, samples.n_total);
}

double AuditReport::eq16_printed_satisfied_fraction() const {
    return fraction_satisfied(samples.n_eq16_printed_violations, samples.n_total);
}

double AuditReport::eq26_satisfied_fraction() const {
    return fraction_satisfied(erasure.n_violations, erasure.n_points);
}

AuditReport run_audit(std::span<const SampleRecord> records, const ErasureGridSpec &grid, double tol,
                      unsigned chunks) {
    if (records.empty()) {
        throw Error(ErrorCode::EmptyInput, "audit needs at least one record");
    }
    if (chunks == 0) {
        chunks = worker_count();
    }
    chunks = static_cast<unsigned>(std::min<uint64_t>(chunks, records.size()));
    std::vector<AuditAccumulator> partial(chunks);
    parallel_chunks(records.size(), chunks, [&](uint64_t begin, uint64_t end, unsigned k) {
        for (uint64_t i = begin; i < end; ++i) {
            partial[k].add(records[i], tol);
        }
    });

    AuditReport report;
    for (const auto &p : partial) {
        report.samples.merge(p);
    }
    report.erasure = run_erasure_audit(grid, tol);
    const InvariantSet max_ent = invariants_from_spectrum(Spectrum::from_values(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0));
    report.eq16_probe = {max_ent.c_i, max_ent.g, printed_eq16_lhs(max_ent.c_i, max_ent.g)};
    return report;
}

}  // namespace qg
