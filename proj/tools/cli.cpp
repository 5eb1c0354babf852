#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "qutrit_geom/audit.hpp"
#include "qutrit_geom/erasure.hpp"
#include "qutrit_geom/error.hpp"
#include "qutrit_geom/invariants.hpp"
#include "qutrit_geom/io.hpp"
#include "qutrit_geom/parallel.hpp"
#include "qutrit_geom/states.hpp"

namespace qg::cli {

namespace {

struct RunConfig {
    std::string state_file;
    uint64_t n = 1000;
    uint64_t seed = 0;
    std::string rank = "any";
    std::string out;
    std::string format;
    int steps = 101;
    int audit_steps = 11;
    int points = 256;
    int draws = 50;
    std::string family = "pivot";
    std::string marked_state_file;
    double tol = 1e-10;
};

// Writes to `path` through a temporary sibling so a failed run leaves no file
// behind; an empty path means the given stream.
void emit(const std::string &path, std::ostream &fallback, const std::function<void(std::ostream &)> &write) {
    if (path.empty()) {
        write(fallback);
        fallback.flush();
        return;
    }
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".partial";
    try {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw Error(ErrorCode::InvalidArgument, "cannot open output path " + path);
        }
        write(f);
        f.close();
        if (!f) {
            throw Error(ErrorCode::InvalidArgument, "failed writing output path " + path);
        }
        std::filesystem::rename(tmp, target);
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        throw;
    }
}

void require_format(const std::string &format, std::initializer_list<const char *> allowed) {
    if (format.empty()) {
        return;
    }
    for (const char *a : allowed) {
        if (format == a) {
            return;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unsupported --format " + format);
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cmd_analyze(const RunConfig &cfg, std::ostream &out) {
    require_format(cfg.format, {"csv", "json"});
    const TwoQutritState state = load_state_file(cfg.state_file);
    const Spectrum lambda = eig_hermitian(reduced_density(state));
    const InvariantSet inv = invariants_from_state(state);
    const Membership m = region_membership(inv.c_i, inv.g, cfg.tol);
    emit(cfg.out, out, [&](std::ostream &o) {
        if (cfg.format == "json") {
            io::write_analysis_json(o, lambda, inv, m, state.normalization_factor());
        } else if (cfg.format == "csv") {
            io::write_analysis_csv(o, lambda, inv, m, state.normalization_factor());
        } else {
            io::write_analysis_text(o, lambda, inv, m, state.normalization_factor());
        }
    });
    return kOk;
}

int cmd_sample(const RunConfig &cfg, std::ostream &out) {
    require_format(cfg.format, {"csv", "json"});
    const auto records = run_scatter({cfg.n, cfg.seed, parse_rank_filter(cfg.rank)});
    emit(cfg.out, out, [&](std::ostream &o) {
        if (cfg.format == "json") {
            io::write_scatter_json(o, records, cfg.tol);
        } else {
            io::write_scatter_csv(o, records, cfg.tol);
        }
    });
    return kOk;
}

int cmd_boundary(const RunConfig &cfg, std::ostream &out) {
    require_format(cfg.format, {"csv", "json"});
    const auto points = boundary_curve(cfg.points);
    emit(cfg.out, out, [&](std::ostream &o) {
        if (cfg.format == "json") {
            io::write_boundary_json(o, points);
        } else {
            io::write_boundary_csv(o, points);
        }
    });
    return kOk;
}

int cmd_sweep(const RunConfig &cfg, std::ostream &out) {
    require_format(cfg.format, {"csv", "json"});
    const double a = 1.0 / std::sqrt(3.0);
    const MarkedState ms = cfg.marked_state_file.empty()
                               ? MarkedState::make({a, a, a}, {1.0, 1.0, 1.0})
                               : io::parse_marked_state_json(read_file(cfg.marked_state_file));
    const auto points = erasure_sweep(ms, parse_sweep_family(cfg.family), cfg.steps);
    emit(cfg.out, out, [&](std::ostream &o) {
        if (cfg.format == "json") {
            io::write_sweep_json(o, points);
        } else {
            io::write_sweep_csv(o, points);
        }
    });
    return kOk;
}

int cmd_audit(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    require_format(cfg.format, {"json"});
    const auto records = run_scatter({cfg.n, cfg.seed, parse_rank_filter(cfg.rank)});
    const ErasureGridSpec grid{cfg.audit_steps, cfg.draws, cfg.seed, true};
    const AuditReport report = run_audit(records, grid, cfg.tol);
    const std::string json = io::audit_report_json(report);
    emit(cfg.out, out, [&](std::ostream &o) { o << json; });

    std::ostream &summary = cfg.out.empty() ? err : out;
    const bool ok = report.identities_hold(cfg.tol);
    summary << (ok ? "audit ok" : "audit FAILED") << ": n_total=" << report.n_total()
            << " n_exterior=" << report.n_exterior()
            << " max_abs_identity_residual=" << io::format_double(report.max_abs_identity_residual())
            << " eq15=" << io::format_double(report.eq15_satisfied_fraction())
            << " eq15_maclaurin=" << io::format_double(report.eq15_maclaurin_satisfied_fraction())
            << " eq16_printed=" << io::format_double(report.eq16_printed_satisfied_fraction())
            << " eq26=" << io::format_double(report.eq26_satisfied_fraction()) << '\n';
    return ok ? kOk : kIdentityFailure;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Two-qutrit entanglement invariants, admissible-region maps and erasure sweeps", "qutrit_geom"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", cfg.format, "Output format (csv or json)");
    };
    auto add_out = [&](CLI::App *sub) {
        sub->add_option("--out", cfg.out, "Output path (default: stdout)");
    };
    auto add_tol = [&](CLI::App *sub) {
        sub->add_option("--tol", cfg.tol, "Boundary / violation tolerance")->check(CLI::NonNegativeNumber);
    };
    auto add_sampling = [&](CLI::App *sub) {
        sub->add_option("--n", cfg.n, "Number of sampled states")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "64-bit sampling seed");
        sub->add_option("--rank", cfg.rank, "Rank of sampled coefficient matrices")
            ->check(CLI::IsMember({"2", "3", "any"}));
    };

    auto *analyze = app.add_subcommand("analyze", "Invariants and region classification of a state file");
    analyze->add_option("state_file", cfg.state_file, "JSON file with key \"C\"")->required();
    add_format(analyze);
    add_out(analyze);
    add_tol(analyze);

    auto *sample = app.add_subcommand("sample", "Scatter dataset of random states in the (C_I, G) plane");
    add_sampling(sample);
    add_format(sample);
    add_out(sample);
    add_tol(sample);

    auto *boundary = app.add_subcommand("boundary", "Degenerate-spectrum boundary curve");
    boundary->add_option("--points", cfg.points, "Number of curve points (>= 2)")->check(CLI::Range(2, 100000000));
    add_format(boundary);
    add_out(boundary);

    auto *sweep = app.add_subcommand("sweep", "Erasure sweep over the erasure parameter tau");
    sweep->add_option("--steps", cfg.steps, "Grid points on [0, 1] (>= 2)")->check(CLI::Range(2, 100000000));
    sweep->add_option("--family", cfg.family, "Sweep family")->check(CLI::IsMember({"pivot", "uniform"}));
    sweep->add_option("--state", cfg.marked_state_file, "Marked-state JSON (default: uniform c, unit t)");
    add_format(sweep);
    add_out(sweep);

    auto *audit = app.add_subcommand("audit", "Monte Carlo audit of identities and printed inequalities");
    add_sampling(audit);
    audit->add_option("--steps", cfg.audit_steps, "Erasure grid tau steps (>= 2)")
        ->check(CLI::Range(2, 100000000));
    audit->add_option("--draws", cfg.draws, "Random (c, t) draws in the erasure grid")
        ->check(CLI::Range(0, 100000000));
    add_format(audit);
    add_out(audit);
    add_tol(audit);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        worker_count();
        if (analyze->parsed()) {
            return cmd_analyze(cfg, out);
        }
        if (sample->parsed()) {
            return cmd_sample(cfg, out);
        }
        if (boundary->parsed()) {
            return cmd_boundary(cfg, out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(cfg, out);
        }
        return cmd_audit(cfg, out, err);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace qg::cli
