#include "qutrit_geom/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "qutrit_geom/error.hpp"

namespace qg::io {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    return fmt::format("{:.17g}", v);
}

namespace {

bool is_scalar(const ordered_json &j) {
    return !j.is_object() && !j.is_array();
}

void dump(std::ostream &out, const ordered_json &j, int level) {
    const std::string pad(2 * (level + 1), ' ');
    const std::string close_pad(2 * level, ' ');
    if (j.is_number_float()) {
        const double v = j.get<double>();
        out << (std::isfinite(v) ? format_double(v) : "null");
    } else if (j.is_object()) {
        if (j.empty()) {
            out << "{}";
            return;
        }
        out << "{\n";
        bool first = true;
        for (const auto &[key, value] : j.items()) {
            out << (first ? "" : ",\n") << pad << ordered_json(key).dump() << ": ";
            dump(out, value, level + 1);
            first = false;
        }
        out << "\n" << close_pad << "}";
    } else if (j.is_array()) {
        const bool flat = std::all_of(j.begin(), j.end(), is_scalar);
        if (flat) {
            out << "[";
            for (size_t k = 0; k < j.size(); ++k) {
                out << (k ? ", " : "");
                dump(out, j[k], level + 1);
            }
            out << "]";
            return;
        }
        out << "[\n";
        for (size_t k = 0; k < j.size(); ++k) {
            out << (k ? ",\n" : "") << pad;
            dump(out, j[k], level + 1);
        }
        out << "\n" << close_pad << "]";
    } else {
        out << j.dump();
    }
}

std::string to_text(const ordered_json &j) {
    std::ostringstream out;
    dump(out, j, 0);
    out << "\n";
    return out.str();
}

ordered_json triple(const std::array<double, 3> &v) {
    return ordered_json::array({v[0], v[1], v[2]});
}

ordered_json fingerprint_json(const std::optional<Fingerprint> &fp) {
    if (!fp) {
        return nullptr;
    }
    ordered_json j;
    j["value"] = fp->value;
    j["seed"] = fp->seed;
    j["index"] = fp->index;
    j["lambda"] = triple(fp->lambda);
    if (fp->tau) {
        j["tau"] = *fp->tau;
    }
    return j;
}

ordered_json extrema_json(const Extrema &e) {
    ordered_json j;
    j["min"] = fingerprint_json(e.min);
    j["max"] = fingerprint_json(e.max);
    return j;
}

}  // namespace

void write_scatter_csv(std::ostream &out, std::span<const SampleRecord> records, double tol) {
    out << "index,l1,l2,l3,s2,s3,c_i,g,discriminant,membership,rank_label\n";
    for (const auto &r : records) {
        out << r.index;
        for (double v : r.lambda.lambda) {
            out << ',' << format_double(v);
        }
        out << ',' << format_double(r.inv.s2) << ',' << format_double(r.inv.s3) << ','
            << format_double(r.inv.c_i) << ',' << format_double(r.inv.g) << ','
            << format_double(r.inv.discriminant) << ',' << to_string(region_membership(r.inv.c_i, r.inv.g, tol))
            << ',' << r.rank_label << '\n';
    }
}

void write_boundary_csv(std::ostream &out, std::span<const BoundaryPoint> points) {
    out << "a,c_i,g\n";
    for (const auto &p : points) {
        out << format_double(p.a) << ',' << format_double(p.c_i) << ',' << format_double(p.g) << '\n';
    }
}

void write_sweep_csv(std::ostream &out, std::span<const SweepPoint> points) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    out << "tau,p_e,p1_cond,p2_cond,p3_cond,pred_cond,vis_cond,g_t,comp_lhs\n";
    for (const auto &pt : points) {
        const auto &rep = pt.report;
        const ConditionalQuantities q = rep.cond.value_or(ConditionalQuantities{{nan, nan, nan}, nan, nan, nan});
        out << format_double(pt.tau) << ',' << format_double(rep.p_e);
        for (double p : q.p_cond) {
            out << ',' << format_double(p);
        }
        out << ',' << format_double(q.pred_cond) << ',' << format_double(q.vis_cond) << ','
            << format_double(rep.g_t) << ',' << format_double(q.comp_lhs) << '\n';
    }
}

void write_scatter_json(std::ostream &out, std::span<const SampleRecord> records, double tol) {
    ordered_json rows = ordered_json::array();
    for (const auto &r : records) {
        ordered_json j;
        j["index"] = r.index;
        j["lambda"] = triple(r.lambda.lambda);
        j["s2"] = r.inv.s2;
        j["s3"] = r.inv.s3;
        j["c_i"] = r.inv.c_i;
        j["g"] = r.inv.g;
        j["discriminant"] = r.inv.discriminant;
        j["membership"] = std::string(to_string(region_membership(r.inv.c_i, r.inv.g, tol)));
        j["rank_label"] = r.rank_label;
        rows.push_back(std::move(j));
    }
    out << to_text(rows);
}

void write_boundary_json(std::ostream &out, std::span<const BoundaryPoint> points) {
    ordered_json rows = ordered_json::array();
    for (const auto &p : points) {
        rows.push_back(ordered_json{{"a", p.a}, {"c_i", p.c_i}, {"g", p.g}});
    }
    out << to_text(rows);
}

void write_sweep_json(std::ostream &out, std::span<const SweepPoint> points) {
    ordered_json rows = ordered_json::array();
    for (const auto &pt : points) {
        ordered_json j;
        j["tau"] = pt.tau;
        j["p_e"] = pt.report.p_e;
        if (pt.report.cond) {
            j["p_cond"] = triple(pt.report.cond->p_cond);
            j["pred_cond"] = pt.report.cond->pred_cond;
            j["vis_cond"] = pt.report.cond->vis_cond;
        } else {
            j["p_cond"] = nullptr;
            j["pred_cond"] = nullptr;
            j["vis_cond"] = nullptr;
        }
        j["g_t"] = pt.report.g_t;
        j["comp_lhs"] = pt.report.cond ? ordered_json(pt.report.cond->comp_lhs) : ordered_json(nullptr);
        rows.push_back(std::move(j));
    }
    out << to_text(rows);
}

std::string audit_report_json(const AuditReport &report) {
    ordered_json j;
    j["n_total"] = report.n_total();
    j["n_exterior"] = report.n_exterior();
    j["eq15_satisfied_fraction"] = report.eq15_satisfied_fraction();
    j["eq15_maclaurin_satisfied_fraction"] = report.eq15_maclaurin_satisfied_fraction();
    j["eq16_printed_satisfied_fraction"] = report.eq16_printed_satisfied_fraction();
    j["eq26_satisfied_fraction"] = report.eq26_satisfied_fraction();
    j["max_abs_identity_residual"] = report.max_abs_identity_residual();

    ordered_json extrema;
    extrema["discriminant"] = extrema_json(report.samples.discriminant);
    extrema["eq15"] = extrema_json(report.samples.eq15);
    extrema["eq15_maclaurin"] = extrema_json(report.samples.eq15_maclaurin);
    ordered_json eq16 = extrema_json(report.samples.eq16_printed);
    eq16["probe_max_entangled"] = ordered_json{
        {"c_i", report.eq16_probe.c_i}, {"g", report.eq16_probe.g}, {"value", report.eq16_probe.lhs}};
    extrema["eq16_printed"] = std::move(eq16);
    extrema["eq26"] = extrema_json(report.erasure.comp_lhs);
    j["extrema"] = std::move(extrema);
    return to_text(j);
}

namespace {

ordered_json analysis_json(const Spectrum &lambda, const InvariantSet &inv, Membership m, double factor) {
    ordered_json j;
    j["lambda"] = triple(lambda.lambda);
    j["s2"] = inv.s2;
    j["s3"] = inv.s3;
    j["c_i"] = inv.c_i;
    j["g"] = inv.g;
    j["discriminant"] = inv.discriminant;
    j["membership"] = std::string(to_string(m));
    j["normalization_factor"] = factor;
    return j;
}

}  // namespace

void write_analysis_text(std::ostream &out, const Spectrum &lambda, const InvariantSet &inv, Membership m,
                         double normalization_factor) {
    out << "normalization_factor " << format_double(normalization_factor) << '\n';
    out << "lambda " << format_double(lambda[0]) << ' ' << format_double(lambda[1]) << ' '
        << format_double(lambda[2]) << '\n';
    out << "s2 " << format_double(inv.s2) << '\n';
    out << "s3 " << format_double(inv.s3) << '\n';
    out << "c_i " << format_double(inv.c_i) << '\n';
    out << "g " << format_double(inv.g) << '\n';
    out << "discriminant " << format_double(inv.discriminant) << '\n';
    out << "membership " << to_string(m) << '\n';
}

void write_analysis_csv(std::ostream &out, const Spectrum &lambda, const InvariantSet &inv, Membership m,
                        double normalization_factor) {
    out << "l1,l2,l3,s2,s3,c_i,g,discriminant,membership,normalization_factor\n";
    out << format_double(lambda[0]) << ',' << format_double(lambda[1]) << ',' << format_double(lambda[2]) << ','
        << format_double(inv.s2) << ',' << format_double(inv.s3) << ',' << format_double(inv.c_i) << ','
        << format_double(inv.g) << ',' << format_double(inv.discriminant) << ',' << to_string(m) << ','
        << format_double(normalization_factor) << '\n';
}

void write_analysis_json(std::ostream &out, const Spectrum &lambda, const InvariantSet &inv, Membership m,
                         double normalization_factor) {
    out << to_text(analysis_json(lambda, inv, m, normalization_factor));
}

namespace {

cplx complex_at(const ordered_json &j, const std::string &where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw Error(ErrorCode::ParseError, "field " + where + " must be a [re, im] pair of numbers");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Vec3 vec_at(const ordered_json &j, const std::string &where) {
    if (!j.is_array() || j.size() != 3) {
        throw Error(ErrorCode::ParseError, "field " + where + " must be an array of 3 [re, im] pairs");
    }
    Vec3 v;
    for (int k = 0; k < 3; ++k) {
        v[k] = complex_at(j[k], where + "[" + std::to_string(k) + "]");
    }
    return v;
}

}  // namespace

MarkedState parse_marked_state_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error &e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("c")) {
        throw Error(ErrorCode::ParseError, "field c is missing");
    }
    const Vec3 c = vec_at(doc["c"], "c");
    std::array<double, 3> t{1.0, 1.0, 1.0};
    if (doc.contains("t")) {
        const auto &jt = doc["t"];
        if (!jt.is_array() || jt.size() != 3) {
            throw Error(ErrorCode::ParseError, "field t must be an array of 3 numbers");
        }
        for (int k = 0; k < 3; ++k) {
            if (!jt[k].is_number()) {
                throw Error(ErrorCode::ParseError, "field t[" + std::to_string(k) + "] must be a number");
            }
            t[k] = jt[k].get<double>();
        }
    }
    std::array<Vec3, 3> markers = computational_markers();
    if (doc.contains("markers")) {
        const auto &jm = doc["markers"];
        if (!jm.is_array() || jm.size() != 3) {
            throw Error(ErrorCode::ParseError, "field markers must be an array of 3 vectors");
        }
        for (int k = 0; k < 3; ++k) {
            markers[k] = vec_at(jm[k], "markers[" + std::to_string(k) + "]");
        }
    }
    try {
        return MarkedState::make(c, t, markers);
    } catch (const Error &e) {
        throw Error(ErrorCode::ParseError, std::string("invalid marked state (") + e.what() + ")");
    }
}

}  // namespace qg::io
