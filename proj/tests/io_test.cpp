#include "qutrit_geom/io.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace qg;
using qg::testutil::code_of;

namespace {

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST(Io, format_double_round_trips) {
    EXPECT_EQ(io::format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(io::format_double(1.0), "1");
    EXPECT_EQ(io::format_double(std::numeric_limits<double>::quiet_NaN()), "nan");
    for (double v : {1.0 / 3.0, 2.0 / std::sqrt(3.0), 3.6e-5, -1e-300}) {
        EXPECT_EQ(std::stod(io::format_double(v)), v);
    }
}

TEST(Io, boundary_csv) {
    std::ostringstream out;
    io::write_boundary_csv(out, boundary_curve(3));
    const auto lines = lines_of(out.str());
    ASSERT_EQ(lines.size(), 4u);
    EXPECT_EQ(lines[0], "a,c_i,g");
    EXPECT_EQ(lines[1], "0,0,0");
    EXPECT_EQ(lines[3], "0.5,1,0");
    EXPECT_EQ(lines[2].substr(0, 5), "0.25,");
}

TEST(Io, scatter_csv_header_and_rows) {
    const auto records = run_scatter({4, 7, RankFilter::Any});
    std::ostringstream out;
    io::write_scatter_csv(out, records);
    const auto lines = lines_of(out.str());
    ASSERT_EQ(lines.size(), 5u);
    EXPECT_EQ(lines[0], "index,l1,l2,l3,s2,s3,c_i,g,discriminant,membership,rank_label");
    EXPECT_EQ(lines[1].substr(0, 2), "0,");
    EXPECT_NE(lines[1].find(",interior,3"), std::string::npos);
}

TEST(Io, sweep_csv_marks_missing_conditionals) {
    const double a = 1.0 / std::sqrt(3.0);
    const auto points = erasure_sweep(MarkedState::make({a, a, a}, {1.0, 1.0, 1.0}), SweepFamily::Uniform, 3);
    std::ostringstream out;
    io::write_sweep_csv(out, points);
    const auto lines = lines_of(out.str());
    ASSERT_EQ(lines.size(), 4u);
    EXPECT_EQ(lines[0], "tau,p_e,p1_cond,p2_cond,p3_cond,pred_cond,vis_cond,g_t,comp_lhs");
    EXPECT_EQ(lines[1].substr(0, 4), "0,0,");
    EXPECT_NE(lines[1].find("nan,nan,nan,nan,nan"), std::string::npos);
    EXPECT_EQ(lines[3].find("nan"), std::string::npos);
}

TEST(Io, sweep_json_uses_null) {
    const double a = 1.0 / std::sqrt(3.0);
    const auto points = erasure_sweep(MarkedState::make({a, a, a}, {1.0, 1.0, 1.0}), SweepFamily::Uniform, 2);
    std::ostringstream out;
    io::write_sweep_json(out, points);
    const auto j = nlohmann::json::parse(out.str());
    ASSERT_EQ(j.size(), 2u);
    EXPECT_TRUE(j[0]["pred_cond"].is_null());
    EXPECT_TRUE(j[0]["comp_lhs"].is_null());
    EXPECT_NEAR(j[1]["vis_cond"].get<double>(), 2.0, 1e-12);
}

TEST(Io, audit_json_keys) {
    const auto records = run_scatter({200, 1, RankFilter::Any});
    const std::string text = io::audit_report_json(run_audit(records, ErasureGridSpec{3, 2, 1, true}));
    const auto j = nlohmann::ordered_json::parse(text);
    std::vector<std::string> keys;
    for (const auto &[k, v] : j.items()) {
        keys.push_back(k);
    }
    const std::vector<std::string> expected{"n_total",
                                            "n_exterior",
                                            "eq15_satisfied_fraction",
                                            "eq15_maclaurin_satisfied_fraction",
                                            "eq16_printed_satisfied_fraction",
                                            "eq26_satisfied_fraction",
                                            "max_abs_identity_residual",
                                            "extrema"};
    EXPECT_EQ(keys, expected);
    EXPECT_EQ(j["n_total"], 200);
    const auto &fp = j["extrema"]["eq16_printed"]["max"];
    for (const char *k : {"value", "seed", "index", "lambda"}) {
        EXPECT_TRUE(fp.contains(k)) << k;
    }
    EXPECT_NEAR(j["extrema"]["eq16_printed"]["probe_max_entangled"]["value"].get<double>(), 400.0 + 16.0 / 27,
                1e-9);
    EXPECT_EQ(j["extrema"]["eq26"]["max"]["index"], -1);
}

TEST(Io, analysis_outputs) {
    const TwoQutritState s = named_state(NamedState::MaxEntangled);
    const Spectrum l = eig_hermitian(reduced_density(s));
    const InvariantSet inv = invariants_from_state(s);
    std::ostringstream text, csv, json;
    io::write_analysis_text(text, l, inv, Membership::Boundary, 1.0);
    io::write_analysis_csv(csv, l, inv, Membership::Boundary, 1.0);
    io::write_analysis_json(json, l, inv, Membership::Boundary, 1.0);
    EXPECT_NE(text.str().find("membership boundary"), std::string::npos);
    EXPECT_EQ(lines_of(csv.str()).size(), 2u);
    const auto j = nlohmann::json::parse(json.str());
    EXPECT_EQ(j["membership"], "boundary");
    EXPECT_NEAR(j["c_i"].get<double>(), 2.0 / std::sqrt(3.0), 1e-12);
}

TEST(Io, parse_marked_state) {
    const MarkedState ms = io::parse_marked_state_json(R"({"c": [[1, 0], [0, 0], [0, 0]], "t": [0.5, 1, 1]})");
    EXPECT_EQ(ms.c()[0], cplx(1.0));
    EXPECT_EQ(ms.t()[0], 0.5);
    EXPECT_TRUE(ms.markers_orthonormal());

    const MarkedState custom = io::parse_marked_state_json(
        R"({"c": [[0, 1], [0, 0], [0, 0]], "markers": [[[0,0],[1,0],[0,0]], [[1,0],[0,0],[0,0]], [[0,0],[0,0],[1,0]]]})");
    EXPECT_EQ(custom.markers()[0][1], cplx(1.0));

    EXPECT_EQ(code_of([] { io::parse_marked_state_json("{"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { io::parse_marked_state_json(R"({"t": [1,1,1]})"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { io::parse_marked_state_json(R"({"c": [[1,0],[0,0]]})"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { io::parse_marked_state_json(R"({"c": [[1,0],[0,0],[0,0]], "t": [1,"a",1]})"); }),
              ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { io::parse_marked_state_json(R"({"c": [[1,0],[1,0],[0,0]]})"); }),
              ErrorCode::ParseError);
}
