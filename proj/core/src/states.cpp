#include "qutrit_geom/states.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qutrit_geom/error.hpp"
#include "qutrit_geom/parallel.hpp"

namespace qg {

TwoQutritState TwoQutritState::from_coefficients(const Matrix3 &coeff) {
    if (!coeff.all_finite()) {
        throw Error(ErrorCode::InvalidArgument, "coefficient matrix has non-finite entries");
    }
    const double n = frobenius_norm(coeff);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw Error(ErrorCode::InvalidArgument, "coefficient matrix has zero norm");
    }
    const double f = 1.0 / n;
    return TwoQutritState(coeff * f, f);
}

Matrix3 reduced_density(const TwoQutritState &state) {
    const Matrix3 &c = state.coeff();
    Matrix3 rho = c * dagger(c);
    // Exact Hermitian symmetry; the product leaves conj-pair rounding asymmetries.
    for (int r = 0; r < 3; ++r) {
        rho(r, r) = rho(r, r).real();
        for (int k = r + 1; k < 3; ++k) {
            rho(k, r) = std::conj(rho(r, k));
        }
    }
    return rho;
}

std::string_view to_string(RankFilter r) {
    switch (r) {
        case RankFilter::Two:
            return "2";
        case RankFilter::Three:
            return "3";
        case RankFilter::Any:
            return "any";
    }
    return "any";
}

RankFilter parse_rank_filter(std::string_view text) {
    if (text == "2") {
        return RankFilter::Two;
    }
    if (text == "3") {
        return RankFilter::Three;
    }
    if (text == "any") {
        return RankFilter::Any;
    }
    throw Error(ErrorCode::InvalidArgument, "rank must be one of 2, 3, any");
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

SampleRng::SampleRng(uint64_t seed, uint64_t index)
    : engine_(splitmix64(splitmix64(seed) ^ index)) {
}

double SampleRng::uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

cplx SampleRng::complex_gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

TwoQutritState sample_state(uint64_t seed, uint64_t index, RankFilter rank) {
    SampleRng rng(seed, index);
    Matrix3 a;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            a(r, c) = rng.complex_gaussian();
        }
    }
    if (rank == RankFilter::Two) {
        const cplx x = rng.complex_gaussian();
        const cplx y = rng.complex_gaussian();
        for (int r = 0; r < 3; ++r) {
            a(r, 2) = x * a(r, 0) + y * a(r, 1);
        }
    }
    return TwoQutritState::from_coefficients(a);
}

std::vector<TwoQutritState> haar_sample(const SampleSpec &spec) {
    if (spec.count < 1) {
        throw Error(ErrorCode::InvalidArgument, "sample count must be >= 1");
    }
    std::vector<TwoQutritState> out(spec.count, named_state(NamedState::Product));
    parallel_for(spec.count, [&](uint64_t i) { out[i] = sample_state(spec.seed, i, spec.rank); });
    return out;
}

TwoQutritState named_state(NamedState name) {
    switch (name) {
        case NamedState::Product:
            return TwoQutritState::from_coefficients(Matrix3::diagonal(1.0, 0.0, 0.0));
        case NamedState::Rank2Uniform:
            return TwoQutritState::from_coefficients(Matrix3::diagonal(1.0, 1.0, 0.0));
        case NamedState::MaxEntangled:
            return TwoQutritState::from_coefficients(Matrix3::identity());
    }
    throw Error(ErrorCode::InvalidArgument, "unknown named state");
}

namespace {

double number_at(const nlohmann::json &j, const std::string &where) {
    if (!j.is_number()) {
        throw Error(ErrorCode::ParseError, "field " + where + " must be a number");
    }
    return j.get<double>();
}

}  // namespace

TwoQutritState parse_state_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("C")) {
        throw Error(ErrorCode::ParseError, "field C is missing");
    }
    const auto &rows = doc["C"];
    if (!rows.is_array() || rows.size() != 3) {
        throw Error(ErrorCode::ParseError, "field C must be an array of 3 rows");
    }
    Matrix3 m;
    for (int r = 0; r < 3; ++r) {
        const auto &row = rows[r];
        const std::string row_name = "C[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != 3) {
            throw Error(ErrorCode::ParseError, "field " + row_name + " must be an array of 3 entries");
        }
        for (int c = 0; c < 3; ++c) {
            const auto &entry = row[c];
            const std::string name = row_name + "[" + std::to_string(c) + "]";
            if (!entry.is_array() || entry.size() != 2) {
                throw Error(ErrorCode::ParseError, "field " + name + " must be a [re, im] pair");
            }
            m(r, c) = {number_at(entry[0], name + "[0]"), number_at(entry[1], name + "[1]")};
        }
    }
    try {
        return TwoQutritState::from_coefficients(m);
    } catch (const Error &e) {
        throw Error(ErrorCode::ParseError, "field C is not normalizable (" + std::string(e.what()) + ")");
    }
}

TwoQutritState load_state_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open state file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_state_json(buf.str());
}

}  // namespace qg
