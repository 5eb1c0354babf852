#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qutrit_geom/mat3.hpp"

namespace qg {

/// Two-qutrit pure state |psi> = sum_ij C_ij |i>|j>, stored by its
/// coefficient matrix with unit Frobenius norm.
class TwoQutritState {
public:
    /// Rescales `coeff` to unit norm. Throws InvalidArgument on a zero or
    /// non-finite matrix.
    static TwoQutritState from_coefficients(const Matrix3 &coeff);

    const Matrix3 &coeff() const {
        return coeff_;
    }
    /// Factor that was multiplied into the input to normalize it.
    double normalization_factor() const {
        return normalization_factor_;
    }

private:
    TwoQutritState(const Matrix3 &c, double f) : coeff_(c), normalization_factor_(f) {
    }

    Matrix3 coeff_;
    double normalization_factor_ = 1.0;
};

/// rho_A = C C^dagger.
Matrix3 reduced_density(const TwoQutritState &state);

enum class RankFilter { Two, Three, Any };

std::string_view to_string(RankFilter r);
RankFilter parse_rank_filter(std::string_view text);

struct SampleSpec {
    uint64_t count = 1;
    uint64_t seed = 0;
    RankFilter rank = RankFilter::Any;
};

/// Random source for one sample. Each (seed, index) pair gets its own
/// mt19937_64 stream seeded through a splitmix64 mix, so draws never depend
/// on evaluation order.
class SampleRng {
public:
    SampleRng(uint64_t seed, uint64_t index);

    /// Uniform double in (0, 1) built from the top 53 bits of one draw.
    double uniform();
    /// Standard complex Gaussian (independent N(0, 1/2) parts) via Box-Muller.
    cplx complex_gaussian();

private:
    std::mt19937_64 engine_;
};

uint64_t splitmix64(uint64_t x);

/// The index-th draw of a sampling run.
TwoQutritState sample_state(uint64_t seed, uint64_t index, RankFilter rank);

/// Ginibre-then-normalize sampling. Rank-2 draws replace the third column by
/// a random combination of the first two. Deterministic in spec.seed.
std::vector<TwoQutritState> haar_sample(const SampleSpec &spec);

enum class NamedState { Product, Rank2Uniform, MaxEntangled };

TwoQutritState named_state(NamedState name);

/// Parses `{"C": [[[re, im], ...3], ...3]}` (row-major) and normalizes it.
/// Throws ParseError naming the offending field.
TwoQutritState parse_state_json(std::string_view text);
TwoQutritState load_state_file(const std::filesystem::path &path);

}  // namespace qg
