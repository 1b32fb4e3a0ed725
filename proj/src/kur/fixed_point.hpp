#pragma once

#include <cstdint>
#include <vector>

#include "kur/dynamics.hpp"
#include "kur/stability.hpp"

namespace kur {

enum class Classification { Zero, NonZero };

inline constexpr double kClassifyTol = 1e-6;
inline constexpr double kDedupTol = 1e-5;

struct FixedPointRecord {
    PhaseState state;              // canonically rotated at node 0
    double residual_norm = 0.0;    // max-norm of the fixed-point residual
    std::vector<double> spectrum;  // ascending eigenvalues of the Jacobian
    Verdict verdict = Verdict::Marginal;
    Classification classification = Classification::Zero;
    int iterations = 0;            // Newton iterations spent
};

// r_i = sum_j w_ij sin(theta_j - theta_i) - (mean(omega) - omega_i)/k.
// All zero exactly at a frequency fixed point.
std::vector<double> residual(const WeightedGraph& g, const PhaseState& s, const ModelParams& p);

// Newton iteration on the reduced system with node 0 pinned at angle 0
// (residual components 1..n-1; the omitted equation is dependent).  Throws
// NumericError on a singular reduced Jacobian or when max_iter is exhausted.
FixedPointRecord newton_refine(const WeightedGraph& g, const PhaseState& s0, const ModelParams& p,
                               double tol = kDefaultTol, int max_iter = 50);

Classification classify(const PhaseState& s, double class_tol = kClassifyTol);
Classification classify(const FixedPointRecord& r, double class_tol = kClassifyTol);

struct MultistartResult {
    std::vector<FixedPointRecord> records;  // distinct modulo global rotation
    int samples = 0;
    int dropped = 0;  // starts that failed to converge or to refine
};

// Seeded random starts, relaxed by the gradient flow then polished by Newton,
// deduplicated by state_distance.  Deterministic for fixed (seed, samples);
// extra_starts are processed first and consume no seeds.
MultistartResult multistart_search(const WeightedGraph& g, const ModelParams& p, int samples,
                                   std::uint64_t seed, double tol = kDefaultTol,
                                   const std::vector<PhaseState>& extra_starts = {});

const char* to_string(Classification c);

}  // namespace kur
