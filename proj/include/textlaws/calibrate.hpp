#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "textlaws/fit.hpp"
#include "textlaws/simon.hpp"

namespace textlaws {

// What the model is matched against: the empirical log-binned curves.
struct CalibrationTarget {
    LogBinning spectrum;
    LogBinning rank;
    LogBinning growth;
    std::size_t T = 0;
    double base = kDefaultBase;
    FitRegion spectrum_region = kSpectrumRegion;
    FitRegion rank_region = kRankRegion;
    FitRegion growth_region = kGrowthRegion;
};

CalibrationTarget make_target(const EncodedSequence& seq, double b = kDefaultBase);

struct ParamBounds {
    double k0_lo = 0.1, k0_hi = 10.0;
    double kt_lo = 0.0, kt_hi = 1.0;
    double kp_lo = 0.1, kp_hi = 2.0;
};

struct CalibrationOptions {
    std::size_t budget = 300;       // objective evaluations
    std::size_t ensemble_size = 8;  // simulation runs per evaluation
    std::uint64_t seed_base = 1234; // common random numbers across evaluations
    ParamBounds bounds;
};

struct ObjectiveParts {
    double total = 0;
    std::array<double, 3> per_law{};  // spectrum, rank, growth
};

struct CalibrationResult {
    ModelParams params;
    double objective = 0;
    std::size_t evaluations = 0;
    std::array<double, 3> per_law{};
    bool converged = false;
    std::vector<double> best_so_far;  // running best after each evaluation
};

// Mean over the three laws of the per-bin squared log discrepancy between
// the target curve and the per-bin median of an ensemble of simulations.
// Deterministic given seed_base.
ObjectiveParts calibration_objective_parts(const ModelParams& params,
                                           const CalibrationTarget& target,
                                           std::size_t ensemble_size, std::uint64_t seed_base);
double calibration_objective(const ModelParams& params, const CalibrationTarget& target,
                             std::size_t ensemble_size, std::uint64_t seed_base);

// Coarse grid search followed by Nelder-Mead refinement, both on the common
// random number objective. Stops at the evaluation budget.
CalibrationResult calibrate(const CalibrationTarget& target, const CalibrationOptions& opts = {});

}  // namespace textlaws
