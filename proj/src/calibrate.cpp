#include "textlaws/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "textlaws/reference.hpp"

namespace textlaws {

namespace {

// Penalty for a target bin no simulation run reproduces, and for laws whose
// target curve is too short to compare at all.
constexpr double kMissPenalty = 25.0;
constexpr double kUnusableLawPenalty = 1e3;

std::map<int, double> usable_log_bins(const LogBinning& binned, FitRegion region) {
    std::map<int, double> out;
    for (const LogBin& bin : binned.bins) {
        if (bin.x >= region.lower && bin.x <= region.upper && bin.mean > 0) {
            out[bin.index] = std::log(bin.mean);
        }
    }
    return out;
}

double median_of(std::vector<double>& vals) {
    std::sort(vals.begin(), vals.end());
    const std::size_t n = vals.size();
    return n % 2 == 1 ? vals[n / 2] : 0.5 * (vals[n / 2 - 1] + vals[n / 2]);
}

double law_discrepancy(const std::map<int, double>& target,
                       const std::vector<std::map<int, double>>& runs) {
    if (target.size() < 3) return kUnusableLawPenalty;
    double sse = 0;
    for (const auto& [index, target_log] : target) {
        std::vector<double> vals;
        vals.reserve(runs.size());
        for (const auto& run : runs) {
            auto it = run.find(index);
            if (it != run.end()) vals.push_back(it->second);
        }
        if (vals.empty()) {
            sse += kMissPenalty;
        } else {
            double med = median_of(vals);
            sse += (target_log - med) * (target_log - med);
        }
    }
    return sse / static_cast<double>(target.size());
}

using Vec3 = std::array<double, 3>;  // (k0, kt, kp)

Vec3 clamp_to(const ParamBounds& b, Vec3 v) {
    v[0] = std::clamp(v[0], b.k0_lo, b.k0_hi);
    v[1] = std::clamp(v[1], b.kt_lo, b.kt_hi);
    v[2] = std::clamp(v[2], b.kp_lo, b.kp_hi);
    return v;
}

ModelParams to_params(Vec3 v, std::size_t length) {
    return ModelParams{v[0], v[1], v[2], length, 0};
}

struct Evaluator {
    Evaluator(const CalibrationTarget& t, const CalibrationOptions& o) : target(t), opts(o) {}

    const CalibrationTarget& target;
    const CalibrationOptions& opts;
    std::size_t evals = 0;
    double best = std::numeric_limits<double>::infinity();
    Vec3 best_point{};
    ObjectiveParts best_parts{};
    std::vector<double> trace;

    bool exhausted() const { return evals >= opts.budget; }

    // false once the budget is spent
    bool try_eval(Vec3 v, double& out) {
        if (exhausted()) return false;
        ObjectiveParts parts = calibration_objective_parts(to_params(v, target.T), target,
                                                           opts.ensemble_size, opts.seed_base);
        ++evals;
        if (parts.total < best) {
            best = parts.total;
            best_point = v;
            best_parts = parts;
        }
        trace.push_back(best);
        out = parts.total;
        return true;
    }
};

struct Vertex {
    Vec3 x;
    double f;
};

// Standard Nelder-Mead on the box-clamped objective.
bool nelder_mead(Evaluator& ev, const ParamBounds& bounds, Vec3 start, Vec3 step) {
    constexpr double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

    std::array<Vertex, 4> simplex;
    simplex[0].x = start;
    if (!ev.try_eval(simplex[0].x, simplex[0].f)) return false;
    for (int d = 0; d < 3; ++d) {
        Vec3 v = start;
        v[d] += step[d];
        v = clamp_to(bounds, v);
        if (v[d] == start[d]) v[d] = start[d] - step[d];  // boundary: flip direction
        v = clamp_to(bounds, v);
        simplex[d + 1].x = v;
        if (!ev.try_eval(simplex[d + 1].x, simplex[d + 1].f)) return false;
    }

    while (!ev.exhausted()) {
        std::sort(simplex.begin(), simplex.end(),
                  [](const Vertex& a, const Vertex& b) { return a.f < b.f; });

        double spread = simplex[3].f - simplex[0].f;
        double size = 0;
        for (int d = 0; d < 3; ++d) size += std::abs(simplex[3].x[d] - simplex[0].x[d]);
        if (spread < 1e-10 || size < 1e-5) return true;

        Vec3 centroid{};
        for (int v = 0; v < 3; ++v) {
            for (int d = 0; d < 3; ++d) centroid[d] += simplex[v].x[d] / 3.0;
        }

        auto along = [&](double coeff) {
            Vec3 v;
            for (int d = 0; d < 3; ++d) v[d] = centroid[d] + coeff * (centroid[d] - simplex[3].x[d]);
            return clamp_to(bounds, v);
        };

        Vec3 xr = along(alpha);
        double fr;
        if (!ev.try_eval(xr, fr)) return false;

        if (fr < simplex[0].f) {
            Vec3 xe = along(alpha * gamma);
            double fe;
            if (!ev.try_eval(xe, fe)) return false;
            simplex[3] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
        } else if (fr < simplex[2].f) {
            simplex[3] = Vertex{xr, fr};
        } else {
            Vec3 xc = along(fr < simplex[3].f ? alpha * rho : -rho);
            double fc;
            if (!ev.try_eval(xc, fc)) return false;
            if (fc < std::min(fr, simplex[3].f)) {
                simplex[3] = Vertex{xc, fc};
            } else {
                // shrink toward the best vertex
                for (int v = 1; v < 4; ++v) {
                    for (int d = 0; d < 3; ++d) {
                        simplex[v].x[d] = simplex[0].x[d] + sigma * (simplex[v].x[d] - simplex[0].x[d]);
                    }
                    if (!ev.try_eval(simplex[v].x, simplex[v].f)) return false;
                }
            }
        }
    }
    return false;
}

}  // namespace

CalibrationTarget make_target(const EncodedSequence& seq, double b) {
    CalibrationTarget target;
    target.T = seq.T();
    target.base = b;
    target.spectrum = binned_spectrum(frequency_spectrum(seq), b);
    target.rank = binned_rank(rank_profile(seq), b);
    target.growth = binned_growth(growth_curve(seq), b);
    target.growth_region.upper = std::min(kGrowthRegion.upper, static_cast<double>(seq.T()));
    return target;
}

ObjectiveParts calibration_objective_parts(const ModelParams& params,
                                           const CalibrationTarget& target,
                                           std::size_t ensemble_size, std::uint64_t seed_base) {
    if (ensemble_size < 1) throw Error("ensemble_size must be >= 1");
    if (target.T == 0) throw Error("empty calibration target");

    ModelParams p = params;
    p.length = target.T;
    std::vector<EncodedSequence> runs = simulate_ensemble(p, ensemble_size, seed_base);

    std::vector<std::map<int, double>> spectrum_runs(ensemble_size), rank_runs(ensemble_size),
        growth_runs(ensemble_size);
#pragma omp parallel for schedule(dynamic)
    for (long long r = 0; r < static_cast<long long>(ensemble_size); ++r) {
        // serial kernels: the ensemble loop is already parallel
        spectrum_runs[r] = usable_log_bins(
            binned_spectrum(reference::frequency_spectrum(runs[r]), target.base),
            target.spectrum_region);
        rank_runs[r] = usable_log_bins(binned_rank(reference::rank_profile(runs[r]), target.base),
                                       target.rank_region);
        growth_runs[r] = usable_log_bins(
            binned_growth(reference::growth_curve(runs[r]), target.base), target.growth_region);
    }

    ObjectiveParts parts;
    parts.per_law[0] =
        law_discrepancy(usable_log_bins(target.spectrum, target.spectrum_region), spectrum_runs);
    parts.per_law[1] = law_discrepancy(usable_log_bins(target.rank, target.rank_region), rank_runs);
    parts.per_law[2] =
        law_discrepancy(usable_log_bins(target.growth, target.growth_region), growth_runs);
    parts.total = (parts.per_law[0] + parts.per_law[1] + parts.per_law[2]) / 3.0;
    return parts;
}

double calibration_objective(const ModelParams& params, const CalibrationTarget& target,
                             std::size_t ensemble_size, std::uint64_t seed_base) {
    return calibration_objective_parts(params, target, ensemble_size, seed_base).total;
}

CalibrationResult calibrate(const CalibrationTarget& target, const CalibrationOptions& opts) {
    if (opts.budget < 50) throw Error("calibration budget must be >= 50 evaluations");
    const ParamBounds& bounds = opts.bounds;

    Evaluator ev(target, opts);

    // cell-centered grid sized to roughly half the budget
    std::array<std::array<int, 3>, 4> ladder{{{4, 6, 5}, {3, 5, 4}, {3, 4, 3}, {2, 3, 2}}};
    std::array<int, 3> dims = ladder.back();
    for (const auto& candidate : ladder) {
        if (static_cast<std::size_t>(candidate[0] * candidate[1] * candidate[2]) <= opts.budget / 2) {
            dims = candidate;
            break;
        }
    }
    auto axis = [](double lo, double hi, int n, int j) {
        return lo + (j + 0.5) * (hi - lo) / n;
    };
    for (int i = 0; i < dims[0]; ++i) {
        for (int j = 0; j < dims[1]; ++j) {
            for (int k = 0; k < dims[2]; ++k) {
                Vec3 v{axis(bounds.k0_lo, bounds.k0_hi, dims[0], i),
                       axis(bounds.kt_lo, bounds.kt_hi, dims[1], j),
                       axis(bounds.kp_lo, bounds.kp_hi, dims[2], k)};
                double f;
                ev.try_eval(v, f);
            }
        }
    }

    Vec3 step{(bounds.k0_hi - bounds.k0_lo) * 0.08, (bounds.kt_hi - bounds.kt_lo) * 0.08,
              (bounds.kp_hi - bounds.kp_lo) * 0.08};
    bool converged = nelder_mead(ev, bounds, ev.best_point, step);

    CalibrationResult result;
    result.params = to_params(ev.best_point, target.T);
    result.objective = ev.best;
    result.evaluations = ev.evals;
    result.per_law = ev.best_parts.per_law;
    result.converged = converged;
    result.best_so_far = std::move(ev.trace);
    return result;
}

}  // namespace textlaws
