#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "textlaws/stats.hpp"

namespace textlaws {

struct FitRegion {
    double lower = 1;
    double upper = 1e18;
};

// One log-scale bin: integer abscissae [ceil(b^i), ceil(b^{i+1})), ordinate
// averaged over the covered integer width with absent interior points
// counting zero; the final bin truncates at the series end.
struct LogBin {
    int index = 0;
    double x = 0;     // geometric midpoint sqrt(b^i * b^{i+1})
    double mean = 0;
};

struct LogBinning {
    double base = 1.2;
    std::vector<LogBin> bins;
};

struct PowerLawFit {
    double exponent = 0;   // decaying laws report the positive exponent, growth laws the raw slope
    double amplitude = 0;  // C in y = C * x^slope
    double r2 = 0;
    FitRegion region;
    double base = 0;       // 0 when fitted on raw points instead of bins
    int excluded_bins = 0; // non-positive ordinates inside the region
};

inline constexpr double kDefaultBase = 1.2;
inline constexpr FitRegion kSpectrumRegion{2, 100};
inline constexpr FitRegion kRankRegion{60, 1000};
inline constexpr FitRegion kGrowthRegion{100, 20000};

// Resample a dense series y(j) = dense[j-1], j = 1..N, into log-scale bins.
LogBinning log_resample(std::span<const double> dense, double b);

// Sparse variant: (abscissa, ordinate) entries; missing abscissae are zero
// and the series runs up to the largest abscissa present.
LogBinning log_resample(const std::vector<std::pair<std::uint64_t, double>>& sparse, double b);

// Ordinary least squares on (log x, log mean) over bins whose representative
// abscissa lies in the region. Needs >= 3 usable bins; non-positive bins are
// excluded and counted.
PowerLawFit fit_power_law(const LogBinning& binned, FitRegion region);

// OLS on raw (log x, log y) points inside the region, no binning.
PowerLawFit fit_points(std::span<const double> xs, std::span<const double> ys, FitRegion region);

// Log-binned curves of the three statistics: (k, m(k)/Nt), (r, Z(r)), (t, N(t)).
LogBinning binned_spectrum(const FrequencySpectrum& s, double b = kDefaultBase);
LogBinning binned_rank(const RankProfile& z, double b = kDefaultBase);
LogBinning binned_growth(const GrowthCurve& n, double b = kDefaultBase);

// Convenience wrappers with the default fit regions. fit_spectrum and
// fit_rank report the decay exponents beta and alpha as positive numbers;
// fit_growth reports the raw slope lambda.
PowerLawFit fit_spectrum(const FrequencySpectrum& s, FitRegion region = kSpectrumRegion,
                         double b = kDefaultBase);
PowerLawFit fit_rank(const RankProfile& z, FitRegion region = kRankRegion,
                     double b = kDefaultBase);
PowerLawFit fit_growth(const GrowthCurve& n, FitRegion region = kGrowthRegion,
                       double b = kDefaultBase);

// Slope of log phi(k) vs log k over the realized occurrence counts.
PowerLawFit fit_attachment(const AttachmentProfile& profile);

}  // namespace textlaws
