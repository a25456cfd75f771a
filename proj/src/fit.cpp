#include "textlaws/fit.hpp"

#include <algorithm>
#include <cmath>

#include "textlaws/error.hpp"

namespace textlaws {

namespace {

struct BinEdge {
    int index;
    std::uint64_t lo;  // inclusive
    std::uint64_t hi;  // exclusive, hi > lo
};

// Half-open integer bins [ceil(b^i), ceil(b^{i+1})) covering 1..n. Width-zero
// bins are dropped; the surviving bins partition the integers.
std::vector<BinEdge> bin_edges(std::uint64_t n, double b) {
    if (!(b > 1.0)) throw Error("log binning base must be > 1");
    if (n == 0) throw Error("empty series");
    std::vector<BinEdge> edges;
    for (int i = 0;; ++i) {
        auto lo = static_cast<std::uint64_t>(std::ceil(std::pow(b, i)));
        if (lo > n) break;
        auto hi = static_cast<std::uint64_t>(std::ceil(std::pow(b, i + 1)));
        if (hi > lo) edges.push_back({i, lo, hi});
    }
    return edges;
}

double bin_midpoint(int index, double b) {
    return std::sqrt(std::pow(b, index) * std::pow(b, index + 1));
}

struct OlsFit {
    double slope;
    double intercept;
    double r2;
};

// Least squares on points already mapped to log-log space.
OlsFit ols(const std::vector<double>& lx, const std::vector<double>& ly) {
    const std::size_t n = lx.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0) throw Error("degenerate fit: all abscissae equal");

    OlsFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;

    double sse = 0, sst = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double resid = ly[i] - (fit.intercept + fit.slope * lx[i]);
        sse += resid * resid;
        sst += (ly[i] - my) * (ly[i] - my);
    }
    fit.r2 = sst > 0 ? 1.0 - sse / sst : 1.0;  // SST = 0 implies SSE = 0 for OLS
    return fit;
}

PowerLawFit fit_log_points(const std::vector<double>& xs, const std::vector<double>& ys,
                           FitRegion region, double base) {
    std::vector<double> lx, ly;
    int excluded = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < region.lower || xs[i] > region.upper) continue;
        if (!(ys[i] > 0)) {
            ++excluded;
            continue;
        }
        lx.push_back(std::log(xs[i]));
        ly.push_back(std::log(ys[i]));
    }
    if (lx.size() < 3) throw Error("fewer than 3 usable points in fit region");

    OlsFit f = ols(lx, ly);
    PowerLawFit fit;
    fit.exponent = f.slope;
    fit.amplitude = std::exp(f.intercept);
    fit.r2 = f.r2;
    fit.region = region;
    fit.base = base;
    fit.excluded_bins = excluded;
    return fit;
}

}  // namespace

LogBinning log_resample(std::span<const double> dense, double b) {
    const std::uint64_t n = dense.size();
    auto edges = bin_edges(n, b);
    LogBinning binned;
    binned.base = b;
    binned.bins.resize(edges.size());
#pragma omp parallel for schedule(dynamic)
    for (long long e = 0; e < static_cast<long long>(edges.size()); ++e) {
        const BinEdge& edge = edges[e];
        double sum = 0;
        // the final bin truncates at the series end so a constant series
        // stays constant after binning
        const std::uint64_t stop = std::min(edge.hi, n + 1);
        for (std::uint64_t j = edge.lo; j < stop; ++j) sum += dense[j - 1];
        binned.bins[e] = LogBin{edge.index, bin_midpoint(edge.index, b),
                                sum / static_cast<double>(stop - edge.lo)};
    }
    return binned;
}

LogBinning log_resample(const std::vector<std::pair<std::uint64_t, double>>& sparse, double b) {
    std::uint64_t n = 0;
    for (const auto& [x, y] : sparse) {
        if (x == 0) throw Error("abscissae must be positive integers");
        n = std::max(n, x);
    }
    auto edges = bin_edges(n, b);

    std::vector<std::pair<std::uint64_t, double>> entries = sparse;
    std::sort(entries.begin(), entries.end());

    LogBinning binned;
    binned.base = b;
    std::size_t pos = 0;
    for (const BinEdge& edge : edges) {
        double sum = 0;
        while (pos < entries.size() && entries[pos].first < edge.hi) {
            sum += entries[pos].second;
            ++pos;
        }
        const std::uint64_t stop = std::min(edge.hi, n + 1);
        binned.bins.push_back(LogBin{edge.index, bin_midpoint(edge.index, b),
                                     sum / static_cast<double>(stop - edge.lo)});
    }
    return binned;
}

PowerLawFit fit_power_law(const LogBinning& binned, FitRegion region) {
    if (!(region.lower >= 1) || !(region.lower < region.upper)) {
        throw Error("fit region must satisfy 1 <= lower < upper");
    }
    std::vector<double> xs, ys;
    xs.reserve(binned.bins.size());
    ys.reserve(binned.bins.size());
    for (const LogBin& bin : binned.bins) {
        xs.push_back(bin.x);
        ys.push_back(bin.mean);
    }
    return fit_log_points(xs, ys, region, binned.base);
}

PowerLawFit fit_points(std::span<const double> xs, std::span<const double> ys, FitRegion region) {
    if (xs.size() != ys.size()) throw Error("mismatched point arrays");
    return fit_log_points(std::vector<double>(xs.begin(), xs.end()),
                          std::vector<double>(ys.begin(), ys.end()), region, 0.0);
}

LogBinning binned_spectrum(const FrequencySpectrum& s, double b) {
    std::vector<std::pair<std::uint64_t, double>> series;
    series.reserve(s.counts.size());
    const double nt = static_cast<double>(s.Nt);
    for (const auto& [k, m] : s.counts) {
        series.emplace_back(k, static_cast<double>(m) / nt);
    }
    return log_resample(series, b);
}

LogBinning binned_rank(const RankProfile& z, double b) {
    std::vector<double> dense(z.Z.begin(), z.Z.end());
    return log_resample(dense, b);
}

LogBinning binned_growth(const GrowthCurve& n, double b) {
    std::vector<double> dense(n.N.begin(), n.N.end());
    return log_resample(dense, b);
}

PowerLawFit fit_spectrum(const FrequencySpectrum& s, FitRegion region, double b) {
    PowerLawFit fit = fit_power_law(binned_spectrum(s, b), region);
    fit.exponent = -fit.exponent;
    return fit;
}

PowerLawFit fit_rank(const RankProfile& z, FitRegion region, double b) {
    PowerLawFit fit = fit_power_law(binned_rank(z, b), region);
    fit.exponent = -fit.exponent;
    return fit;
}

PowerLawFit fit_growth(const GrowthCurve& n, FitRegion region, double b) {
    return fit_power_law(binned_growth(n, b), region);
}

PowerLawFit fit_attachment(const AttachmentProfile& profile) {
    std::vector<double> xs, ys;
    xs.reserve(profile.phi.size());
    ys.reserve(profile.phi.size());
    for (const auto& [k, phi] : profile.phi) {
        xs.push_back(static_cast<double>(k));
        ys.push_back(phi);
    }
    return fit_points(xs, ys, FitRegion{1, 1e18});
}

}  // namespace textlaws
