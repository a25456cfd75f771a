#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "textlaws/error.hpp"
#include "textlaws/fit.hpp"

using namespace textlaws;

namespace {

struct Edge {
    int index;
    std::uint64_t lo, hi;  // [lo, hi)
};

// The documented bin layout: [ceil(b^i), ceil(b^{i+1})), width > 0, lo <= n.
std::vector<Edge> layout(std::uint64_t n, double b) {
    std::vector<Edge> edges;
    for (int i = 0;; ++i) {
        auto lo = static_cast<std::uint64_t>(std::ceil(std::pow(b, i)));
        if (lo > n) break;
        auto hi = static_cast<std::uint64_t>(std::ceil(std::pow(b, i + 1)));
        if (hi > lo) edges.push_back({i, lo, hi});
    }
    return edges;
}

double midpoint(int index, double b) {
    return std::sqrt(std::pow(b, index) * std::pow(b, index + 1));
}

// Series that is constant on every bin at the power law's midpoint value, so
// the bin means land exactly on the law. Returns the largest representative
// abscissa of a complete (not truncated) bin, for use as region.upper.
double make_bin_exact_series(double a, double c, double b, std::size_t n,
                             std::vector<double>& series) {
    series.assign(n, 0.0);
    double last_complete = 0;
    for (const Edge& e : layout(n, b)) {
        const double x = midpoint(e.index, b);
        const double v = c * std::pow(x, a);
        for (std::uint64_t j = e.lo; j < std::min<std::uint64_t>(e.hi, n + 1); ++j) {
            series[j - 1] = v;
        }
        if (e.hi <= n + 1) last_complete = x;
    }
    return last_complete;
}

}  // namespace

TEST_SUITE("fit") {

    TEST_CASE("constant series: every bin mean equals the constant") {
        std::vector<double> series(1000, 3.5);
        for (double b : {1.2, 1.7, 2.0}) {
            LogBinning binned = log_resample(std::span<const double>(series), b);
            for (const LogBin& bin : binned.bins) CHECK(bin.mean == 3.5);

            PowerLawFit fit = fit_power_law(binned, FitRegion{1, 1000});
            CHECK(fit.exponent == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
        }
    }

    TEST_CASE("linear series, b = 2: the bin over {2,3} averages to 2.5") {
        std::vector<double> series{1, 2, 3, 4, 5, 6, 7, 8};
        LogBinning binned = log_resample(std::span<const double>(series), 2.0);
        REQUIRE(binned.bins.size() == 4);
        CHECK(binned.bins[1].index == 1);
        CHECK(binned.bins[1].mean == 2.5);
        CHECK(binned.bins[1].x == doctest::Approx(std::sqrt(8.0)).epsilon(1e-15));
        // last bin [8,16) truncates at the series end and holds only j=8
        CHECK(binned.bins[3].mean == 8.0);
    }

    TEST_CASE("bin means match a direct per-bin summation oracle") {
        std::mt19937_64 gen(42);
        std::uniform_real_distribution<double> value(0.0, 9.0);
        std::uniform_real_distribution<double> base_dist(1.05, 2.0);
        for (int rep = 0; rep < 30; ++rep) {
            const std::size_t n = 50 + static_cast<std::size_t>(value(gen) * 300);
            const double b = base_dist(gen);
            std::vector<double> dense(n);
            std::vector<std::pair<std::uint64_t, double>> sparse;
            for (std::size_t j = 1; j <= n; ++j) {
                // gaps, but the last point present so both variants see the
                // same series length
                double y = (gen() % 4 == 0 && j < n) ? 0.0 : value(gen);
                dense[j - 1] = y;
                if (y != 0.0) sparse.emplace_back(j, y);
            }

            LogBinning from_dense = log_resample(std::span<const double>(dense), b);
            LogBinning from_sparse = log_resample(sparse, b);
            auto edges = layout(n, b);
            REQUIRE(from_dense.bins.size() == edges.size());
            REQUIRE(from_sparse.bins.size() == edges.size());

            for (std::size_t e = 0; e < edges.size(); ++e) {
                double sum = 0;
                const std::uint64_t stop = std::min<std::uint64_t>(edges[e].hi, n + 1);
                for (std::uint64_t j = edges[e].lo; j < stop; ++j) {
                    sum += dense[j - 1];
                }
                double expect = sum / static_cast<double>(stop - edges[e].lo);
                CHECK(from_dense.bins[e].mean == doctest::Approx(expect).epsilon(1e-12));
                CHECK(from_sparse.bins[e].mean == doctest::Approx(expect).epsilon(1e-12));
                CHECK(from_dense.bins[e].x == doctest::Approx(midpoint(edges[e].index, b)));
            }
        }
    }

    TEST_CASE("binning preserves total mass") {
        std::mt19937_64 gen(9);
        std::uniform_real_distribution<double> value(0.0, 5.0);
        std::vector<double> series(4096);
        double total = 0;
        for (double& y : series) {
            y = value(gen);
            total += y;
        }
        for (double b : {1.1, 1.5, 2.0}) {
            LogBinning binned = log_resample(std::span<const double>(series), b);
            auto edges = layout(series.size(), b);
            double binned_total = 0;
            for (std::size_t e = 0; e < edges.size(); ++e) {
                const std::uint64_t stop =
                    std::min<std::uint64_t>(edges[e].hi, series.size() + 1);
                binned_total += binned.bins[e].mean * static_cast<double>(stop - edges[e].lo);
            }
            CHECK(binned_total == doctest::Approx(total).epsilon(1e-9));
        }
    }

    TEST_CASE("parameter and region errors") {
        std::vector<double> series(100, 1.0);
        CHECK_THROWS_AS(log_resample(std::span<const double>(series), 1.0), Error);
        CHECK_THROWS_AS(log_resample(std::span<const double>(series), 0.5), Error);
        CHECK_THROWS_AS(log_resample(std::span<const double>(std::vector<double>{}), 1.5), Error);
        CHECK_THROWS_AS(
            log_resample(std::vector<std::pair<std::uint64_t, double>>{{0, 1.0}}, 1.5), Error);

        LogBinning binned = log_resample(std::span<const double>(series), 1.5);
        CHECK_THROWS_AS(fit_power_law(binned, FitRegion{0.5, 10}), Error);
        CHECK_THROWS_AS(fit_power_law(binned, FitRegion{10, 10}), Error);
        // region narrowed to fewer than 3 bins
        CHECK_THROWS_AS(fit_power_law(binned, FitRegion{1, 1.3}), Error);
    }

    TEST_CASE("zero bins inside the region are excluded and counted") {
        std::vector<double> series(512);
        for (std::size_t j = 1; j <= series.size(); ++j) {
            series[j - 1] = 10.0 / static_cast<double>(j);
        }
        // wipe a mid-range stretch: the bins fully inside it go to zero
        for (std::size_t j = 40; j <= 90; ++j) series[j - 1] = 0.0;

        PowerLawFit fit = fit_power_law(log_resample(std::span<const double>(series), 1.3),
                                        FitRegion{1, 512});
        CHECK(fit.excluded_bins > 0);
        CHECK(fit.exponent == doctest::Approx(-1.0).epsilon(0.1));
    }

    TEST_CASE("exact recovery through resample + fit on bin-exact power laws") {
        for (double a : {-2.5, -1.12, -0.73, 0.73}) {
            for (double c : {1.0, 37.0}) {
                for (double b : {1.2, 1.5, 2.0}) {
                    std::vector<double> series;
                    double upper = make_bin_exact_series(a, c, b, 20000, series);
                    PowerLawFit fit = fit_power_law(log_resample(std::span<const double>(series), b),
                                                    FitRegion{1, upper});
                    CHECK(std::abs(fit.exponent - a) < 1e-9);
                    CHECK(std::abs(fit.r2 - 1.0) < 1e-12);
                    CHECK(fit.amplitude == doctest::Approx(c).epsilon(1e-9));
                }
            }
        }
    }

    TEST_CASE("raw integer sampling carries only a small binning bias") {
        // arithmetic bin means sit slightly off the law; the bias stays small
        for (double b : {1.2, 1.5, 2.0}) {
            std::vector<double> series(10000);
            for (std::size_t j = 1; j <= series.size(); ++j) {
                series[j - 1] = 37.0 * std::pow(static_cast<double>(j), -2.0);
            }
            PowerLawFit fit = fit_power_law(log_resample(std::span<const double>(series), b),
                                            FitRegion{2, 5000});
            CHECK(std::abs(fit.exponent - (-2.0)) < 0.06);
            CHECK(fit.r2 > 0.999);
        }
    }

    TEST_CASE("scale equivariance: ordinate scaling moves only the amplitude") {
        std::vector<double> series, scaled;
        double upper = make_bin_exact_series(-1.4, 2.0, 1.3, 5000, series);
        scaled = series;
        for (double& y : scaled) y *= 311.0;

        PowerLawFit f1 = fit_power_law(log_resample(std::span<const double>(series), 1.3),
                                       FitRegion{1, upper});
        PowerLawFit f2 = fit_power_law(log_resample(std::span<const double>(scaled), 1.3),
                                       FitRegion{1, upper});
        CHECK(f1.exponent == doctest::Approx(f2.exponent).epsilon(1e-12));
        CHECK(f2.amplitude / f1.amplitude == doctest::Approx(311.0).epsilon(1e-9));
    }

    TEST_CASE("r2 agrees with the correlation-coefficient route") {
        std::mt19937_64 gen(31);
        std::uniform_real_distribution<double> noise(0.5, 1.5);
        std::vector<double> series(2000);
        for (std::size_t j = 1; j <= series.size(); ++j) {
            series[j - 1] = 5.0 * std::pow(static_cast<double>(j), -1.2) * noise(gen);
        }
        const double b = 1.4;
        LogBinning binned = log_resample(std::span<const double>(series), b);
        FitRegion region{2, 1500};
        PowerLawFit fit = fit_power_law(binned, region);

        // independent route: r2 = corr(log x, log y)^2 over the included bins
        std::vector<double> lx, ly;
        for (const LogBin& bin : binned.bins) {
            if (bin.x >= region.lower && bin.x <= region.upper && bin.mean > 0) {
                lx.push_back(std::log(bin.x));
                ly.push_back(std::log(bin.mean));
            }
        }
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < lx.size(); ++i) {
            mx += lx[i];
            my += ly[i];
        }
        mx /= static_cast<double>(lx.size());
        my /= static_cast<double>(ly.size());
        double sxx = 0, syy = 0, sxy = 0;
        for (std::size_t i = 0; i < lx.size(); ++i) {
            sxx += (lx[i] - mx) * (lx[i] - mx);
            syy += (ly[i] - my) * (ly[i] - my);
            sxy += (lx[i] - mx) * (ly[i] - my);
        }
        CHECK(fit.r2 == doctest::Approx(sxy * sxy / (sxx * syy)).epsilon(1e-12));
    }

    TEST_CASE("wrapper sign conventions") {
        // decaying rank profile: Z(r) ~ r^-1 reported as alpha = +1
        RankProfile z;
        z.Z.resize(2000);
        for (std::size_t r = 1; r <= z.Z.size(); ++r) {
            z.Z[r - 1] = static_cast<std::uint64_t>(200000.0 / static_cast<double>(r));
        }
        PowerLawFit alpha = fit_rank(z, FitRegion{10, 1000});
        CHECK(alpha.exponent == doctest::Approx(1.0).epsilon(0.02));

        // growing curve: N(t) ~ t^0.7 reported with its raw positive slope
        GrowthCurve n;
        n.N.resize(30000);
        for (std::size_t t = 1; t <= n.N.size(); ++t) {
            n.N[t - 1] = static_cast<std::uint32_t>(2.0 * std::pow(static_cast<double>(t), 0.7));
        }
        PowerLawFit lambda = fit_growth(n);
        CHECK(lambda.exponent == doctest::Approx(0.7).epsilon(0.02));
    }

    TEST_CASE("fit_points runs on raw sparse points") {
        std::vector<double> xs, ys;
        for (std::uint64_t k : {2, 3, 5, 9, 17, 33, 80}) {
            xs.push_back(static_cast<double>(k));
            ys.push_back(4.0 * std::pow(static_cast<double>(k), 1.15));
        }
        PowerLawFit fit = fit_points(xs, ys, FitRegion{1, 100});
        CHECK(fit.exponent == doctest::Approx(1.15).epsilon(1e-9));
        CHECK(std::abs(fit.r2 - 1.0) < 1e-12);
    }
}
