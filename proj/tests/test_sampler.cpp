#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "textlaws/sampler.hpp"

using namespace textlaws;

namespace {

// linear-scan oracle: smallest index whose cumulative weight exceeds u*total
std::size_t scan_sample(const std::vector<double>& weights, double u) {
    double total = 0;
    for (double w : weights) total += w;
    double target = u * total;
    double cum = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        cum += weights[i];
        if (cum > target) return i;
    }
    return weights.size() - 1;
}

}  // namespace

TEST_SUITE("sampler") {

    TEST_CASE("matches the linear-scan oracle on integer weights") {
        // integer weights keep every partial sum exact, so the Fenwick
        // descent and the scan must pick identical indices
        std::mt19937_64 gen(5);
        std::uniform_int_distribution<int> weight(0, 9);
        std::uniform_real_distribution<double> unit(0.0, 1.0);

        for (int rep = 0; rep < 20; ++rep) {
            std::vector<double> weights;
            WeightedSampler sampler;
            for (int i = 0; i < 200; ++i) {
                double w = weight(gen);
                weights.push_back(w);
                sampler.push_back(w);
            }
            for (int i = 0; i < 300; ++i) {
                std::size_t at = gen() % weights.size();
                double w = weight(gen);
                weights[at] = w;
                sampler.update(at, w);
            }
            double total = 0;
            for (double w : weights) total += w;
            CHECK(sampler.total() == total);

            for (int d = 0; d < 500; ++d) {
                double u = unit(gen);
                CHECK(sampler.sample(u) == scan_sample(weights, u));
            }
        }
    }

    TEST_CASE("total tracks the recomputed sum through many float updates") {
        std::mt19937_64 gen(17);
        std::uniform_real_distribution<double> weight(0.0, 3.0);
        WeightedSampler sampler;
        for (int i = 0; i < 500; ++i) sampler.push_back(weight(gen));
        for (int step = 0; step < 200000; ++step) {
            sampler.update(gen() % 500, weight(gen));
            if (step % 9973 == 0) {
                double direct = 0;
                for (std::size_t i = 0; i < sampler.size(); ++i) direct += sampler.weight(i);
                CHECK(sampler.total() == doctest::Approx(direct).epsilon(1e-9));
            }
        }
    }

    TEST_CASE("zero-weight entries are never selected") {
        WeightedSampler sampler;
        for (int i = 0; i < 50; ++i) sampler.push_back(i % 5 == 0 ? 1.0 : 0.0);
        std::mt19937_64 gen(3);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int d = 0; d < 20000; ++d) {
            CHECK(sampler.sample(unit(gen)) % 5 == 0);
        }
    }

    TEST_CASE("equal weights map u to floor(u*n)") {
        WeightedSampler sampler;
        for (int i = 0; i < 64; ++i) sampler.push_back(1.0);
        std::mt19937_64 gen(8);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int d = 0; d < 10000; ++d) {
            double u = unit(gen);
            CHECK(sampler.sample(u) == static_cast<std::size_t>(u * 64.0));
        }
    }

    TEST_CASE("chi-square of 1e5 draws against exact weights on a 100-word state") {
        // counts 1..100 raised to 1.3, the shape the growth model produces
        WeightedSampler sampler;
        std::vector<double> weights(100);
        for (int i = 0; i < 100; ++i) {
            weights[i] = std::pow(static_cast<double>(i + 1), 1.3);
            sampler.push_back(weights[i]);
        }
        double total = 0;
        for (double w : weights) total += w;

        std::mt19937_64 gen(20240601);
        const int draws = 100000;
        std::vector<int> observed(100, 0);
        for (int d = 0; d < draws; ++d) {
            ++observed[sampler.sample(static_cast<double>(gen() >> 11) * 0x1.0p-53)];
        }
        double chi2 = 0;
        for (int i = 0; i < 100; ++i) {
            double expected = draws * weights[i] / total;
            chi2 += (observed[i] - expected) * (observed[i] - expected) / expected;
        }
        // chi2 critical value, df = 99, significance 0.001
        CHECK(chi2 < 148.23035916510173);
    }

    TEST_CASE("periodic rebuild keeps behavior identical to a fresh sampler") {
        std::mt19937_64 gen(44);
        std::uniform_int_distribution<int> weight(0, 6);
        WeightedSampler hammered;
        std::vector<double> weights(128);
        for (auto& w : weights) {
            w = weight(gen);
            hammered.push_back(w);
        }
        // push well past the 2^16 rebuild period
        for (int step = 0; step < (1 << 17) + 17; ++step) {
            std::size_t at = gen() % weights.size();
            weights[at] = weight(gen);
            hammered.update(at, weights[at]);
        }
        WeightedSampler fresh{std::span<const double>(weights)};
        CHECK(hammered.total() == doctest::Approx(fresh.total()).epsilon(1e-12));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int d = 0; d < 2000; ++d) {
            double u = unit(gen);
            CHECK(hammered.sample(u) == fresh.sample(u));
        }
    }

    TEST_CASE("negative weights are rejected") {
        WeightedSampler sampler;
        CHECK_THROWS_AS(sampler.push_back(-1.0), Error);
        sampler.push_back(1.0);
        CHECK_THROWS_AS(sampler.update(0, -0.5), Error);
        WeightedSampler empty;
        CHECK_THROWS_AS(empty.sample(0.5), Error);
    }
}
