#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "textlaws/corpus.hpp"
#include "textlaws/sampler.hpp"

namespace textlaws {

struct ModelParams {
    double k0 = 1;            // innovation scale
    double kt = 0;            // innovation decay exponent (>= 0)
    double kp = 1;            // preferential-attachment strength
    std::uint64_t length = 1; // tokens to generate
    std::uint64_t seed = 0;
};

// p(t) = min(1, k0 * t^-kt). Non-increasing in t; clamped because k0 > 1
// makes the raw value exceed 1 at small t.
double innovation_probability(std::uint64_t t, const ModelParams& params);

// Two mt19937_64 streams derived from one seed: one for the innovate/reuse
// branch, one for picking the reused word. Uniforms come from raw 64-bit
// draws so sequences are identical across standard libraries.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed);
    double branch_uniform() { return uniform(branch_); }
    double select_uniform() { return uniform(select_); }

private:
    static double uniform(std::mt19937_64& gen) {
        return static_cast<double>(gen() >> 11) * 0x1.0p-53;
    }
    std::mt19937_64 branch_;
    std::mt19937_64 select_;
};

// Word counts plus the n^kp sampler, advanced one token at a time.
class ProcessState {
public:
    explicit ProcessState(double kp) : kp_(kp) {}

    std::uint64_t t() const { return t_; }
    std::size_t vocabulary_size() const { return counts_.size(); }
    std::uint64_t innovations() const { return innovations_; }
    const std::vector<std::uint64_t>& counts() const { return counts_; }
    const WeightedSampler& sampler() const { return sampler_; }

    // u1 decides innovation vs reuse against p(t); u2 picks the reused word.
    // The first token is always an innovation. Returns the emitted word id.
    std::uint32_t step(const ModelParams& params, double u1, double u2);

private:
    std::vector<std::uint64_t> counts_;
    WeightedSampler sampler_;
    std::uint64_t t_ = 0;
    std::uint64_t innovations_ = 0;
    double kp_;
};

// Deterministic in params.seed; vocabulary ids in innovation order.
EncodedSequence simulate(const ModelParams& params);

// Constant innovation probability and linear attachment (kt = 0, kp = 1).
EncodedSequence classic_simon(double p_const, std::uint64_t length, std::uint64_t seed);

// Alphabetic word for a synthetic vocabulary id: "a".."z", "aa", "ab", ...
// Survives the tokenizer, so simulated corpora round-trip as plain text.
std::string synthetic_word(std::uint32_t id);

// Independent runs with seeds seed_base, seed_base+1, ...; runs execute in
// parallel, output order is by seed.
std::vector<EncodedSequence> simulate_ensemble(ModelParams params, std::size_t runs,
                                               std::uint64_t seed_base);

}  // namespace textlaws
