#include "textlaws/simon.hpp"

#include <cmath>

namespace textlaws {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

double innovation_probability(std::uint64_t t, const ModelParams& params) {
    if (t == 0) return 1.0;
    double p = params.k0 * std::pow(static_cast<double>(t), -params.kt);
    return p < 1.0 ? p : 1.0;
}

SplitRng::SplitRng(std::uint64_t seed) {
    std::uint64_t state = seed;
    branch_.seed(splitmix64(state));
    select_.seed(splitmix64(state));
}

std::uint32_t ProcessState::step(const ModelParams& params, double u1, double u2) {
    std::uint32_t id;
    if (t_ == 0 || u1 < innovation_probability(t_, params)) {
        id = static_cast<std::uint32_t>(counts_.size());
        counts_.push_back(1);
        sampler_.push_back(1.0);  // 1^kp
        ++innovations_;
    } else {
        id = static_cast<std::uint32_t>(sampler_.sample(u2));
        ++counts_[id];
        sampler_.update(id, std::pow(static_cast<double>(counts_[id]), kp_));
    }
    ++t_;
    return id;
}

EncodedSequence simulate(const ModelParams& params) {
    if (params.length < 1) throw Error("length must be >= 1");
    SplitRng rng(params.seed);
    ProcessState state(params.kp);

    EncodedSequence seq;
    seq.ids.reserve(params.length);
    for (std::uint64_t i = 0; i < params.length; ++i) {
        double u1 = rng.branch_uniform();
        // mirror the step() branch so the selection stream is only consumed
        // when a word is actually reused
        bool reuse = state.t() > 0 && u1 >= innovation_probability(state.t(), params);
        double u2 = reuse ? rng.select_uniform() : 0.0;
        seq.ids.push_back(state.step(params, u1, u2));
    }

    seq.vocabulary.reserve(state.vocabulary_size());
    for (std::uint32_t id = 0; id < state.vocabulary_size(); ++id) {
        seq.vocabulary.push_back(synthetic_word(id));
    }
    return seq;
}

EncodedSequence classic_simon(double p_const, std::uint64_t length, std::uint64_t seed) {
    if (!(p_const > 0.0 && p_const < 1.0)) throw Error("p_const must be in (0,1)");
    return simulate(ModelParams{p_const, 0.0, 1.0, length, seed});
}

std::string synthetic_word(std::uint32_t id) {
    // bijective base 26
    std::string word;
    std::uint64_t n = static_cast<std::uint64_t>(id) + 1;
    while (n > 0) {
        --n;
        word.push_back(static_cast<char>('a' + n % 26));
        n /= 26;
    }
    return {word.rbegin(), word.rend()};
}

std::vector<EncodedSequence> simulate_ensemble(ModelParams params, std::size_t runs,
                                               std::uint64_t seed_base) {
    std::vector<EncodedSequence> out(runs);
#pragma omp parallel for schedule(dynamic)
    for (long long r = 0; r < static_cast<long long>(runs); ++r) {
        ModelParams p = params;
        p.seed = seed_base + static_cast<std::uint64_t>(r);
        out[r] = simulate(p);
    }
    return out;
}

}  // namespace textlaws
