#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "textlaws/corpus.hpp"
#include "textlaws/simon.hpp"

namespace testutil {

// Skewed random corpus: ids drawn as floor(V * u^q) so a few words repeat a
// lot and many appear once, like real rank-frequency data.
inline textlaws::EncodedSequence random_corpus(std::mt19937_64& gen, std::size_t min_len = 1,
                                               std::size_t max_len = 3000) {
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    const std::size_t length = len_dist(gen);
    std::uniform_int_distribution<std::uint32_t> vocab_dist(
        1, static_cast<std::uint32_t>(length));
    const std::uint32_t vocab = vocab_dist(gen);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> skew_dist(1.0, 3.0);
    const double skew = skew_dist(gen);

    textlaws::TokenSequence tokens;
    tokens.reserve(length);
    for (std::size_t t = 0; t < length; ++t) {
        auto raw = static_cast<std::uint32_t>(std::pow(unit(gen), skew) * vocab);
        if (raw >= vocab) raw = vocab - 1;
        tokens.push_back(textlaws::synthetic_word(raw));
    }
    return textlaws::encode(tokens);
}

}  // namespace testutil
