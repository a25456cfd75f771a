#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "textlaws/corpus.hpp"

namespace textlaws {

// m(k): number of distinct words occurring exactly k times.
// Invariants: sum m(k) = Nt, sum k*m(k) = T.
struct FrequencySpectrum {
    std::map<std::uint64_t, std::uint64_t> counts;
    std::size_t T = 0;
    std::size_t Nt = 0;
};

// Occurrence counts sorted non-increasing; rank r is index + 1.
struct RankProfile {
    std::vector<std::uint64_t> Z;
    std::size_t T = 0;
};

// N[t-1] = number of distinct words among the first t tokens.
struct GrowthCurve {
    std::vector<std::uint32_t> N;
};

// phi(k): mean number of Part-II occurrences per distinct word that occurred
// exactly k times in Part I, with the split at floor(rho*T).
struct AttachmentProfile {
    double rho = 0.5;
    std::map<std::uint64_t, double> phi;
};

// Per-word occurrence counts indexed by id.
std::vector<std::uint64_t> occurrence_counts(const EncodedSequence& seq);

FrequencySpectrum frequency_spectrum(const EncodedSequence& seq);
RankProfile rank_profile(const EncodedSequence& seq);
GrowthCurve growth_curve(const EncodedSequence& seq);
AttachmentProfile attachment_profile(const EncodedSequence& seq, double rho = 0.5);

}  // namespace textlaws
