#pragma once

#include "textlaws/stats.hpp"

// Plain single-threaded implementations of the corpus statistics. They are
// the baseline for the benchmark and the oracle the parallel kernels are
// checked against; results must match the textlaws:: versions exactly.
namespace textlaws::reference {

std::vector<std::uint64_t> occurrence_counts(const EncodedSequence& seq);

FrequencySpectrum frequency_spectrum(const EncodedSequence& seq);
RankProfile rank_profile(const EncodedSequence& seq);
GrowthCurve growth_curve(const EncodedSequence& seq);
AttachmentProfile attachment_profile(const EncodedSequence& seq, double rho = 0.5);

}  // namespace textlaws::reference
