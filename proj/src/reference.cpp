#include "textlaws/reference.hpp"

#include <algorithm>
#include <cmath>

namespace textlaws::reference {

std::vector<std::uint64_t> occurrence_counts(const EncodedSequence& seq) {
    std::vector<std::uint64_t> counts(seq.Nt(), 0);
    for (std::uint32_t id : seq.ids) ++counts[id];
    return counts;
}

FrequencySpectrum frequency_spectrum(const EncodedSequence& seq) {
    if (seq.T() == 0) throw Error("empty corpus");
    FrequencySpectrum spec;
    spec.T = seq.T();
    spec.Nt = seq.Nt();
    for (std::uint64_t c : reference::occurrence_counts(seq)) ++spec.counts[c];
    return spec;
}

RankProfile rank_profile(const EncodedSequence& seq) {
    if (seq.T() == 0) throw Error("empty corpus");
    RankProfile rank;
    rank.T = seq.T();
    rank.Z = reference::occurrence_counts(seq);
    std::sort(rank.Z.begin(), rank.Z.end(), std::greater<>());
    return rank;
}

GrowthCurve growth_curve(const EncodedSequence& seq) {
    if (seq.T() == 0) throw Error("empty corpus");
    GrowthCurve curve;
    curve.N.resize(seq.T());
    std::vector<char> seen(seq.Nt(), 0);
    std::uint32_t distinct = 0;
    for (std::size_t t = 0; t < seq.T(); ++t) {
        std::uint32_t id = seq.ids[t];
        if (!seen[id]) {
            seen[id] = 1;
            ++distinct;
        }
        curve.N[t] = distinct;
    }
    return curve;
}

AttachmentProfile attachment_profile(const EncodedSequence& seq, double rho) {
    if (!(rho > 0.0 && rho < 1.0)) throw Error("rho must be in (0,1)");
    const std::size_t T = seq.T();
    const std::size_t split = static_cast<std::size_t>(std::floor(rho * static_cast<double>(T)));
    if (split == 0 || split >= T) throw Error("degenerate split: one part is empty");

    std::vector<std::uint64_t> part1(seq.Nt(), 0), part2(seq.Nt(), 0);
    for (std::size_t t = 0; t < split; ++t) ++part1[seq.ids[t]];
    for (std::size_t t = split; t < T; ++t) ++part2[seq.ids[t]];

    // total Part-II occurrences and distinct-word count per Part-I count k
    std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> acc;
    for (std::size_t id = 0; id < seq.Nt(); ++id) {
        if (part1[id] == 0) continue;
        auto& [occ, words] = acc[part1[id]];
        occ += part2[id];
        ++words;
    }

    AttachmentProfile profile;
    profile.rho = rho;
    for (const auto& [k, ow] : acc) {
        profile.phi[k] = static_cast<double>(ow.first) / static_cast<double>(ow.second);
    }
    return profile;
}

}  // namespace textlaws::reference
