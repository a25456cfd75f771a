#include "textlaws/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "textlaws/reference.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace textlaws {

namespace {

// Below this length the per-thread buffers cost more than they save.
constexpr std::size_t kParallelCutoff = std::size_t{1} << 16;

#ifdef _OPENMP
bool use_parallel(std::size_t T) {
    return T >= kParallelCutoff && omp_get_max_threads() > 1;
}
#endif

}  // namespace

std::vector<std::uint64_t> occurrence_counts(const EncodedSequence& seq) {
#ifdef _OPENMP
    if (use_parallel(seq.T())) {
        const std::size_t V = seq.Nt();
        const long long T = static_cast<long long>(seq.T());
        std::vector<std::uint64_t> counts(V, 0);
#pragma omp parallel
        {
            std::vector<std::uint64_t> local(V, 0);
#pragma omp for schedule(static) nowait
            for (long long t = 0; t < T; ++t) ++local[seq.ids[t]];
#pragma omp critical
            {
                for (std::size_t i = 0; i < V; ++i) counts[i] += local[i];
            }
        }
        return counts;
    }
#endif
    return reference::occurrence_counts(seq);
}

FrequencySpectrum frequency_spectrum(const EncodedSequence& seq) {
    if (seq.T() == 0) throw Error("empty corpus");
    FrequencySpectrum spec;
    spec.T = seq.T();
    spec.Nt = seq.Nt();
    for (std::uint64_t c : occurrence_counts(seq)) ++spec.counts[c];
    return spec;
}

RankProfile rank_profile(const EncodedSequence& seq) {
    if (seq.T() == 0) throw Error("empty corpus");
    RankProfile rank;
    rank.T = seq.T();
    rank.Z = occurrence_counts(seq);
    std::sort(rank.Z.begin(), rank.Z.end(), std::greater<>());
    return rank;
}

GrowthCurve growth_curve(const EncodedSequence& seq) {
#ifdef _OPENMP
    if (use_parallel(seq.T())) {
        const std::size_t T = seq.T();
        const std::size_t V = seq.Nt();
        constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

        // first occurrence position of every id
        std::vector<std::uint32_t> first(V, kUnseen);
#pragma omp parallel
        {
            std::vector<std::uint32_t> local(V, kUnseen);
#pragma omp for schedule(static) nowait
            for (long long t = 0; t < static_cast<long long>(T); ++t) {
                std::uint32_t id = seq.ids[t];
                local[id] = std::min(local[id], static_cast<std::uint32_t>(t));
            }
#pragma omp critical
            {
                for (std::size_t i = 0; i < V; ++i) first[i] = std::min(first[i], local[i]);
            }
        }

        GrowthCurve curve;
        curve.N.resize(T);
#pragma omp parallel for schedule(static)
        for (long long t = 0; t < static_cast<long long>(T); ++t) {
            curve.N[t] = first[seq.ids[t]] == static_cast<std::uint32_t>(t) ? 1 : 0;
        }

        // block-wise inclusive prefix sum over the first-appearance indicators
        int nblocks = omp_get_max_threads();
        std::vector<std::uint64_t> block_total(nblocks + 1, 0);
#pragma omp parallel num_threads(nblocks)
        {
            int tid = omp_get_thread_num();
            std::size_t lo = T * tid / nblocks;
            std::size_t hi = T * (tid + 1) / nblocks;
            std::uint32_t run = 0;
            for (std::size_t t = lo; t < hi; ++t) {
                run += curve.N[t];
                curve.N[t] = run;
            }
            block_total[tid + 1] = run;
#pragma omp barrier
#pragma omp single
            {
                for (int b = 0; b < nblocks; ++b) block_total[b + 1] += block_total[b];
            }
            std::uint32_t offset = static_cast<std::uint32_t>(block_total[tid]);
            for (std::size_t t = lo; t < hi; ++t) curve.N[t] += offset;
        }
        return curve;
    }
#endif
    return reference::growth_curve(seq);
}

AttachmentProfile attachment_profile(const EncodedSequence& seq, double rho) {
#ifdef _OPENMP
    if (use_parallel(seq.T())) {
        if (!(rho > 0.0 && rho < 1.0)) throw Error("rho must be in (0,1)");
        const std::size_t T = seq.T();
        const std::size_t V = seq.Nt();
        const std::size_t split = static_cast<std::size_t>(std::floor(rho * static_cast<double>(T)));
        if (split == 0 || split >= T) throw Error("degenerate split: one part is empty");

        std::vector<std::uint64_t> part1(V, 0), part2(V, 0);
#pragma omp parallel
        {
            std::vector<std::uint64_t> local1(V, 0), local2(V, 0);
#pragma omp for schedule(static) nowait
            for (long long t = 0; t < static_cast<long long>(T); ++t) {
                if (static_cast<std::size_t>(t) < split) {
                    ++local1[seq.ids[t]];
                } else {
                    ++local2[seq.ids[t]];
                }
            }
#pragma omp critical
            {
                for (std::size_t i = 0; i < V; ++i) {
                    part1[i] += local1[i];
                    part2[i] += local2[i];
                }
            }
        }

        std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> acc;
        for (std::size_t id = 0; id < V; ++id) {
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
#endif
    return reference::attachment_profile(seq, rho);
}

}  // namespace textlaws
