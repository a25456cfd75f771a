#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "textlaws/error.hpp"

namespace textlaws {

// Fenwick-indexed nonnegative weights: O(log n) update, append and
// inverse-CDF sampling. The running total is refreshed from scratch every
// 2^16 mutations to keep floating-point drift bounded.
class WeightedSampler {
public:
    WeightedSampler() = default;
    explicit WeightedSampler(std::span<const double> weights) {
        for (double w : weights) push_back(w);
    }

    std::size_t size() const { return weights_.size(); }
    bool empty() const { return weights_.empty(); }
    double total() const { return total_; }
    double weight(std::size_t i) const { return weights_[i]; }

    void push_back(double w) {
        check_weight(w);
        const std::size_t n = weights_.size() + 1;  // 1-based Fenwick index
        weights_.push_back(w);
        double below = prefix(n - 1) - prefix(n - (n & (~n + 1)));
        tree_.push_back(below + w);
        total_ += w;
        bump();
    }

    void update(std::size_t i, double w) {
        check_weight(w);
        const double delta = w - weights_[i];
        weights_[i] = w;
        for (std::size_t j = i + 1; j <= tree_.size(); j += j & (~j + 1)) {
            tree_[j - 1] += delta;
        }
        total_ += delta;
        bump();
    }

    // u in [0,1): index of the word whose cumulative weight interval
    // contains u * total(). Zero-weight entries are never selected.
    std::size_t sample(double u) const {
        if (empty() || total_ <= 0) throw Error("sampling from empty or zero-weight state");
        double remaining = u * total_;
        std::size_t pos = 0;
        for (std::size_t mask = std::bit_floor(tree_.size()); mask != 0; mask >>= 1) {
            std::size_t next = pos + mask;
            if (next <= tree_.size() && tree_[next - 1] <= remaining) {
                remaining -= tree_[next - 1];
                pos = next;
            }
        }
        return pos < weights_.size() ? pos : weights_.size() - 1;
    }

    // Exact recomputation of the tree and the total.
    void rebuild() {
        total_ = 0;
        std::fill(tree_.begin(), tree_.end(), 0.0);
        for (std::size_t j = 1; j <= weights_.size(); ++j) {
            tree_[j - 1] += weights_[j - 1];
            std::size_t parent = j + (j & (~j + 1));
            if (parent <= weights_.size()) tree_[parent - 1] += tree_[j - 1];
            total_ += weights_[j - 1];
        }
        mutations_ = 0;
    }

private:
    static constexpr std::uint64_t kRebuildPeriod = std::uint64_t{1} << 16;

    static void check_weight(double w) {
        if (!(w >= 0)) throw Error("sampler weights must be nonnegative");
    }

    double prefix(std::size_t n) const {
        double s = 0;
        for (std::size_t j = n; j > 0; j -= j & (~j + 1)) s += tree_[j - 1];
        return s;
    }

    void bump() {
        if (++mutations_ >= kRebuildPeriod) rebuild();
    }

    std::vector<double> weights_;
    std::vector<double> tree_;
    double total_ = 0;
    std::uint64_t mutations_ = 0;
};

}  // namespace textlaws
