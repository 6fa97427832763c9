#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>

#include "flair/kernels.hpp"
#include "flair/segments.hpp"

namespace flair::pla {

namespace {

// Deviation of the chord through samples [lo..hi] measured at every covered
// sample. Endpoints lie on the chord.
double chord_cost(const double* t, const double* x, std::size_t lo, std::size_t hi) {
    const double slope = (x[hi] - x[lo]) / (t[hi] - t[lo]);
    return kernels::max_abs_dev_line(t + lo, x + lo, hi - lo + 1, t[lo], x[lo], slope);
}

struct Candidate {
    double cost;
    std::size_t node;     // left boundary node of the pair
    std::uint64_t stamp;  // staleness check

    bool operator>(const Candidate& other) const { return cost > other.cost; }
};

}  // namespace

std::vector<std::size_t> bottom_up_bounds(std::span<const Sample> samples, Epsilon epsilon) {
    const std::size_t n = samples.size();
    if (n < 2) throw TooFewSamples("bottom-up segmentation needs at least 2 samples");

    std::vector<double> t(n), x(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!samples[i].finite()) throw NonFiniteSample();
        if (i > 0 && samples[i].t <= samples[i - 1].t)
            throw NonMonotonicTimestamp(samples[i].t, samples[i - 1].t);
        t[i] = samples[i].t;
        x[i] = samples[i].x;
    }

    // Boundary nodes as a doubly linked list over sample indices; merging a
    // pair of adjacent segments removes their shared boundary.
    std::vector<std::size_t> next(n), prev(n);
    std::vector<std::uint64_t> stamp(n, 0);
    std::vector<bool> alive(n, true);
    for (std::size_t i = 0; i < n; ++i) {
        next[i] = i + 1;
        prev[i] = (i == 0) ? n : i - 1;
    }

    const double eps = epsilon.value();
    std::priority_queue<Candidate, std::vector<Candidate>, std::greater<Candidate>> heap;

    auto push_pair = [&](std::size_t left) {
        // Pair of segments [left..mid] and [mid..right]; cost of the merge
        // into [left..right].
        const std::size_t mid = next[left];
        if (mid >= n) return;
        const std::size_t right = next[mid];
        if (right >= n) return;
        const double cost = chord_cost(t.data(), x.data(), left, right);
        if (cost <= eps) heap.push({cost, left, stamp[left]});
    };

    for (std::size_t i = 0; i + 2 < n; ++i) push_pair(i);

    while (!heap.empty()) {
        const Candidate c = heap.top();
        heap.pop();
        if (!alive[c.node] || stamp[c.node] != c.stamp) continue;
        const std::size_t mid = next[c.node];
        if (mid >= n || next[mid] >= n) continue;

        // Remove the shared boundary.
        const std::size_t right = next[mid];
        alive[mid] = false;
        next[c.node] = right;
        prev[right] = c.node;
        ++stamp[c.node];

        push_pair(c.node);
        if (prev[c.node] < n) {
            ++stamp[prev[c.node]];
            push_pair(prev[c.node]);
        }
    }

    std::vector<std::size_t> bounds;
    for (std::size_t i = 0; i < n; i = next[i]) {
        bounds.push_back(i);
        if (i == n - 1) break;
    }
    return bounds;
}

SegmentList bottom_up_segment(std::span<const Sample> samples, Epsilon epsilon) {
    const auto bounds = bottom_up_bounds(samples, epsilon);
    SegmentList segments;
    segments.reserve(bounds.size() - 1);
    for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
        const Sample& a = samples[bounds[k]];
        const Sample& b = samples[bounds[k + 1]];
        segments.push_back({a.t, b.t, a.x, b.x});
    }
    return segments;
}

}  // namespace flair::pla
