#include "flair/store.hpp"

#include <algorithm>

namespace flair {

void RawStore::insert(Sample p) {
    if (!p.finite()) throw NonFiniteSample();
    if (!samples_.empty() && p.t <= samples_.back().t)
        throw NonMonotonicTimestamp(p.t, samples_.back().t);
    samples_.push_back(p);
}

double RawStore::read(double t) const {
    if (samples_.empty()) throw EmptyModel();
    if (t < samples_.front().t) throw TimestampBeforeHistory(t, samples_.front().t);
    if (t >= samples_.back().t) return samples_.back().x;

    auto it = std::upper_bound(samples_.begin(), samples_.end(), t,
                               [](double v, const Sample& s) { return v < s.t; });
    const Sample& hi = *it;
    const Sample& lo = *(it - 1);
    if (t == lo.t) return lo.x;
    const double gradient = (hi.x - lo.x) / (hi.t - lo.t);
    return gradient * (t - lo.t) + lo.x;
}

}  // namespace flair
