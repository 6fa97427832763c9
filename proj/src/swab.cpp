#include "flair/swab.hpp"

namespace flair::pla {

Swab::Swab(Epsilon epsilon, std::size_t window_capacity)
    : epsilon_(epsilon), window_(window_capacity) {
    if (window_capacity < 2) throw InvalidParams("SWAB window capacity must be >= 2");
}

void Swab::insert(Sample p) {
    if (finalized_) throw InvalidParams("insert after finalize");
    if (!p.finite()) throw NonFiniteSample();
    if (last_ && p.t <= last_->t) throw NonMonotonicTimestamp(p.t, last_->t);
    last_ = p;
    buffer_.push_back(p);
    if (buffer_.size() >= window_) emit_oldest();
}

void Swab::emit_oldest() {
    const auto bounds = bottom_up_bounds(buffer_, epsilon_);
    const std::size_t end = bounds[1];
    segments_.push_back({buffer_[0].t, buffer_[end].t, buffer_[0].x, buffer_[end].x});
    buffer_.erase(buffer_.begin(), buffer_.begin() + static_cast<std::ptrdiff_t>(end));
    ++flush_count_;
}

const SegmentList& Swab::finalize() {
    if (finalized_) return segments_;
    if (buffer_.size() >= 2) {
        for (const Segment& s : bottom_up_segment(buffer_, epsilon_)) segments_.push_back(s);
    }
    // A single leftover sample is already the endpoint of the last emitted
    // segment; nothing to flush.
    finalized_ = true;
    return segments_;
}

double SwabStore::read(double t) const {
    const SegmentList& segs = swab_.segments();
    const auto buffered = swab_.buffered();

    if (segs.empty() && buffered.empty()) throw EmptyModel();
    const double first_t = segs.empty() ? buffered.front().t : segs.front().t_start;
    if (t < first_t) throw TimestampBeforeHistory(t, first_t);

    // Sequential scan, no index.
    for (const Segment& s : segs) {
        if (t <= s.t_end) return s.value_at(t);
    }

    if (buffered.size() >= 2) {
        for (std::size_t i = 0; i + 1 < buffered.size(); ++i) {
            if (t <= buffered[i + 1].t) {
                const Segment s{buffered[i].t, buffered[i + 1].t, buffered[i].x,
                                buffered[i + 1].x};
                return s.value_at(t);
            }
        }
        const Segment tail{buffered[buffered.size() - 2].t, buffered.back().t,
                           buffered[buffered.size() - 2].x, buffered.back().x};
        return tail.value_at(t);
    }
    if (buffered.size() == 1 && segs.empty()) return buffered.front().x;
    // Past the last emitted segment with nothing buffered: extend it.
    return segs.back().value_at(t);
}

std::uint64_t SwabStore::footprint_64bit() const {
    // Four values per emitted segment plus the raw pairs still buffered.
    return 4 * static_cast<std::uint64_t>(swab_.segments().size()) +
           2 * static_cast<std::uint64_t>(swab_.buffered().size());
}

}  // namespace flair::pla
