#pragma once

#include <cstdint>
#include <span>

#include "flair/segments.hpp"
#include "flair/store.hpp"

namespace flair::pla {

// Sliding-window-and-bottom-up segmentation. Samples buffer into a window;
// when it fills, a bottom-up pass runs over the window, the oldest segment
// is emitted and its samples leave the buffer (the boundary sample stays as
// the next window's origin). finalize() flushes the remainder through one
// offline bottom-up pass.
class Swab {
public:
    explicit Swab(Epsilon epsilon, std::size_t window_capacity = kDefaultWindow);

    static constexpr std::size_t kDefaultWindow = 512;

    void insert(Sample p);
    const SegmentList& finalize();

    const SegmentList& segments() const noexcept { return segments_; }
    std::span<const Sample> buffered() const noexcept { return buffer_; }
    std::uint64_t flush_count() const noexcept { return flush_count_; }
    bool finalized() const noexcept { return finalized_; }
    Epsilon epsilon() const noexcept { return epsilon_; }

private:
    void emit_oldest();

    Epsilon epsilon_;
    std::size_t window_;
    std::vector<Sample> buffer_;
    SegmentList segments_;
    std::optional<Sample> last_;
    std::uint64_t flush_count_ = 0;
    bool finalized_ = false;
};

// Store adapter. Reads scan the segment list sequentially until the
// covering segment is found, the lookup scheme this approach is known for;
// timestamps past the emitted segments resolve against the buffered raw
// samples.
class SwabStore final : public Store {
public:
    explicit SwabStore(Epsilon epsilon, std::size_t window_capacity = Swab::kDefaultWindow)
        : swab_(epsilon, window_capacity) {}

    void insert(Sample p) override { swab_.insert(p); }
    double read(double t) const override;
    std::uint64_t footprint_64bit() const override;
    std::size_t model_count() const override { return swab_.segments().size(); }
    void finalize() override { swab_.finalize(); }
    std::string_view name() const override { return "swab"; }

    const Swab& swab() const noexcept { return swab_; }

private:
    Swab swab_;
};

}  // namespace flair::pla
