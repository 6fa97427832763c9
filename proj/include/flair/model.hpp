#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flair/sample.hpp"

namespace flair {

// Online epsilon-bounded piecewise-linear model of a univariate stream.
//
// State is a list of persisted breakpoints (the history) plus the current
// segment: its slope and the allowed slope cone [slope_min, slope_max] that
// keeps every sample covered by the segment within epsilon of the line
// through the last breakpoint. Inserting a sample whose gradient falls
// inside the open cone tightens the cone; a gradient outside it persists the
// previous sample as a new breakpoint and restarts the cone from there.
//
// Guarantee: for every inserted sample s, |read(s.t) - s.x| <= epsilon.
//
// Single writer; reads are const and may run concurrently with each other
// but not with insert.
class FlairModel {
public:
    explicit FlairModel(Epsilon epsilon);

    // Appends one sample. Timestamps must be strictly increasing and both
    // fields finite. The first sample ever inserted is persisted immediately
    // and becomes the origin of the first segment; the slope cone starts
    // unbounded so the second insert always fits.
    void insert(Sample p);

    // Value at time t. Historical timestamps (t <= last breakpoint) resolve
    // by binary search to the segment with history[k].t <= t < history[k+1].t
    // and interpolate on it; later timestamps extrapolate the current
    // segment. Throws EmptyModel / TimestampBeforeHistory.
    double read(double t) const;

    // Number of 64-bit variables held by the model: two per history point
    // plus five for the fixed state (three slopes and the last sample's
    // pair). Stable accounting rule; benchmark numbers depend on it.
    std::uint64_t footprint_64bit() const noexcept {
        return 2 * static_cast<std::uint64_t>(history_.size()) + 5;
    }

    const std::vector<Sample>& history() const noexcept { return history_; }
    double slope_current() const noexcept { return slope_current_; }
    // Unbounded cone ends are +-infinity in memory; serialization writes
    // explicit tokens instead.
    double slope_min() const noexcept { return slope_min_; }
    double slope_max() const noexcept { return slope_max_; }
    const std::optional<Sample>& last() const noexcept { return last_; }
    Epsilon epsilon() const noexcept { return epsilon_; }
    std::uint64_t count_inserted() const noexcept { return count_inserted_; }

    // State equality on history, slopes, last and epsilon (bit-exact).
    friend bool operator==(const FlairModel& a, const FlairModel& b) noexcept;

    // Rebuilds a model from persisted state, revalidating invariants.
    // Used by deserialization; count_inserted is not persisted, so the
    // restored count is |history| plus one when last is a newer sample.
    static FlairModel restore(Epsilon epsilon, std::vector<Sample> history, double slope_current,
                              double slope_min, double slope_max, std::optional<Sample> last);

private:
    std::vector<Sample> history_;
    double slope_current_ = 0.0;
    double slope_min_;
    double slope_max_;
    std::optional<Sample> last_;
    Epsilon epsilon_;
    std::uint64_t count_inserted_ = 0;
};

}  // namespace flair
