#pragma once

#include <span>
#include <vector>

#include "flair/sample.hpp"

namespace flair::pla {

// One linear piece connecting two raw samples. Lists are contiguous: each
// t_end equals the next piece's t_start and the shared sample is an
// endpoint of both.
struct Segment {
    double t_start = 0.0;
    double t_end = 0.0;
    double x_start = 0.0;
    double x_end = 0.0;

    double value_at(double t) const {
        const double gradient = (x_end - x_start) / (t_end - t_start);
        return gradient * (t - t_start) + x_start;
    }
};

using SegmentList = std::vector<Segment>;

// Offline bottom-up segmentation: starts from consecutive-pair segments and
// repeatedly merges the adjacent pair of minimal cost while the merged
// segment's maximum absolute deviation over its covered raw samples stays
// within epsilon. Requires >= 2 samples with strictly increasing t.
SegmentList bottom_up_segment(std::span<const Sample> samples, Epsilon epsilon);

// Same, returning the surviving sample indices (segment k spans
// bounds[k]..bounds[k+1]). bottom_up_segment and the SWAB window pass share
// this.
std::vector<std::size_t> bottom_up_bounds(std::span<const Sample> samples, Epsilon epsilon);

}  // namespace flair::pla
