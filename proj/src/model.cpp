#include "flair/model.hpp"

#include <algorithm>
#include <limits>

namespace flair {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

FlairModel::FlairModel(Epsilon epsilon)
    : slope_min_(-kInf), slope_max_(kInf), epsilon_(epsilon) {}

void FlairModel::insert(Sample p) {
    if (!p.finite()) throw NonFiniteSample();
    if (last_ && p.t <= last_->t) throw NonMonotonicTimestamp(p.t, last_->t);

    if (history_.empty()) {
        history_.push_back(p);
        last_ = p;
        ++count_inserted_;
        return;
    }

    const Sample origin = history_.back();
    const double t_delta = p.t - origin.t;
    const double x_delta = p.x - origin.x;
    const double gradient = x_delta / t_delta;
    const double eps = epsilon_.value();

    if (slope_min_ < gradient && gradient < slope_max_) {
        slope_current_ = gradient;
        slope_min_ = std::max(slope_min_, (x_delta - eps) / t_delta);
        slope_max_ = std::min(slope_max_, (x_delta + eps) / t_delta);
    } else {
        // The cone no longer admits p: persist the previous sample and
        // restart the segment from <last, p>.
        history_.push_back(*last_);
        const double t_delta2 = p.t - last_->t;
        const double x_delta2 = p.x - last_->x;
        slope_current_ = x_delta2 / t_delta2;
        slope_min_ = (x_delta2 - eps) / t_delta2;
        slope_max_ = (x_delta2 + eps) / t_delta2;
    }

    last_ = p;
    ++count_inserted_;
}

double FlairModel::read(double t) const {
    if (count_inserted_ == 0) throw EmptyModel();
    if (t < history_.front().t) throw TimestampBeforeHistory(t, history_.front().t);

    const Sample& tail = history_.back();
    if (t >= tail.t) {
        return slope_current_ * (t - tail.t) + tail.x;
    }

    // t < tail.t implies at least two history entries. Find k with
    // history[k].t <= t < history[k+1].t (half-open segments).
    auto it = std::upper_bound(history_.begin(), history_.end(), t,
                               [](double v, const Sample& s) { return v < s.t; });
    const Sample& hi = *it;
    const Sample& lo = *(it - 1);
    const double gradient = (hi.x - lo.x) / (hi.t - lo.t);
    return gradient * (t - lo.t) + lo.x;
}

bool operator==(const FlairModel& a, const FlairModel& b) noexcept {
    return a.history_ == b.history_ && a.slope_current_ == b.slope_current_ &&
           a.slope_min_ == b.slope_min_ && a.slope_max_ == b.slope_max_ && a.last_ == b.last_ &&
           a.epsilon_ == b.epsilon_;
}

FlairModel FlairModel::restore(Epsilon epsilon, std::vector<Sample> history, double slope_current,
                               double slope_min, double slope_max, std::optional<Sample> last) {
    for (std::size_t i = 0; i < history.size(); ++i) {
        if (!history[i].finite()) throw NonFiniteSample();
        if (i > 0 && history[i].t <= history[i - 1].t)
            throw NonMonotonicTimestamp(history[i].t, history[i - 1].t);
    }
    if (history.empty() != !last.has_value())
        throw InvalidParams("history and last sample must be both present or both absent");
    if (last && !history.empty() && last->t < history.back().t)
        throw NonMonotonicTimestamp(last->t, history.back().t);

    FlairModel m(epsilon);
    m.history_ = std::move(history);
    m.slope_current_ = slope_current;
    m.slope_min_ = slope_min;
    m.slope_max_ = slope_max;
    m.last_ = last;
    m.count_inserted_ = m.history_.size();
    if (last && !m.history_.empty() && !(*last == m.history_.back())) ++m.count_inserted_;
    return m;
}

}  // namespace flair
