#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "flair/model.hpp"

namespace flair {

// Uniform surface the benchmark harness drives. Same concurrency contract
// everywhere: single writer, concurrent pure reads, transferable between
// threads.
class Store {
public:
    virtual ~Store() = default;

    virtual void insert(Sample p) = 0;
    virtual double read(double t) const = 0;
    virtual std::uint64_t footprint_64bit() const = 0;

    // Number of models/segments/pieces currently held; drives the
    // stability benchmark.
    virtual std::size_t model_count() const = 0;

    // Flushes buffered state (SWAB). Benchmarks finalize before timing
    // reads; no-op by default.
    virtual void finalize() {}

    virtual std::string_view name() const = 0;
};

class FlairStore final : public Store {
public:
    explicit FlairStore(Epsilon epsilon) : model_(epsilon) {}

    void insert(Sample p) override { model_.insert(p); }
    double read(double t) const override { return model_.read(t); }
    std::uint64_t footprint_64bit() const override { return model_.footprint_64bit(); }
    std::size_t model_count() const override { return model_.history().size(); }
    std::string_view name() const override { return "flair"; }

    const FlairModel& model() const noexcept { return model_; }

private:
    FlairModel model_;
};

// Lossless baseline: every (t, x) pair kept, footprint 2n. Reads resolve by
// binary search and interpolate linearly between neighbours, so stored
// samples read back exactly.
class RawStore final : public Store {
public:
    void insert(Sample p) override;
    double read(double t) const override;
    std::uint64_t footprint_64bit() const override {
        return 2 * static_cast<std::uint64_t>(samples_.size());
    }
    std::size_t model_count() const override { return samples_.size(); }
    std::string_view name() const override { return "raw"; }

    const std::vector<Sample>& samples() const noexcept { return samples_; }

private:
    std::vector<Sample> samples_;
};

}  // namespace flair
