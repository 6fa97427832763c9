#pragma once

#include <vector>

#include "flair/store.hpp"

namespace flair::pla {

// Piecewise-polynomial store in the Greycat style. A live piece of degree d
// accepts a sample when the prediction error stays within eps / 2^(d+1).
// On misfit the degree escalates: d' points are regenerated from the live
// piece at equal spacing, a degree-d' polynomial is least-squares fitted to
// them plus the new sample, and the fit is kept when its residual stays
// within eps / 2^(d'+1). At the degree cap the live piece is persisted and
// a fresh piece starts from the new sample.
//
// Unlike the linear stores this one does not guarantee the epsilon contract
// on raw samples: acceptance errors are measured on regenerated points,
// which need not coincide with them.
class PolyStore final : public Store {
public:
    static constexpr int kDefaultMaxDegree = 14;

    explicit PolyStore(Epsilon epsilon, int max_degree = kDefaultMaxDegree);

    struct Piece {
        double t_start = 0.0;
        double t_end = 0.0;
        // Evaluation uses u = (t - t_start) / time_scale.
        double time_scale = 1.0;
        std::vector<double> coeffs;  // degree = coeffs.size() - 1
        // Max residual of the accepting fit at its fit points.
        double fit_residual = 0.0;

        int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
        double value_at(double t) const;
    };

    void insert(Sample p) override;
    double read(double t) const override;
    std::uint64_t footprint_64bit() const override;
    std::size_t model_count() const override {
        return pieces_.size() + (live_.has_value() ? 1 : 0);
    }
    std::string_view name() const override { return "poly"; }

    double tolerance(int degree) const;

    const std::vector<Piece>& persisted() const noexcept { return pieces_; }
    const Piece* live() const noexcept { return live_ ? &*live_ : nullptr; }

private:
    void escalate(Sample p);

    Epsilon epsilon_;
    int max_degree_;
    std::vector<Piece> pieces_;
    std::optional<Piece> live_;
    std::optional<Sample> last_;
};

// Least-squares polynomial fit (Householder QR). rows = sample count,
// degree+1 coefficients, x already normalized by the caller. Exposed for
// tests.
std::vector<double> polyfit(const std::vector<double>& u, const std::vector<double>& y,
                            int degree);

}  // namespace flair::pla
