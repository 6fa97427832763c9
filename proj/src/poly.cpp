#include "flair/poly.hpp"

#include <cmath>
#include <cstdlib>

namespace flair::pla {

std::vector<double> polyfit(const std::vector<double>& u, const std::vector<double>& y,
                            int degree) {
    const std::size_t rows = u.size();
    const std::size_t cols = static_cast<std::size_t>(degree) + 1;
    if (rows < cols) throw InvalidParams("polyfit: fewer points than coefficients");

    // Column-major Vandermonde.
    std::vector<double> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        double p = 1.0;
        for (std::size_t j = 0; j < cols; ++j) {
            a[j * rows + i] = p;
            p *= u[i];
        }
    }
    std::vector<double> b = y;

    // Householder QR, applying reflections to b as we go.
    for (std::size_t k = 0; k < cols; ++k) {
        double norm = 0.0;
        for (std::size_t i = k; i < rows; ++i) norm += a[k * rows + i] * a[k * rows + i];
        norm = std::sqrt(norm);
        if (norm == 0.0) throw InvalidParams("polyfit: rank-deficient system");
        if (a[k * rows + k] > 0.0) norm = -norm;

        for (std::size_t i = k; i < rows; ++i) a[k * rows + i] /= norm;
        a[k * rows + k] += 1.0;

        for (std::size_t j = k + 1; j < cols; ++j) {
            double s = 0.0;
            for (std::size_t i = k; i < rows; ++i) s += a[k * rows + i] * a[j * rows + i];
            s = -s / a[k * rows + k];
            for (std::size_t i = k; i < rows; ++i) a[j * rows + i] += s * a[k * rows + i];
        }
        double s = 0.0;
        for (std::size_t i = k; i < rows; ++i) s += a[k * rows + i] * b[i];
        s = -s / a[k * rows + k];
        for (std::size_t i = k; i < rows; ++i) b[i] += s * a[k * rows + i];
        a[k * rows + k] = norm;  // diagonal of R (with flipped sign folded in)
    }

    // Back substitution on R.
    std::vector<double> coeffs(cols);
    for (std::size_t jj = cols; jj-- > 0;) {
        double s = b[jj];
        for (std::size_t j = jj + 1; j < cols; ++j) s -= a[j * rows + jj] * coeffs[j];
        coeffs[jj] = s / a[jj * rows + jj];
    }
    return coeffs;
}

double PolyStore::Piece::value_at(double t) const {
    const double u = (t - t_start) / time_scale;
    double acc = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * u + coeffs[j];
    return acc;
}

PolyStore::PolyStore(Epsilon epsilon, int max_degree)
    : epsilon_(epsilon), max_degree_(max_degree) {
    if (max_degree < 1) throw InvalidParams("max polynomial degree must be >= 1");
}

double PolyStore::tolerance(int degree) const {
    return epsilon_.value() / std::exp2(static_cast<double>(degree) + 1.0);
}

void PolyStore::insert(Sample p) {
    if (!p.finite()) throw NonFiniteSample();
    if (last_ && p.t <= last_->t) throw NonMonotonicTimestamp(p.t, last_->t);
    last_ = p;

    if (!live_) {
        live_ = Piece{p.t, p.t, 1.0, {p.x}, 0.0};
        return;
    }

    if (std::fabs(live_->value_at(p.t) - p.x) <= tolerance(live_->degree())) {
        live_->t_end = p.t;
        return;
    }
    escalate(p);
}

void PolyStore::escalate(Sample p) {
    const Piece old = *live_;
    const double span = p.t - old.t_start;

    for (int degree = old.degree() + 1; degree <= max_degree_; ++degree) {
        // degree points regenerated from the old piece, plus the new
        // sample: degree+1 equations for degree+1 coefficients.
        std::vector<double> u, y;
        u.reserve(static_cast<std::size_t>(degree) + 1);
        y.reserve(static_cast<std::size_t>(degree) + 1);
        for (int i = 0; i < degree; ++i) {
            const double t = (degree == 1)
                                 ? old.t_start
                                 : old.t_start + (old.t_end - old.t_start) * i / (degree - 1);
            u.push_back((t - old.t_start) / span);
            y.push_back(old.value_at(t));
        }
        u.push_back(1.0);
        y.push_back(p.x);

        std::vector<double> coeffs;
        try {
            coeffs = polyfit(u, y, degree);
        } catch (const InvalidParams&) {
            continue;
        }

        Piece candidate{old.t_start, p.t, span, coeffs, 0.0};
        double residual = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            const double t = old.t_start + u[i] * span;
            residual = std::max(residual, std::fabs(candidate.value_at(t) - y[i]));
        }
        if (residual <= tolerance(degree)) {
            candidate.fit_residual = residual;
            live_ = candidate;
            return;
        }
    }

    // Degree cap reached without an acceptable fit: persist and restart.
    pieces_.push_back(old);
    live_ = Piece{p.t, p.t, 1.0, {p.x}, 0.0};
}

double PolyStore::read(double t) const {
    if (pieces_.empty() && !live_) throw EmptyModel();
    const double first_t = pieces_.empty() ? live_->t_start : pieces_.front().t_start;
    if (t < first_t) throw TimestampBeforeHistory(t, first_t);

    if (live_ && t >= live_->t_start) return live_->value_at(t);
    // Sequential scan; a timestamp inside a gap evaluates the piece before
    // the gap, extended.
    const Piece* cover = &pieces_.front();
    for (const Piece& piece : pieces_) {
        if (piece.t_start <= t)
            cover = &piece;
        else
            break;
    }
    return cover->value_at(t);
}

std::uint64_t PolyStore::footprint_64bit() const {
    // Per piece: t_start, t_end, time scale and the coefficients.
    std::uint64_t total = 0;
    for (const Piece& piece : pieces_) total += 3 + piece.coeffs.size();
    if (live_) total += 3 + live_->coeffs.size();
    return total;
}

}  // namespace flair::pla
