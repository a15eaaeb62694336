#include "wilsonq/operators.hpp"

#include <algorithm>
#include <cmath>

#include "wilsonq/errors.hpp"
#include "wilsonq/wilson.hpp"

namespace wilsonq::operators {

BandedMatrix::BandedMatrix(int order, std::vector<int> band_offsets, bool symmetric)
    : order_(order), offsets_(std::move(band_offsets)), symmetric_(symmetric),
      data_(order >= 1 ? static_cast<size_t>(order) * static_cast<size_t>(order) : 0, 0.0) {
    if (order < 1) throw validation_error("BandedMatrix: order must be positive");
    std::sort(offsets_.begin(), offsets_.end());
    offsets_.erase(std::unique(offsets_.begin(), offsets_.end()), offsets_.end());
}

bool BandedMatrix::on_band(int i, int j) const {
    return std::binary_search(offsets_.begin(), offsets_.end(), j - i);
}

double BandedMatrix::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= order_ || j >= order_)
        throw validation_error("BandedMatrix::at: index out of range");
    return data_[static_cast<size_t>(i) * static_cast<size_t>(order_) + static_cast<size_t>(j)];
}

void BandedMatrix::set(int i, int j, double v) {
    if (i < 0 || j < 0 || i >= order_ || j >= order_)
        throw validation_error("BandedMatrix::set: index out of range");
    if (!on_band(i, j))
        throw validation_error("BandedMatrix::set: write outside declared bands");
    data_[static_cast<size_t>(i) * static_cast<size_t>(order_) + static_cast<size_t>(j)] = v;
}

double BandedMatrix::max_abs_diff(const BandedMatrix& other) const {
    if (other.order_ != order_)
        throw validation_error("BandedMatrix::max_abs_diff: order mismatch");
    double worst = 0.0;
    for (size_t k = 0; k < data_.size(); ++k)
        worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
    return worst;
}

BandedMatrix kinetic_matrix(int n_max, double lambda) {
    if (n_max < 1) throw validation_error("kinetic_matrix: order must be positive");
    if (!(lambda > 0.0)) throw validation_error("kinetic_matrix: lambda must be positive");
    BandedMatrix T(n_max, {0, -2, 2}, true);
    double q = lambda * lambda / 4.0;
    for (int n = 0; n < n_max; ++n) {
        double nd = static_cast<double>(n);
        T.set(n, n, q * (2.0 * nd + 1.0));
        if (n + 2 < n_max) {
            double off = -q * std::sqrt((nd + 1.0) * (nd + 2.0));
            T.set(n, n + 2, off);
            T.set(n + 2, n, off);
        }
    }
    return T;
}

BandedMatrix position_squared_matrix(int n_max) {
    if (n_max < 1) throw validation_error("position_squared_matrix: order must be positive");
    BandedMatrix Z(n_max, {0, -2, 2}, true);
    for (int n = 0; n < n_max; ++n) {
        double nd = static_cast<double>(n);
        Z.set(n, n, 0.5 * (2.0 * nd + 1.0));
        if (n + 2 < n_max) {
            double off = 0.5 * std::sqrt((nd + 1.0) * (nd + 2.0));
            Z.set(n, n + 2, off);
            Z.set(n + 2, n, off);
        }
    }
    return Z;
}

VerificationReport kinetic_decomposition_check(int n_max, double lambda) {
    BandedMatrix T = kinetic_matrix(n_max, lambda);
    BandedMatrix Z = position_squared_matrix(n_max);
    double l2 = lambda * lambda;
    double worst = 0.0;
    for (int i = 0; i < n_max; ++i) {
        for (int j : {i - 2, i, i + 2}) {
            if (j < 0 || j >= n_max) continue;
            double diag = (i == j) ? l2 * (static_cast<double>(i) + 0.5) : 0.0;
            double rebuilt = diag - 0.5 * l2 * Z.at(i, j);
            worst = std::max(worst, std::abs(rebuilt - T.at(i, j)));
        }
    }
    VerificationReport r;
    r.name = "kinetic-decomposition";
    r.residual = worst;
    r.tolerance = 1e-12;
    r.passed = worst < r.tolerance;
    return r;
}

namespace {

double hamiltonian_lower_entry(int n, double lambda, double mu, double a) {
    double nd = static_cast<double>(n);
    double den = (nd + mu + a - 1.0) * (nd + mu + a - 1.0) - 0.25;
    if (den == 0.0)
        throw degenerate_denominator_error("hamiltonian_matrix: off-diagonal denominator vanishes");
    double radicand = nd * (nd + 2.0 * mu - 1.0) * (nd + 2.0 * a - 1.0)
                    * (nd + 2.0 * mu + 2.0 * a - 2.0) / den;
    if (radicand < 0.0)
        throw negative_radicand_error("hamiltonian_matrix: negative radicand");
    return -(nd + mu + a - 1.0) * std::sqrt(radicand) / (2.0 * lambda * lambda);
}

}  // namespace

double hamiltonian_upper_entry(int n, double lambda, double mu, double a) {
    double nd = static_cast<double>(n);
    double den = (nd + mu + a) * (nd + mu + a) - 0.25;
    if (den == 0.0)
        throw degenerate_denominator_error("hamiltonian_matrix: off-diagonal denominator vanishes");
    double radicand = (nd + 1.0) * (nd + 2.0 * mu) * (nd + 2.0 * a)
                    * (nd + 2.0 * mu + 2.0 * a - 1.0) / den;
    if (radicand < 0.0)
        throw negative_radicand_error("hamiltonian_matrix: negative radicand");
    return -(nd + mu + a) * std::sqrt(radicand) / (2.0 * lambda * lambda);
}

BandedMatrix hamiltonian_matrix(int n_max, double lambda, double mu, double a) {
    if (n_max < 1) throw validation_error("hamiltonian_matrix: order must be positive");
    if (!(lambda > 0.0)) throw validation_error("hamiltonian_matrix: lambda must be positive");
    BandedMatrix H(n_max, {0, -1, 1}, true);
    double l2 = lambda * lambda;
    for (int n = 0; n < n_max; ++n) {
        double nd = static_cast<double>(n);
        double diag = ((nd + mu + a - 0.5) * (nd + mu + a - 0.5)
                       - (mu - 0.5) * (mu - 0.5) - (a - 0.5) * (a - 0.5) + 0.25) / l2;
        H.set(n, n, diag);
        if (n >= 1) {
            double off = hamiltonian_lower_entry(n, lambda, mu, a);
            H.set(n, n - 1, off);
            H.set(n - 1, n, off);
        }
    }
    return H;
}

BandedMatrix potential_matrix(const BandedMatrix& H, const BandedMatrix& T) {
    if (H.order() != T.order())
        throw validation_error("potential_matrix: order mismatch");
    int N = H.order();
    BandedMatrix V(N, {0, -1, 1, -2, 2}, true);
    for (int i = 0; i < N; ++i) {
        for (int d : {-2, -1, 0, 1, 2}) {
            int j = i + d;
            if (j < 0 || j >= N) continue;
            double h = (std::abs(d) <= 1) ? H.at(i, j) : 0.0;
            double t = (d == 0 || std::abs(d) == 2) ? T.at(i, j) : 0.0;
            V.set(i, j, h - t);
        }
    }
    return V;
}

BandedMatrix wave_operator(const BandedMatrix& H, double E) {
    for (int d : H.band_offsets()) {
        if (d < -1 || d > 1)
            throw validation_error("wave_operator: H must be tridiagonal");
    }
    if (!H.symmetric()) throw validation_error("wave_operator: H must be symmetric");
    int N = H.order();
    BandedMatrix J(N, {0, -1, 1}, true);
    for (int i = 0; i < N; ++i) {
        J.set(i, i, H.at(i, i) - E);
        if (i + 1 < N) {
            J.set(i, i + 1, H.at(i, i + 1));
            J.set(i + 1, i, H.at(i + 1, i));
        }
    }
    return J;
}

double hamiltonian_recursion_diagnostic(int n_max, double lambda, double mu, double a) {
    BandedMatrix H = hamiltonian_matrix(n_max, lambda, mu, a);
    wilson::WilsonParams w(mu, mu, a, a);
    double scale = 2.0 / (lambda * lambda);
    double worst = 0.0;
    for (int n = 0; n < n_max; ++n) {
        worst = std::max(worst, std::abs(H.at(n, n) - scale * wilson::jacobi_alpha(n, w)));
        if (n + 1 < n_max) {
            worst = std::max(worst,
                             std::abs(H.at(n, n + 1) - scale * (-wilson::jacobi_beta(n, w))));
        }
    }
    return worst;
}

}  // namespace wilsonq::operators
