#include "gz/spline.hpp"

#include <cmath>

namespace gz {

namespace {

// Tridiagonal solve with constant stencil (1, 4, 1) and modified end
// diagonals d0, dn; rhs overwritten with the solution.
void solve_tridiag(std::vector<double>& rhs, double d0, double dn) {
    const int n = static_cast<int>(rhs.size());
    std::vector<double> c(n, 0.0);
    double beta = d0;
    rhs[0] /= beta;
    for (int i = 1; i < n; ++i) {
        c[i] = 1.0 / beta;
        beta = (i == n - 1 ? dn : 4.0) - c[i];
        rhs[i] = (rhs[i] - rhs[i - 1]) / beta;
    }
    for (int i = n - 2; i >= 0; --i) rhs[i] -= c[i + 1] * rhs[i + 1];
}

}  // namespace

PeriodicSpline::PeriodicSpline(std::vector<double> values) : y_(std::move(values)) {
    const int n = size();
    if (n < 3) throw input_error("PeriodicSpline: need at least 3 nodes");
    h_ = kTwoPi / n;

    // Cyclic system M_{j-1} + 4 M_j + M_{j+1} = 6 * d2y_j / h^2, closed by
    // Sherman-Morrison on the two corner entries.
    std::vector<double> rhs(n);
    for (int j = 0; j < n; ++j) {
        double d2 = y_[(j + 1) % n] - 2.0 * y_[j] + y_[(j + n - 1) % n];
        rhs[j] = 6.0 * d2 / (h_ * h_);
    }
    const double gamma = -4.0;
    std::vector<double> z(n, 0.0);
    z[0] = gamma;
    z[n - 1] = 1.0;
    std::vector<double> yv = rhs;
    solve_tridiag(yv, 4.0 - gamma, 4.0 - 1.0 / gamma);
    solve_tridiag(z, 4.0 - gamma, 4.0 - 1.0 / gamma);
    double num = yv[0] + yv[n - 1] / gamma;
    double den = 1.0 + z[0] + z[n - 1] / gamma;
    m_.resize(n);
    for (int j = 0; j < n; ++j) m_[j] = yv[j] - z[j] * num / den;
}

void PeriodicSpline::locate(double theta, int& j, double& t) const {
    double w = wrap_angle(theta);
    j = static_cast<int>(std::floor(w / h_));
    if (j >= size()) j = size() - 1;
    t = w - j * h_;
}

double PeriodicSpline::operator()(double theta) const {
    int j;
    double t;
    locate(theta, j, t);
    int k = (j + 1) % size();
    double slope = (y_[k] - y_[j]) / h_ - h_ / 6.0 * (2.0 * m_[j] + m_[k]);
    return y_[j] + t * slope + t * t * m_[j] / 2.0 + t * t * t * (m_[k] - m_[j]) / (6.0 * h_);
}

double PeriodicSpline::deriv1(double theta) const {
    int j;
    double t;
    locate(theta, j, t);
    int k = (j + 1) % size();
    double slope = (y_[k] - y_[j]) / h_ - h_ / 6.0 * (2.0 * m_[j] + m_[k]);
    return slope + t * m_[j] + t * t * (m_[k] - m_[j]) / (2.0 * h_);
}

double PeriodicSpline::deriv2(double theta) const {
    int j;
    double t;
    locate(theta, j, t);
    int k = (j + 1) % size();
    return m_[j] + t * (m_[k] - m_[j]) / h_;
}

}  // namespace gz
