#include "stiffprobe/material.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace stiffprobe {

TemperatureTable::TemperatureTable(std::vector<std::pair<double, double>> rows)
    : rows_(std::move(rows)) {
    if (rows_.size() < 2) throw ValidationError("temperature table needs at least 2 rows");
    for (size_t i = 0; i + 1 < rows_.size(); ++i)
        if (!(rows_[i].first < rows_[i + 1].first))
            throw ValidationError("temperature table must be strictly increasing in theta");
    for (const auto& [t, v] : rows_)
        if (!std::isfinite(t) || !std::isfinite(v))
            throw ValidationError("temperature table contains non-finite entries");
}

void TemperatureTable::require_in_range(double theta) const {
    if (theta < rows_.front().first || theta > rows_.back().first)
        throw ValidationError("temperature " + std::to_string(theta) +
                              " outside table range [" + std::to_string(rows_.front().first) +
                              ", " + std::to_string(rows_.back().first) + "]");
}

double TemperatureTable::operator()(double theta) const {
    require_in_range(theta);
    auto it = std::upper_bound(rows_.begin(), rows_.end(), theta,
                               [](double t, const auto& r) { return t < r.first; });
    if (it == rows_.begin()) return rows_.front().second;
    if (it == rows_.end()) return rows_.back().second;
    const auto& [t1, v1] = *it;
    const auto& [t0, v0] = *(it - 1);
    const double w = (theta - t0) / (t1 - t0);
    return v0 + w * (v1 - v0);
}

double TemperatureTable::integrate(double a, double b) const {
    if (a > b) return -integrate(b, a);
    require_in_range(a);
    require_in_range(b);
    // trapezoid over table nodes is exact for the piecewise-linear interpolant
    double sum = 0.0;
    double t_prev = a;
    double v_prev = (*this)(a);
    for (const auto& [t, v] : rows_) {
        if (t <= a) continue;
        if (t >= b) break;
        sum += 0.5 * (v_prev + v) * (t - t_prev);
        t_prev = t;
        v_prev = v;
    }
    sum += 0.5 * (v_prev + (*this)(b)) * (b - t_prev);
    return sum;
}

MaterialModel MaterialModel::linear_softening(double E0, double nu, double softening_c,
                                              double alpha, double theta_ref, PlaneMode mode) {
    return tabulated(E0, nu, theta_ref, std::nullopt, std::nullopt, softening_c, alpha, mode);
}

MaterialModel MaterialModel::tabulated(double E0, double nu, double theta_ref,
                                       std::optional<TemperatureTable> youngs_table,
                                       std::optional<TemperatureTable> alpha_table,
                                       double softening_c, double alpha, PlaneMode mode) {
    if (!(E0 > 0.0)) throw ValidationError("E0 must be positive");
    if (!(nu > -1.0 && nu < 0.5)) throw ValidationError("nu must lie in (-1, 0.5)");
    if (!std::isfinite(theta_ref)) throw ValidationError("theta_ref must be finite");
    MaterialModel m;
    m.E0_ = E0;
    m.nu_ = nu;
    m.theta_ref_ = theta_ref;
    m.softening_c_ = softening_c;
    m.alpha_const_ = alpha;
    m.youngs_table_ = std::move(youngs_table);
    m.alpha_table_ = std::move(alpha_table);
    m.mode_ = mode;
    if (m.youngs_table_) {
        for (double t : {m.youngs_table_->min_theta(), m.youngs_table_->max_theta()})
            if (!((*m.youngs_table_)(t) > 0.0))
                throw ValidationError("tabulated E must stay positive");
        if (theta_ref < m.youngs_table_->min_theta() || theta_ref > m.youngs_table_->max_theta())
            throw ValidationError("theta_ref outside the E(theta) table range");
    }
    return m;
}

double MaterialModel::youngs_at(double theta) const {
    double E;
    if (youngs_table_) {
        E = (*youngs_table_)(theta);
    } else {
        E = E0_ * (1.0 - softening_c_ * (theta - theta_ref_));
    }
    if (!(E > 0.0))
        throw ValidationError("E(theta) = " + std::to_string(E) + " is non-positive at theta = " +
                              std::to_string(theta));
    return E;
}

LameConstants MaterialModel::lame_at(double theta) const {
    const double E = youngs_at(theta);
    return {E / (2.0 * (1.0 + nu_)), E * nu_ / ((1.0 + nu_) * (1.0 - 2.0 * nu_))};
}

double MaterialModel::thermal_strain_integral(double theta) const {
    if (alpha_table_) return alpha_table_->integrate(theta_ref_, theta);
    return alpha_const_ * (theta - theta_ref_);
}

double MaterialModel::thermal_stress_coeff(double theta) const {
    const auto [mu, lambda] = lame_at(theta);
    return (3.0 * lambda + 2.0 * mu) * thermal_strain_integral(theta);
}

Eigen::MatrixXd MaterialModel::constitutive_matrix(double theta, ElementKind kind) const {
    const double E = youngs_at(theta);
    if (kind == ElementKind::bar1d) {
        Eigen::MatrixXd C(1, 1);
        C(0, 0) = E;
        return C;
    }
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(3, 3);
    if (mode_ == PlaneMode::plane_stress) {
        const double f = E / (1.0 - nu_ * nu_);
        C(0, 0) = C(1, 1) = f;
        C(0, 1) = C(1, 0) = f * nu_;
        C(2, 2) = f * (1.0 - nu_) / 2.0;
    } else {
        const auto [mu, lambda] = lame_at(theta);
        C(0, 0) = C(1, 1) = lambda + 2.0 * mu;
        C(0, 1) = C(1, 0) = lambda;
        C(2, 2) = mu;
    }
    return C;
}

}  // namespace stiffprobe
