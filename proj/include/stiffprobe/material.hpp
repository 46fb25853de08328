#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "stiffprobe/errors.hpp"
#include "stiffprobe/mesh.hpp"

namespace stiffprobe {

enum class PlaneMode { plane_stress, plane_strain };

struct LameConstants {
    double mu = 0.0;
    double lambda = 0.0;
};

/// Piecewise-linear table over temperature; strictly increasing abscissae,
/// no extrapolation.
class TemperatureTable {
public:
    TemperatureTable() = default;
    explicit TemperatureTable(std::vector<std::pair<double, double>> rows);

    double operator()(double theta) const;
    /// Exact integral of the piecewise-linear interpolant from a to b.
    double integrate(double a, double b) const;
    bool empty() const { return rows_.empty(); }
    double min_theta() const { return rows_.front().first; }
    double max_theta() const { return rows_.back().first; }

private:
    void require_in_range(double theta) const;
    std::vector<std::pair<double, double>> rows_;
};

/// Temperature-dependent isotropic elasticity. Poisson's ratio is held
/// temperature-independent; only the modulus softens.
class MaterialModel {
public:
    /// Linear softening: E(theta) = E0 * (1 - c * (theta - theta_ref)).
    static MaterialModel linear_softening(double E0, double nu, double softening_c,
                                          double alpha, double theta_ref,
                                          PlaneMode mode = PlaneMode::plane_stress);

    /// Tabulated E(theta) and/or alpha(theta). Empty optionals fall back to
    /// the linear/constant laws given by softening_c / alpha.
    static MaterialModel tabulated(double E0, double nu, double theta_ref,
                                   std::optional<TemperatureTable> youngs_table,
                                   std::optional<TemperatureTable> alpha_table,
                                   double softening_c = 0.0, double alpha = 0.0,
                                   PlaneMode mode = PlaneMode::plane_stress);

    double E0() const { return E0_; }
    double nu() const { return nu_; }
    double theta_ref() const { return theta_ref_; }
    PlaneMode plane_mode() const { return mode_; }

    /// E(theta); throws for out-of-table theta or E(theta) <= 0.
    double youngs_at(double theta) const;

    /// mu = E/(2(1+nu)), lambda = E*nu/((1+nu)(1-2nu)) at E = youngs_at(theta).
    LameConstants lame_at(double theta) const;

    /// Isotropic thermal stress magnitude (3*lambda + 2*mu) * integral of
    /// alpha from theta_ref to theta.
    double thermal_stress_coeff(double theta) const;

    /// Free thermal strain: integral of alpha from theta_ref to theta.
    double thermal_strain_integral(double theta) const;

    /// Voigt constitutive matrix: 1x1 [E] for bars; 3x3 plane stress/strain
    /// for triangles (ordering xx, yy, xy with engineering shear).
    Eigen::MatrixXd constitutive_matrix(double theta, ElementKind kind) const;

private:
    MaterialModel() = default;

    double E0_ = 0.0;
    double nu_ = 0.0;
    double theta_ref_ = 0.0;
    double softening_c_ = 0.0;
    double alpha_const_ = 0.0;
    std::optional<TemperatureTable> youngs_table_;
    std::optional<TemperatureTable> alpha_table_;
    PlaneMode mode_ = PlaneMode::plane_stress;
};

}  // namespace stiffprobe
