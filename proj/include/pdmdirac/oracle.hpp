#ifndef PDMDIRAC_ORACLE_HPP
#define PDMDIRAC_ORACLE_HPP

#include <functional>
#include <stdexcept>
#include <string>

#include "pdmdirac/model.hpp"

namespace pdmdirac::oracle {

/// Shooting-method controls. `make_defaults` fills the radial cutoffs and
/// bisection tolerance from the model scales:
///   r_min = 1e-6 hbar_c / m0,  r_max = r_max_factor / eps,  tol = 1e-10 m0.
/// The grid is uniform in x = ln r.
struct ShootingConfig {
    double r_min = 1e-6;
    double r_max_factor = 30.0;
    int grid_points = 20000;
    double energy_lo = 0.0;
    double energy_hi = 0.0;
    double tol = 1e-10;

    void validate() const;
};

ShootingConfig make_defaults(const ModelParams& params, double energy_lo, double energy_hi);

class ShootingError : public std::runtime_error {
public:
    enum class Kind { NoSignChangeInBracket, WrongLevel };
    ShootingError(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Independent eigenvalue of the effective radial equation
///   P'' = [ lambda^2 / r^2 + delta^2(E) / r + eps^2(E) ] P
/// for the primary component P (F for spin, G for p-spin), with the
/// energy-dependent coefficients re-evaluated self-consistently at every
/// trial energy. Outward/inward Numerov integration on the log-radius grid,
/// logarithmic-derivative matching near r = 1/eps, bisection on the
/// mismatch, and a final check that the matched solution has exactly
/// `state.n` interior nodes.
double shoot_eigenvalue(const ModelParams& params, const StateLabel& state, const ShootingConfig& cfg);

/// Analytic tail model amplitude * r^poly_degree * e^{-rate * r} used to cut
/// off semi-infinite integrals.
struct ExponentialTail {
    double rate = 1.0;
    double poly_degree = 0.0;
    double amplitude = 1.0;
};

/// Adaptive composite 15-point Gauss-Legendre quadrature on [a, b];
/// absolute error below tol. Throws AccuracyNotReached on refinement
/// exhaustion. Endpoints are never evaluated.
double integrate(const std::function<double(double)>& f, double a, double b, double tol);

/// Integral of f over (0, inf): integrates [0, R] adaptively with R chosen
/// so the tail bound of `tail` falls below tol/2.
double integrate_semi_infinite(const std::function<double(double)>& f, double tol,
                               const ExponentialTail& tail);

} // namespace pdmdirac::oracle

#endif
