#ifndef PDMDIRAC_SPINOR_HPP
#define PDMDIRAC_SPINOR_HPP

#include "pdmdirac/model.hpp"
#include "pdmdirac/spectrum.hpp"

namespace pdmdirac {

enum class SpinorComponent { UpperF, LowerG };

/// Closed-form evaluator for the radial spinor component that carries the
/// normalization in the given symmetry limit: F (spin) or G (p-spin),
///   primary(r) = N e^{-eps r} r^{nu+1/2} L_n^{2nu}(2 eps r),
///   N = (2 eps)^{nu+1} sqrt( n! / (Gamma(n+2nu+1) (2n+2nu+1)) ).
struct RadialFunction {
    EnergyLevel level;
    double norm_const = 0.0;
    SpinorComponent component = SpinorComponent::UpperF;
    Symmetry symmetry = Symmetry::Spin;
};

/// Normalization constant, evaluated in log space so Gamma(n+2nu+1) never
/// overflows. Requires nu > 0 and eps > 0.
double norm_constant(int n, double nu, double eps);

/// Builds the evaluator for the primary component of `level`.
RadialFunction make_radial_function(const EnergyLevel& level);

/// Primary component at r > 0.
double eval_primary(const RadialFunction& rf, double r);

/// d(primary)/dr at r > 0, by the product rule with the analytic Laguerre
/// derivative (no finite differences).
double eval_primary_derivative(const RadialFunction& rf, double r);

/// Adaptive quadrature of the primary component's squared norm over
/// (0, inf); equals 1 up to the integration tolerance for every solved level.
double quadrature_norm(const RadialFunction& rf, double tol);

/// The other spinor component from the first-order Dirac relation:
///   spin:   G = hbar_c [ (-eps + (nu+1/2)/r + (kappa+T)/r) F
///                        - 2 N eps e^{-eps r} r^{nu+1/2} L_{n-1}^{2nu+1}(2 eps r) ]
///               / ( m0 + hbar_c b / r + E - C_s ),
///   p-spin: same with the (kappa+T)/r sign flipped and denominator
///           m0 + hbar_c b / r - E + C_ps.
/// L_{-1} == 0, so for n = 0 only the first bracket term survives.
/// Throws SingularPoint when the denominator is within 1e-12 of zero.
double eval_secondary(const RadialFunction& rf, const ModelParams& params,
                      const StateLabel& state, double r);

} // namespace pdmdirac

#endif
