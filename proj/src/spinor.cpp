#include "pdmdirac/spinor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pdmdirac/errors.hpp"
#include "pdmdirac/oracle.hpp"
#include "pdmdirac/specfun.hpp"

namespace pdmdirac {

double norm_constant(int n, double nu, double eps) {
    if (n < 0) throw std::invalid_argument("norm_constant: n must be >= 0");
    if (!(nu > 0.0)) throw std::invalid_argument("norm_constant: nu must be > 0");
    if (!(eps > 0.0)) throw std::invalid_argument("norm_constant: eps must be > 0");
    using specfun::log_gamma;
    const double log_n_fact = log_gamma(n + 1.0);
    const double log_norm_sq = log_n_fact - log_gamma(n + 2.0 * nu + 1.0)
                             - std::log(2.0 * n + 2.0 * nu + 1.0);
    return std::exp(0.5 * log_norm_sq + (nu + 1.0) * std::log(2.0 * eps));
}

RadialFunction make_radial_function(const EnergyLevel& level) {
    RadialFunction rf;
    rf.level = level;
    rf.symmetry = level.state.symmetry;
    rf.component = rf.symmetry == Symmetry::Spin ? SpinorComponent::UpperF
                                                 : SpinorComponent::LowerG;
    rf.norm_const = norm_constant(level.state.n, level.diagnostics.nu, level.diagnostics.eps);
    return rf;
}

double eval_primary(const RadialFunction& rf, double r) {
    if (!(r > 0.0)) throw std::domain_error("eval_primary: requires r > 0");
    const double nu = rf.level.diagnostics.nu;
    const double eps = rf.level.diagnostics.eps;
    const int n = rf.level.state.n;
    return rf.norm_const * std::exp(-eps * r) * std::pow(r, nu + 0.5)
         * specfun::laguerre(n, 2.0 * nu, 2.0 * eps * r);
}

double eval_primary_derivative(const RadialFunction& rf, double r) {
    if (!(r > 0.0)) throw std::domain_error("eval_primary_derivative: requires r > 0");
    const double nu = rf.level.diagnostics.nu;
    const double eps = rf.level.diagnostics.eps;
    const int n = rf.level.state.n;
    const double x = 2.0 * eps * r;
    const double envelope = rf.norm_const * std::exp(-eps * r) * std::pow(r, nu + 0.5);
    double value = (-eps + (nu + 0.5) / r) * specfun::laguerre(n, 2.0 * nu, x);
    if (n >= 1) value += 2.0 * eps * specfun::laguerre_derivative(n, 2.0 * nu, x);
    return envelope * value;
}

double quadrature_norm(const RadialFunction& rf, double tol) {
    const double nu = rf.level.diagnostics.nu;
    const double eps = rf.level.diagnostics.eps;
    const int n = rf.level.state.n;

    oracle::ExponentialTail tail;
    tail.rate = 2.0 * eps;
    tail.poly_degree = 2.0 * nu + 1.0 + 2.0 * n;
    // amplitude bound for |primary|^2 from samples of the polynomial factor
    double amp = 1.0;
    for (double rr : {0.5 / eps, 1.0 / eps, 2.0 / eps, 4.0 / eps, 8.0 / eps}) {
        const double f = eval_primary(rf, rr);
        const double envelope = std::exp(tail.poly_degree * std::log(rr) - tail.rate * rr);
        if (envelope > 0.0) amp = std::max(amp, f * f / envelope);
    }
    tail.amplitude = 8.0 * amp;

    return oracle::integrate_semi_infinite(
        [&rf](double r) { const double f = eval_primary(rf, r); return f * f; }, tol, tail);
}

double eval_secondary(const RadialFunction& rf, const ModelParams& params,
                      const StateLabel& state, double r) {
    if (!(r > 0.0)) throw std::domain_error("eval_secondary: requires r > 0");
    const double nu = rf.level.diagnostics.nu;
    const double eps = rf.level.diagnostics.eps;
    const double energy = rf.level.energy;
    const int n = state.n;
    const double kt = state.kappa + params.tensor;
    const double hc = params.hbar_c;

    const double denom = state.symmetry == Symmetry::Spin
                             ? params.m0 + hc * params.b / r + energy - params.c_sym
                             : params.m0 + hc * params.b / r - energy + params.c_sym;
    if (std::abs(denom) < 1e-12)
        throw SingularPoint(r, "eval_secondary: singular denominator at r = " + std::to_string(r));

    const double primary = eval_primary(rf, r);
    const double kt_sign = state.symmetry == Symmetry::Spin ? 1.0 : -1.0;
    double bracket = (-eps + (nu + 0.5) / r + kt_sign * kt / r) * primary;
    if (n >= 1) {
        bracket -= 2.0 * rf.norm_const * eps * std::exp(-eps * r)
                 * std::pow(r, nu + 0.5) * specfun::laguerre(n - 1, 2.0 * nu + 1.0, 2.0 * eps * r);
    }
    return hc * bracket / denom;
}

} // namespace pdmdirac
