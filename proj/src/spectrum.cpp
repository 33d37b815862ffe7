#include "pdmdirac/spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pdmdirac/errors.hpp"

namespace pdmdirac {

namespace {

struct QuadraticRoots {
    double larger = 0.0;
    double smaller = 0.0;
    bool real = false;
    bool degenerate_linear = false;
};

// a x^2 + b x + c = 0, cancellation-free: the smaller-magnitude root is
// recovered from c / (a * other).
QuadraticRoots solve_quadratic(double a, double b, double c) {
    QuadraticRoots out;
    if (std::abs(a) < 1e-14 * (std::abs(b) + std::abs(c))) {
        if (b == 0.0) return out;
        out.larger = out.smaller = -c / b;
        out.real = true;
        out.degenerate_linear = true;
        return out;
    }
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return out;
    const double s = std::sqrt(disc);
    const double qq = -0.5 * (b + (b >= 0.0 ? s : -s));
    double x1 = qq / a;
    double x2 = (qq != 0.0) ? c / qq : -b / (2.0 * a);
    out.larger = std::max(x1, x2);
    out.smaller = std::min(x1, x2);
    out.real = true;
    return out;
}

EnergyLevel solve_energy(const ModelParams& params, int n, int kappa, Symmetry symmetry) {
    params.validate();
    if (kappa == 0) throw std::invalid_argument("solve_energy: kappa must be nonzero");
    if (n < 0) throw std::invalid_argument("solve_energy: n must be >= 0");

    const double nu_sq = nu_squared(params, kappa, symmetry);
    if (!(nu_sq > 0.0))
        throw NoRealSolution("solve_energy: nu^2 = " + std::to_string(nu_sq) +
                             " <= 0 (falling-to-center regime), no real solution");
    const double nu = std::sqrt(nu_sq);
    const double denom = n + 0.5 + nu;
    const double four_d_sq = 4.0 * denom * denom;

    const double m0 = params.m0;
    const double q = params.q;
    const double b = params.b;
    const double cs = params.c_sym;

    // Both symmetry limits square to a quadratic in E; the coefficient
    // structure is the exact mirror image of itself under
    // q -> -q, C -> -C, E -> -E, so the two branches below map onto each
    // other with all roots negated.
    double qa, qb, qc;
    if (symmetry == Symmetry::Spin) {
        const double gamma = q * (m0 - cs) + b * (cs - 2.0 * m0);
        qa = q * q + four_d_sq;
        qb = 2.0 * q * gamma - four_d_sq * cs;
        qc = gamma * gamma - four_d_sq * m0 * (m0 - cs);
    } else {
        const double gamma = q * (m0 + cs) + b * (cs + 2.0 * m0);
        qa = q * q + four_d_sq;
        qb = -2.0 * q * gamma - four_d_sq * cs;
        qc = gamma * gamma - four_d_sq * m0 * (m0 + cs);
    }

    const QuadraticRoots roots = solve_quadratic(qa, qb, qc);
    if (!roots.real)
        throw NoBoundState(NoBoundState::Condition::EpsilonSquaredPositive,
                           "solve_energy: energy equation has no real root");

    // Physical branch: continuously connected to +m0 (spin) / -m0 (p-spin)
    // as the couplings vanish.
    EnergyLevel level;
    level.state = StateLabel(n, kappa, symmetry);
    if (symmetry == Symmetry::Spin) {
        level.energy = roots.larger;
        level.branch = Branch::Upper;
    } else {
        level.energy = roots.smaller;
        level.branch = Branch::Lower;
    }

    const bool in_window = symmetry == Symmetry::Spin
                               ? (cs - m0 < level.energy && level.energy < m0)
                               : (-m0 < level.energy && level.energy < m0 + cs);

    level.diagnostics = diagnostics(params, level.state, level.energy);
    if (!(level.diagnostics.eps_sq > 0.0) || !in_window)
        throw NoBoundState(NoBoundState::Condition::EpsilonSquaredPositive,
                           "solve_energy: selected root E = " + std::to_string(level.energy) +
                               " is outside the bound-state window (eps^2 > 0 fails)");

    level.quantization_residual = std::abs(
        std::abs(level.diagnostics.delta_sq) / (2.0 * level.diagnostics.eps) - denom);
    return level;
}

} // namespace

EnergyLevel solve_energy_spin(const ModelParams& params, int n, int kappa) {
    return solve_energy(params, n, kappa, Symmetry::Spin);
}

EnergyLevel solve_energy_pspin(const ModelParams& params, int n, int kappa) {
    return solve_energy(params, n, kappa, Symmetry::PSpin);
}

EnergyLevel solve_energy_constant_mass(const ModelParams& params, int n, int kappa, Symmetry symmetry) {
    if (params.b != 0.0)
        throw std::invalid_argument("solve_energy_constant_mass: requires b = 0");
    params.validate();
    if (kappa == 0) throw std::invalid_argument("solve_energy_constant_mass: kappa must be nonzero");
    if (n < 0) throw std::invalid_argument("solve_energy_constant_mass: n must be >= 0");

    // Denominator of the constant-mass energy equation: n + kappa + T + 1
    // (spin) and n + kappa + T (p-spin) where positive, else the reflected
    // form from nu = |kappa + T +- 1/2|.
    const double kth = symmetry == Symmetry::Spin ? kappa + params.tensor + 0.5
                                                  : kappa + params.tensor - 0.5;
    double denom;
    if (kth > 0.0)
        denom = symmetry == Symmetry::Spin ? n + kappa + params.tensor + 1.0
                                           : n + kappa + params.tensor;
    else
        denom = n + 0.5 - kth;
    if (!(denom > 0.0))
        throw NoRealSolution("solve_energy_constant_mass: vanishing quantization denominator");

    const double m0 = params.m0;
    const double q = params.q;
    const double cs = params.c_sym;
    const double four_d_sq = 4.0 * denom * denom;

    double qa, qb, qc;
    if (symmetry == Symmetry::Spin) {
        const double gamma = q * (m0 - cs);
        qa = q * q + four_d_sq;
        qb = 2.0 * q * gamma - four_d_sq * cs;
        qc = gamma * gamma - four_d_sq * m0 * (m0 - cs);
    } else {
        const double gamma = q * (m0 + cs);
        qa = q * q + four_d_sq;
        qb = -2.0 * q * gamma - four_d_sq * cs;
        qc = gamma * gamma - four_d_sq * m0 * (m0 + cs);
    }

    const QuadraticRoots roots = solve_quadratic(qa, qb, qc);
    if (!roots.real)
        throw NoBoundState(NoBoundState::Condition::EpsilonSquaredPositive,
                           "solve_energy_constant_mass: energy equation has no real root");

    EnergyLevel level;
    level.state = StateLabel(n, kappa, symmetry);
    if (symmetry == Symmetry::Spin) {
        level.energy = roots.larger;
        level.branch = Branch::Upper;
    } else {
        level.energy = roots.smaller;
        level.branch = Branch::Lower;
    }

    const bool in_window = symmetry == Symmetry::Spin
                               ? (cs - m0 < level.energy && level.energy < m0)
                               : (-m0 < level.energy && level.energy < m0 + cs);
    level.diagnostics = diagnostics(params, level.state, level.energy);
    if (!(level.diagnostics.eps_sq > 0.0) || !in_window)
        throw NoBoundState(NoBoundState::Condition::EpsilonSquaredPositive,
                           "solve_energy_constant_mass: selected root is outside the bound-state window");

    level.quantization_residual = std::abs(
        std::abs(level.diagnostics.delta_sq) / (2.0 * level.diagnostics.eps) - denom);
    return level;
}

double nonrelativistic_limit(double m0, double q, int n, int l) {
    if (!(m0 > 0.0)) throw std::invalid_argument("nonrelativistic_limit: m0 must be > 0");
    if (n < 0 || l < 0) throw std::invalid_argument("nonrelativistic_limit: n, l must be >= 0");
    const double big_n = n + l + 1;
    return -m0 * q * q / (2.0 * big_n * big_n);
}

std::pair<ModelParams, StateLabel> mirror_map(const ModelParams& params, const StateLabel& state) {
    ModelParams mapped = params;
    mapped.q = -params.q;
    mapped.c_sym = -params.c_sym;
    const bool to_spin = state.symmetry == Symmetry::PSpin;
    const int mapped_kappa = to_spin ? state.kappa - 1 : state.kappa + 1;
    return {mapped, StateLabel(state.n, mapped_kappa, to_spin ? Symmetry::Spin : Symmetry::PSpin)};
}

} // namespace pdmdirac
