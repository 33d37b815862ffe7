#ifndef PDMDIRAC_SPECTRUM_HPP
#define PDMDIRAC_SPECTRUM_HPP

#include <utility>

#include "pdmdirac/model.hpp"

namespace pdmdirac {

/// Which root of the squared energy equation was selected.
enum class Branch { Upper, Lower };

/// A solved bound-state level. The diagnostics are re-evaluated at the
/// returned energy; `quantization_residual` is
///   | |delta^2|/(2 eps) - (n + nu + 1/2) |
/// and is below 1e-9 for every returned level. Levels with
/// diagnostics.is_bound() == false are formal solutions only: they arise
/// for sign-reversed couplings (e.g. mirror-mapped parameter sets) where
/// the selected root solves the energy equation but the state actually
/// belongs to the opposite symmetry limit with energy -E.
struct EnergyLevel {
    StateLabel state;
    double energy = 0.0;
    EnergyDiagnostics diagnostics;
    Branch branch = Branch::Upper;
    double quantization_residual = 0.0;
};

/// Solve (m0-E)(m0+E-C_s) = [ (q(m0+E-C_s) + b(C_s-2m0)) / (2n+1+2nu) ]^2
/// for the root on the branch continuously connected to E -> +m0 as the
/// couplings vanish (the larger root).
/// Throws NoRealSolution when nu^2 <= 0 and NoBoundState when no admissible
/// root exists (eps^2 <= 0 or outside C_s - m0 < E < m0).
EnergyLevel solve_energy_spin(const ModelParams& params, int n, int kappa);

/// P-spin counterpart: (m0+E)(m0-E+C_ps) = [ (q(m0-E+C_ps) + b(C_ps+2m0)) / (2n+1+2nu~) ]^2,
/// branch connected to E -> -m0 (the smaller root), window -m0 < E < m0 + C_ps.
EnergyLevel solve_energy_pspin(const ModelParams& params, int n, int kappa);

/// Constant-mass closed forms (b = 0 required): same equations with the
/// denominator written as n + kappa + T + 1 (spin, valid for kappa+T+1/2 > 0,
/// otherwise n + 1/2 + |kappa+T+1/2|) and the p-spin analogue n + kappa + T.
/// Agrees with the general solver at b = 0.
EnergyLevel solve_energy_constant_mass(const ModelParams& params, int n, int kappa, Symmetry symmetry);

/// Nonrelativistic limit of the spin-symmetry spectrum at C_s = T = 0,
/// kappa = l: E_nl = -m0 q^2 / (2 (n+l+1)^2) in hbar = c = 1 units.
/// (This is the prefactor obtained by expanding the constant-mass energy
/// equation around E = m0; see README for the discussion.)
double nonrelativistic_limit(double m0, double q, int n, int l);

/// The parameter mapping connecting the two symmetry limits:
///   q -> -q, c_sym -> -c_sym, symmetry toggled,
///   kappa -> kappa - 1 (p-spin -> spin) or kappa + 1 (spin -> p-spin).
/// Energies satisfy E_spin(mapped) = -E_pspin(original); applying the map
/// twice returns the original parameters.
std::pair<ModelParams, StateLabel> mirror_map(const ModelParams& params, const StateLabel& state);

} // namespace pdmdirac

#endif
