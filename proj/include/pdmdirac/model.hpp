#ifndef PDMDIRAC_MODEL_HPP
#define PDMDIRAC_MODEL_HPP

#include <string>

namespace pdmdirac {

/// Which exact symmetry limit of the Dirac Hamiltonian is being solved.
/// Spin symmetry: Delta(r) = V - S = C_s constant, bound states near +m0 c^2.
/// Pseudospin (p-spin): Sigma(r) = V + S = C_ps constant, bound states near -m0 c^2.
enum class Symmetry { Spin, PSpin };

const char* to_string(Symmetry s);

/// Physical inputs of the model:
///   vector Coulomb potential  V(r) = -hbar_c * q / r,
///   mass function             M(r) c^2 = m0 c^2 + hbar_c * b / r,
///   tensor interaction        U(r) = -T / r,
/// plus the symmetry constant (C_s or C_ps depending on the limit in use).
struct ModelParams {
    double m0 = 5.0;       // rest mass energy m0 c^2 (e.g. fm^-1 when hbar = c = 1)
    double b = 0.0;        // dimensionless mass-perturbation constant
    double q = 1.0;        // dimensionless Coulomb coupling
    double c_sym = 0.0;    // symmetry constant: C_s (spin) or C_ps (p-spin)
    double tensor = 0.0;   // dimensionless tensor strength T
    double hbar_c = 1.0;   // unit scale (energy * length)

    void validate() const; // m0 > 0, hbar_c > 0
};

// m1 <-> b conversion at the active unit scale; b = m1 when hbar = c = 1.
double b_from_m1(double m1, double hbar_c);
double m1_from_b(double b, double hbar_c);

/// Bound-state labels (n, kappa) plus the symmetry limit they refer to.
/// n is the radial quantum number appearing in the quantization condition;
/// display conventions of published tables are handled in `reproduce`.
struct StateLabel {
    int n = 0;
    int kappa = -1;
    Symmetry symmetry = Symmetry::Spin;

    StateLabel() = default;
    StateLabel(int n_, int kappa_, Symmetry sym); // throws std::invalid_argument on kappa == 0 or n < 0
};

/// Angular-momentum content derived from kappa:
///   kappa = -(l+1) for j = l+1/2 (aligned,   kappa < 0)
///   kappa =  l     for j = l-1/2 (unaligned, kappa > 0)
/// and the pseudo-orbital momentum with kappa(kappa-1) = l~(l~+1):
///   kappa = -l~   (kappa < 0),   kappa = l~ + 1   (kappa > 0).
struct Classification {
    int l = 0;        // orbital angular momentum
    int j2 = 1;       // 2j (j is half-integer)
    int l_tilde = 0;  // pseudo-orbital angular momentum
    char letter = 's';

    // "<n><letter><2j>/2", e.g. n=1, l=1, j=3/2 -> "1p3/2"
    std::string spectroscopic(int n) const;
};

Classification classify(int kappa, Symmetry symmetry);

/// kappa of the doublet partner: same l for spin (-kappa-1),
/// same l~ for p-spin (-kappa+1). Involution. May return 0 for the
/// partnerless edge states (spin kappa=-1, p-spin kappa=+1).
int doublet_partner(int kappa, Symmetry symmetry);

/// Derived quantities of the effective radial equation at a candidate energy.
/// Spin forms:
///   lambda^2 = (k+T)(k+T+1) + b(b-q)
///   nu^2     = (k+T+1/2)^2 + b(b-q)          (= lambda^2 + 1/4)
///   delta^2  = -(1/hbar_c) [ q(m0+E-C_s) + b(C_s-2 m0) ]
///   eps^2    = (1/hbar_c)^2 (m0-E)(m0+E-C_s)
/// P-spin forms (mapping q->-q, kappa->kappa-1, E->-E, C_s->-C_ps of the above,
/// with delta^2's overall sign fixed so that -delta^2/(2 eps) = n + nu + 1/2
/// holds at bound states):
///   lambda^2 = (k+T)(k+T-1) + b(b+q)
///   nu^2     = (k+T-1/2)^2 + b(b+q)
///   delta^2  = -(1/hbar_c) [ q(m0-E+C_ps) + b(C_ps+2 m0) ]
///   eps^2    = (1/hbar_c)^2 (m0+E)(m0-E+C_ps)
struct EnergyDiagnostics {
    double lambda_sq = 0.0;
    double nu_sq = 0.0;
    double nu = 0.0;       // +sqrt(nu_sq); NaN when nu_sq <= 0
    double delta_sq = 0.0; // signed; bound states have delta_sq < 0
    double eps_sq = 0.0;
    double eps = 0.0;      // +sqrt(eps_sq); NaN when eps_sq <= 0

    // nu > 0, eps > 0, -delta^2 > 0: all three must hold for a true bound state.
    bool is_bound() const;
};

/// Pure evaluation of the diagnostic quantities; never throws. Invalid
/// square roots are reported as NaN in `nu` / `eps` and the caller decides.
EnergyDiagnostics diagnostics(const ModelParams& params, const StateLabel& state, double energy);

// nu^2 alone (cheap, used by solvers before any energy is known).
double nu_squared(const ModelParams& params, int kappa, Symmetry symmetry);

} // namespace pdmdirac

#endif
