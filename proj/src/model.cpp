#include "pdmdirac/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pdmdirac {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// s, p, d, f, g, h, then the standard continuation (no 'j').
constexpr char kSpectroscopic[] = "spdfghiklmnoq";
} // namespace

const char* to_string(Symmetry s) {
    return s == Symmetry::Spin ? "spin" : "pspin";
}

void ModelParams::validate() const {
    if (!(m0 > 0.0)) throw std::invalid_argument("ModelParams: m0 must be > 0");
    if (!(hbar_c > 0.0)) throw std::invalid_argument("ModelParams: hbar_c must be > 0");
}

double b_from_m1(double m1, double hbar_c) {
    if (!(hbar_c > 0.0)) throw std::invalid_argument("b_from_m1: hbar_c must be > 0");
    return m1 / hbar_c;
}

double m1_from_b(double b, double hbar_c) {
    if (!(hbar_c > 0.0)) throw std::invalid_argument("m1_from_b: hbar_c must be > 0");
    return b * hbar_c;
}

StateLabel::StateLabel(int n_, int kappa_, Symmetry sym) : n(n_), kappa(kappa_), symmetry(sym) {
    if (kappa == 0) throw std::invalid_argument("StateLabel: kappa must be nonzero");
    if (n < 0) throw std::invalid_argument("StateLabel: n must be >= 0");
}

std::string Classification::spectroscopic(int n) const {
    return std::to_string(n) + letter + std::to_string(j2) + "/2";
}

Classification classify(int kappa, Symmetry) {
    if (kappa == 0) throw std::invalid_argument("classify: kappa must be nonzero");
    Classification c;
    if (kappa < 0) {
        c.l = -kappa - 1;      // j = l + 1/2, aligned
        c.j2 = 2 * c.l + 1;
        c.l_tilde = -kappa;
    } else {
        c.l = kappa;           // j = l - 1/2, unaligned
        c.j2 = 2 * c.l - 1;
        c.l_tilde = kappa - 1;
    }
    c.letter = c.l < static_cast<int>(sizeof(kSpectroscopic)) - 1 ? kSpectroscopic[c.l] : '?';
    return c;
}

int doublet_partner(int kappa, Symmetry symmetry) {
    if (kappa == 0) throw std::invalid_argument("doublet_partner: kappa must be nonzero");
    return symmetry == Symmetry::Spin ? -kappa - 1 : -kappa + 1;
}

bool EnergyDiagnostics::is_bound() const {
    return nu > 0.0 && eps > 0.0 && -delta_sq > 0.0;
}

double nu_squared(const ModelParams& params, int kappa, Symmetry symmetry) {
    const double k = static_cast<double>(kappa);
    if (symmetry == Symmetry::Spin)
        return (k + params.tensor + 0.5) * (k + params.tensor + 0.5) + params.b * (params.b - params.q);
    return (k + params.tensor - 0.5) * (k + params.tensor - 0.5) + params.b * (params.b + params.q);
}

EnergyDiagnostics diagnostics(const ModelParams& params, const StateLabel& state, double energy) {
    params.validate();
    const double k = static_cast<double>(state.kappa);
    const double kt = k + params.tensor;
    const double hc = params.hbar_c;

    EnergyDiagnostics d;
    if (state.symmetry == Symmetry::Spin) {
        const double w = params.m0 + energy - params.c_sym;
        d.lambda_sq = kt * (kt + 1.0) + params.b * (params.b - params.q);
        d.nu_sq = nu_squared(params, state.kappa, state.symmetry);
        d.delta_sq = -(params.q * w + params.b * (params.c_sym - 2.0 * params.m0)) / hc;
        d.eps_sq = (params.m0 - energy) * w / (hc * hc);
    } else {
        const double w = params.m0 - energy + params.c_sym;
        d.lambda_sq = kt * (kt - 1.0) + params.b * (params.b + params.q);
        d.nu_sq = nu_squared(params, state.kappa, state.symmetry);
        d.delta_sq = -(params.q * w + params.b * (params.c_sym + 2.0 * params.m0)) / hc;
        d.eps_sq = (params.m0 + energy) * w / (hc * hc);
    }
    d.nu = d.nu_sq > 0.0 ? std::sqrt(d.nu_sq) : kNaN;
    d.eps = d.eps_sq > 0.0 ? std::sqrt(d.eps_sq) : kNaN;
    return d;
}

} // namespace pdmdirac
