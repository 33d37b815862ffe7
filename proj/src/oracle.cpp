#include "pdmdirac/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pdmdirac/errors.hpp"

namespace pdmdirac::oracle {

void ShootingConfig::validate() const {
    if (!(r_min > 0.0)) throw std::invalid_argument("ShootingConfig: r_min must be > 0");
    if (grid_points < 1000) throw std::invalid_argument("ShootingConfig: grid_points must be >= 1000");
    if (!(energy_lo < energy_hi)) throw std::invalid_argument("ShootingConfig: energy_lo < energy_hi required");
    if (!(tol > 0.0)) throw std::invalid_argument("ShootingConfig: tol must be > 0");
}

ShootingConfig make_defaults(const ModelParams& params, double energy_lo, double energy_hi) {
    params.validate();
    ShootingConfig cfg;
    cfg.r_min = 1e-6 * params.hbar_c / params.m0;
    cfg.tol = 1e-10 * params.m0;
    cfg.energy_lo = energy_lo;
    cfg.energy_hi = energy_hi;
    return cfg;
}

namespace {

struct LogGrid {
    double x0 = 0.0;
    double h = 0.0;
    int n = 0;
    int match = 0; // index near r = 1/eps
    std::vector<double> r;
};

// One Numerov pass of  u'' = g(x) u  on the log grid; the radial equation
// P'' = W(r) P maps to u'' = (1/4 + r^2 W) u with P = sqrt(r) u.
struct Shot {
    std::vector<double> out; // indices [0 .. match+1]
    std::vector<double> in;  // indices [match-1 .. n-1], stored from match-1
    double mismatch = 0.0;
};

class RadialProblem {
public:
    RadialProblem(const ModelParams& params, const StateLabel& state, const ShootingConfig& cfg)
        : params_(params), state_(state), cfg_(cfg), nu_(0.0) {
        const double nu_sq = nu_squared(params, state.kappa, state.symmetry);
        if (!(nu_sq > 0.0))
            throw NoRealSolution("shoot_eigenvalue: nu^2 <= 0, no normalizable solution");
        nu_ = std::sqrt(nu_sq);
    }

    // eps(E) > 0 is guaranteed inside the open bound-state window.
    double eps_of(double energy) const {
        const EnergyDiagnostics d = diagnostics(params_, state_, energy);
        return d.eps;
    }

    std::pair<double, double> window() const {
        if (state_.symmetry == Symmetry::Spin)
            return {params_.c_sym - params_.m0, params_.m0};
        return {-params_.m0, params_.m0 + params_.c_sym};
    }

    // Grid geometry is frozen once per eigenvalue search so the matching
    // function is smooth in E.
    void freeze_grid(double e_lo, double e_hi) {
        const double eps_ref = std::min({eps_of(e_lo), eps_of(e_hi), eps_of(0.5 * (e_lo + e_hi))});
        const double r_max = cfg_.r_max_factor / eps_ref;
        grid_.n = cfg_.grid_points;
        grid_.x0 = std::log(cfg_.r_min);
        grid_.h = (std::log(r_max) - grid_.x0) / (grid_.n - 1);
        if (!(grid_.h > 0.0))
            throw std::invalid_argument("shoot_eigenvalue: r_max <= r_min, bad grid");
        grid_.r.resize(grid_.n);
        for (int k = 0; k < grid_.n; ++k) grid_.r[k] = std::exp(grid_.x0 + k * grid_.h);
        const double eps_mid = eps_of(0.5 * (e_lo + e_hi));
        const double x_match = std::log(1.0 / eps_mid);
        int m = static_cast<int>(std::lround((x_match - grid_.x0) / grid_.h));
        grid_.match = std::clamp(m, 2, grid_.n - 3);
    }

    Shot shoot(double energy) const {
        const EnergyDiagnostics d = diagnostics(params_, state_, energy);
        const int n = grid_.n;
        const int m = grid_.match;
        const double h2_12 = grid_.h * grid_.h / 12.0;

        auto g = [&](int k) {
            const double r = grid_.r[k];
            return d.nu_sq + d.delta_sq * r + d.eps_sq * r * r;
        };

        Shot s;
        s.out.assign(m + 2, 0.0);
        // regular indicial behavior u ~ r^nu = e^{nu x}; overall scale is
        // arbitrary, so start at 1 to keep everything far from under/overflow
        s.out[0] = 1.0;
        s.out[1] = std::exp(nu_ * grid_.h);
        double tm1 = h2_12 * g(0);
        double t0 = h2_12 * g(1);
        for (int k = 1; k <= m; ++k) {
            const double tp1 = h2_12 * g(k + 1);
            s.out[k + 1] = (2.0 * s.out[k] * (1.0 + 5.0 * t0) - s.out[k - 1] * (1.0 - tm1)) / (1.0 - tp1);
            tm1 = t0;
            t0 = tp1;
        }

        s.in.assign(n - (m - 1), 0.0);
        auto in_at = [&](int k) -> double& { return s.in[k - (m - 1)]; };
        // decaying asymptotics u ~ r^{-1/2} e^{-eps r}, scaled to 1 at r_max
        in_at(n - 1) = 1.0;
        in_at(n - 2) = std::exp(d.eps * (grid_.r[n - 1] - grid_.r[n - 2])) *
                       std::sqrt(grid_.r[n - 1] / grid_.r[n - 2]);
        tm1 = h2_12 * g(n - 1);
        t0 = h2_12 * g(n - 2);
        for (int k = n - 2; k >= m; --k) {
            const double tp1 = h2_12 * g(k - 1);
            in_at(k - 1) = (2.0 * in_at(k) * (1.0 + 5.0 * t0) - in_at(k + 1) * (1.0 - tm1)) / (1.0 - tp1);
            tm1 = t0;
            t0 = tp1;
        }

        const double so = std::max({std::abs(s.out[m - 1]), std::abs(s.out[m]), std::abs(s.out[m + 1])});
        const double si = std::max({std::abs(in_at(m - 1)), std::abs(in_at(m)), std::abs(in_at(m + 1))});
        if (so == 0.0 || si == 0.0) {
            s.mismatch = 0.0;
            return s;
        }
        const double dout = (s.out[m + 1] - s.out[m - 1]) / so;
        const double din = (in_at(m + 1) - in_at(m - 1)) / si;
        s.mismatch = dout * (in_at(m) / si) - din * (s.out[m] / so);
        return s;
    }

    double mismatch(double energy) const { return shoot(energy).mismatch; }

    int count_nodes(double energy) const {
        const Shot s = shoot(energy);
        const int m = grid_.match;
        const double uout_m = s.out[m];
        const double uin_m = s.in[1]; // index m
        const double scale = (uin_m != 0.0) ? uout_m / uin_m : 1.0;

        std::vector<double> glued(grid_.n);
        for (int k = 0; k <= m; ++k) glued[k] = s.out[k];
        for (int k = m + 1; k < grid_.n; ++k) glued[k] = scale * s.in[k - (m - 1)];

        int nodes = 0;
        for (int k = 0; k + 1 < grid_.n; ++k)
            if (glued[k] != 0.0 && glued[k + 1] != 0.0 && glued[k] * glued[k + 1] < 0.0) ++nodes;
        return nodes;
    }

private:
    ModelParams params_;
    StateLabel state_;
    ShootingConfig cfg_;
    double nu_;
    LogGrid grid_;
};

} // namespace

double shoot_eigenvalue(const ModelParams& params, const StateLabel& state, const ShootingConfig& cfg) {
    cfg.validate();
    params.validate();

    RadialProblem problem(params, state, cfg);
    const auto [w_lo, w_hi] = problem.window();
    const double margin = 1e-9 * (w_hi - w_lo);
    const double e_lo = std::max(cfg.energy_lo, w_lo + margin);
    const double e_hi = std::min(cfg.energy_hi, w_hi - margin);
    if (!(e_lo < e_hi))
        throw ShootingError(ShootingError::Kind::NoSignChangeInBracket,
                            "shoot_eigenvalue: energy bracket does not intersect the bound-state window");
    problem.freeze_grid(e_lo, e_hi);

    constexpr int kScan = 64;
    std::vector<double> e(kScan + 1), f(kScan + 1);
    for (int i = 0; i <= kScan; ++i) {
        e[i] = e_lo + (e_hi - e_lo) * i / kScan;
        f[i] = problem.mismatch(e[i]);
    }

    bool any_sign_change = false;
    for (int i = 0; i < kScan; ++i) {
        double candidate;
        if (f[i] == 0.0) {
            candidate = e[i];
        } else if (f[i] * f[i + 1] < 0.0) {
            double a = e[i], b = e[i + 1];
            double fa = f[i];
            while (b - a > cfg.tol) {
                const double mid = 0.5 * (a + b);
                const double fm = problem.mismatch(mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if (fa * fm < 0.0) {
                    b = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
            }
            candidate = 0.5 * (a + b);
        } else {
            continue;
        }
        any_sign_change = true;
        if (problem.count_nodes(candidate) == state.n) return candidate;
    }

    if (!any_sign_change)
        throw ShootingError(ShootingError::Kind::NoSignChangeInBracket,
                            "shoot_eigenvalue: matching function has no sign change in the bracket");
    throw ShootingError(ShootingError::Kind::WrongLevel,
                        "shoot_eigenvalue: no root in the bracket has the requested node count n = " +
                            std::to_string(state.n));
}

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1] (symmetric half listed).
constexpr int kGL = 15;
constexpr double kGLNode[8] = {
    0.0,
    0.2011940939974345,
    0.3941513470775634,
    0.5709721726085388,
    0.7244177313601701,
    0.8482065834104272,
    0.9372733924007060,
    0.9879925180204854,
};
constexpr double kGLWeight[8] = {
    0.2025782419255613,
    0.1984314853271116,
    0.1861610000155622,
    0.1662692058169939,
    0.1395706779261543,
    0.1071592204671719,
    0.0703660474881081,
    0.0307532419961173,
};

double gl15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    double acc = kGLWeight[0] * f(c);
    for (int i = 1; i < 8; ++i)
        acc += kGLWeight[i] * (f(c - hw * kGLNode[i]) + f(c + hw * kGLNode[i]));
    return acc * hw;
}

double adapt(const std::function<double(double)>& f, double a, double b, double tol,
             double whole, int depth, bool& converged) {
    const double c = 0.5 * (a + b);
    const double left = gl15(f, a, c);
    const double right = gl15(f, c, b);
    const double split = left + right;
    if (std::abs(split - whole) <= tol || depth > 40) {
        if (std::abs(split - whole) > tol) converged = false;
        return split;
    }
    return adapt(f, a, c, 0.5 * tol, left, depth + 1, converged) +
           adapt(f, c, b, 0.5 * tol, right, depth + 1, converged);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("integrate: tol must be > 0");
    if (a == b) return 0.0;
    bool converged = true;
    const double result = adapt(f, a, b, tol, gl15(f, a, b), 0, converged);
    if (!converged)
        throw AccuracyNotReached(result, tol,
                                 "integrate: refinement limit reached before the tolerance");
    return result;
}

double integrate_semi_infinite(const std::function<double(double)>& f, double tol,
                               const ExponentialTail& tail) {
    if (!(tail.rate > 0.0)) throw std::invalid_argument("integrate_semi_infinite: tail.rate must be > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("integrate_semi_infinite: tol must be > 0");

    // smallest R with  A R^p e^{-rate R} / (rate - p/R) <= tol/2
    double r_cut = (tail.poly_degree + 5.0) / tail.rate;
    for (int i = 0; i < 400; ++i) {
        const double slope = tail.rate - tail.poly_degree / r_cut;
        if (slope > 0.0) {
            const double bound = std::abs(tail.amplitude) *
                                 std::exp(tail.poly_degree * std::log(r_cut) - tail.rate * r_cut) / slope;
            if (bound <= 0.5 * tol) break;
        }
        r_cut *= 1.3;
        if (i == 399)
            throw AccuracyNotReached(0.0, tol, "integrate_semi_infinite: tail bound did not converge");
    }
    return integrate(f, 0.0, r_cut, 0.5 * tol);
}

} // namespace pdmdirac::oracle
