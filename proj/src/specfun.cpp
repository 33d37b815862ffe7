#include "pdmdirac/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace pdmdirac::specfun {

namespace {

// Lanczos coefficients, g = 7, 9 terms (Godfrey/Pugh set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178; // ln(2 pi)/2

double log_gamma_lanczos(double x) {
    // valid for x >= 0.5
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
    const double t = x + kLanczosG - 0.5;
    return kHalfLogTwoPi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

} // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
    if (x < 0.5) return log_gamma_lanczos(x + 1.0) - std::log(x);
    return log_gamma_lanczos(x);
}

double laguerre(int n, double alpha, double x) {
    if (n < 0) throw std::domain_error("laguerre: requires n >= 0");
    if (!(alpha > -1.0)) throw std::domain_error("laguerre: requires alpha > -1");
    if (n == 0) return 1.0;
    double lkm2 = 1.0;             // L_0
    double lkm1 = 1.0 + alpha - x; // L_1
    for (int k = 2; k <= n; ++k) {
        const double lk = ((2.0 * k - 1.0 + alpha - x) * lkm1 - (k - 1.0 + alpha) * lkm2) / k;
        lkm2 = lkm1;
        lkm1 = lk;
    }
    return lkm1;
}

double hyp1f1_terminating(int n, double gamma, double s) {
    if (n < 0) throw std::domain_error("hyp1f1_terminating: requires n >= 0");
    if (!(gamma > 0.0)) throw std::domain_error("hyp1f1_terminating: requires gamma > 0");
    double term = 1.0;
    double sum = 1.0;
    for (int j = 1; j <= n; ++j) {
        term *= -(static_cast<double>(n - j + 1) / j) * s / (gamma + j - 1.0);
        sum += term;
    }
    return sum;
}

double laguerre_derivative(int n, double alpha, double x) {
    if (n < 1) throw std::domain_error("laguerre_derivative: requires n >= 1");
    if (!(alpha > -1.0)) throw std::domain_error("laguerre_derivative: requires alpha > -1");
    return -laguerre(n - 1, alpha + 1.0, x);
}

} // namespace pdmdirac::specfun
