#ifndef PDMDIRAC_SPECFUN_HPP
#define PDMDIRAC_SPECFUN_HPP

namespace pdmdirac::specfun {

/// ln Gamma(x) for x > 0 (Lanczos approximation, relative error below
/// 1e-13 on [0.5, 200]). Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// Generalized Laguerre polynomial L_n^alpha(x) via the three-term
/// recurrence  k L_k = (2k-1+alpha-x) L_{k-1} - (k-1+alpha) L_{k-2}.
/// Requires alpha > -1. By convention L_{-1} == 0.
double laguerre(int n, double alpha, double x);

/// Terminating confluent hypergeometric series
///   1F1(-n, gamma, s) = sum_{j=0..n} (-1)^j n!/((n-j)! j!) Gamma(gamma)/Gamma(gamma+j) s^j.
/// Requires gamma > 0. Used as an independent cross-check of `laguerre`
/// through  L_n^p(x) = Gamma(n+p+1)/(n! Gamma(p+1)) 1F1(-n, p+1, x).
double hyp1f1_terminating(int n, double gamma, double s);

/// d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x); n >= 1, alpha > -1.
/// Also equals (n L_n^alpha(x) - (n+alpha) L_{n-1}^alpha(x)) / x for x != 0.
double laguerre_derivative(int n, double alpha, double x);

} // namespace pdmdirac::specfun

#endif
