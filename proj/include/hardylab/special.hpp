#pragma once

namespace hardylab {

/// Gamma function for x > 0 (Lanczos, g = 7). Throws ParamError otherwise.
double gamma(double x);
double log_gamma(double x);

/// Bessel function of the first kind J_nu(x), nu >= 0, x >= 0.
/// Power series below x = 20, Hankel asymptotic expansion above.
double bessel_j(double nu, double x);
double bessel_j1(double x);

/// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// Kummer 1F1(a; b; z) for z <= 0 and 0 < a < b.
double hyp1f1_negative(double a, double b, double z);

/// Volume of the intersection of two balls of radius r in R^d whose centers
/// are a distance D apart.
double ball_intersection_volume(int d, double r, double D);

/// E|X|^-lambda for X ~ N(a, sigma^2 I_d) with |a| = a_norm and lambda < d.
double gaussian_inverse_moment(int d, double lambda, double a_norm, double sigma);

}  // namespace hardylab
