#ifndef SYMMOM_MOMENTS_HPP
#define SYMMOM_MOMENTS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symmom/quadform.hpp"
#include "symmom/sympow.hpp"

namespace symmom {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class ThetaVariant { plain, bqf_h1, bqf_hgt1 };

/// Error-term exponent, exact rational plus its rounded decimal rendering.
struct ThetaReport {
    long d = 0, l = 0;
    ThetaVariant variant = ThetaVariant::plain;
    Rational theta_exact;
    BigInt k0, k1, k2;   // K_{0,d,l}, K_{1,d,l}, K_{2,d,l}
    BigInt dim_power;    // (d+1)^l

    std::string decimal(int places = 9) const;
};

/// theta_{d,l} = 1 - 1/((d+1)^l/2 - 4K0/21 - K1/3 - 5K2/14).
/// Requires l >= 2, d >= 1, dl > 4 unless unchecked is set.
ThetaReport theta(long d, long l, bool unchecked = false);

/// Binary-quadratic-form variants: 1 - 3/(3(d+1)^l - K0) for class number > 1,
/// 1 - 1/((d+1)^l - 8K0/21 - 2K1/3 - 5K2/7) for class number 1.
ThetaReport theta_bqf(long d, long l, bool class_number_one, bool unchecked = false);

/// Degree K_{0,d,l} - 1 of the main-term polynomial, nullopt when it vanishes.
std::optional<long> main_term_degree(long d, long l);

/// Kahan-compensated sum of lambda_{Sym^d}(n)^l over n <= x.
double moment_sum(const SymPowerSeries& series, long l, long x);

/// sum over lattice points with 0 < Q(n1,n2) <= x of lambda_{Sym^d}(Q(n1,n2))^l,
/// computed as sum_n lambda(n)^l r(n,Q). The origin is excluded.
double bqf_moment_sum(const SymPowerSeries& series, long l, const QuadForm& form, long x);

struct MomentFit {
    long d = 0, l = 0;
    std::vector<double> x_samples;
    std::vector<double> sums;
    std::vector<double> fitted_coeffs; // in powers of log x; empty when K0 = 0
    double residual_exponent = 0.0;    // -inf sentinel for an exact fit
};

/// OLS fit of S(x)/x against a degree-(K0 - 1) polynomial in log x, plus a
/// log-log slope estimate of the residual over the largest sampled decade.
MomentFit fit_main_term(long d, long l, const std::vector<std::pair<double, double>>& samples);

} // namespace symmom

#endif
