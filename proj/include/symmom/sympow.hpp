#ifndef SYMMOM_SYMPOW_HPP
#define SYMMOM_SYMPOW_HPP

#include <vector>

#include "symmom/eigenform.hpp"

namespace symmom {

/// Local Euler factor P_p(T) of Sym^d f, real coefficients of degree d+1
/// in T = p^{-s}; coeffs[0] = 1, roots on the unit circle.
struct LocalFactor {
    long p = 0;
    long d = 0;
    std::vector<double> coeffs;
};

/// Normalized eigenvalues of the d-th symmetric power lift, 1-based.
struct SymPowerSeries {
    long d = 0;
    long length = 0;
    std::vector<double> values;

    double at(long n) const {
        if (n < 1 || n > length)
            throw OutOfRange("SymPowerSeries: n out of range");
        return values[n];
    }
};

/// P_p(T) assembled from paired quadratic factors (1 - 2cos(m theta) T + T^2)
/// over m = d, d-2, ..., plus (1 - T) when d is even. No complex arithmetic;
/// cos(m theta) comes from the Chebyshev recurrence on lambda(p)/2.
LocalFactor sym_local_factor(const CoefficientSeries& series, long p, long d);

/// lambda_{Sym^d f}(p^r) by the linear recurrence with characteristic
/// polynomial P_p(T).
double sym_eigenvalue(const CoefficientSeries& series, long p, long r, long d);

/// All values n <= N by multiplicativity over a smallest-prime-factor sieve.
SymPowerSeries sym_series(const CoefficientSeries& series, long d, long N);

/// |lambda_{Sym^d}(p)^l - sum_i K_{i,d,l} lambda_{Sym^i}(p)|.
double verify_tensor_identity(const CoefficientSeries& series, long d, long l, long p);

/// Coefficients c_0..c_order of the local U-factor
/// (sum_j lambda_{Sym^d}(p^j)^l T^j) * prod_i P_{p,i}(T)^{K_{i,d,l}}.
/// c_0 = 1 and c_1 = 0 up to rounding.
std::vector<double> verify_local_u_factor(const CoefficientSeries& series, long d, long l,
                                          long p, int order);

} // namespace symmom

#endif
