#include "symmom/sympow.hpp"

#include <cmath>

#include "symmom/combinat.hpp"

namespace symmom {

namespace {

// 2 cos(m theta) for m = 0..d from x = lambda(p) = 2 cos(theta).
std::vector<double> two_cos_multiples(double x, long d) {
    std::vector<double> c(d + 1);
    c[0] = 2.0;
    if (d >= 1)
        c[1] = x;
    for (long m = 2; m <= d; ++m)
        c[m] = x * c[m - 1] - c[m - 2];
    return c;
}

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

std::vector<double> poly_mul_trunc(const std::vector<double>& a, const std::vector<double>& b,
                                   std::size_t len) {
    std::vector<double> r(len, 0.0);
    for (std::size_t i = 0; i < a.size() && i < len; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

std::vector<double> poly_pow_trunc(std::vector<double> base, unsigned long e, std::size_t len) {
    std::vector<double> r(len, 0.0);
    r[0] = 1.0;
    base.resize(std::max(base.size(), len), 0.0);
    while (e > 0) {
        if (e & 1)
            r = poly_mul_trunc(r, base, len);
        base = poly_mul_trunc(base, base, len);
        e >>= 1;
    }
    return r;
}

} // namespace

LocalFactor sym_local_factor(const CoefficientSeries& series, long p, long d) {
    if (d < 0)
        throw OutOfRange("sym_local_factor: d must be >= 0");
    SatakeAngle angle = satake_angle(series, p); // validates p and the bound
    double lam = 2.0 * std::cos(angle.theta);

    LocalFactor factor;
    factor.p = p;
    factor.d = d;
    std::vector<double> poly{1.0};
    auto c = two_cos_multiples(lam, d);
    for (long m = d; m >= 1; m -= 2)
        poly = poly_mul(poly, {1.0, -c[m], 1.0});
    if (d % 2 == 0)
        poly = poly_mul(poly, {1.0, -1.0});
    factor.coeffs = std::move(poly);
    return factor;
}

double sym_eigenvalue(const CoefficientSeries& series, long p, long r, long d) {
    if (r < 0)
        throw OutOfRange("sym_eigenvalue: r must be >= 0");
    LocalFactor factor = sym_local_factor(series, p, d);
    // 1/P(T) = sum_r a_r T^r with a_0 = 1, a_r = -sum_{j>=1} c_j a_{r-j}.
    std::vector<double> a(r + 1, 0.0);
    a[0] = 1.0;
    long deg = static_cast<long>(factor.coeffs.size()) - 1;
    for (long s = 1; s <= r; ++s) {
        double v = 0.0;
        for (long j = 1; j <= std::min(s, deg); ++j)
            v -= factor.coeffs[j] * a[s - j];
        a[s] = v;
    }
    return a[r];
}

SymPowerSeries sym_series(const CoefficientSeries& series, long d, long N) {
    if (N < 1 || N > series.length)
        throw OutOfRange("sym_series: N exceeds base series length");
    SymPowerSeries out;
    out.d = d;
    out.length = N;
    out.values.assign(N + 1, 0.0);
    out.values[1] = 1.0;
    if (N == 1)
        return out;
    auto spf = smallest_prime_factors(N);
    for (long p = 2; p <= N; ++p) {
        if (spf[p] != p)
            continue;
        LocalFactor factor = sym_local_factor(series, p, d);
        long deg = static_cast<long>(factor.coeffs.size()) - 1;
        // fill p, p^2, ... via the recurrence driven by P_p(T)
        std::vector<double> a{1.0};
        for (long q = p; q <= N; q *= p) {
            long s = static_cast<long>(a.size());
            double v = 0.0;
            for (long j = 1; j <= std::min(s, deg); ++j)
                v -= factor.coeffs[j] * a[s - j];
            a.push_back(v);
            out.values[q] = v;
            if (q > N / p)
                break;
        }
    }
    for (long n = 2; n <= N; ++n) {
        long p = spf[n], q = 1, m = n;
        while (m % p == 0) {
            m /= p;
            q *= p;
        }
        if (m > 1)
            out.values[n] = out.values[q] * out.values[m];
    }
    return out;
}

double verify_tensor_identity(const CoefficientSeries& series, long d, long l, long p) {
    SatakeAngle angle = satake_angle(series, p);
    // extended precision: both sides reach 2^{dl} and must cancel to < 1e-9
    long double lam = 2.0L * std::cos(static_cast<long double>(angle.theta));
    // u[i] = lambda_{Sym^i}(p) = U_i(lam/2), Chebyshev second kind
    long top = d * l;
    std::vector<long double> u(top + 1);
    u[0] = 1.0L;
    if (top >= 1)
        u[1] = lam;
    for (long i = 2; i <= top; ++i)
        u[i] = lam * u[i - 1] - u[i - 2];
    long double lhs = 1.0L;
    for (long j = 0; j < l; ++j)
        lhs *= u[d];
    long double rhs = 0.0L;
    for (long i = 0; i <= top; ++i) {
        BigInt k = kostka_recursive(i, d, l);
        if (k != 0)
            rhs += static_cast<long double>(static_cast<double>(k)) * u[i];
    }
    return static_cast<double>(std::abs(lhs - rhs));
}

std::vector<double> verify_local_u_factor(const CoefficientSeries& series, long d, long l,
                                          long p, int order) {
    if (order < 0 || order > 6)
        throw OutOfRange("verify_local_u_factor: order must be in [0,6]");
    std::size_t len = static_cast<std::size_t>(order) + 1;
    // D-side: sum_j lambda_{Sym^d}(p^j)^l T^j
    LocalFactor factor = sym_local_factor(series, p, d);
    long deg = static_cast<long>(factor.coeffs.size()) - 1;
    std::vector<double> a(len, 0.0);
    a[0] = 1.0;
    for (std::size_t s = 1; s < len; ++s) {
        double v = 0.0;
        for (long j = 1; j <= std::min<long>(static_cast<long>(s), deg); ++j)
            v -= factor.coeffs[j] * a[s - j];
        a[s] = v;
    }
    std::vector<double> dside(len, 0.0);
    for (std::size_t j = 0; j < len; ++j)
        dside[j] = std::pow(a[j], static_cast<double>(l));

    // 1/L-side locally: prod_i P_{p,i}(T)^{K_{i,d,l}}
    std::vector<double> lrecip(len, 0.0);
    lrecip[0] = 1.0;
    for (long i = 0; i <= d * l; ++i) {
        BigInt k = kostka_recursive(i, d, l);
        if (k == 0)
            continue;
        LocalFactor pi = sym_local_factor(series, p, i);
        lrecip = poly_mul_trunc(
            lrecip, poly_pow_trunc(pi.coeffs, k.convert_to<unsigned long>(), len), len);
    }
    return poly_mul_trunc(dside, lrecip, len);
}

} // namespace symmom
