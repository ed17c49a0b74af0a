#include "symmom/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symmom/combinat.hpp"

namespace symmom {

std::string ThetaReport::decimal(int places) const {
    // correctly rounded rendering of a rational in (0, 1)
    BigInt num = boost::multiprecision::numerator(theta_exact);
    BigInt den = boost::multiprecision::denominator(theta_exact);
    bool neg = num < 0;
    if (neg)
        num = -num;
    BigInt scale = 1;
    for (int i = 0; i < places; ++i)
        scale *= 10;
    BigInt scaled = (2 * num * scale + den) / (2 * den); // round half up
    BigInt ip = scaled / scale, fp = scaled % scale;
    std::string frac = fp.str();
    frac.insert(frac.begin(), places - frac.size(), '0');
    return (neg ? "-" : "") + ip.str() + "." + frac;
}

namespace {

void check_hypothesis(long d, long l, bool unchecked) {
    if (unchecked)
        return;
    if (l < 2 || d < 1 || d * l <= 4)
        throw HypothesisViolated("theta: requires l >= 2, d >= 1 and dl > 4 (got d=" +
                                 std::to_string(d) + ", l=" + std::to_string(l) + ")");
}

ThetaReport make_report(long d, long l, ThetaVariant variant) {
    ThetaReport r;
    r.d = d;
    r.l = l;
    r.variant = variant;
    r.k0 = kostka_recursive(0, d, l);
    r.k1 = kostka_recursive(1, d, l);
    r.k2 = kostka_recursive(2, d, l);
    r.dim_power = boost::multiprecision::pow(BigInt(d + 1), static_cast<unsigned>(l));
    return r;
}

} // namespace

ThetaReport theta(long d, long l, bool unchecked) {
    check_hypothesis(d, l, unchecked);
    ThetaReport r = make_report(d, l, ThetaVariant::plain);
    Rational den = Rational(r.dim_power, 2) - Rational(4 * r.k0, 21) - Rational(r.k1, 3) -
                   Rational(5 * r.k2, 14);
    r.theta_exact = 1 - 1 / den;
    return r;
}

ThetaReport theta_bqf(long d, long l, bool class_number_one, bool unchecked) {
    check_hypothesis(d, l, unchecked);
    ThetaReport r = make_report(d, l,
                                class_number_one ? ThetaVariant::bqf_h1 : ThetaVariant::bqf_hgt1);
    if (class_number_one) {
        Rational den = Rational(r.dim_power) - Rational(8 * r.k0, 21) - Rational(2 * r.k1, 3) -
                       Rational(5 * r.k2, 7);
        r.theta_exact = 1 - 1 / den;
    } else {
        r.theta_exact = 1 - Rational(3, 3 * r.dim_power - r.k0);
    }
    return r;
}

std::optional<long> main_term_degree(long d, long l) {
    BigInt k0 = kostka_recursive(0, d, l);
    if (k0 == 0)
        return std::nullopt;
    return k0.convert_to<long>() - 1;
}

namespace {

double kahan_sum(const SymPowerSeries& series, long l, long x,
                 const std::vector<long>* weights) {
    double sum = 0.0, comp = 0.0;
    for (long n = 1; n <= x; ++n) {
        double term = std::pow(series.values[n], static_cast<double>(l));
        if (weights) {
            long w = (*weights)[n];
            if (w == 0)
                continue;
            term *= static_cast<double>(w);
        }
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

} // namespace

double moment_sum(const SymPowerSeries& series, long l, long x) {
    if (x < 1 || x > series.length)
        throw OutOfRange("moment_sum: x exceeds series length");
    return kahan_sum(series, l, x, nullptr);
}

double bqf_moment_sum(const SymPowerSeries& series, long l, const QuadForm& form, long x) {
    if (!form.positive_definite())
        throw NotPositiveDefinite("bqf_moment_sum");
    if (x < 1 || x > series.length)
        throw OutOfRange("bqf_moment_sum: x exceeds series length");
    auto counts = representation_counts(form, x);
    return kahan_sum(series, l, x, &counts);
}

namespace {

// least squares on a small Vandermonde-type system via normal equations
std::vector<double> least_squares(const std::vector<double>& ts, const std::vector<double>& ys,
                                  long degree) {
    long m = degree + 1;
    std::vector<std::vector<double>> ata(m, std::vector<double>(m, 0.0));
    std::vector<double> atb(m, 0.0);
    for (std::size_t r = 0; r < ts.size(); ++r) {
        std::vector<double> row(m);
        row[0] = 1.0;
        for (long j = 1; j < m; ++j)
            row[j] = row[j - 1] * ts[r];
        for (long i = 0; i < m; ++i) {
            atb[i] += row[i] * ys[r];
            for (long j = 0; j < m; ++j)
                ata[i][j] += row[i] * row[j];
        }
    }
    // Gaussian elimination with partial pivoting
    for (long col = 0; col < m; ++col) {
        long piv = col;
        for (long r = col + 1; r < m; ++r)
            if (std::abs(ata[r][col]) > std::abs(ata[piv][col]))
                piv = r;
        std::swap(ata[col], ata[piv]);
        std::swap(atb[col], atb[piv]);
        for (long r = 0; r < m; ++r) {
            if (r == col || ata[r][col] == 0.0)
                continue;
            double factor = ata[r][col] / ata[col][col];
            for (long j = col; j < m; ++j)
                ata[r][j] -= factor * ata[col][j];
            atb[r] -= factor * atb[col];
        }
    }
    std::vector<double> coeffs(m);
    for (long i = 0; i < m; ++i)
        coeffs[i] = atb[i] / ata[i][i];
    return coeffs;
}

} // namespace

MomentFit fit_main_term(long d, long l, const std::vector<std::pair<double, double>>& samples) {
    auto degree = main_term_degree(d, l);
    long need = degree ? *degree + 2 : 2;
    if (static_cast<long>(samples.size()) < need)
        throw InsufficientSamples("fit_main_term: need at least " + std::to_string(need) +
                                  " samples");
    MomentFit fit;
    fit.d = d;
    fit.l = l;
    for (auto [x, s] : samples) {
        fit.x_samples.push_back(x);
        fit.sums.push_back(s);
    }
    std::vector<double> residuals(samples.size());
    if (degree) {
        std::vector<double> ts, ys;
        for (auto [x, s] : samples) {
            ts.push_back(std::log(x));
            ys.push_back(s / x);
        }
        fit.fitted_coeffs = least_squares(ts, ys, *degree);
        for (std::size_t i = 0; i < samples.size(); ++i) {
            double pred = 0.0, t = 1.0;
            for (double c : fit.fitted_coeffs) {
                pred += c * t;
                t *= ts[i];
            }
            residuals[i] = fit.sums[i] - fit.x_samples[i] * pred;
        }
    } else {
        // main term vanishes; the whole sum is the residual
        for (std::size_t i = 0; i < samples.size(); ++i)
            residuals[i] = fit.sums[i];
    }

    // slope of log|residual| against log x over the largest sampled decade
    double xmax = *std::max_element(fit.x_samples.begin(), fit.x_samples.end());
    std::vector<double> lx, lr;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (fit.x_samples[i] < xmax / 10.0 - 0.5)
            continue;
        // rounding-level residuals carry no slope information
        if (std::abs(residuals[i]) <= 1e-9 * std::abs(fit.sums[i]))
            continue;
        lx.push_back(std::log(fit.x_samples[i]));
        lr.push_back(std::log(std::abs(residuals[i])));
    }
    if (lx.size() < 2) {
        fit.residual_exponent = -std::numeric_limits<double>::infinity();
        return fit;
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += lr[i];
    }
    mx /= lx.size();
    my /= lx.size();
    double num = 0, den = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        num += (lx[i] - mx) * (lr[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    fit.residual_exponent = den == 0.0 ? -std::numeric_limits<double>::infinity() : num / den;
    return fit;
}

} // namespace symmom
