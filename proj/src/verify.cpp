#include "symmom/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "symmom/combinat.hpp"
#include "symmom/moments.hpp"
#include "symmom/quadform.hpp"
#include "symmom/sympow.hpp"

namespace symmom::verify {

namespace {

Check check(std::string name, bool pass, std::string detail = "") {
    return {std::move(name), pass, std::move(detail)};
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

} // namespace

std::vector<Check> suite_combinat() {
    std::vector<Check> out;

    bool oracles = true, parity = true;
    std::string where;
    for (long d = 1; d <= 5 && oracles; ++d)
        for (long l = 1; l <= 5 && oracles; ++l)
            for (long i = -2; i <= d * l + 2; ++i) {
                BigInt a = kostka_closed_form(i, d, l);
                BigInt b = kostka_recursive(i, d, l);
                BigInt c = kostka_generating(i, d, l);
                bool ok = a == b && b == c;
                if (ok && d * l <= 24)
                    ok = a == kostka_tableau(i, d, l);
                bool zero_expected =
                    i < 0 || i > d * l || ((d * l - i) % 2) != 0;
                if (zero_expected && a != 0)
                    parity = false;
                if (!ok) {
                    oracles = false;
                    where = "(i,d,l)=(" + std::to_string(i) + "," + std::to_string(d) + "," +
                            std::to_string(l) + ")";
                    break;
                }
            }
    out.push_back(check("kostka triple-oracle agreement (d,l <= 5)", oracles, where));
    out.push_back(check("kostka parity vanishing", parity));

    std::vector<long> expected{0, 1, 1, 3, 6, 15, 36, 91};
    bool seq = true;
    for (long l = 1; l <= 8; ++l)
        if (kostka_closed_form(0, 2, l) != expected[l - 1])
            seq = false;
    out.push_back(check("K_{0,2,l} sequence for l=1..8", seq));

    bool dims = true;
    for (long d = 1; d <= 6 && dims; ++d)
        for (long l = 1; l <= 6 && dims; ++l) {
            BigInt total = 0;
            for (long i = 0; i <= d * l; ++i)
                total += BigInt(i + 1) * kostka_recursive(i, d, l);
            dims = total == boost::multiprecision::pow(BigInt(d + 1), static_cast<unsigned>(l));
        }
    out.push_back(check("dimension identity sum (i+1) K = (d+1)^l (d,l <= 6)", dims));

    bool cg = true;
    for (long d = 1; d <= 4 && cg; ++d)
        for (long l = 1; l <= 5 && cg; ++l) {
            MultiplicityVector acc{{d, 1}};
            for (long step = 1; step < l; ++step) {
                MultiplicityVector next;
                for (const auto& [i, mult] : acc)
                    for (const auto& [j, one] : clebsch_gordan(i, d))
                        next[j] += mult * one;
                acc = std::move(next);
            }
            cg = acc == tensor_power_multiplicities(d, l);
        }
    out.push_back(check("iterated Clebsch-Gordan matches K-vector (d <= 4, l <= 5)", cg));

    bool deg = true;
    for (long m = 1; m <= 6; ++m)
        if (kostka_recursive(0, 1, 2 * m) != binomial(2 * m, m) - binomial(2 * m, m - 1))
            deg = false;
    out.push_back(check("K_{0,1,2m} = C(2m,m) - C(2m,m-1)", deg));

    bool weyl = true;
    for (long a = 0; a <= 6 && weyl; ++a)
        for (long b = 0; b <= a && weyl; ++b)
            weyl = weyl_dim(Partition{a, b}, 2) == a - b + 1;
    for (long d = 0; d <= 6 && weyl; ++d)
        for (long m = 1; m <= 5 && weyl; ++m)
            weyl = weyl_dim(Partition{d}, m) == binomial(m + d - 1, d);
    weyl = weyl && weyl_dim(Partition{1, 1, 1}, 2) == 0;
    out.push_back(check("weyl_dim two-row and symmetric-power identities", weyl));

    return out;
}

std::vector<Check> suite_eigenform(const CoefficientSeries& delta) {
    std::vector<Check> out;
    bool ok = true;
    std::string detail;
    try {
        validate(delta);
    } catch (const Error& e) {
        ok = false;
        detail = e.what();
    }
    out.push_back(check("delta invariants (multiplicativity, Hecke recursion, Deligne)", ok,
                        detail));

    // a(n) = sigma_11(n) mod 691
    long M = std::min<long>(delta.length, 1000);
    bool cong = delta.has_raw();
    for (long n = 1; n <= M && cong; ++n) {
        long sigma = 0;
        for (long m = 1; m <= n; ++m) {
            if (n % m != 0)
                continue;
            long pw = 1;
            for (int t = 0; t < 11; ++t)
                pw = (pw * m) % 691;
            sigma = (sigma + pw) % 691;
        }
        long a_mod = static_cast<long>(((delta.raw[n] % 691) + 691) % 691);
        cong = a_mod == sigma;
    }
    out.push_back(check("Ramanujan congruence a(n) = sigma_11(n) mod 691 (n <= 1000)", cong));
    return out;
}

std::vector<Check> suite_sympow(const CoefficientSeries& delta) {
    std::vector<Check> out;
    std::vector<long> primes;
    for (long p = 2; p < 1000 && p <= delta.length; ++p)
        if (is_prime(p))
            primes.push_back(p);

    // complex-oracle equivalence: recurrence vs direct sum over Satake monomials
    bool oracle = true;
    double worst = 0.0;
    std::mt19937 rng(20260824);
    std::uniform_real_distribution<double> angle(0.05, 3.09);
    for (int trial = 0; trial < 40 && oracle; ++trial) {
        double th = angle(rng);
        CoefficientSeries fake;
        fake.weight = 12;
        fake.label = "synthetic";
        fake.length = 2;
        fake.lambda = {0.0, 1.0, 2.0 * std::cos(th)};
        for (long d = 0; d <= 6 && oracle; ++d)
            for (long r = 0; r <= 6; ++r) {
                double got = sym_eigenvalue(fake, 2, r, d);
                // complete homogeneous symmetric function of e^{i(d-2t)theta}
                std::complex<double> want = 0.0;
                std::vector<long> expo(r, 0);
                // iterate multisets: t_1 <= ... <= t_r over 0..d
                std::function<void(long, long, std::complex<double>)> rec =
                    [&](long pos, long minv, std::complex<double> acc) {
                        if (pos == r) {
                            want += acc;
                            return;
                        }
                        for (long t = minv; t <= d; ++t)
                            rec(pos + 1, t,
                                acc * std::exp(std::complex<double>(
                                          0.0, (d - 2.0 * t) * th)));
                    };
                rec(0, 0, 1.0);
                double diff = std::abs(got - want.real()) + std::abs(want.imag());
                worst = std::max(worst, diff);
                if (diff > 1e-9)
                    oracle = false;
            }
    }
    out.push_back(check("recurrence matches complex Satake oracle (d,r <= 6)", oracle,
                        "max diff " + fmt(worst)));

    bool cheb = true;
    for (long p : {2L, 3L, 5L, 97L}) {
        if (p > delta.length)
            continue;
        double lam = delta.lambda[p];
        std::vector<double> u(13);
        u[0] = 1.0;
        u[1] = lam;
        for (long i = 2; i <= 12; ++i)
            u[i] = lam * u[i - 1] - u[i - 2];
        for (long d = 0; d <= 12; ++d)
            if (std::abs(sym_eigenvalue(delta, p, 1, d) - u[d]) > 1e-10)
                cheb = false;
    }
    out.push_back(check("sym_eigenvalue(p,1,d) = U_d(lambda/2) (d <= 12)", cheb));

    bool unitary = true;
    for (long p : primes)
        for (long d = 0; d <= 8; ++d)
            if (std::abs(sym_eigenvalue(delta, p, 1, d)) > d + 1 + 1e-9)
                unitary = false;
    out.push_back(check("trace bound |lambda_{Sym^d}(p)| <= d+1", unitary));

    bool tensor = true;
    double tworst = 0.0;
    std::string twhere;
    for (long d = 1; d <= 24 && tensor; ++d)
        for (long l = 1; d * l <= 24; ++l)
            for (long p : primes) {
                double res = verify_tensor_identity(delta, d, l, p);
                if (res > tworst) {
                    tworst = res;
                    twhere = "(d,l,p)=(" + std::to_string(d) + "," + std::to_string(l) + "," +
                             std::to_string(p) + ")";
                }
                if (res > 1e-9) {
                    tensor = false;
                    break;
                }
            }
    out.push_back(check("pointwise decomposition residual < 1e-9 (dl <= 24, p < 1000)", tensor,
                        "max " + fmt(tworst) + " at " + twhere));

    bool ufac = true;
    double uworst = 0.0;
    std::vector<long> firstprimes;
    for (long p = 2; firstprimes.size() < 25 && p <= delta.length; ++p)
        if (is_prime(p))
            firstprimes.push_back(p);
    for (auto [d, l] : std::vector<std::pair<long, long>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}})
        for (long p : firstprimes) {
            auto c = verify_local_u_factor(delta, d, l, p, 3);
            if (std::abs(c[0] - 1.0) > 1e-12)
                ufac = false;
            uworst = std::max(uworst, std::abs(c[1]));
            if (std::abs(c[1]) > 1e-9)
                ufac = false;
        }
    out.push_back(check("local U-factor has c0 = 1, c1 = 0", ufac, "max |c1| " + fmt(uworst)));

    return out;
}

std::vector<Check> suite_quadform(long N) {
    std::vector<Check> out;
    std::mt19937 rng(987654321);

    // reduce: idempotent and invariant under unimodular twists
    bool red = true;
    std::uniform_int_distribution<long> entry(-5, 5);
    for (long D : {-3L, -4L, -20L, -23L, -47L, -71L}) {
        ClassGroup G(D);
        for (const auto& f : G.forms()) {
            if (reduce(f) != f)
                red = false;
            for (int trial = 0; trial < 20; ++trial) {
                long x = entry(rng), y = entry(rng), z = entry(rng), w = entry(rng);
                if (x * w - y * z != 1)
                    continue;
                QuadForm g{f.eval(x, y), 2 * (f.a * x * z + f.c * y * w) + f.b * (x * w + y * z),
                           f.eval(z, w)};
                if (reduce(g) != f)
                    red = false;
            }
        }
    }
    out.push_back(check("reduction is idempotent and class-invariant", red));

    bool laws = true;
    std::string lwhere;
    for (long D = -3; D >= -2000 && laws; --D) {
        long m = ((D % 4) + 4) % 4;
        if (m != 0 && m != 1)
            continue;
        ClassGroup G(D);
        long h = G.h();
        for (int i = 0; i < h && laws; ++i) {
            if (G.compose(0, i) != i)
                laws = false;
            if (G.compose(i, G.inverse(i)) != 0)
                laws = false;
            for (int j = 0; j < h && laws; ++j)
                for (int k = 0; k < h; ++k)
                    if (G.compose(G.compose(i, j), k) != G.compose(i, G.compose(j, k))) {
                        laws = false;
                        break;
                    }
        }
        if (!laws)
            lwhere = "D=" + std::to_string(D);
    }
    out.push_back(check("composition group laws for |D| <= 2000", laws, lwhere));

    std::vector<long> discs{-3, -4, -7, -8, -11, -15, -20, -23, -24};
    long M = std::min<long>(N, 10000);
    bool gauss = true;
    for (long D : discs) {
        ClassGroup G(D);
        std::vector<long> total(M + 1, 0);
        for (const auto& f : G.forms()) {
            auto r = representation_counts(f, M);
            for (long n = 1; n <= M; ++n)
                total[n] += r[n];
        }
        for (long n = 1; n <= M; ++n)
            if (total[n] != G.w() * ideal_count(D, n))
                gauss = false;
    }
    out.push_back(check("sum_c r(n,Q_c) = w_D ideal_count(D,n), n <= " + std::to_string(M),
                        gauss));

    bool circle = true;
    std::string cdetail;
    for (long x : {1000L, 10000L, 100000L}) {
        auto r = representation_counts({1, 0, 1}, x);
        double sum = 0;
        for (long n = 1; n <= x; ++n)
            sum += static_cast<double>(r[n]);
        double lo = M_PI * x - 8.0 * std::sqrt(static_cast<double>(x));
        double hi = M_PI * x + 8.0 * std::sqrt(static_cast<double>(x));
        if (sum < lo || sum > hi)
            circle = false;
        cdetail += "x=" + std::to_string(x) + ":" + fmt(sum) + " ";
    }
    out.push_back(check("Gauss circle: sum r(n) in pi x +- 8 sqrt(x)", circle, cdetail));

    bool chardec = true;
    double cworst = 0.0;
    for (long D : discs) {
        ClassGroup G(D);
        for (const auto& f : G.forms()) {
            double res = verify_character_decomposition(G, f, M);
            cworst = std::max(cworst, res);
            if (res > 1e-9)
                chardec = false;
        }
    }
    out.push_back(check("character decomposition residual < 1e-9, n <= " + std::to_string(M),
                        chardec, "max " + fmt(cworst)));

    bool ortho = true;
    for (long D : {-23L, -47L, -71L, -20L}) {
        ClassGroup G(D);
        long h = G.h();
        for (int c1 = 0; c1 < h; ++c1)
            for (int c2 = 0; c2 < h; ++c2) {
                std::complex<double> s = 0.0;
                for (int x = 0; x < h; ++x)
                    s += G.characters()[c1][x] * std::conj(G.characters()[c2][x]);
                double want = c1 == c2 ? static_cast<double>(h) : 0.0;
                if (std::abs(s - want) > 1e-12 * h)
                    ortho = false;
            }
    }
    out.push_back(check("character orthogonality", ortho));

    return out;
}

std::vector<Check> suite_moments(const CoefficientSeries& delta) {
    std::vector<Check> out;

    std::vector<std::string> table1{"0.918287938", "0.973534972", "0.991304348",
                                    "0.997132910", "0.999051362", "0.999685565"};
    bool t1 = true;
    for (long l = 3; l <= 8; ++l)
        if (theta(2, l).decimal(9) != table1[l - 3])
            t1 = false;
    out.push_back(check("exponent table theta(2,l), l=3..8", t1));

    std::vector<std::string> table2{"0.865814696", "0.916334661", "0.942701228",
                                    "0.958250497", "0.968205905", "0.974970203"};
    bool t2 = true;
    for (long d = 3; d <= 8; ++d)
        if (theta(d, 2).decimal(9) != table2[d - 3])
            t2 = false;
    out.push_back(check("exponent table theta(d,2), d=3..8", t2));

    bool mono = true;
    for (long l = 3; l < 8; ++l)
        if (!(theta(2, l).theta_exact < theta(2, l + 1).theta_exact))
            mono = false;
    for (long d = 3; d < 8; ++d)
        if (!(theta(d, 2).theta_exact < theta(d + 1, 2).theta_exact))
            mono = false;
    out.push_back(check("theta strictly increasing across both tables", mono));

    long N = delta.length;
    long x1 = std::min<long>(N, 10000);

    // d = 0 sums are integer counts; compensated summation must be exact
    SymPowerSeries ones = sym_series(delta, 0, x1);
    QuadForm q{1, 0, 1};
    double bqf = bqf_moment_sum(ones, 1, q, x1);
    auto r = representation_counts(q, x1);
    long rsum = 0;
    for (long n = 1; n <= x1; ++n)
        rsum += r[n];
    bool exact = bqf == static_cast<double>(rsum) &&
                 moment_sum(ones, 1, x1) == static_cast<double>(x1);
    out.push_back(check("d=0 sums match integer enumeration exactly", exact));

    // odd dl: |S(x)|/x should shrink across the sampled decades
    bool shrink = true;
    std::string sdetail;
    if (N >= 10000) {
        long xlo = std::max<long>(100, N / 100), xhi = N;
        for (long l : {3L, 5L}) {
            SymPowerSeries s1 = sym_series(delta, 1, N);
            double a = std::abs(moment_sum(s1, l, xlo)) / xlo;
            double b = std::abs(moment_sum(s1, l, xhi)) / xhi;
            sdetail += "l=" + std::to_string(l) + ": " + fmt(a) + " -> " + fmt(b) + " ";
            if (!(b < a))
                shrink = false;
        }
    }
    out.push_back(check("odd moments: |S(x)|/x decreasing over sampled range", shrink, sdetail));

    // (d,l) = (1,2): positive constant fit, residual exponent < 1
    bool fitok = true;
    std::string fdetail;
    {
        SymPowerSeries s1 = sym_series(delta, 1, N);
        std::vector<std::pair<double, double>> samples;
        double x = std::max<long>(100, N / 100);
        while (x <= static_cast<double>(N) + 0.5) {
            long xi = static_cast<long>(x + 0.5);
            samples.emplace_back(static_cast<double>(xi), moment_sum(s1, 2, xi));
            x *= 1.5;
        }
        auto fit = fit_main_term(1, 2, samples);
        fdetail = "c0=" + fmt(fit.fitted_coeffs.empty() ? 0.0 : fit.fitted_coeffs[0]) +
                  " resid_exp=" + fmt(fit.residual_exponent);
        if (fit.fitted_coeffs.empty() || fit.fitted_coeffs[0] <= 0.0 ||
            fit.residual_exponent >= 1.0)
            fitok = false;
    }
    out.push_back(check("second moment: positive constant fit, residual exponent < 1", fitok,
                        fdetail));

    // synthetic exact fit
    bool synth = true;
    {
        std::vector<std::pair<double, double>> samples;
        for (double x : {100.0, 1000.0, 10000.0, 100000.0})
            samples.emplace_back(x, 3.0 * x);
        auto fit = fit_main_term(1, 2, samples);
        if (std::abs(fit.fitted_coeffs[0] - 3.0) > 1e-9 ||
            fit.residual_exponent != -std::numeric_limits<double>::infinity())
            synth = false;
    }
    out.push_back(check("synthetic S(x) = 3x recovers exact constant fit", synth));

    return out;
}

std::vector<Check> run(const std::string& suite, long N) {
    std::vector<Check> out;
    bool all = suite == "all";
    if (all || suite == "combinat") {
        auto v = suite_combinat();
        out.insert(out.end(), v.begin(), v.end());
    }
    if (all || suite == "eigenform" || suite == "sympow" || suite == "moments") {
        CoefficientSeries delta = delta_coefficients(N);
        if (all || suite == "eigenform") {
            auto v = suite_eigenform(delta);
            out.insert(out.end(), v.begin(), v.end());
        }
        if (all || suite == "sympow") {
            auto v = suite_sympow(delta);
            out.insert(out.end(), v.begin(), v.end());
        }
        if (all || suite == "moments") {
            auto v = suite_moments(delta);
            out.insert(out.end(), v.begin(), v.end());
        }
    }
    if (all || suite == "quadform") {
        auto v = suite_quadform(N);
        out.insert(out.end(), v.begin(), v.end());
    }
    if (out.empty())
        throw OutOfRange("unknown suite: " + suite);
    return out;
}

} // namespace symmom::verify
