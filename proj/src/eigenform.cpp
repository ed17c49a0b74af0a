#include "symmom/eigenform.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace symmom {

std::string to_string(Int128 v) {
    if (v == 0)
        return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg)
        s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

Int128 parse_int128(const std::string& s) {
    if (s.empty())
        throw FormatError("empty integer field");
    std::size_t pos = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size())
        throw FormatError("bad integer: " + s);
    Int128 v = 0;
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9')
            throw FormatError("bad integer: " + s);
        v = v * 10 + (s[pos] - '0');
    }
    return neg ? -v : v;
}

std::vector<int32_t> smallest_prime_factors(long N) {
    std::vector<int32_t> spf(N + 1, 0);
    for (long i = 2; i <= N; ++i) {
        if (spf[i] == 0) {
            for (long j = i; j <= N; j += i)
                if (spf[j] == 0)
                    spf[j] = static_cast<int32_t>(i);
        }
    }
    return spf;
}

bool is_prime(long n) {
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

namespace {
std::atomic<unsigned> g_thread_cap{0};
} // namespace

void set_thread_cap(unsigned threads) { g_thread_cap.store(threads); }

unsigned thread_cap() {
    unsigned cap = g_thread_cap.load();
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    return cap == 0 ? hw : std::min(cap, hw);
}

namespace {

// eta(q)^3 = sum_k (-1)^k (2k+1) q^{k(k+1)/2}, truncated below length.
std::vector<std::pair<long, long>> eta3_sparse(long length) {
    std::vector<std::pair<long, long>> terms;
    for (long k = 0;; ++k) {
        long e = k * (k + 1) / 2;
        if (e >= length)
            break;
        terms.emplace_back(e, (k % 2 == 0) ? (2 * k + 1) : -(2 * k + 1));
    }
    return terms;
}

// out = dense * sparse, truncated to dense.size(), parallel over output blocks.
template <typename In, typename Out>
std::vector<Out> sparse_multiply(const std::vector<In>& dense,
                                 const std::vector<std::pair<long, long>>& sparse) {
    long M = static_cast<long>(dense.size());
    std::vector<Out> out(M, 0);
    unsigned nthreads = thread_cap();
    if (M < 1 << 14)
        nthreads = 1;
    auto work = [&](long lo, long hi) {
        for (auto [e, c] : sparse) {
            long start = std::max(e, lo);
            for (long n = start; n < hi; ++n)
                out[n] += static_cast<Out>(dense[n - e]) * c;
        }
    };
    if (nthreads == 1) {
        work(0, M);
    } else {
        std::vector<std::thread> threads;
        long chunk = (M + nthreads - 1) / nthreads;
        for (unsigned t = 0; t < nthreads; ++t) {
            long lo = t * chunk, hi = std::min(M, lo + chunk);
            if (lo < hi)
                threads.emplace_back(work, lo, hi);
        }
        for (auto& th : threads)
            th.join();
    }
    return out;
}

constexpr long kExactBound = 2'000'000; // a(n) stays well inside int128

} // namespace

CoefficientSeries delta_coefficients(long N) {
    if (N < 1)
        throw OutOfRange("delta_coefficients: N must be >= 1");
    if (N > kExactBound)
        throw ExactRangeExceeded("delta_coefficients: N = " + std::to_string(N) +
                                 " exceeds the exact-arithmetic bound " +
                                 std::to_string(kExactBound));
    // Delta(q)/q = (eta^3)^8 as a series in q; a(n) = coefficient n-1.
    auto s3 = eta3_sparse(N);
    // eta^6: sparse x sparse
    std::vector<int64_t> dense(N, 0);
    for (auto [e1, c1] : s3)
        for (auto [e2, c2] : s3) {
            long e = e1 + e2;
            if (e >= N)
                break;
            dense[e] += c1 * c2;
        }
    dense = sparse_multiply<int64_t, int64_t>(dense, s3);       // eta^9
    dense = sparse_multiply<int64_t, int64_t>(dense, s3);       // eta^12
    auto wide = sparse_multiply<int64_t, Int128>(dense, s3);    // eta^15
    wide = sparse_multiply<Int128, Int128>(wide, s3);           // eta^18
    wide = sparse_multiply<Int128, Int128>(wide, s3);           // eta^21
    wide = sparse_multiply<Int128, Int128>(wide, s3);           // eta^24

    CoefficientSeries series;
    series.weight = 12;
    series.label = "delta";
    series.length = N;
    series.raw.assign(N + 1, 0);
    series.lambda.assign(N + 1, 0.0);
    for (long n = 1; n <= N; ++n) {
        series.raw[n] = wide[n - 1];
        series.lambda[n] =
            static_cast<double>(static_cast<long double>(wide[n - 1]) /
                                powl(static_cast<long double>(n), 5.5L));
    }
    return series;
}

namespace {

void fail(const std::string& check, const std::string& where) {
    throw InvariantViolation("CoefficientSeries invariant '" + check + "' failed at " + where);
}

} // namespace

void validate(const CoefficientSeries& series) {
    long N = series.length;
    if (N < 1 || static_cast<long>(series.lambda.size()) != N + 1)
        throw InvariantViolation("CoefficientSeries: bad length");
    constexpr double tol = 1e-9;
    if (std::abs(series.lambda[1] - 1.0) > tol)
        fail("normalization lambda(1)=1", "n=1");
    if (series.has_raw() && series.raw[1] != 1)
        fail("normalization a(1)=1", "n=1");

    auto spf = smallest_prime_factors(N);
    // Deligne bound at primes.
    for (long p = 2; p <= N; ++p) {
        if (spf[p] != p)
            continue;
        if (std::abs(series.lambda[p]) > 2.0 + tol)
            fail("Deligne bound", "p=" + std::to_string(p));
    }
    // Hecke recursion at prime powers: a(p^{r+1}) = a(p) a(p^r) - p^{k-1} a(p^{r-1}).
    for (long p = 2; p * p <= N; ++p) {
        if (spf[p] != p)
            continue;
        if (series.has_raw()) {
            Int128 pk = 1;
            for (int t = 0; t < series.weight - 1; ++t)
                pk *= p;
            Int128 prev = 1, cur = series.raw[p];
            for (long q = p; q * p <= N; q *= p) {
                Int128 next = series.raw[p] * cur - pk * prev;
                if (next != series.raw[q * p])
                    fail("Hecke recursion", "p=" + std::to_string(p) +
                                                " r=" + std::to_string(q * p));
                prev = cur;
                cur = next;
            }
        } else {
            double prev = 1, cur = series.lambda[p];
            for (long q = p; q * p <= N; q *= p) {
                double next = series.lambda[p] * cur - prev;
                if (std::abs(next - series.lambda[q * p]) > tol)
                    fail("Hecke recursion", "p=" + std::to_string(p) +
                                                " r=" + std::to_string(q * p));
                prev = cur;
                cur = next;
            }
        }
    }
    // Multiplicativity: regenerate each value from its prime-power pieces.
    for (long n = 2; n <= N; ++n) {
        long p = spf[n], q = 1, m = n;
        while (m % p == 0) {
            m /= p;
            q *= p;
        }
        if (m == 1)
            continue; // prime power, covered above
        if (series.has_raw()) {
            if (series.raw[n] != series.raw[q] * series.raw[m])
                fail("multiplicativity", "n=" + std::to_string(n));
        } else {
            if (std::abs(series.lambda[n] - series.lambda[q] * series.lambda[m]) > tol)
                fail("multiplicativity", "n=" + std::to_string(n));
        }
    }
}

void save_coefficients(const CoefficientSeries& series, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw FormatError("cannot open " + path.string() + " for writing");
    out << "n,a,lambda\n";
    char buf[64];
    for (long n = 1; n <= series.length; ++n) {
        out << n << ',';
        if (series.has_raw())
            out << to_string(series.raw[n]);
        std::snprintf(buf, sizeof buf, "%.17g", series.lambda[n]);
        out << ',' << buf << '\n';
    }
}

CoefficientSeries load_coefficients(const std::filesystem::path& path, int weight) {
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || line.rfind("n,a,lambda", 0) != 0)
        throw FormatError(path.string() + ": expected header 'n,a,lambda'");

    CoefficientSeries series;
    series.weight = weight;
    series.label = path.stem().string();
    series.raw.push_back(0);
    series.lambda.push_back(0.0);
    bool have_raw = true;
    long n = 0;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ss(line);
        std::string f_n, f_a, f_l;
        if (!std::getline(ss, f_n, ',') || !std::getline(ss, f_a, ',') ||
            !std::getline(ss, f_l))
            throw FormatError(path.string() + ": malformed row '" + line + "'");
        ++n;
        if (std::atol(f_n.c_str()) != n)
            throw FormatError(path.string() + ": rows must be contiguous from n=1");
        if (f_a.empty())
            have_raw = false;
        else
            series.raw.push_back(parse_int128(f_a));
        series.lambda.push_back(std::strtod(f_l.c_str(), nullptr));
    }
    if (n == 0)
        throw FormatError(path.string() + ": no data rows");
    if (!have_raw)
        series.raw.clear();
    series.length = n;
    validate(series);
    return series;
}

SatakeAngle satake_angle(const CoefficientSeries& series, long p) {
    if (p < 2 || p > series.length)
        throw OutOfRange("satake_angle: p out of range");
    if (!is_prime(p))
        throw OutOfRange("satake_angle: p is not prime");
    double lam = series.lambda[p];
    if (std::abs(lam) > 2.0 + 1e-9)
        throw OutOfRange("satake_angle: |lambda(p)| > 2 at p=" + std::to_string(p));
    double x = std::clamp(lam / 2.0, -1.0, 1.0);
    SatakeAngle angle;
    angle.p = p;
    angle.theta = std::acos(x);
    angle.degenerate = std::abs(std::abs(lam) - 2.0) < 1e-12;
    return angle;
}

} // namespace symmom
