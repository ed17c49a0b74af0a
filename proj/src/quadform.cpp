#include "symmom/quadform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace symmom {

namespace {

long isqrt_floor(long n) {
    if (n < 0)
        return -1;
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

// positive remainder
long pmod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long xgcd(long a, long b, long& x, long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return std::abs(a);
    }
    long x1, y1;
    long g = xgcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

long mod_inverse(long a, long m) {
    long x, y;
    long g = xgcd(pmod(a, m), m, x, y);
    if (g != 1)
        throw Error("mod_inverse: not invertible");
    return pmod(x, m);
}

} // namespace

QuadForm reduce(QuadForm f) {
    if (!f.positive_definite())
        throw NotPositiveDefinite("reduce: form is not positive definite");
    long D = f.disc();
    for (;;) {
        // translate b into (-a, a]
        long b = pmod(f.b + f.a, 2 * f.a) - f.a;
        long c = (b * b - D) / (4 * f.a);
        f.b = b;
        f.c = c;
        if (f.a > f.c) {
            f = {f.c, -f.b, f.a};
            continue;
        }
        break;
    }
    if (f.b < 0 && (f.a == f.c || f.b == -f.a))
        f.b = -f.b;
    return f;
}

bool is_reduced(const QuadForm& f) {
    if (!(std::abs(f.b) <= f.a && f.a <= f.c))
        return false;
    if (f.b < 0 && (std::abs(f.b) == f.a || f.a == f.c))
        return false;
    return true;
}

int kronecker(long a, long n) {
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0)
            sign = -sign;
    }
    // (a|2) factor for even n
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0)
            return 0;
        long am8 = pmod(a, 8);
        if (am8 == 3 || am8 == 5)
            sign = -sign;
    }
    a = pmod(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5)
                sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            sign = -sign;
        a = a % n;
    }
    return n == 1 ? sign : 0;
}

bool is_fundamental_discriminant(long D) {
    if (D >= 0 || (pmod(D, 4) != 0 && pmod(D, 4) != 1))
        return false;
    auto squarefree = [](long n) {
        n = std::abs(n);
        for (long d = 2; d * d <= n; ++d)
            if (n % (d * d) == 0)
                return false;
        return true;
    };
    if (pmod(D, 4) == 1)
        return squarefree(D);
    long m = D / 4;
    long m4 = pmod(m, 4);
    return (m4 == 2 || m4 == 3) && squarefree(m);
}

ClassGroup::ClassGroup(long D) : D_(D) {
    if (D >= 0 || (pmod(D, 4) != 0 && pmod(D, 4) != 1))
        throw InvalidDiscriminant("ClassGroup: D must be negative and 0 or 1 mod 4");
    w_ = D == -3 ? 6 : (D == -4 ? 4 : 2);

    // reduced primitive forms: |b| <= a <= c, b >= 0 when |b| = a or a = c
    long amax = isqrt_floor(-D / 3);
    std::vector<QuadForm> forms;
    for (long a = 1; a <= amax; ++a) {
        for (long b = -a; b <= a; ++b) {
            if (pmod(b, 2) != pmod(D, 2))
                continue;
            long num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            long c = num / (4 * a);
            if (c < a)
                continue;
            if (b < 0 && (b == -a || a == c))
                continue;
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1)
                continue;
            forms.push_back({a, b, c});
        }
    }
    long b0 = pmod(D, 2);
    QuadForm principal{1, b0, (b0 * b0 - D) / 4};
    std::sort(forms.begin(), forms.end(), [](const QuadForm& x, const QuadForm& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    auto it = std::find(forms.begin(), forms.end(), principal);
    std::rotate(forms.begin(), it, it + 1);
    forms_ = std::move(forms);

    build_composition();
    build_structure();
}

namespace {

// Dirichlet composition via united forms: move f2 to an equivalent form whose
// leading coefficient is coprime to f1.a, align middle coefficients by CRT.
QuadForm compose_forms(const QuadForm& f1, const QuadForm& f2, long D) {
    long a1 = f1.a;
    long x = 0, y = 0, m = 0;
    bool found = false;
    for (long s = 1; !found; ++s) {
        for (long xx = -s; xx <= s && !found; ++xx) {
            for (long yy = -s; yy <= s && !found; ++yy) {
                if (std::max(std::abs(xx), std::abs(yy)) != s)
                    continue;
                if (std::gcd(std::abs(xx), std::abs(yy)) != 1)
                    continue;
                long v = f2.eval(xx, yy);
                if (v > 0 && std::gcd(v, a1) == 1) {
                    x = xx;
                    y = yy;
                    m = v;
                    found = true;
                }
            }
        }
        if (s > 64)
            throw Error("compose_forms: no coprime representation found");
    }
    // extend (x, y) to a unimodular matrix [[x, p], [y, q]]
    long q, p;
    xgcd(x, y, q, p);
    p = -p; // x*q - y*p = 1
    long a2 = m;
    long b2 = 2 * (f2.a * x * p + f2.c * y * q) + f2.b * (x * q + y * p);

    // B = b1 + 2 a1 t with a1 t = (b2 - b1)/2 (mod a2)
    long B;
    if (a2 == 1) {
        B = f1.b;
    } else {
        long rhs = pmod((b2 - f1.b) / 2, a2);
        long t = (mod_inverse(a1, a2) * rhs) % a2;
        B = f1.b + 2 * a1 * t;
    }
    long A = a1 * a2;
    B = pmod(B, 2 * A);
    long C = (B * B - D) / (4 * A);
    return reduce({A, B, C});
}

} // namespace

void ClassGroup::build_composition() {
    long h = static_cast<long>(forms_.size());
    table_.assign(h, std::vector<int>(h, 0));
    auto index_of = [&](const QuadForm& f) {
        auto it = std::find(forms_.begin(), forms_.end(), f);
        if (it == forms_.end())
            throw Error("composition left the reduced-form set");
        return static_cast<int>(it - forms_.begin());
    };
    for (long i = 0; i < h; ++i)
        for (long j = i; j < h; ++j) {
            int k = index_of(compose_forms(forms_[i], forms_[j], D_));
            table_[i][j] = k;
            table_[j][i] = k;
        }
}

int ClassGroup::inverse(int i) const {
    const QuadForm& f = forms_[i];
    return class_index({f.a, -f.b, f.c});
}

int ClassGroup::class_index(const QuadForm& form) const {
    if (form.disc() != D_)
        throw InvalidDiscriminant("class_index: discriminant mismatch");
    QuadForm r = reduce(form);
    auto it = std::find(forms_.begin(), forms_.end(), r);
    if (it == forms_.end())
        throw InvalidDiscriminant("class_index: form is not primitive");
    return static_cast<int>(it - forms_.begin());
}

namespace {

// group on 0..n-1 with identity 0; label[i] tracks parent-level element ids
struct SmallGroup {
    std::vector<int> label;
    std::vector<std::vector<int>> mul;

    int size() const { return static_cast<int>(label.size()); }
    long order_of(int g) const {
        long n = 1;
        int x = g;
        while (x != 0) {
            x = mul[x][g];
            ++n;
        }
        return n;
    }
    int pow(int g, long e) const {
        int r = 0;
        for (long i = 0; i < e; ++i)
            r = mul[r][g];
        return r;
    }
};

// basis of an abelian group: list of (element, order) whose cyclic subgroups
// give an internal direct sum
std::vector<std::pair<int, long>> decompose(const SmallGroup& G) {
    if (G.size() == 1)
        return {};
    int g = 1;
    long n = G.order_of(1);
    for (int x = 2; x < G.size(); ++x) {
        long o = G.order_of(x);
        if (o > n) {
            n = o;
            g = x;
        }
    }
    // cosets of <g>
    std::vector<int> cyc;
    for (int x = g;; x = G.mul[x][g]) {
        cyc.push_back(x);
        if (x == 0)
            break;
    }
    std::vector<int> coset(G.size(), -1);
    std::vector<int> reps;
    for (int x = 0; x < G.size(); ++x) {
        if (coset[x] != -1)
            continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int c : cyc)
            coset[G.mul[x][c]] = id;
    }
    SmallGroup Q;
    Q.label = reps; // rep index in G
    Q.mul.assign(reps.size(), std::vector<int>(reps.size(), 0));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j)
            Q.mul[i][j] = coset[G.mul[reps[i]][reps[j]]];

    std::vector<std::pair<int, long>> basis{{g, n}};
    for (auto [qi, m] : decompose(Q)) {
        int r = Q.label[qi];
        // r^m lies in <g>; divide it out so the lift has exact order m
        int rm = G.pow(r, m);
        long k = 0;
        int x = 0;
        while (x != rm) {
            x = G.mul[x][g];
            ++k;
        }
        if (k % m != 0)
            throw Error("abelian decomposition: adjustment failed");
        int corr = G.pow(g, n - k / m); // g^{-k/m}
        basis.emplace_back(G.mul[r][corr], m);
    }
    return basis;
}

} // namespace

void ClassGroup::build_structure() {
    int h = static_cast<int>(forms_.size());
    SmallGroup G;
    G.label.resize(h);
    for (int i = 0; i < h; ++i)
        G.label[i] = i;
    G.mul.assign(h, std::vector<int>(h, 0));
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j)
            G.mul[i][j] = table_[i][j];

    auto basis = decompose(G);
    orders_.clear();
    std::vector<int> gens;
    for (auto [g, n] : basis) {
        gens.push_back(g);
        orders_.push_back(n);
    }
    std::size_t t = gens.size();

    // exponent vector of every class by full enumeration of the direct sum
    exponents_.assign(h, {});
    std::vector<long> e(t, 0);
    long filled = 0;
    for (;;) {
        int x = 0;
        for (std::size_t i = 0; i < t; ++i)
            x = table_[x][G.pow(gens[i], e[i])];
        if (!exponents_[x].empty() && !(x == 0 && std::all_of(e.begin(), e.end(),
                                                              [](long v) { return v == 0; })))
            throw Error("class group: basis enumeration collided");
        if (exponents_[x].empty()) {
            exponents_[x] = e;
            ++filled;
        }
        std::size_t i = 0;
        while (i < t && ++e[i] == orders_[i]) {
            e[i] = 0;
            ++i;
        }
        if (i == t)
            break;
    }
    if (filled != h)
        throw Error("class group: basis does not span");

    // character table: chi indexed by mixed-radix vector over the orders
    chars_.assign(h, std::vector<std::complex<double>>(h));
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::vector<long> a(t, 0);
    for (int chi = 0; chi < h; ++chi) {
        for (int x = 0; x < h; ++x) {
            double phase = 0.0;
            for (std::size_t i = 0; i < t; ++i)
                phase += static_cast<double>(a[i]) * static_cast<double>(exponents_[x][i]) /
                         static_cast<double>(orders_[i]);
            phase -= std::floor(phase);
            chars_[chi][x] = std::polar(1.0, two_pi * phase);
        }
        std::size_t i = 0;
        while (i < t && ++a[i] == orders_[i]) {
            a[i] = 0;
            ++i;
        }
    }
    // exact value at phase 0
    for (int chi = 0; chi < h; ++chi)
        chars_[chi][0] = 1.0;
}

long count_representations(const QuadForm& f, long n) {
    if (!f.positive_definite())
        throw NotPositiveDefinite("count_representations");
    if (n < 1)
        return n == 0 ? 1 : 0;
    long absD = -f.disc();
    long count = 0;
    long ymax = isqrt_floor(4 * f.a * n / absD);
    for (long y = -ymax; y <= ymax; ++y) {
        // a x^2 + b x y + (c y^2 - n) = 0
        long disc = 4 * f.a * n + f.disc() * y * y;
        if (disc < 0)
            continue;
        long s = isqrt_floor(disc);
        if (s * s != disc)
            continue;
        long num1 = -f.b * y + s, num2 = -f.b * y - s;
        if (num1 % (2 * f.a) == 0)
            ++count;
        if (s != 0 && num2 % (2 * f.a) == 0)
            ++count;
    }
    return count;
}

std::vector<long> representation_counts(const QuadForm& f, long N) {
    if (!f.positive_definite())
        throw NotPositiveDefinite("representation_counts");
    long absD = -f.disc();
    std::vector<long> r(N + 1, 0);
    long ymax = isqrt_floor(4 * f.a * N / absD);
    for (long y = -ymax; y <= ymax; ++y) {
        double dy = static_cast<double>(y);
        double disc = 4.0 * f.a * N + static_cast<double>(f.disc()) * dy * dy;
        if (disc < 0)
            continue;
        double sq = std::sqrt(disc);
        long xlo = static_cast<long>(std::ceil((-f.b * dy - sq) / (2.0 * f.a))) - 1;
        long xhi = static_cast<long>(std::floor((-f.b * dy + sq) / (2.0 * f.a))) + 1;
        for (long x = xlo; x <= xhi; ++x) {
            long v = f.eval(x, y);
            if (v >= 0 && v <= N)
                ++r[v];
        }
    }
    return r;
}

ThetaCoefficients theta_coefficients(const ClassGroup& group, int chi, long N) {
    if (!is_fundamental_discriminant(group.discriminant()))
        throw NonFundamentalDiscriminant("theta_coefficients: D must be fundamental");
    if (chi < 0 || chi >= group.h())
        throw OutOfRange("theta_coefficients: bad character index");
    ThetaCoefficients out;
    out.chi = chi;
    out.values.assign(N + 1, 0.0);
    const auto& chars = group.characters()[chi];
    for (int c = 0; c < group.h(); ++c) {
        auto counts = representation_counts(group.forms()[c], N);
        for (long n = 1; n <= N; ++n)
            if (counts[n] != 0)
                out.values[n] += chars[c] * (static_cast<double>(counts[n]) / group.w());
    }
    return out;
}

double verify_character_decomposition(const ClassGroup& group, const QuadForm& form, long N) {
    if (!is_fundamental_discriminant(group.discriminant()))
        throw NonFundamentalDiscriminant("verify_character_decomposition: D must be fundamental");
    int target = group.class_index(form);
    long h = group.h();
    std::vector<std::vector<long>> counts;
    counts.reserve(h);
    for (int c = 0; c < h; ++c)
        counts.push_back(representation_counts(group.forms()[c], N));
    auto direct = representation_counts(form, N);

    double worst = 0.0;
    for (long n = 1; n <= N; ++n) {
        std::complex<double> recon = 0.0;
        for (int chi = 0; chi < h; ++chi) {
            std::complex<double> achi = 0.0;
            for (int c = 0; c < h; ++c)
                achi += group.characters()[chi][c] *
                        (static_cast<double>(counts[c][n]) / group.w());
            recon += std::conj(group.characters()[chi][target]) * achi;
        }
        recon *= static_cast<double>(group.w()) / static_cast<double>(h);
        worst = std::max(worst, std::abs(recon - static_cast<double>(direct[n])));
    }
    return worst;
}

long ideal_count(long D, long n) {
    if (!is_fundamental_discriminant(D))
        throw NonFundamentalDiscriminant("ideal_count: D must be fundamental");
    if (n < 1)
        throw OutOfRange("ideal_count: n must be >= 1");
    long total = 0;
    for (long m = 1; m * m <= n; ++m) {
        if (n % m != 0)
            continue;
        total += kronecker(D, m);
        if (m != n / m)
            total += kronecker(D, n / m);
    }
    return total;
}

} // namespace symmom
