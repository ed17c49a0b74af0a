#include "symmom/combinat.hpp"

#include <algorithm>

namespace symmom {

Partition::Partition(std::initializer_list<long> parts)
    : Partition(std::vector<long>(parts)) {}

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw InvariantViolation("Partition: negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvariantViolation("Partition: parts not weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
}

long Partition::weight() const {
    long w = 0;
    for (long p : parts_)
        w += p;
    return w;
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long j = 1; j <= k; ++j) {
        r *= (n - k + j);
        r /= j;
    }
    return r;
}

namespace {

bool vanishes(long i, long d, long l) {
    return i < 0 || i > d * l || ((d * l - i) % 2) != 0;
}

} // namespace

BigInt kostka_closed_form(long i, long d, long l) {
    if (vanishes(i, d, l))
        return 0;
    if (l == 1)
        return i == d ? 1 : 0;
    BigInt sum = 0;
    long jmax = (d * l - i) / (2 * d + 2);
    for (long j = 0; j <= jmax; ++j) {
        BigInt term = binomial(l, j) * binomial((d * l - i) / 2 - j * (d + 1) + l - 2, l - 2);
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

BigInt KostkaTable::get(long i, long d, long l) {
    if (vanishes(i, d, l))
        return 0;
    auto key = std::make_tuple(i, d, l);
    {
        std::lock_guard lock(mutex_);
        auto it = entries_.find(key);
        if (it != entries_.end())
            return it->second;
    }
    BigInt value = compute(i, d, l);
    std::lock_guard lock(mutex_);
    return entries_.emplace(key, std::move(value)).first->second;
}

BigInt KostkaTable::compute(long i, long d, long l) {
    if (l == 1)
        return i == d ? 1 : 0;
    // K_{i,d,l} = sum over j = |i-d|, |i-d|+2, ..., i+d of K_{j,d,l-1}
    BigInt sum = 0;
    for (long j = std::abs(i - d); j <= i + d; j += 2)
        sum += get(j, d, l - 1);
    return sum;
}

std::size_t KostkaTable::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

BigInt kostka_recursive(long i, long d, long l) {
    static KostkaTable table;
    return table.get(i, d, l);
}

BigInt kostka_generating(long i, long d, long l) {
    if (vanishes(i, d, l))
        return 0;
    // coefficients of (1 + x + ... + x^d)^l
    std::vector<BigInt> coeffs{1};
    for (long step = 0; step < l; ++step) {
        std::vector<BigInt> next(coeffs.size() + d, 0);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j] == 0)
                continue;
            for (long t = 0; t <= d; ++t)
                next[j + t] += coeffs[j];
        }
        coeffs = std::move(next);
    }
    auto c = [&](long j) -> BigInt {
        return (j < 0 || j >= static_cast<long>(coeffs.size())) ? BigInt(0) : coeffs[j];
    };
    long j = (d * l - i) / 2;
    return c(j) - c(j - 1);
}

namespace {

// DFS over the content counts per value: place c1 copies in row 1 and
// d - c1 copies in row 2. Column strictness requires the row-2 front to
// stay behind the row-1 front as it stood before the current value.
BigInt count_fillings(long value, long l, long d, long row1_len, long row2_len,
                      long row1_target, long row2_target) {
    if (value == l)
        return (row1_len == row1_target && row2_len == row2_target) ? 1 : 0;
    BigInt total = 0;
    for (long c1 = 0; c1 <= d; ++c1) {
        long c2 = d - c1;
        long r1 = row1_len + c1;
        long r2 = row2_len + c2;
        if (r1 > row1_target || r2 > row2_target)
            continue;
        if (r2 > row1_len) // row-2 entry would sit on or past the row-1 front
            continue;
        total += count_fillings(value + 1, l, d, r1, r2, row1_target, row2_target);
    }
    return total;
}

} // namespace

BigInt kostka_tableau(long i, long d, long l, long bound) {
    if (d * l > bound)
        throw OracleBoundExceeded("kostka_tableau: dl = " + std::to_string(d * l) +
                                  " exceeds oracle bound " + std::to_string(bound));
    if (vanishes(i, d, l))
        return 0;
    long mu1 = (d * l + i) / 2;
    long mu2 = (d * l - i) / 2;
    return count_fillings(0, l, d, 0, 0, mu1, mu2);
}

MultiplicityVector tensor_power_multiplicities(long d, long l) {
    MultiplicityVector result;
    for (long i = 0; i <= d * l; ++i) {
        BigInt k = kostka_recursive(i, d, l);
        if (k != 0)
            result.emplace(i, std::move(k));
    }
    return result;
}

MultiplicityVector clebsch_gordan(long i, long j) {
    MultiplicityVector result;
    for (long t = std::abs(i - j); t <= i + j; t += 2)
        result.emplace(t, 1);
    return result;
}

BigInt weyl_dim(const Partition& lambda, long m) {
    if (static_cast<long>(lambda.rows()) > m)
        return 0;
    BigInt num = 1, den = 1;
    for (long i = 1; i < m; ++i) {
        for (long j = i + 1; j <= m; ++j) {
            num *= lambda.part(i - 1) - lambda.part(j - 1) + j - i;
            den *= j - i;
        }
    }
    return num / den;
}

BigInt irrep_multiplicity(const Partition& lambda) {
    long d = lambda.weight();
    if (d < 1)
        throw InvariantViolation("irrep_multiplicity: empty partition");
    long k = static_cast<long>(lambda.rows());
    std::vector<long> ell(k);
    for (long i = 0; i < k; ++i)
        ell[i] = lambda.part(i) + k - 1 - i;
    BigInt r = 1;
    for (long j = 2; j <= d; ++j)
        r *= j; // d!
    for (long i = 0; i < k; ++i)
        for (long j = i + 1; j < k; ++j)
            r *= ell[i] - ell[j];
    for (long i = 0; i < k; ++i)
        for (long j = 2; j <= ell[i]; ++j)
            r /= j;
    return r;
}

} // namespace symmom
