#ifndef SYMMOM_EIGENFORM_HPP
#define SYMMOM_EIGENFORM_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "symmom/errors.hpp"

namespace symmom {

using Int128 = __int128;

std::string to_string(Int128 v);
Int128 parse_int128(const std::string& s);

/// Normalized Hecke eigenvalues lambda(n) = a(n) / n^((k-1)/2) of a level-1
/// eigenform, with exact integer coefficients a(n) when representable.
/// Arrays are 1-based: a(n) = raw[n], lambda(n) = lambda[n]; index 0 unused.
struct CoefficientSeries {
    int weight = 12;
    std::string label;
    long length = 0;
    std::vector<Int128> raw; // empty when only floats are available
    std::vector<double> lambda;

    bool has_raw() const { return !raw.empty(); }
};

struct SatakeAngle {
    long p = 0;
    double theta = 0.0; // in [0, pi], 2 cos(theta) = lambda(p)
    bool degenerate = false;
};

/// Exact q-expansion of the weight-12 level-1 cusp form to order N,
/// via the sparse eta^3 series raised to the 8th power.
CoefficientSeries delta_coefficients(long N);

/// CSV format: header "n,a,lambda"; the a column may be empty.
CoefficientSeries load_coefficients(const std::filesystem::path& path, int weight);
void save_coefficients(const CoefficientSeries& series, const std::filesystem::path& path);

/// Checks lambda(1) = 1, the Hecke prime-power recursion, multiplicativity
/// (by regenerating the array from prime powers) and the Deligne bound.
/// Throws InvariantViolation naming the first failed check.
void validate(const CoefficientSeries& series);

SatakeAngle satake_angle(const CoefficientSeries& series, long p);

/// Caps internal parallelism; 0 restores the hardware default.
void set_thread_cap(unsigned threads);
unsigned thread_cap();

/// Smallest-prime-factor sieve, spf[0] = spf[1] = 0.
std::vector<int32_t> smallest_prime_factors(long N);

bool is_prime(long n);

} // namespace symmom

#endif
