#ifndef SYMMOM_COMBINAT_HPP
#define SYMMOM_COMBINAT_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symmom/errors.hpp"

namespace symmom {

using BigInt = boost::multiprecision::cpp_int;

/// Partition with canonically stripped trailing zeros. Two partitions
/// differing only by trailing zeros compare equal.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<long> parts);
    explicit Partition(std::vector<long> parts);

    const std::vector<long>& parts() const { return parts_; }
    long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t rows() const { return parts_.size(); }
    long weight() const;

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<long> parts_; // weakly decreasing, no trailing zeros
};

/// Binomial coefficient, 0 for k < 0 or k > n (n >= 0 required).
BigInt binomial(long n, long k);

/// Multiplicity of Sym^i in (Sym^d)^{tensor l} by the alternating binomial sum.
/// Zero outside [0, dl] or at the wrong parity.
BigInt kostka_closed_form(long i, long d, long l);

/// Same value by the Clebsch-Gordan recursion over l, memoized.
/// Shares a process-wide table safe for concurrent callers.
BigInt kostka_recursive(long i, long d, long l);

/// Same value from the coefficients of (1 + x + ... + x^d)^l, expanded exactly.
BigInt kostka_generating(long i, long d, long l);

/// Exhaustive count of semistandard fillings of the two-row shape
/// ((dl+i)/2, (dl-i)/2) with content (d,...,d). Refuses when dl > bound.
BigInt kostka_tableau(long i, long d, long l, long bound = 24);

/// Sparse multiplicity map index -> multiplicity.
using MultiplicityVector = std::map<long, BigInt>;

/// Full decomposition {i -> K_{i,d,l}} of (Sym^d)^{tensor l}, i = 0..dl.
MultiplicityVector tensor_power_multiplicities(long d, long l);

/// Sym^i (x) Sym^j = Sym^|i-j| + Sym^{|i-j|+2} + ... + Sym^{i+j}.
MultiplicityVector clebsch_gordan(long i, long j);

/// Weyl module dimension for GL_m; 0 when the shape has a nonzero part
/// beyond row m.
BigInt weyl_dim(const Partition& lambda, long m);

/// Dimension of the symmetric-group irreducible indexed by lambda
/// (hook-style product formula).
BigInt irrep_multiplicity(const Partition& lambda);

/// Memoized recursion table, keyed on (i,d,l). Insert-if-absent is guarded
/// by a mutex; values never change once stored.
class KostkaTable {
  public:
    BigInt get(long i, long d, long l);
    std::size_t size() const;

  private:
    BigInt compute(long i, long d, long l);

    std::map<std::tuple<long, long, long>, BigInt> entries_;
    mutable std::mutex mutex_;
};

} // namespace symmom

#endif
