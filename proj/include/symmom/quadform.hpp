#ifndef SYMMOM_QUADFORM_HPP
#define SYMMOM_QUADFORM_HPP

#include <complex>
#include <vector>

#include "symmom/errors.hpp"

namespace symmom {

/// Primitive positive definite binary form a x^2 + b x y + c y^2.
struct QuadForm {
    long a = 1, b = 0, c = 1;

    long disc() const { return b * b - 4 * a * c; }
    bool positive_definite() const { return a > 0 && disc() < 0; }
    bool operator==(const QuadForm&) const = default;

    long eval(long x, long y) const { return a * x * x + b * x * y + c * y * y; }
};

/// The unique reduced representative of the proper equivalence class.
QuadForm reduce(QuadForm form);

bool is_reduced(const QuadForm& form);

/// Kronecker symbol (a|n).
int kronecker(long a, long n);

bool is_fundamental_discriminant(long D);

/// Form class group of a negative discriminant: reduced primitive forms,
/// Gauss composition table, invariant-factor basis and the full character
/// table. Class index 0 is the principal form.
class ClassGroup {
  public:
    explicit ClassGroup(long D);

    long discriminant() const { return D_; }
    long h() const { return static_cast<long>(forms_.size()); }
    int w() const { return w_; }
    const std::vector<QuadForm>& forms() const { return forms_; }
    const QuadForm& principal() const { return forms_[0]; }

    int compose(int i, int j) const { return table_[i][j]; }
    int inverse(int i) const;
    /// Index of the class of an arbitrary form of this discriminant.
    int class_index(const QuadForm& form) const;

    /// Orders of the invariant-factor basis (n_1 | n_2 | ... is not enforced;
    /// the decomposition is into cyclic factors of prime-power order).
    const std::vector<long>& cyclic_orders() const { return orders_; }
    /// Exponent vector of a class in the cyclic basis.
    const std::vector<long>& exponents(int i) const { return exponents_[i]; }

    /// characters()[chi][class]; chi = 0 is trivial. Values are roots of unity.
    const std::vector<std::vector<std::complex<double>>>& characters() const {
        return chars_;
    }

  private:
    long D_;
    int w_;
    std::vector<QuadForm> forms_;
    std::vector<std::vector<int>> table_;
    std::vector<long> orders_;
    std::vector<std::vector<long>> exponents_;
    std::vector<std::vector<std::complex<double>>> chars_;

    void build_composition();
    void build_structure();
};

/// Exact count of integer pairs with Q(x,y) = n.
long count_representations(const QuadForm& form, long n);

/// r(n, Q) for all n = 0..N in one lattice-enumeration pass.
std::vector<long> representation_counts(const QuadForm& form, long N);

/// a_chi(n) = sum_c chi(c) r(n, Q_c) / w_D for n <= N. Fundamental D only.
struct ThetaCoefficients {
    int chi = 0;
    std::vector<std::complex<double>> values; // 1-based
};
ThetaCoefficients theta_coefficients(const ClassGroup& group, int chi, long N);

/// Max residual over n <= N of r(n,Q) against the class-group character
/// reconstruction (w_D/h) sum_chi conj(chi(a_Q)) a_chi(n) * ... with a_chi
/// built from per-class counts. Contractually < 1e-9.
double verify_character_decomposition(const ClassGroup& group, const QuadForm& form, long N);

/// Number of integral ideals of norm n in Q(sqrt(D)): sum_{m|n} (D|m).
long ideal_count(long D, long n);

} // namespace symmom

#endif
