#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "cellembed/cells.hpp"
#include "cellembed/config.hpp"
#include "cellembed/permutation.hpp"

namespace cellembed {

/// Integer polynomial in q, dense; coefficient of q^d at index d. The zero
/// polynomial has no coefficients.
class KLPolynomial {
 public:
  using Coeff = std::int64_t;

  KLPolynomial() = default;
  explicit KLPolynomial(std::vector<Coeff> coefficients);
  static KLPolynomial one() { return KLPolynomial({1}); }

  const std::vector<Coeff>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Coeff operator[](std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : 0; }

  /// this += factor * q^shift * other
  void add_scaled(const KLPolynomial& other, Coeff factor, std::size_t shift);

  /// "1 + q + 2q^2"; "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const KLPolynomial&, const KLPolynomial&) = default;

 private:
  void trim();
  std::vector<Coeff> coeffs_;
};

/// Kazhdan-Lusztig polynomials P_{x,y} for permutations, by the standard
/// recursion over a left descent s of y (sy < y):
///
///   P_{x,y} = q^{1-c} P_{sx,sy} + q^c P_{x,sy}
///             - sum_{z < sy, sz < z} mu(z,sy) q^{(l(y)-l(z))/2} P_{x,z}
///
/// with c = 1 if sx < x and 0 otherwise. The engine memoizes whole columns
/// {P_{x,y} : x <= y}, each spanning the lower order ideal of its top, which
/// is generated by downward cover BFS rather than by materializing S_n.
/// One engine is not thread-safe; independent engines are.
class KLEngine {
 public:
  explicit KLEngine(Guards guards = {});
  ~KLEngine();
  KLEngine(KLEngine&&) noexcept;
  KLEngine& operator=(KLEngine&&) noexcept;

  /// Zero polynomial when x is not below y. Throws GuardExceeded when an
  /// order ideal exceeds guards.ideal_max.
  KLPolynomial polynomial(const Permutation& x, const Permutation& y);
  /// Coefficient of q^{(l(y)-l(x)-1)/2}; zero for even length difference.
  KLPolynomial::Coeff mu(const Permutation& x, const Permutation& y);

  /// Number of memoized columns.
  std::size_t cached_columns() const;

 private:
  struct Column;
  const Column& column(const Permutation& y);

  Guards guards_;
  std::unordered_map<Permutation, std::unique_ptr<Column>> columns_;
};

/// Elements below y, by downward BFS from y. Throws GuardExceeded past `max_size`.
std::vector<Permutation> lower_ideal(const Permutation& y, std::size_t max_size);

KLPolynomial kl_polynomial(const Permutation& x, const Permutation& y, const Guards& guards = {});
KLPolynomial::Coeff mu(const Permutation& x, const Permutation& y, const Guards& guards = {});

inline constexpr std::size_t kMaxKlCellsSize = 5;

/// Right cells of S_n (n <= 5) from the Kazhdan-Lusztig right preorder:
/// strongly connected components of the relation x -> y whenever mu links
/// x and y and the right descent set of x is not contained in that of y.
/// Returned in canonical order (see canonicalize).
Cells kl_cells(std::size_t n, const Guards& guards = {});

}  // namespace cellembed
