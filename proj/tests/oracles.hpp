#pragma once

// Reference implementations that share no code path with the library
// routines they check. Only suitable for small n.

#include <cstddef>
#include <vector>

#include "cellembed/klpoly.hpp"
#include "cellembed/permutation.hpp"

namespace cellembed::oracle {

/// Inversions by enumerating all pairs.
std::size_t inversions(const std::vector<int>& word);

/// A reduced word (sequence of simple reflection indices i for s_i) of w,
/// obtained by bubble-sorting positions.
std::vector<int> reduced_word(const Permutation& w);

/// Subword criterion: x <= y iff x is the product of a reduced subword of a
/// reduced word of y.
bool bruhat_leq_subword(const Permutation& x, const Permutation& y);

/// All z of S_n with x <= z <= y, by filtering S_n with the subword oracle.
std::vector<Permutation> interval_by_filter(const Permutation& x, const Permutation& y);

/// Kazhdan-Lusztig polynomials of all of S_n via R-polynomials and the
/// inversion formula q^{l(w)-l(x)} P_{x,w}(1/q) - P_{x,w}(q) =
/// sum_{x < z <= w} R_{x,z} P_{z,w}. Independent of the left-descent
/// recursion used by KLEngine.
class BruteForceKL {
 public:
  explicit BruteForceKL(std::size_t n);
  const KLPolynomial& p(const Permutation& x, const Permutation& w) const;

 private:
  std::vector<Permutation> elems_;
  std::vector<std::size_t> len_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<KLPolynomial>> p_;
  std::size_t index_of(const Permutation& w) const;
};

}  // namespace cellembed::oracle

#include <random>
#include <string>

#include "cellembed/tableau.hpp"

namespace cellembed::oracle {

/// One instance of the multi-column-insertion lemma: a standard tableau T,
/// an entry s, a lower bound r with no entry of T strictly between r and
/// s, and k-1 values r < r_1 < ... < r_{k-1} < s (so k <= s - r).
struct LemmaCase {
  StandardTableau t;
  int s = 0;
  int r = 0;
  int k = 1;
  std::vector<int> ascending;  ///< r_1 .. r_{k-1}
};

LemmaCase random_lemma_case(std::mt19937& rng, std::size_t max_entries = 12);

/// Inserts r_{k-1}, ..., r_1 by direct simulation and checks both lemma
/// conclusions. On failure, `why` describes the violated clause.
bool check_lemma(const LemmaCase& c, std::string& why);

}  // namespace cellembed::oracle
