#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cellembed {

/// Raised for malformed permutation text, size mismatches, bad index sets.
class PermutationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which alphabet a permutation is written in. Internally everything is 1-based.
enum class Base { Zero, One };

/// Text form for `format`. `Auto` picks compact when n <= kMaxCompactSize.
enum class TextForm { Auto, Compact, Verbose };

inline constexpr std::size_t kMaxSize = 255;
inline constexpr std::size_t kMaxCompactSize = 35;

/// A permutation of {1..n} in one-line notation, w = [w(1) ... w(n)].
///
/// Values are stored as bytes, which bounds n by kMaxSize; this keeps a whole
/// word inside one or a few SIMD registers for the Bruhat/length kernels.
class Permutation {
 public:
  using value_type = std::uint8_t;

  /// Validates that `word` is a bijection on {1..word.size()}.
  explicit Permutation(std::vector<value_type> word);

  static Permutation identity(std::size_t n);
  /// The longest element (n, n-1, ..., 1).
  static Permutation longest(std::size_t n);
  static Permutation from_values(std::span<const int> values);
  static Permutation from_values(std::initializer_list<int> values) {
    return from_values(std::span<const int>(values.begin(), values.size()));
  }

  std::size_t size() const { return word_.size(); }
  /// w(i) for 1 <= i <= n.
  int operator()(std::size_t i) const { return word_[i - 1]; }
  std::span<const value_type> word() const { return word_; }
  std::vector<int> values() const { return {word_.begin(), word_.end()}; }

  /// Position of `value`, 1-based.
  std::size_t position_of(int value) const;

  /// s_i * w: exchange the values i and i+1.
  Permutation swap_values(int i) const;
  /// w * (i j): exchange the entries at positions i and j (1-based).
  Permutation swap_positions(std::size_t i, std::size_t j) const;
  /// True iff s_i * w < w, i.e. i+1 appears left of i.
  bool has_left_descent(int i) const;
  /// True iff w * s_i < w, i.e. w(i) > w(i+1).
  bool has_right_descent(std::size_t i) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<value_type> word, Unchecked) : word_(std::move(word)) {}

  std::vector<value_type> word_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const noexcept;
};

/// Sorted, duplicate-free set of 1-based positions.
using IndexSet = std::vector<std::size_t>;

/// Positions lo..hi inclusive.
IndexSet index_range(std::size_t lo, std::size_t hi);

/// Parses verbose ("3 1 4 2", "3,1,4,2") or compact ("[3142]") text.
/// Compact means a bracketed string without separators, one symbol per
/// entry: 1-9 then a-z for Base::One, 0-9 then a-z for Base::Zero.
Permutation parse(std::string_view text, Base base = Base::One);
std::string format(const Permutation& w, Base base = Base::One, TextForm form = TextForm::Auto);

/// Number of inversions.
std::size_t length(const Permutation& w);
Permutation inverse(const Permutation& w);

/// Rank matrix k[p][q] = #{i <= p : w(i) <= q}, 1 <= p,q <= n, stored
/// row-major in an (n+1)x(n+1) table whose row/column 0 is zero.
class RankMatrix {
 public:
  explicit RankMatrix(const Permutation& w);
  std::size_t size() const { return n_; }
  int operator()(std::size_t p, std::size_t q) const { return table_[p * (n_ + 1) + q]; }

 private:
  std::size_t n_;
  std::vector<int> table_;
};

/// Bruhat order via rank-matrix dominance: x <= y iff k^x >= k^y entrywise.
bool bruhat_leq(const Permutation& x, const Permutation& y);

/// Flattening of (v(phi_1), ..., v(phi_k)) to a permutation of {1..k}.
Permutation pattern_at(const Permutation& v, const IndexSet& positions);

/// pattern_at(v, phi) == x, pattern_at(w, phi) == y, and v, w agree off phi.
bool is_common_embedding(const Permutation& x, const Permutation& y, const Permutation& v,
                         const Permutation& w, const IndexSet& positions);

}  // namespace cellembed

template <>
struct std::hash<cellembed::Permutation> : cellembed::PermutationHash {};
