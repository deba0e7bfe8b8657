#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cellembed/permutation.hpp"

namespace cellembed {

class TableauError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Position of an entry, both 1-based.
struct Cell {
  std::size_t row;
  std::size_t col;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// A standard Young tableau stored row-major: rows increase left to right,
/// columns increase top to bottom, row lengths weakly decrease, entries are
/// distinct positive integers (not necessarily 1..n).
class StandardTableau {
 public:
  using Rows = std::vector<std::vector<int>>;

  StandardTableau() = default;
  /// Validates the standard-tableau invariants.
  explicit StandardTableau(Rows rows);

  const Rows& rows() const { return rows_; }
  std::size_t entry_count() const;
  bool empty() const { return rows_.empty(); }
  /// Row lengths, weakly decreasing.
  std::vector<std::size_t> shape() const;
  bool contains(int value) const;

  /// Entries of column `c` (1-based), top to bottom.
  std::vector<int> column(std::size_t c) const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
  friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;

 private:
  struct Unchecked {};
  StandardTableau(Rows rows, Unchecked) : rows_(std::move(rows)) {}
  friend StandardTableau column_insert(const StandardTableau& t, int value, Cell& added);

  Rows rows_;
};

/// Throws TableauError if any invariant fails.
void check_standard(const StandardTableau::Rows& rows);

/// Column insertion: `value` enters column 1 and displaces the smallest
/// larger entry, which is inserted into the next column; a value with no
/// larger entry in its column is appended at the bottom of that column.
StandardTableau column_insert(const StandardTableau& t, int value);
/// As above, also reporting where the new cell was added.
StandardTableau column_insert(const StandardTableau& t, int value, Cell& added);

/// Folds column_insert over `values` in the given order.
StandardTableau multi_column_insert(const StandardTableau& t, std::span<const int> values);

/// 1-based column holding `s`.
std::size_t column_index(const StandardTableau& t, int s);
/// Row and column holding `s`.
Cell cell_of(const StandardTableau& t, int s);

struct RskPair {
  StandardTableau p;
  StandardTableau q;
};

/// P by column-inserting w(n), w(n-1), ..., w(1); Q records the cell added
/// at the i-th insertion with label i.
RskPair rsk(const Permutation& w);
/// P symbol alone.
StandardTableau p_symbol(const Permutation& w);

/// One row per line, entries separated by spaces.
std::string render_text(const StandardTableau& t);
/// Compact "(12/34)" form with rows separated by '/'; entries above 9 are
/// comma-separated.
std::string render_inline(const StandardTableau& t);

}  // namespace cellembed
