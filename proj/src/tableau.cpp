#include "cellembed/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace cellembed {

void check_standard(const StandardTableau::Rows& rows) {
  std::unordered_set<int> seen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) throw TableauError("empty row in tableau");
    if (r > 0 && rows[r].size() > rows[r - 1].size()) {
      throw TableauError("row lengths must weakly decrease");
    }
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const int v = rows[r][c];
      if (v < 1) throw TableauError("tableau entries must be positive");
      if (!seen.insert(v).second) throw TableauError("duplicate tableau entry " + std::to_string(v));
      if (c > 0 && rows[r][c - 1] >= v) throw TableauError("rows must strictly increase");
      if (r > 0 && rows[r - 1][c] >= v) throw TableauError("columns must strictly increase");
    }
  }
}

StandardTableau::StandardTableau(Rows rows) : rows_(std::move(rows)) { check_standard(rows_); }

std::size_t StandardTableau::entry_count() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

std::vector<std::size_t> StandardTableau::shape() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row.size());
  return out;
}

bool StandardTableau::contains(int value) const {
  return std::any_of(rows_.begin(), rows_.end(), [value](const auto& row) {
    return std::find(row.begin(), row.end(), value) != row.end();
  });
}

std::vector<int> StandardTableau::column(std::size_t c) const {
  std::vector<int> out;
  for (const auto& row : rows_) {
    if (row.size() < c) break;
    out.push_back(row[c - 1]);
  }
  return out;
}

StandardTableau column_insert(const StandardTableau& t, int value, Cell& added) {
  if (value < 1) throw TableauError("tableau entries must be positive");
  if (t.contains(value)) throw TableauError("value already in tableau: " + std::to_string(value));
  StandardTableau::Rows rows = t.rows_;
  std::size_t col = 0;  // 0-based
  int carry = value;
  for (;;) {
    // Walk down column `col` looking for the smallest entry above `carry`;
    // columns are increasing so the first larger entry is the smallest.
    std::size_t r = 0;
    while (r < rows.size() && rows[r].size() > col && rows[r][col] < carry) ++r;
    if (r < rows.size() && rows[r].size() > col) {
      std::swap(rows[r][col], carry);
      ++col;
      continue;
    }
    if (r == rows.size()) rows.emplace_back();
    rows[r].push_back(carry);
    added = Cell{r + 1, col + 1};
    break;
  }
  return StandardTableau(std::move(rows), StandardTableau::Unchecked{});
}

StandardTableau column_insert(const StandardTableau& t, int value) {
  Cell ignored{};
  return column_insert(t, value, ignored);
}

StandardTableau multi_column_insert(const StandardTableau& t, std::span<const int> values) {
  StandardTableau out = t;
  for (int v : values) out = column_insert(out, v);
  return out;
}

Cell cell_of(const StandardTableau& t, int s) {
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto it = std::find(rows[r].begin(), rows[r].end(), s);
    if (it != rows[r].end()) {
      return Cell{r + 1, static_cast<std::size_t>(it - rows[r].begin()) + 1};
    }
  }
  throw TableauError("entry not in tableau: " + std::to_string(s));
}

std::size_t column_index(const StandardTableau& t, int s) { return cell_of(t, s).col; }

RskPair rsk(const Permutation& w) {
  StandardTableau p;
  StandardTableau::Rows q;
  for (std::size_t step = 1; step <= w.size(); ++step) {
    Cell added{};
    p = column_insert(p, w(w.size() + 1 - step), added);
    if (added.row > q.size()) q.emplace_back();
    q[added.row - 1].push_back(static_cast<int>(step));
  }
  return RskPair{std::move(p), StandardTableau(std::move(q))};
}

StandardTableau p_symbol(const Permutation& w) {
  StandardTableau p;
  for (std::size_t i = w.size(); i >= 1; --i) p = column_insert(p, w(i));
  return p;
}

std::string render_text(const StandardTableau& t) {
  std::ostringstream out;
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ' ';
      out << row[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string render_inline(const StandardTableau& t) {
  const bool wide = std::any_of(t.rows().begin(), t.rows().end(), [](const auto& row) {
    return std::any_of(row.begin(), row.end(), [](int v) { return v > 9; });
  });
  std::ostringstream out;
  out << '(';
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r > 0) out << '/';
    const auto& row = t.rows()[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0 && wide) out << ',';
      out << row[c];
    }
  }
  out << ')';
  return out.str();
}

}  // namespace cellembed
