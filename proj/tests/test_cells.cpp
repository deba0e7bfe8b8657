#include <doctest.h>

#include <map>
#include <set>

#include "cellembed/cells.hpp"
#include "cellembed/tableau.hpp"

using namespace cellembed;

namespace {

std::size_t total(const Cells& cells) {
  std::size_t n = 0;
  for (const auto& c : cells) n += c.size();
  return n;
}

const std::vector<Permutation>& cell_of_member(const Cells& cells, const Permutation& w) {
  for (const auto& c : cells) {
    for (const auto& m : c) {
      if (m == w) return c;
    }
  }
  FAIL("permutation not found in any cell");
  return cells.front();
}

}  // namespace

TEST_CASE("cell counts match standard tableaux counts") {
  // Right and left cells are indexed by SYT; two-sided ones by partitions.
  const std::map<std::size_t, std::pair<std::size_t, std::size_t>> expected{
      {1, {1, 1}}, {2, {2, 2}}, {3, {4, 3}}, {4, {10, 5}}, {5, {26, 7}}, {6, {76, 11}}};
  for (const auto& [n, counts] : expected) {
    CAPTURE(n);
    CHECK(cell_partition(n, CellKind::Right).size() == counts.first);
    CHECK(cell_partition(n, CellKind::Left).size() == counts.first);
    CHECK(cell_partition(n, CellKind::TwoSided).size() == counts.second);
  }
}

TEST_CASE("partitions cover S_n exactly once") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto kind : {CellKind::Right, CellKind::Left, CellKind::TwoSided}) {
      const Cells cells = cell_partition(n, kind);
      std::set<Permutation> seen;
      for (const auto& c : cells) {
        for (const auto& m : c) CHECK(seen.insert(m).second);
      }
      CHECK(total(cells) == all_permutations(n).size());
    }
  }
}

TEST_CASE("right cell of [3142]") {
  const Cells cells = cell_partition(4, CellKind::Right);
  const auto& c = cell_of_member(cells, parse("[3142]"));
  CHECK(c.size() == 2);
  for (const auto& m : c) CHECK(render_inline(p_symbol(m)) == "(12/34)");
}

TEST_CASE("canonical order") {
  const Cells cells = cell_partition(4, CellKind::Right);
  CHECK(cells.front() == std::vector<Permutation>{Permutation::identity(4)});
  for (const auto& c : cells) {
    for (std::size_t i = 1; i < c.size(); ++i) {
      const auto a = std::make_pair(length(c[i - 1]), c[i - 1]);
      const auto b = std::make_pair(length(c[i]), c[i]);
      CHECK(a < b);
    }
  }
  for (std::size_t i = 1; i < cells.size(); ++i) {
    CHECK(std::make_pair(length(cells[i - 1][0]), cells[i - 1][0]) <
          std::make_pair(length(cells[i][0]), cells[i][0]));
  }
}

TEST_CASE("left cells are right cells of inverses on S_5") {
  const auto elems = all_permutations(5);
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      const bool left = same_cell(CellKind::Left, x, y);
      CHECK(left == same_cell(CellKind::Right, inverse(x), inverse(y)));
      if (left || same_cell(CellKind::Right, x, y)) CHECK(same_cell(CellKind::TwoSided, x, y));
    }
  }
}

TEST_CASE("example pair in S_12 shares a right cell") {
  CHECK(same_cell(CellKind::Right, parse("[895621a743cb]"), parse("[8956a2c471b3]")));
  CHECK_FALSE(same_cell(CellKind::Right, parse("[21654387]"), parse("[62845173]")));
}

TEST_CASE("cell kinds and errors") {
  CHECK(parse_cell_kind("right") == CellKind::Right);
  CHECK(parse_cell_kind("left") == CellKind::Left);
  CHECK(parse_cell_kind("twosided") == CellKind::TwoSided);
  CHECK(cell_kind_name(CellKind::TwoSided) == "twosided");
  CHECK_THROWS(parse_cell_kind("both"));
  CHECK_THROWS(cell_partition(8, CellKind::Right));
  CHECK_THROWS(cell_partition(0, CellKind::Right));
  CHECK_THROWS(same_cell(CellKind::Right, parse("[12]"), parse("[123]")));
  CHECK(all_permutations(3).size() == 6);
  CHECK(all_permutations(3).front() == Permutation::identity(3));
  CHECK(all_permutations(3).back() == Permutation::longest(3));
}
