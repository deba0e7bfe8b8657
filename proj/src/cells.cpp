#include "cellembed/cells.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cellembed/tableau.hpp"

namespace cellembed {
namespace {

bool canonical_less(const Permutation& a, const Permutation& b) {
  const auto la = length(a);
  const auto lb = length(b);
  if (la != lb) return la < lb;
  return a < b;
}

}  // namespace

std::string_view cell_kind_name(CellKind kind) {
  switch (kind) {
    case CellKind::Right:
      return "right";
    case CellKind::Left:
      return "left";
    case CellKind::TwoSided:
      return "twosided";
  }
  return "unknown";
}

CellKind parse_cell_kind(std::string_view name) {
  for (CellKind k : {CellKind::Right, CellKind::Left, CellKind::TwoSided}) {
    if (name == cell_kind_name(k)) return k;
  }
  throw std::invalid_argument("unknown cell kind: " + std::string(name));
}

bool same_cell(CellKind kind, const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw PermutationError("same_cell: size mismatch");
  switch (kind) {
    case CellKind::Right:
      return p_symbol(x) == p_symbol(y);
    case CellKind::Left:
      return rsk(x).q == rsk(y).q;
    case CellKind::TwoSided:
      return p_symbol(x).shape() == p_symbol(y).shape();
  }
  return false;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_values(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

void canonicalize(Cells& cells) {
  for (auto& cell : cells) std::sort(cell.begin(), cell.end(), canonical_less);
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.front(), b.front()); });
}

Cells cell_partition(std::size_t n, CellKind kind) {
  if (n == 0 || n > kMaxCellPartitionSize) {
    throw std::invalid_argument("cell_partition: n must be in 1.." +
                                std::to_string(kMaxCellPartitionSize));
  }
  std::map<StandardTableau::Rows, std::vector<Permutation>> groups;
  std::map<std::vector<std::size_t>, std::vector<Permutation>> by_shape;
  for (auto& w : all_permutations(n)) {
    RskPair pq = rsk(w);
    switch (kind) {
      case CellKind::Right:
        groups[pq.p.rows()].push_back(std::move(w));
        break;
      case CellKind::Left:
        groups[pq.q.rows()].push_back(std::move(w));
        break;
      case CellKind::TwoSided:
        by_shape[pq.p.shape()].push_back(std::move(w));
        break;
    }
  }
  Cells cells;
  for (auto& [key, members] : groups) cells.push_back(std::move(members));
  for (auto& [key, members] : by_shape) cells.push_back(std::move(members));
  canonicalize(cells);
  return cells;
}

}  // namespace cellembed
