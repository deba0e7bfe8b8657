#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "cellembed/permutation.hpp"

namespace cellembed {

enum class CellKind { Right, Left, TwoSided };

std::string_view cell_kind_name(CellKind kind);
/// Accepts "right", "left", "twosided".
CellKind parse_cell_kind(std::string_view name);

/// Right: P(x) = P(y). Left: Q(x) = Q(y). TwoSided: P symbols share a shape.
bool same_cell(CellKind kind, const Permutation& x, const Permutation& y);

using Cells = std::vector<std::vector<Permutation>>;

inline constexpr std::size_t kMaxCellPartitionSize = 7;

/// All of S_n (n <= 7) grouped by the cell criterion. Members are sorted by
/// (length, word) and cells by their first member.
Cells cell_partition(std::size_t n, CellKind kind);

/// Sorts members and cells into the canonical order used by cell_partition.
void canonicalize(Cells& cells);

/// Every permutation of size n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace cellembed
