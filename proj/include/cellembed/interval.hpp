#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cellembed/config.hpp"
#include "cellembed/permutation.hpp"
#include "cellembed/report.hpp"

namespace cellembed {

/// The Bruhat interval [bottom, top] with its Hasse diagram.
///
/// Elements are stored in BFS order from the bottom, so ranks are
/// non-decreasing along `elements()`. Cover edges are (lower, upper) index
/// pairs into `elements()`.
class BruhatInterval {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  const Permutation& bottom() const { return elements_.front(); }
  const Permutation& top() const { return top_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Edge>& cover_edges() const { return edges_; }
  std::size_t size() const { return elements_.size(); }
  /// length(z) - length(bottom).
  std::size_t rank_of(std::size_t index) const { return ranks_[index]; }
  std::size_t rank_of(const Permutation& z) const { return ranks_[index_of(z)]; }
  std::size_t index_of(const Permutation& z) const;
  bool contains(const Permutation& z) const { return index_.contains(z); }
  /// Number of elements at each rank 0..length(top)-length(bottom).
  std::vector<std::size_t> rank_vector() const;

 private:
  friend BruhatInterval enumerate_interval(const Permutation&, const Permutation&, const Guards&);
  explicit BruhatInterval(Permutation top) : top_(std::move(top)) {}

  Permutation top_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> ranks_;
  std::vector<Edge> edges_;
  std::unordered_map<Permutation, std::size_t> index_;
};

/// Permutations covering z in Bruhat order: z * (i j) with i < j,
/// z(i) < z(j) and no position between holding a value between them.
std::vector<Permutation> upper_covers(const Permutation& z);
/// Permutations covered by z.
std::vector<Permutation> lower_covers(const Permutation& z);

/// Upward BFS from x through covers that stay below y. Throws
/// PermutationError if x is not below y and GuardExceeded past
/// guards.interval_max elements.
BruhatInterval enumerate_interval(const Permutation& x, const Permutation& y,
                                  const Guards& guards = {});

/// Cardinality of [x, y] by downward BFS from y (cross-check of the upward
/// enumeration).
std::size_t count_interval_downward(const Permutation& x, const Permutation& y,
                                    const Guards& guards = {});

/// True iff a rank-preserving poset isomorphism A -> B exists. Throws
/// GuardExceeded if either side exceeds guards.iso_max.
bool posets_isomorphic(const BruhatInterval& a, const BruhatInterval& b, const Guards& guards = {});

struct EmbeddingCheckOptions {
  bool full = false;  ///< also run the isomorphism search
  Guards guards;
};

/// Clause-by-clause report for "[x,y] embeds into [v,w] along positions":
/// comparability, common embedding, length difference, and (with `full`)
/// interval cardinality and poset isomorphism.
Report check_interval_embedding(const Permutation& x, const Permutation& y, const Permutation& v,
                                const Permutation& w, const IndexSet& positions,
                                const EmbeddingCheckOptions& options = {});

/// Common embedding plus the poset condition. With a valid common embedding
/// the poset condition reduces to equal length differences; `full` also runs
/// the explicit isomorphism search. Throws PermutationError unless x <= y and
/// v <= w.
bool is_interval_pattern_embedding(const Permutation& x, const Permutation& y,
                                   const Permutation& v, const Permutation& w,
                                   const IndexSet& positions,
                                   const EmbeddingCheckOptions& options = {});

}  // namespace cellembed
