#pragma once

// Embedding a pair x, y of S_n into a pair v, w of S_N with P(v) = P(w).
//
// Each step compares the P symbols of the current pair, finds the first
// value k+1 placed differently, and prepends t = max(column of k+1) - 1 new
// entries k+1..k+t to both words while shifting the old entries above k up
// by t. The old words survive as the pattern in the last positions, the new
// prefix is shared, and the P symbols now agree at least up to k+t+1. Steps
// repeat until the P symbols coincide.

#include <cstddef>
#include <vector>

#include "cellembed/config.hpp"
#include "cellembed/permutation.hpp"
#include "cellembed/report.hpp"
#include "cellembed/tableau.hpp"

namespace cellembed {

struct EmbeddingStep {
  std::size_t index = 0;  ///< 0-based step number
  int k = 0;              ///< agreement level of P(x_in), P(y_in)
  int t = 0;              ///< prefix length added by this step
  Permutation x_in;
  Permutation y_in;
  Permutation x_out;
  Permutation y_out;
  StandardTableau p_x;  ///< P(x_in)
  StandardTableau p_y;  ///< P(y_in)

  std::size_t n_in() const { return x_in.size(); }
  std::size_t n_out() const { return x_out.size(); }
  /// Positions t+1..t+n_in of x_out, which carry the pattern x_in.
  IndexSet embedded_positions() const;
};

struct EmbeddingTrace {
  Permutation x;
  Permutation y;
  std::vector<EmbeddingStep> steps;
  Permutation v;
  Permutation w;

  std::size_t n() const { return x.size(); }
  std::size_t big_n() const { return v.size(); }
};

/// Largest k such that every entry <= k sits in the same cell of both
/// tableaux; the common entry count when they are equal. Throws
/// TableauError unless both hold exactly {1..n}.
int agreement_level(const StandardTableau& px, const StandardTableau& py);

/// Rewrites `w` with a prefix k+1..k+t; old entries > k move up by t.
Permutation prepend_block(const Permutation& w, int k, int t);

/// One step. Throws std::invalid_argument when P(x) = P(y).
EmbeddingStep prime_step(const Permutation& x, const Permutation& y);

/// Iterates prime_step until the P symbols agree. Accepts any x, y of equal
/// size; throws PermutationError on a size mismatch.
EmbeddingTrace embed(const Permutation& x, const Permutation& y);

struct VerifyOptions {
  bool intervals = true;        ///< compare [x,y] and [v,w] when x <= y
  bool full_isomorphism = true;  ///< run the isomorphism search when within guards
  Guards guards;
};

/// Re-checks every postcondition of `embed` on a (possibly deserialized)
/// trace. Never throws for a bad trace; failures are report entries.
Report verify_trace(const EmbeddingTrace& trace, const VerifyOptions& options = {});

}  // namespace cellembed
