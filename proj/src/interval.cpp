#include "cellembed/interval.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace cellembed {

std::size_t BruhatInterval::index_of(const Permutation& z) const {
  const auto it = index_.find(z);
  if (it == index_.end()) throw PermutationError("element not in interval: " + format(z));
  return it->second;
}

std::vector<std::size_t> BruhatInterval::rank_vector() const {
  std::vector<std::size_t> out;
  for (auto r : ranks_) {
    if (r >= out.size()) out.resize(r + 1, 0);
    ++out[r];
  }
  return out;
}

std::vector<Permutation> upper_covers(const Permutation& z) {
  std::vector<Permutation> out;
  const std::size_t n = z.size();
  for (std::size_t i = 1; i < n; ++i) {
    // Smallest value above z(i) seen strictly between i and j.
    int ceiling = static_cast<int>(n) + 1;
    for (std::size_t j = i + 1; j <= n; ++j) {
      const int zj = z(j);
      if (zj > z(i) && zj < ceiling) {
        out.push_back(z.swap_positions(i, j));
        ceiling = zj;
      }
    }
  }
  return out;
}

std::vector<Permutation> lower_covers(const Permutation& z) {
  std::vector<Permutation> out;
  const std::size_t n = z.size();
  for (std::size_t i = 1; i < n; ++i) {
    // Largest value below z(i) seen strictly between i and j.
    int floor = 0;
    for (std::size_t j = i + 1; j <= n; ++j) {
      const int zj = z(j);
      if (zj < z(i) && zj > floor) {
        out.push_back(z.swap_positions(i, j));
        floor = zj;
      }
    }
  }
  return out;
}

BruhatInterval enumerate_interval(const Permutation& x, const Permutation& y, const Guards& guards) {
  if (!bruhat_leq(x, y)) {
    throw PermutationError("enumerate_interval: " + format(x) + " is not below " + format(y));
  }
  BruhatInterval out(y);
  out.elements_.push_back(x);
  out.ranks_.push_back(0);
  out.index_.emplace(x, 0);
  for (std::size_t head = 0; head < out.elements_.size(); ++head) {
    const Permutation z = out.elements_[head];
    const std::size_t rank = out.ranks_[head];
    for (auto& c : upper_covers(z)) {
      auto it = out.index_.find(c);
      if (it == out.index_.end()) {
        if (!bruhat_leq(c, y)) continue;
        if (out.elements_.size() >= guards.interval_max) {
          throw GuardExceeded("interval exceeds " + std::to_string(guards.interval_max) +
                              " elements");
        }
        it = out.index_.emplace(c, out.elements_.size()).first;
        out.elements_.push_back(std::move(c));
        out.ranks_.push_back(rank + 1);
      }
      out.edges_.emplace_back(head, it->second);
    }
  }
  return out;
}

std::size_t count_interval_downward(const Permutation& x, const Permutation& y,
                                    const Guards& guards) {
  if (!bruhat_leq(x, y)) {
    throw PermutationError("count_interval_downward: " + format(x) + " is not below " + format(y));
  }
  std::unordered_map<Permutation, bool> seen{{y, true}};
  std::deque<Permutation> queue{y};
  while (!queue.empty()) {
    const Permutation z = std::move(queue.front());
    queue.pop_front();
    for (auto& c : lower_covers(z)) {
      if (seen.contains(c) || !bruhat_leq(x, c)) continue;
      if (seen.size() >= guards.interval_max) {
        throw GuardExceeded("interval exceeds " + std::to_string(guards.interval_max) +
                            " elements");
      }
      seen.emplace(c, true);
      queue.push_back(std::move(c));
    }
  }
  return seen.size();
}

namespace {

struct Hasse {
  std::vector<std::size_t> rank;
  std::vector<std::vector<std::size_t>> up;
  std::vector<std::vector<std::size_t>> down;
};

Hasse hasse_of(const BruhatInterval& interval) {
  Hasse h;
  const std::size_t n = interval.size();
  h.rank.resize(n);
  h.up.resize(n);
  h.down.resize(n);
  for (std::size_t i = 0; i < n; ++i) h.rank[i] = interval.rank_of(i);
  for (const auto& [lo, hi] : interval.cover_edges()) {
    h.up[lo].push_back(hi);
    h.down[hi].push_back(lo);
  }
  return h;
}

using Signature = std::vector<std::size_t>;

// Colour refinement run on both diagrams with a shared palette, so equal
// colours mean equal local structure across A and B.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colours(const Hasse& a,
                                                                              const Hasse& b) {
  auto initial = [](const Hasse& h, std::size_t i) {
    return Signature{h.rank[i], h.up[i].size(), h.down[i].size()};
  };
  std::vector<std::size_t> ca(a.rank.size());
  std::vector<std::size_t> cb(b.rank.size());
  std::size_t colour_count = 0;
  {
    std::map<Signature, std::size_t> palette;
    for (std::size_t i = 0; i < ca.size(); ++i) {
      ca[i] = palette.emplace(initial(a, i), palette.size()).first->second;
    }
    for (std::size_t i = 0; i < cb.size(); ++i) {
      cb[i] = palette.emplace(initial(b, i), palette.size()).first->second;
    }
    colour_count = palette.size();
  }
  for (;;) {
    std::map<Signature, std::size_t> palette;
    auto refine = [&palette](const Hasse& h, const std::vector<std::size_t>& colours) {
      std::vector<std::size_t> next(colours.size());
      for (std::size_t i = 0; i < colours.size(); ++i) {
        Signature sig{colours[i]};
        Signature ups;
        Signature downs;
        for (auto j : h.up[i]) ups.push_back(colours[j]);
        for (auto j : h.down[i]) downs.push_back(colours[j]);
        std::sort(ups.begin(), ups.end());
        std::sort(downs.begin(), downs.end());
        sig.push_back(ups.size());
        sig.insert(sig.end(), ups.begin(), ups.end());
        sig.insert(sig.end(), downs.begin(), downs.end());
        next[i] = palette.emplace(std::move(sig), palette.size()).first->second;
      }
      return next;
    };
    auto na = refine(a, ca);
    auto nb = refine(b, cb);
    const bool stable = palette.size() == colour_count;
    ca = std::move(na);
    cb = std::move(nb);
    colour_count = palette.size();
    if (stable) break;
  }
  return {std::move(ca), std::move(cb)};
}

class IsoSearch {
 public:
  IsoSearch(const Hasse& a, const Hasse& b, std::vector<std::size_t> ca, std::vector<std::size_t> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)) {
    order_.resize(a_.rank.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(),
                     [this](std::size_t i, std::size_t j) { return a_.rank[i] < a_.rank[j]; });
    for (std::size_t j = 0; j < cb_.size(); ++j) by_colour_[cb_[j]].push_back(j);
    image_.assign(a_.rank.size(), kUnset);
    used_.assign(b_.rank.size(), false);
  }

  bool run() { return extend(0); }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  // Lower-rank elements are assigned first, so every down-neighbour of
  // order_[pos] already has an image.
  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    const std::size_t i = order_[pos];
    const auto it = by_colour_.find(ca_[i]);
    if (it == by_colour_.end()) return false;
    for (std::size_t j : it->second) {
      if (used_[j] || !down_compatible(i, j)) continue;
      image_[i] = j;
      used_[j] = true;
      if (extend(pos + 1)) return true;
      used_[j] = false;
      image_[i] = kUnset;
    }
    return false;
  }

  bool down_compatible(std::size_t i, std::size_t j) const {
    const auto& targets = b_.down[j];
    for (auto d : a_.down[i]) {
      if (std::find(targets.begin(), targets.end(), image_[d]) == targets.end()) return false;
    }
    return true;
  }

  const Hasse& a_;
  const Hasse& b_;
  std::vector<std::size_t> ca_;
  std::vector<std::size_t> cb_;
  std::vector<std::size_t> order_;
  std::map<std::size_t, std::vector<std::size_t>> by_colour_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace

bool posets_isomorphic(const BruhatInterval& a, const BruhatInterval& b, const Guards& guards) {
  if (a.size() > guards.iso_max || b.size() > guards.iso_max) {
    throw GuardExceeded("isomorphism search limited to " + std::to_string(guards.iso_max) +
                        " elements");
  }
  if (a.size() != b.size() || a.cover_edges().size() != b.cover_edges().size()) return false;
  if (a.rank_vector() != b.rank_vector()) return false;
  const Hasse ha = hasse_of(a);
  const Hasse hb = hasse_of(b);
  auto [ca, cb] = refine_colours(ha, hb);
  auto histogram = [](std::vector<std::size_t> colours) {
    std::sort(colours.begin(), colours.end());
    return colours;
  };
  if (histogram(ca) != histogram(cb)) return false;
  return IsoSearch(ha, hb, std::move(ca), std::move(cb)).run();
}

Report check_interval_embedding(const Permutation& x, const Permutation& y, const Permutation& v,
                                const Permutation& w, const IndexSet& positions,
                                const EmbeddingCheckOptions& options) {
  Report report;
  const bool xy = bruhat_leq(x, y);
  const bool vw = bruhat_leq(v, w);
  report.add("comparable_xy", xy, xy ? "" : "x is not below y");
  report.add("comparable_vw", vw, vw ? "" : "v is not below w");
  report.add("common_embedding", is_common_embedding(x, y, v, w, positions));
  const auto dxy = static_cast<long>(length(y)) - static_cast<long>(length(x));
  const auto dvw = static_cast<long>(length(w)) - static_cast<long>(length(v));
  report.add("length_difference", dxy == dvw,
             std::to_string(dxy) + " vs " + std::to_string(dvw));
  if (!options.full) return report;
  if (!xy || !vw) {
    report.skip("interval_cardinality", "endpoints not comparable");
    report.skip("poset_isomorphism", "endpoints not comparable");
    return report;
  }
  try {
    const BruhatInterval small = enumerate_interval(x, y, options.guards);
    const BruhatInterval big = enumerate_interval(v, w, options.guards);
    report.add("interval_cardinality", small.size() == big.size(),
               std::to_string(small.size()) + " vs " + std::to_string(big.size()));
    try {
      report.add("poset_isomorphism", posets_isomorphic(small, big, options.guards));
    } catch (const GuardExceeded& e) {
      report.skip("poset_isomorphism", e.what());
    }
  } catch (const GuardExceeded& e) {
    report.skip("interval_cardinality", e.what());
    report.skip("poset_isomorphism", e.what());
  }
  return report;
}

bool is_interval_pattern_embedding(const Permutation& x, const Permutation& y,
                                   const Permutation& v, const Permutation& w,
                                   const IndexSet& positions,
                                   const EmbeddingCheckOptions& options) {
  if (!bruhat_leq(x, y)) throw PermutationError("is_interval_pattern_embedding: x is not below y");
  if (!bruhat_leq(v, w)) throw PermutationError("is_interval_pattern_embedding: v is not below w");
  if (!is_common_embedding(x, y, v, w, positions)) return false;
  if (length(y) - length(x) != length(w) - length(v)) return false;
  if (!options.full) return true;
  const BruhatInterval small = enumerate_interval(x, y, options.guards);
  const BruhatInterval big = enumerate_interval(v, w, options.guards);
  return posets_isomorphic(small, big, options.guards);
}

}  // namespace cellembed
