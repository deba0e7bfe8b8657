#include "cellembed/klpoly.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "cellembed/interval.hpp"

namespace cellembed {

KLPolynomial::KLPolynomial(std::vector<Coeff> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void KLPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void KLPolynomial::add_scaled(const KLPolynomial& other, Coeff factor, std::size_t shift) {
  if (other.is_zero() || factor == 0) return;
  if (coeffs_.size() < other.coeffs_.size() + shift) coeffs_.resize(other.coeffs_.size() + shift, 0);
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d + shift] += factor * other.coeffs_[d];
  trim();
}

std::string KLPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    Coeff c = coeffs_[d];
    if (c == 0) continue;
    if (!first) {
      out << (c < 0 ? " - " : " + ");
      c = c < 0 ? -c : c;
    } else if (c < 0) {
      out << '-';
      c = -c;
    }
    first = false;
    if (d == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c;
    out << 'q';
    if (d > 1) out << '^' << d;
  }
  return out.str();
}

std::vector<Permutation> lower_ideal(const Permutation& y, std::size_t max_size) {
  std::vector<Permutation> out{y};
  std::unordered_set<Permutation> seen{y};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (auto& c : lower_covers(out[head])) {
      if (!seen.insert(c).second) continue;
      if (out.size() >= max_size) {
        throw GuardExceeded("order ideal below " + format(y) + " exceeds " +
                            std::to_string(max_size) + " elements");
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

struct KLEngine::Column {
  std::unordered_map<Permutation, std::size_t> index;
  std::vector<Permutation> elements;
  std::vector<KLPolynomial> polys;

  const KLPolynomial* find(const Permutation& z) const {
    const auto it = index.find(z);
    return it == index.end() ? nullptr : &polys[it->second];
  }
};

KLEngine::KLEngine(Guards guards) : guards_(guards) { guards_.validate(); }
KLEngine::~KLEngine() = default;
KLEngine::KLEngine(KLEngine&&) noexcept = default;
KLEngine& KLEngine::operator=(KLEngine&&) noexcept = default;

std::size_t KLEngine::cached_columns() const { return columns_.size(); }

const KLEngine::Column& KLEngine::column(const Permutation& y) {
  if (const auto it = columns_.find(y); it != columns_.end()) return *it->second;

  auto col = std::make_unique<Column>();
  col->elements = lower_ideal(y, guards_.ideal_max);
  col->index.reserve(col->elements.size());
  for (std::size_t i = 0; i < col->elements.size(); ++i) col->index.emplace(col->elements[i], i);
  col->polys.resize(col->elements.size());

  int s = 0;
  for (int i = 1; i < static_cast<int>(y.size()); ++i) {
    if (y.has_left_descent(i)) {
      s = i;
      break;
    }
  }
  if (s == 0) {
    // y is the identity.
    col->polys[0] = KLPolynomial::one();
    return *columns_.emplace(y, std::move(col)).first->second;
  }

  const Permutation v = y.swap_values(s);
  const Column& below = column(v);
  const std::size_t len_y = length(y);
  const std::size_t len_v = len_y - 1;

  struct Correction {
    const Column* column;
    KLPolynomial::Coeff mu;
    std::size_t shift;
  };
  std::vector<Correction> corrections;
  for (std::size_t i = 0; i < below.elements.size(); ++i) {
    const Permutation& z = below.elements[i];
    if (z == v || !z.has_left_descent(s)) continue;
    const std::size_t len_z = length(z);
    if ((len_v - len_z) % 2 == 0) continue;
    const auto m = below.polys[i][(len_v - len_z - 1) / 2];
    if (m == 0) continue;
    corrections.push_back(Correction{&column(z), m, (len_y - len_z) / 2});
  }

  for (std::size_t i = 0; i < col->elements.size(); ++i) {
    const Permutation& x = col->elements[i];
    const Permutation sx = x.swap_values(s);
    const std::size_t c = x.has_left_descent(s) ? 1 : 0;
    KLPolynomial p;
    if (const auto* a = below.find(sx)) p.add_scaled(*a, 1, 1 - c);
    if (const auto* b = below.find(x)) p.add_scaled(*b, 1, c);
    for (const auto& corr : corrections) {
      if (const auto* pz = corr.column->find(x)) p.add_scaled(*pz, -corr.mu, corr.shift);
    }
    col->polys[i] = std::move(p);
  }
  return *columns_.emplace(y, std::move(col)).first->second;
}

KLPolynomial KLEngine::polynomial(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw PermutationError("kl_polynomial: size mismatch");
  if (!bruhat_leq(x, y)) return {};
  const Column& col = column(y);
  const auto* p = col.find(x);
  return p != nullptr ? *p : KLPolynomial{};
}

KLPolynomial::Coeff KLEngine::mu(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw PermutationError("mu: size mismatch");
  const std::size_t lx = length(x);
  const std::size_t ly = length(y);
  if (ly <= lx || (ly - lx) % 2 == 0) return 0;
  return polynomial(x, y)[(ly - lx - 1) / 2];
}

KLPolynomial kl_polynomial(const Permutation& x, const Permutation& y, const Guards& guards) {
  KLEngine engine(guards);
  return engine.polynomial(x, y);
}

KLPolynomial::Coeff mu(const Permutation& x, const Permutation& y, const Guards& guards) {
  KLEngine engine(guards);
  return engine.mu(x, y);
}

Cells kl_cells(std::size_t n, const Guards& guards) {
  if (n == 0 || n > kMaxKlCellsSize) {
    throw std::invalid_argument("kl_cells: n must be in 1.." + std::to_string(kMaxKlCellsSize));
  }
  const std::vector<Permutation> elems = all_permutations(n);
  const std::size_t count = elems.size();

  std::vector<std::uint32_t> right_descents(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      if (elems[i].has_right_descent(j)) right_descents[i] |= 1u << j;
    }
  }
  auto not_contained = [&](std::size_t a, std::size_t b) {
    return (right_descents[a] & ~right_descents[b]) != 0;
  };

  KLEngine engine(guards);
  std::vector<std::vector<std::size_t>> out(count);
  for (std::size_t yi = 0; yi < count; ++yi) {
    for (std::size_t xi = 0; xi < count; ++xi) {
      if (xi == yi || engine.mu(elems[xi], elems[yi]) == 0) continue;
      // x and y are joined in the W-graph.
      if (not_contained(xi, yi)) out[xi].push_back(yi);
      if (not_contained(yi, xi)) out[yi].push_back(xi);
    }
  }

  // reach[i][j]: j reachable from i.
  std::vector<std::vector<bool>> reach(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i) {
    std::deque<std::size_t> queue{i};
    reach[i][i] = true;
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (auto b : out[a]) {
        if (!reach[i][b]) {
          reach[i][b] = true;
          queue.push_back(b);
        }
      }
    }
  }
  Cells cells;
  std::vector<bool> assigned(count, false);
  for (std::size_t i = 0; i < count; ++i) {
    if (assigned[i]) continue;
    std::vector<Permutation> cell;
    for (std::size_t j = i; j < count; ++j) {
      if (!assigned[j] && reach[i][j] && reach[j][i]) {
        assigned[j] = true;
        cell.push_back(elems[j]);
      }
    }
    cells.push_back(std::move(cell));
  }
  canonicalize(cells);
  return cells;
}

}  // namespace cellembed
