#include "cellembed/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "cellembed/kernels.hpp"

namespace cellembed {
namespace {

constexpr std::string_view kCompactOne = "123456789abcdefghijklmnopqrstuvwxyz";
constexpr std::string_view kCompactZero = "0123456789abcdefghijklmnopqrstuvwxyz";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_separator(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }

std::vector<int> parse_verbose(std::string_view body) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < body.size()) {
    if (is_separator(body[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < body.size() && !is_separator(body[j])) ++j;
    const std::string_view token = body.substr(i, j - i);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw PermutationError("not an integer: '" + std::string(token) + "'");
    }
    values.push_back(value);
    i = j;
  }
  return values;
}

std::vector<int> parse_compact(std::string_view body, Base base) {
  if (body.size() > kMaxCompactSize) {
    throw PermutationError("compact form supports n <= 35; use the verbose form");
  }
  const std::string_view alphabet = base == Base::One ? kCompactOne : kCompactZero;
  std::vector<int> values;
  values.reserve(body.size());
  for (char c : body) {
    const auto pos = alphabet.find(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (pos == std::string_view::npos) {
      throw PermutationError(std::string("invalid compact symbol '") + c + "'");
    }
    values.push_back(static_cast<int>(pos) + 1);
  }
  return values;
}

}  // namespace

Permutation::Permutation(std::vector<value_type> word) : word_(std::move(word)) {
  if (word_.empty()) throw PermutationError("empty permutation");
  if (word_.size() > kMaxSize) throw PermutationError("permutation too large (n > 255)");
  std::vector<bool> seen(word_.size() + 1, false);
  for (value_type v : word_) {
    if (v < 1 || v > word_.size()) {
      throw PermutationError("value " + std::to_string(v) + " out of range 1.." +
                             std::to_string(word_.size()));
    }
    if (seen[v]) throw PermutationError("duplicate value " + std::to_string(v));
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  if (n == 0 || n > kMaxSize) throw PermutationError("invalid permutation size");
  std::vector<value_type> word(n);
  for (std::size_t i = 0; i < n; ++i) word[i] = static_cast<value_type>(i + 1);
  return Permutation(std::move(word), Unchecked{});
}

Permutation Permutation::longest(std::size_t n) {
  if (n == 0 || n > kMaxSize) throw PermutationError("invalid permutation size");
  std::vector<value_type> word(n);
  for (std::size_t i = 0; i < n; ++i) word[i] = static_cast<value_type>(n - i);
  return Permutation(std::move(word), Unchecked{});
}

Permutation Permutation::from_values(std::span<const int> values) {
  if (values.size() > kMaxSize) throw PermutationError("permutation too large (n > 255)");
  std::vector<value_type> word;
  word.reserve(values.size());
  for (int v : values) {
    if (v < 1 || v > static_cast<int>(values.size())) {
      throw PermutationError("value " + std::to_string(v) + " out of range 1.." +
                             std::to_string(values.size()));
    }
    word.push_back(static_cast<value_type>(v));
  }
  return Permutation(std::move(word));
}

std::size_t Permutation::position_of(int value) const {
  const auto it = std::find(word_.begin(), word_.end(), static_cast<value_type>(value));
  if (it == word_.end()) throw PermutationError("value not present: " + std::to_string(value));
  return static_cast<std::size_t>(it - word_.begin()) + 1;
}

Permutation Permutation::swap_values(int i) const {
  std::vector<value_type> word = word_;
  for (auto& v : word) {
    if (v == i) {
      v = static_cast<value_type>(i + 1);
    } else if (v == i + 1) {
      v = static_cast<value_type>(i);
    }
  }
  return Permutation(std::move(word), Unchecked{});
}

Permutation Permutation::swap_positions(std::size_t i, std::size_t j) const {
  std::vector<value_type> word = word_;
  std::swap(word[i - 1], word[j - 1]);
  return Permutation(std::move(word), Unchecked{});
}

bool Permutation::has_left_descent(int i) const { return position_of(i + 1) < position_of(i); }

bool Permutation::has_right_descent(std::size_t i) const { return word_[i - 1] > word_[i]; }

std::size_t PermutationHash::operator()(const Permutation& w) const noexcept {
  // FNV-1a over the word bytes.
  std::size_t h = 1469598103934665603ull;
  for (auto v : w.word()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

IndexSet index_range(std::size_t lo, std::size_t hi) {
  IndexSet out;
  for (std::size_t i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

Permutation parse(std::string_view text, Base base) {
  std::string_view body = trim(text);
  bool bracketed = false;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw PermutationError("unbalanced bracket in '" + std::string(text) + "'");
    body = trim(body.substr(1, body.size() - 2));
    bracketed = true;
  }
  if (body.empty()) throw PermutationError("empty permutation");
  const bool has_separator = std::any_of(body.begin(), body.end(), is_separator);

  std::vector<int> values =
      bracketed && !has_separator ? parse_compact(body, base) : parse_verbose(body);
  if (base == Base::Zero && !(bracketed && !has_separator)) {
    for (int& v : values) ++v;
  }
  return Permutation::from_values(values);
}

std::string format(const Permutation& w, Base base, TextForm form) {
  const bool compact =
      form == TextForm::Compact || (form == TextForm::Auto && w.size() <= kMaxCompactSize);
  const int shift = base == Base::Zero ? 1 : 0;
  std::string out;
  if (compact) {
    if (w.size() > kMaxCompactSize) throw PermutationError("compact form supports n <= 35");
    const std::string_view alphabet = base == Base::One ? kCompactOne : kCompactZero;
    out.push_back('[');
    for (auto v : w.word()) out.push_back(alphabet[v - 1]);
    out.push_back(']');
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += std::to_string(w(i + 1) - shift);
  }
  return out;
}

std::size_t length(const Permutation& w) { return kernels::active().count_inversions(w.word()); }

Permutation inverse(const Permutation& w) {
  std::vector<int> inv(w.size());
  for (std::size_t i = 1; i <= w.size(); ++i) inv[w(i) - 1] = static_cast<int>(i);
  return Permutation::from_values(inv);
}

RankMatrix::RankMatrix(const Permutation& w) : n_(w.size()), table_((n_ + 1) * (n_ + 1), 0) {
  for (std::size_t p = 1; p <= n_; ++p) {
    for (std::size_t q = 1; q <= n_; ++q) {
      table_[p * (n_ + 1) + q] =
          table_[(p - 1) * (n_ + 1) + q] + (w(p) <= static_cast<int>(q) ? 1 : 0);
    }
  }
}

bool bruhat_leq(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw PermutationError("bruhat_leq: size mismatch");
  return kernels::active().rank_dominates(x.word(), y.word());
}

Permutation pattern_at(const Permutation& v, const IndexSet& positions) {
  if (positions.empty()) throw PermutationError("pattern_at: empty index set");
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 1 || positions[i] > v.size()) {
      throw PermutationError("pattern_at: index " + std::to_string(positions[i]) + " out of range");
    }
    if (i > 0 && positions[i] <= positions[i - 1]) {
      throw PermutationError("pattern_at: index set must be strictly increasing");
    }
  }
  // Rank of each selected value among the selected values.
  std::vector<int> selected;
  selected.reserve(positions.size());
  for (auto p : positions) selected.push_back(v(p));
  std::vector<int> sorted = selected;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> flat;
  flat.reserve(selected.size());
  for (int value : selected) {
    flat.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), value) -
                                     sorted.begin()) +
                   1);
  }
  return Permutation::from_values(flat);
}

bool is_common_embedding(const Permutation& x, const Permutation& y, const Permutation& v,
                         const Permutation& w, const IndexSet& positions) {
  if (x.size() != y.size() || positions.size() != x.size()) {
    throw PermutationError("is_common_embedding: |positions| must equal the pattern size");
  }
  if (v.size() != w.size()) throw PermutationError("is_common_embedding: v and w differ in size");
  if (pattern_at(v, positions) != x || pattern_at(w, positions) != y) return false;
  std::size_t next = 0;
  for (std::size_t i = 1; i <= v.size(); ++i) {
    if (next < positions.size() && positions[next] == i) {
      ++next;
      continue;
    }
    if (v(i) != w(i)) return false;
  }
  return true;
}

}  // namespace cellembed
