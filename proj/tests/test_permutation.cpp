#include <doctest.h>

#include <random>

#include "cellembed/cells.hpp"
#include "cellembed/permutation.hpp"
#include "oracles.hpp"

using namespace cellembed;

TEST_CASE("parse compact and verbose forms") {
  CHECK(parse("[3142]").values() == std::vector<int>{3, 1, 4, 2});
  CHECK(parse("3 1 4 2").values() == std::vector<int>{3, 1, 4, 2});
  CHECK(parse("3,1,4,2").values() == std::vector<int>{3, 1, 4, 2});
  CHECK(parse("[3, 1, 4, 2]").values() == std::vector<int>{3, 1, 4, 2});
  CHECK(parse("[012]", Base::Zero) == Permutation::identity(3));
  CHECK(parse("2 0 1", Base::Zero).values() == std::vector<int>{3, 1, 2});
  CHECK(parse("[895621a743cb]").values() ==
        std::vector<int>{8, 9, 5, 6, 2, 1, 10, 7, 4, 3, 12, 11});
  CHECK(parse("[895621A743CB]") == parse("[895621a743cb]"));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse("[3143]"), PermutationError);   // duplicate
  CHECK_THROWS_AS(parse("[3152]"), PermutationError);   // out of range
  CHECK_THROWS_AS(parse("[]"), PermutationError);       // empty
  CHECK_THROWS_AS(parse(""), PermutationError);
  CHECK_THROWS_AS(parse("1 2 x"), PermutationError);
  CHECK_THROWS_AS(parse("[0123]"), PermutationError);   // 0 is not a 1-based symbol
  CHECK_THROWS_AS(parse("[123"), PermutationError);
  // 36 symbols cannot be written compactly.
  CHECK_THROWS_AS(parse("[123456789abcdefghijklmnopqrstuvwxyz1]"), PermutationError);
}

TEST_CASE("format/parse round trip for both bases and forms, n <= 35") {
  std::mt19937 rng(7);
  for (std::size_t n = 1; n <= 35; ++n) {
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    for (int rep = 0; rep < 5; ++rep) {
      std::shuffle(word.begin(), word.end(), rng);
      const Permutation w = Permutation::from_values(word);
      for (Base base : {Base::One, Base::Zero}) {
        for (TextForm form : {TextForm::Compact, TextForm::Verbose}) {
          CHECK(parse(format(w, base, form), base) == w);
        }
      }
    }
  }
  // Past 35 the automatic form is verbose.
  const Permutation big = Permutation::longest(40);
  CHECK(format(big).front() == '4');
  CHECK(parse(format(big)) == big);
  CHECK_THROWS_AS(format(big, Base::One, TextForm::Compact), PermutationError);
}

TEST_CASE("length") {
  CHECK(length(Permutation::identity(6)) == 0);
  for (std::size_t n = 1; n <= 30; ++n) CHECK(length(Permutation::longest(n)) == n * (n - 1) / 2);
  CHECK(length(parse("[3142]")) == oracle::inversions({3, 1, 4, 2}));
  CHECK(length(parse("[3142]")) == 3);
}

TEST_CASE("length of w plus length of w*w0 is the maximum, S_5") {
  for (const auto& w : all_permutations(5)) {
    std::vector<int> reversed = w.values();
    std::reverse(reversed.begin(), reversed.end());
    CHECK(length(w) + length(Permutation::from_values(reversed)) == 10);
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation::identity(4)) == Permutation::identity(4));
  CHECK(inverse(parse("[3142]")) == parse("[2413]"));
  CHECK(inverse(parse("[2143]")) == parse("[2143]"));
  for (const auto& w : all_permutations(5)) {
    CHECK(inverse(inverse(w)) == w);
    const Permutation inv = inverse(w);
    for (std::size_t i = 1; i <= 5; ++i) CHECK(inv(static_cast<std::size_t>(w(i))) == static_cast<int>(i));
  }
}

TEST_CASE("rank matrix boundary values and monotonicity") {
  const Permutation w = parse("[895621a743cb]");
  const RankMatrix k(w);
  const std::size_t n = w.size();
  for (std::size_t p = 1; p <= n; ++p) {
    CHECK(k(p, n) == static_cast<int>(p));
    CHECK(k(n, p) == static_cast<int>(p));
    for (std::size_t q = 1; q <= n; ++q) {
      CHECK(k(p, q) >= k(p - 1, q));
      CHECK(k(p, q) >= k(p, q - 1));
    }
  }
}

TEST_CASE("bruhat order agrees with the subword criterion on S_4") {
  const auto elems = all_permutations(4);
  for (const auto& x : elems) {
    CHECK(bruhat_leq(Permutation::identity(4), x));
    CHECK(bruhat_leq(x, x));
    for (const auto& y : elems) CHECK(bruhat_leq(x, y) == oracle::bruhat_leq_subword(x, y));
  }
  CHECK_THROWS_AS(bruhat_leq(Permutation::identity(3), Permutation::identity(4)), PermutationError);
}

TEST_CASE("bruhat order is a partial order on S_4") {
  const auto elems = all_permutations(4);
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      if (x != y && bruhat_leq(x, y)) CHECK_FALSE(bruhat_leq(y, x));
      if (!bruhat_leq(x, y)) continue;
      for (const auto& z : elems) {
        if (bruhat_leq(y, z)) CHECK(bruhat_leq(x, z));
      }
    }
  }
}

TEST_CASE("bruhat order is graded by length on S_5") {
  const auto elems = all_permutations(5);
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      if (!bruhat_leq(x, y)) continue;
      CHECK(length(x) <= length(y));
      CHECK((length(x) == length(y)) == (x == y));
    }
  }
}

TEST_CASE("pattern_at") {
  const Permutation v = parse("[895621a743cb]");
  CHECK(pattern_at(v, index_range(5, 12)) == parse("[21654387]"));
  CHECK(pattern_at(v, index_range(1, 12)) == v);
  CHECK(pattern_at(v, {7}) == Permutation::identity(1));
  CHECK_THROWS_AS(pattern_at(v, {0, 2}), PermutationError);
  CHECK_THROWS_AS(pattern_at(v, {3, 13}), PermutationError);
  CHECK_THROWS_AS(pattern_at(v, {3, 3}), PermutationError);
  CHECK_THROWS_AS(pattern_at(v, {}), PermutationError);
}

TEST_CASE("pattern_at keeps exactly the inversions inside the index set, S_5") {
  for (const auto& v : all_permutations(5)) {
    for (unsigned mask = 1; mask < 32; ++mask) {
      IndexSet phi;
      for (std::size_t i = 0; i < 5; ++i) {
        if (mask & (1u << i)) phi.push_back(i + 1);
      }
      std::vector<int> selected;
      for (auto p : phi) selected.push_back(v(p));
      CHECK(length(pattern_at(v, phi)) == oracle::inversions(selected));
    }
  }
}

TEST_CASE("is_common_embedding") {
  const Permutation x = parse("[21654387]"), y = parse("[62845173]");
  const Permutation v = parse("[895621a743cb]"), w = parse("[8956a2c471b3]");
  CHECK(is_common_embedding(x, y, v, w, index_range(5, 12)));
  CHECK(is_common_embedding(x, x, x, x, index_range(1, 8)));
  // Agreement outside the positions fails when the prefix differs.
  CHECK_FALSE(is_common_embedding(parse("[12]"), parse("[12]"), parse("[123]"), parse("[213]"),
                                  {2, 3}));
  CHECK_FALSE(is_common_embedding(x, y, v, w, index_range(4, 11)));
  CHECK_THROWS_AS(is_common_embedding(x, y, v, w, index_range(5, 11)), PermutationError);
}

TEST_CASE("descents and simple reflections") {
  const Permutation w = parse("[3142]");
  CHECK(w.has_left_descent(2));   // 3 before 2
  CHECK_FALSE(w.has_left_descent(1));
  CHECK(w.has_right_descent(1));  // 3 > 1
  CHECK_FALSE(w.has_right_descent(2));
  CHECK(w.swap_values(1) == parse("[3241]"));
  CHECK(w.swap_positions(1, 4) == parse("[2143]"));
}
