#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "arrangeo/artin.hpp"
#include "arrangeo/skeleton.hpp"
#include "arrangeo/vword.hpp"
#include "arrangeo/word.hpp"

using namespace arrangeo;

TEST_CASE("free word basics") {
  CHECK(free_reduce({1, 2, -2, -1, 3}) == FreeWord{3});
  CHECK(free_reduce({1, -1}) == FreeWord{});
  CHECK(word_inv({3, -2, 1}) == FreeWord{-1, 2, -3});
  CHECK(word_mul({1, 2}, {-2, 3}) == FreeWord{1, 3});
  CHECK(word_conj({2}, {1}) == FreeWord{1, 2, -1});
  CHECK(word_parse("3 2 1 -2 -3") == FreeWord{3, 2, 1, -2, -3});
  CHECK(word_str({3, 2, 1, -2, -3}) == "3 2 1 -2 -3");
  CHECK(word_str({}) == "e");
  CHECK(word_parse("e") == FreeWord{});
  CHECK_THROWS_AS(word_parse("1 0 2"), std::invalid_argument);
  CHECK_THROWS_AS(word_parse("1 x"), std::invalid_argument);
  CHECK(cyclic_reduce({1, 3, 2, -3, -1}) == FreeWord{2});
  CHECK(cyclic_rotation_equal({1, 2, 3}, {3, 1, 2}));
  CHECK_FALSE(cyclic_rotation_equal({1, 2}, {2, -1}));
  // conjugate products agree after cyclic reduction
  CHECK(cyclic_rotation_equal(word_conj({1, 2, 3}, {-2, 1}), {2, 3, 1}));
}

TEST_CASE("elementary half-twists") {
  auto s1 = ArtinAutomorphism::elementary(3, 1);
  CHECK(s1.img[0] == FreeWord{1, 2, -1});
  CHECK(s1.img[1] == FreeWord{1});
  CHECK(s1.img[2] == FreeWord{3});

  auto s1i = ArtinAutomorphism::elementary(3, 1, -1);
  CHECK(s1.compose_after(s1i).is_identity_map());
  CHECK(s1i.compose_after(s1).is_identity_map());

  CHECK(s1.preserves_product());
  CHECK(s1.permutation() == std::vector<int>{2, 1, 3});

  auto d12 = half_twist_block(3, 1, 2);
  CHECK(d12.same_images(s1));
}

TEST_CASE("block half-twist on three strands") {
  auto d = half_twist_block(3, 1, 3);
  CHECK(d.img[0] == FreeWord{1, 2, 3, -2, -1});
  CHECK(d.img[1] == FreeWord{1, 2, -1});
  CHECK(d.img[2] == FreeWord{1});
  CHECK(d.permutation() == std::vector<int>{3, 2, 1});
  CHECK(d.preserves_product());
}

TEST_CASE("block half-twist properties") {
  const int n = 6;
  auto d = half_twist_block(n, 2, 5);

  SECTION("reverses the block, fixes the rest") {
    auto perm = d.permutation();
    CHECK(perm == std::vector<int>{1, 5, 4, 3, 2, 6});
    CHECK(d.preserves_product());
  }
  SECTION("square is conjugation by the block product") {
    auto d2 = d.compose_after(d);
    FreeWord c{2, 3, 4, 5};
    for (int i = 1; i <= n; ++i) {
      if (i >= 2 && i <= 5) CHECK(d2.img[i - 1] == word_conj({i}, c));
      else CHECK(d2.img[i - 1] == FreeWord{i});
    }
    auto perm = d2.permutation();
    for (int i = 1; i <= n; ++i) CHECK(perm[i - 1] == i);
  }
  SECTION("inverse undoes the twist") {
    auto di = d.inverse();
    CHECK(d.compose_after(di).is_identity_map());
    CHECK(di.compose_after(d).is_identity_map());
  }
}

TEST_CASE("random composites stay braid-like") {
  std::mt19937 rng(20240818u);
  const int n = 7;
  for (int trial = 0; trial < 50; ++trial) {
    auto phi = ArtinAutomorphism::identity(n);
    std::vector<int> perm_expect(n);
    for (int i = 0; i < n; ++i) perm_expect[i] = i + 1;
    int steps = 1 + static_cast<int>(rng() % 6);
    for (int s = 0; s < steps; ++s) {
      int a = 1 + static_cast<int>(rng() % n);
      int b = 1 + static_cast<int>(rng() % n);
      if (a > b) std::swap(a, b);
      if (a == b) b = (b < n) ? b + 1 : b - 1, a = std::min(a, b), b = std::max(a, b);
      auto d = half_twist_block(n, std::min(a, b), std::max(a, b));
      auto dp = d.permutation();
      // phi := phi . d, d innermost
      std::vector<int> pe(n);
      for (int i = 0; i < n; ++i) pe[i] = perm_expect[dp[i] - 1];
      perm_expect = pe;
      phi = phi.compose_after(d);
    }
    CHECK(phi.preserves_product());
    CHECK(phi.permutation() == perm_expect);
    auto inv = phi.inverse();
    CHECK(phi.compose_after(inv).is_identity_map());
    CHECK(inv.compose_after(phi).is_identity_map());
    auto fp1 = phi.fingerprint_hex();
    CHECK(fp1.size() == 16);
    CHECK(fp1 == phi.fingerprint_hex());
  }
}

TEST_CASE("gap-coordinate transport agrees with automorphism transport") {
  SECTION("initial state recovers the identity") {
    auto st = GapCoordinates::initial(5);
    for (int p = 1; p <= 5; ++p) CHECK(st.generator(p) == FreeWord{p});
  }
  SECTION("single elementary twist") {
    auto st = GapCoordinates::initial(4);
    st.twist(2, 3);
    CHECK(st.generator(2) == FreeWord{2, 3, -2});
    CHECK(st.generator(3) == FreeWord{2});
    CHECK(st.generator(1) == FreeWord{1});
    CHECK(st.generator(4) == FreeWord{4});
  }
  SECTION("single block twist matches the half-twist images") {
    auto st = GapCoordinates::initial(6);
    st.twist(2, 5);
    auto d = half_twist_block(6, 2, 5);
    CHECK(st.all_generators() == d.img);
  }
  SECTION("random twist sequences, newest twist applied innermost") {
    std::mt19937 rng(20240819u);
    const int n = 6;
    for (int trial = 0; trial < 60; ++trial) {
      auto st = GapCoordinates::initial(n);
      auto phi = ArtinAutomorphism::identity(n);
      int steps = 1 + static_cast<int>(rng() % 7);
      for (int s = 0; s < steps; ++s) {
        int a = 1 + static_cast<int>(rng() % (n - 1));
        int len = 1 + static_cast<int>(rng() % (n - a));
        st.twist(a, a + len);
        phi = phi.compose_after(half_twist_block(n, a, a + len));
      }
      CHECK(st.all_generators() == phi.img);
    }
  }
}

TEST_CASE("skeleton pull-down") {
  SECTION("two endpoints across passages") {
    Skeleton sk;
    sk.n = 6;
    sk.endpoints = {1, 6};
    sk.passages = {{{2, true}, {3, true}, {4, true}, {5, false}}};
    auto ws = skeleton_to_words(sk);
    REQUIRE(ws.size() == 2);
    CHECK(ws[0] == FreeWord{3, 2, 1, -2, -3});
    CHECK(ws[1] == FreeWord{-4, 6, 4});
  }
  SECTION("three endpoints, endpoint crossings are free") {
    Skeleton sk;
    sk.n = 6;
    sk.endpoints = {1, 2, 6};
    sk.passages = {{}, {{3, true}, {4, true}, {5, false}}};
    auto ws = skeleton_to_words(sk);
    REQUIRE(ws.size() == 3);
    CHECK(ws[0] == FreeWord{3, 1, -3});
    CHECK(ws[1] == FreeWord{3, 2, -3});
    CHECK(ws[2] == FreeWord{-4, 6, 4});
  }
  SECTION("adjacent block without passages") {
    Skeleton sk;
    sk.n = 5;
    sk.endpoints = {2, 3, 4};
    sk.passages = {{}, {}};
    auto ws = skeleton_to_words(sk);
    CHECK(ws == std::vector<FreeWord>{{2}, {3}, {4}});
  }
  SECTION("cut choice changes words only by a common conjugation") {
    Skeleton sk;
    sk.n = 6;
    sk.endpoints = {1, 6};
    sk.passages = {{{2, true}, {3, false}, {4, true}, {5, true}}};
    auto canonical = skeleton_to_words(sk);
    FreeWord prod0;
    for (auto it = canonical.rbegin(); it != canonical.rend(); ++it)
      prod0 = word_mul(prod0, *it);
    for (size_t cut = 0; cut <= sk.passages[0].size(); ++cut) {
      auto ws = skeleton_words_at_cut(sk, cut);
      FreeWord prod;
      for (auto it = ws.rbegin(); it != ws.rend(); ++it) prod = word_mul(prod, *it);
      CHECK(cyclic_rotation_equal(prod, prod0));
    }
  }
  SECTION("malformed skeletons are rejected") {
    Skeleton sk;
    sk.n = 4;
    sk.endpoints = {3};
    sk.passages = {};
    CHECK_THROWS_AS(skeleton_to_words(sk), MalformedSkeleton);
    sk.endpoints = {3, 2};
    sk.passages = {{}};
    CHECK_THROWS_AS(skeleton_to_words(sk), MalformedSkeleton);
    sk.endpoints = {2, 4};
    sk.passages = {{{1, true}}};
    CHECK_THROWS_AS(skeleton_to_words(sk), MalformedSkeleton);
    sk.passages = {{{3, true}, {3, false}}};
    CHECK_THROWS_AS(skeleton_to_words(sk), MalformedSkeleton);
    sk.passages = {{{3, true}}, {}};
    CHECK_THROWS_AS(skeleton_to_words(sk), MalformedSkeleton);
  }
}
