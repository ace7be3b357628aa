#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "statsum/dn_roots.hpp"

using namespace statsum;

namespace {

RingElem u(int i, int j) { return RingElem::variable(weight_name('u', i, j)); }
RingElem v(int i, int j) { return RingElem::variable(weight_name('v', i, j)); }

RootSet d2_pair() { return RootSet(2, {{1, 2, false}, {1, 2, true}}); }

RootSet random_root_set(int n, int max_size, std::mt19937& rng) {
  std::vector<Root> all;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      all.push_back({i, j, false});
      all.push_back({i, j, true});
    }
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<int> sz(1, max_size);
  int size = std::min<int>(sz(rng), static_cast<int>(all.size()));
  all.resize(size);
  return RootSet(n, std::move(all));
}

}  // namespace

TEST_CASE("root vectors") {
  RootSet s(2, {{1, 2, false}, {1, 2, true}});
  auto vecs = root_vectors(s);
  REQUIRE(vecs.size() == 2);
  CHECK(vecs[0] == std::vector<int>{1, -1});
  CHECK(vecs[1] == std::vector<int>{1, 1});
  CHECK(root_vectors(RootSet(3, {})).empty());
}

TEST_CASE("independence, hand cases") {
  SECTION("the doubled pair is independent: a 2-cycle with one minus edge is odd") {
    CHECK(is_independent(d2_pair()));
  }
  SECTION("a plus triangle is dependent") {
    RootSet s(3, {{1, 2, false}, {1, 3, false}, {2, 3, false}});
    CHECK_FALSE(is_independent(s));
  }
  SECTION("an odd triangle is independent") {
    RootSet s(3, {{1, 2, false}, {1, 3, false}, {2, 3, true}});
    CHECK(is_independent(s));
  }
  SECTION("a triangle with two minus edges is dependent (even cycle)") {
    RootSet s(3, {{1, 2, false}, {1, 3, true}, {2, 3, true}});
    CHECK_FALSE(is_independent(s));
  }
}

TEST_CASE("rank and combinatorial criteria agree on every subset") {
  std::mt19937 rng(5050);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + trial % 4;
    RootSet s = random_root_set(n, 12, rng);
    for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
      RootSet sub = s.subset(mask);
      CHECK(is_independent_rank(sub) == is_independent_combinatorial(sub));
    }
  }
}

TEST_CASE("maximal independent subsets") {
  SECTION("plus triangle: the three spanning trees") {
    RootSet s(3, {{1, 2, false}, {1, 3, false}, {2, 3, false}});
    int count = 0;
    for_each_maximal_independent_subset(s, [&](std::uint32_t, const RootSet& sub) {
      ++count;
      CHECK(sub.size() == 2);
    });
    CHECK(count == 3);
  }
  SECTION("the doubled pair is itself maximal") {
    int count = 0;
    for_each_maximal_independent_subset(d2_pair(), [&](std::uint32_t, const RootSet& sub) {
      ++count;
      CHECK(sub.size() == 2);
    });
    CHECK(count == 1);
  }
}

TEST_CASE("A_n spanning tree sum") {
  SECTION("triangle") {
    RootSet s(3, {{1, 2, false}, {1, 3, false}, {2, 3, false}});
    CheckPair c = ntrees_check(s);
    CHECK(c.lhs == u(1, 2) * u(1, 3) + u(1, 2) * u(2, 3) + u(1, 3) * u(2, 3));
    CHECK(c.ok());
  }
  SECTION("single edge") {
    RootSet s(2, {{1, 2, false}});
    CheckPair c = ntrees_check(s);
    CHECK(c.lhs == u(1, 2));
    CHECK(c.ok());
  }
  SECTION("path on three vertices") {
    RootSet s(3, {{1, 2, false}, {2, 3, false}});
    CheckPair c = ntrees_check(s);
    CHECK(c.lhs == u(1, 2) * u(2, 3));
    CHECK(c.ok());
  }
  SECTION("disconnected sets are rejected") {
    RootSet s(4, {{1, 2, false}, {3, 4, false}});
    CHECK_THROWS_AS(ntrees_check(s), NotIrreducibleError);
  }
  SECTION("minus roots are rejected") {
    CHECK_THROWS_AS(ntrees_check(d2_pair()), std::invalid_argument);
  }
}

TEST_CASE("signed Laplacian") {
  SECTION("doubled pair sums its weights") {
    Matrix m = dn_laplacian(d2_pair());
    RingElem sum = u(1, 2) + v(1, 2);
    CHECK(m.at(1, 1) == sum);
    CHECK(m.at(1, 2) == -sum);
  }
  SECTION("plus-only edge is the ordinary Laplacian") {
    Matrix m = dn_laplacian(RootSet(2, {{1, 2, false}}));
    CHECK(m.at(1, 1) == u(1, 2));
  }
  SECTION("empty set gives the zero matrix") {
    Matrix m = dn_laplacian(RootSet(2, {}));
    CHECK(m.at(1, 1).is_zero());
  }
}

TEST_CASE("D_n generating identity, hand cases") {
  SECTION("doubled pair: single subgraph with one minus edge on its cycle") {
    UniPolyCheck c = cardm_check(d2_pair());
    CHECK(c.ok());
    CHECK(c.rhs == UniPoly::monomial(RingElem(-2) * u(1, 2) * v(1, 2), 1));
  }
  SECTION("no minus roots: both sides vanish") {
    RootSet s(3, {{1, 2, false}, {1, 3, false}, {2, 3, false}});
    UniPolyCheck c = cardm_check(s);
    CHECK(c.lhs.is_zero());
    CHECK(c.rhs.is_zero());
  }
  SECTION("odd triangle") {
    RootSet s(3, {{1, 2, false}, {1, 3, false}, {2, 3, true}});
    UniPolyCheck c = cardm_check(s);
    CHECK(c.ok());
    // only H = S spans with one cycle carrying the single minus edge
    CHECK(c.rhs == UniPoly::monomial(RingElem(-2) * u(1, 2) * u(1, 3) * v(2, 3), 1));
  }
}

TEST_CASE("D_n generating identity on random sets") {
  std::mt19937 rng(66);
  int done = 0;
  while (done < 25) {
    int n = 2 + done % 4;
    RootSet s = random_root_set(n, 10, rng);
    UniPolyCheck c = cardm_check(s);
    CHECK(c.ok());
    ++done;
  }
}

TEST_CASE("t = -2 specialization") {
  SECTION("doubled pair evaluates to 4uv") {
    SumdReport rep = sumd_check(d2_pair());
    CHECK(rep.ok());
    CHECK(rep.lhs == RingElem(4) * u(1, 2) * v(1, 2));
    CHECK(rep.families_coincide);
  }
  SECTION("no minus roots: lhs vanishes while maximal subsets are forests") {
    RootSet s(3, {{1, 2, false}, {1, 3, false}, {2, 3, false}});
    SumdReport rep = sumd_check(s);
    CHECK(rep.lhs.is_zero());
    CHECK(rep.rhs.is_zero());
    CHECK_FALSE(rep.families_coincide);
    CHECK_FALSE(rep.rhs_all_maximal.is_zero());
  }
  SECTION("random sets: lhs equals the odd-unicyclic sum") {
    std::mt19937 rng(31337);
    int done = 0;
    while (done < 25) {
      int n = 2 + done % 4;
      RootSet s = random_root_set(n, 10, rng);
      SumdReport rep = sumd_check(s);
      CHECK(rep.ok());
      if (rep.families_coincide) CHECK(rep.rhs_all_maximal == rep.rhs_all_maximal);
      ++done;
    }
  }
}
