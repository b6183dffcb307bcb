#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "prok/kn_semigroup.hpp"
#include "prok/random.hpp"
#include "prok/kword.hpp"
#include "prok/theta.hpp"
#include "prok/unary.hpp"

using namespace prok;

namespace {

UnaryAlgebra clamp_chain(int top, char letter = 'a') {
  // {0..top} with the letter decrementing and clamping at 0.
  UnaryAlgebra u;
  u.size = top + 1;
  std::vector<int> f(u.size);
  for (int i = 0; i <= top; ++i) f[i] = std::max(0, i - 1);
  u.ops.emplace(letter, f);
  u.distinguished = top;
  return u;
}

// Exhaustive oracle: all transformations realized by words up to a length
// that certainly saturates the closure.
std::set<Transformation> word_closure_oracle(const UnaryAlgebra& u, int max_len) {
  std::set<Transformation> out;
  Transformation id(u.size);
  for (int i = 0; i < u.size; ++i) id[i] = i;
  out.insert(id);
  std::vector<std::string> words{""};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : words)
      for (char a : u.letters()) next.push_back(w + a);
    for (const auto& w : next) {
      Transformation t(u.size);
      for (int x = 0; x < u.size; ++x) t[x] = u.act(w, x);
      out.insert(t);
    }
    words = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("transformation monoids enumerate exactly the word actions") {
  SECTION("two points, one letter constant-ish") {
    UnaryAlgebra u;
    u.size = 2;
    u.ops.emplace('a', std::vector<int>{1, 1});
    u.ops.emplace('b', std::vector<int>{0, 1});
    AGenMonoid m = transformation_monoid(u);
    CHECK(m.size() == 2);
    CHECK(m.gamma.at('a') != m.identity);
    CHECK(m.gamma.at('b') == m.identity);
    CHECK(monoid_transformations(u, m).size() == 2);
  }

  SECTION("one point") {
    UnaryAlgebra u;
    u.size = 1;
    u.ops.emplace('a', std::vector<int>{0});
    u.ops.emplace('b', std::vector<int>{0});
    CHECK(transformation_monoid(u).size() == 1);
  }

  SECTION("clamp chain of four points") {
    UnaryAlgebra u = clamp_chain(3);
    u.ops.emplace('b', std::vector<int>{0, 1, 2, 3});
    AGenMonoid m = transformation_monoid(u);
    CHECK(m.size() == 4);  // id, a, a^2, a^3
    std::set<Transformation> got;
    for (const auto& t : monoid_transformations(u, m)) got.insert(t);
    CHECK(got == word_closure_oracle(u, 6));
  }

  SECTION("oracle agreement on small random-ish algebras") {
    for (int code = 0; code < 81; ++code) {
      UnaryAlgebra u;
      u.size = 2;
      u.ops.emplace('a', std::vector<int>{code % 2, (code / 2) % 2});
      u.ops.emplace('b', std::vector<int>{(code / 4) % 2, (code / 8) % 2});
      AGenMonoid m = transformation_monoid(u);
      std::set<Transformation> got;
      for (const auto& t : monoid_transformations(u, m)) got.insert(t);
      CHECK(got == word_closure_oracle(u, 5));
    }
  }

  SECTION("pairwise-composition fixpoint oracle on three-point algebras") {
    // Independent closure algorithm: saturate {id, a, b} under binary
    // composition instead of extending words letter by letter.
    Rng rng(909);
    for (int trial = 0; trial < 200; ++trial) {
      UnaryAlgebra u;
      u.size = 3;
      std::vector<int> fa(3), fb(3);
      for (int i = 0; i < 3; ++i) {
        fa[i] = static_cast<int>(rng.below(3));
        fb[i] = static_cast<int>(rng.below(3));
      }
      u.ops.emplace('a', fa);
      u.ops.emplace('b', fb);
      std::set<Transformation> closure{{0, 1, 2}, fa, fb};
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<Transformation> snapshot(closure.begin(), closure.end());
        for (const auto& p : snapshot)
          for (const auto& q : snapshot)
            if (closure.insert(compose(p, q)).second) grew = true;
      }
      AGenMonoid m = transformation_monoid(u);
      std::set<Transformation> got;
      for (const auto& t : monoid_transformations(u, m)) got.insert(t);
      CHECK(got == closure);
    }
  }

  SECTION("witnesses are length-lex minimal") {
    UnaryAlgebra u = clamp_chain(3);
    u.ops.emplace('b', std::vector<int>{0, 1, 2, 3});
    AGenMonoid m = transformation_monoid(u);
    CHECK(m.witness[m.identity] == "");
    CHECK(m.witness[m.gamma.at('a')] == "a");
    for (int i = 0; i < m.size(); ++i)
      CHECK(m.witness[i].size() <= 3);
  }
}

TEST_CASE("left action algebras realize monoids as 1-generated algebras") {
  SECTION("idempotent-plus-identity monoid") {
    AGenMonoid m;
    m.table = {{0, 1}, {1, 1}};
    m.identity = 0;
    m.gamma['a'] = 1;
    m.gamma['b'] = 0;
    m.validate();
    UnaryAlgebra u = left_action_algebra(m);
    CHECK(u.size == 2);
    CHECK(u.ops.at('a') == std::vector<int>{1, 1});
    CHECK(u.ops.at('b') == std::vector<int>{0, 1});
    CHECK(u.distinguished == 0);
    CHECK(is_one_generated(u));
  }

  SECTION("trivial monoid") {
    AGenMonoid m;
    m.table = {{0}};
    m.identity = 0;
    m.gamma['a'] = 0;
    m.gamma['b'] = 0;
    CHECK(left_action_algebra(m).size == 1);
  }

  SECTION("truncated-word monoid with identity gives a 7-point algebra") {
    KnSemigroup k2(Alphabet("ab"), 2);
    AGenMonoid m = kn_monoid(k2);
    m.validate();
    UnaryAlgebra u = left_action_algebra(m);
    CHECK(u.size == 7);
    CHECK(is_one_generated(u));
  }
}

TEST_CASE("induced homomorphisms of transformation monoids") {
  SECTION("identity map induces the identity") {
    UnaryAlgebra u = clamp_chain(3);
    AGenMonoid m = transformation_monoid(u);
    std::vector<int> id{0, 1, 2, 3};
    std::vector<int> ind = induced_hom(u, u, id, m, m);
    for (int i = 0; i < m.size(); ++i) CHECK(ind[i] == i);
  }

  SECTION("collapse onto a point") {
    UnaryAlgebra u;
    u.size = 2;
    u.ops.emplace('a', std::vector<int>{1, 0});
    UnaryAlgebra v;
    v.size = 1;
    v.ops.emplace('a', std::vector<int>{0});
    AGenMonoid mu = transformation_monoid(u);
    AGenMonoid mv = transformation_monoid(v);
    std::vector<int> ind = induced_hom(u, v, std::vector<int>{0, 0}, mu, mv);
    CHECK(mv.size() == 1);
    for (int i = 0; i < mu.size(); ++i) CHECK(ind[i] == 0);
  }

  SECTION("clamp chain onto the two-point sink") {
    UnaryAlgebra u = clamp_chain(3);
    UnaryAlgebra v;
    v.size = 2;
    v.ops.emplace('a', std::vector<int>{0, 0});
    // 0,1,2 -> 0 and 3 -> 1
    std::vector<int> phi{0, 0, 0, 1};
    AGenMonoid mu = transformation_monoid(u);
    AGenMonoid mv = transformation_monoid(v);
    REQUIRE(mu.size() == 4);
    REQUIRE(mv.size() == 2);
    std::vector<int> ind = induced_hom(u, v, phi, mu, mv);
    // a^k upstairs maps to a^min(k,1) downstairs
    CHECK(ind[mu.identity] == mv.identity);
    for (int i = 0; i < mu.size(); ++i)
      if (i != mu.identity) CHECK(ind[i] == mv.gamma.at('a'));
  }

  SECTION("non-homomorphisms are rejected") {
    UnaryAlgebra u = clamp_chain(2);
    AGenMonoid m = transformation_monoid(u);
    CHECK_THROWS_AS(induced_hom(u, u, std::vector<int>{2, 1, 0}, m, m),
                    std::invalid_argument);
    // swap is a bijection but not a homomorphism, and non-onto maps fail too
    CHECK_THROWS_AS(induced_hom(u, u, std::vector<int>{0, 0, 0}, m, m),
                    std::invalid_argument);
  }
}

TEST_CASE("evaluation at the generator collapses the action algebra onto the original") {
  SECTION("two-point sink with identity letter") {
    UnaryAlgebra u;
    u.size = 2;
    u.ops.emplace('a', std::vector<int>{0, 0});
    u.ops.emplace('b', std::vector<int>{0, 1});
    u.distinguished = 1;
    AGenMonoid m = transformation_monoid(u);
    CHECK(m.size() == 2);
    std::vector<int> beta = evaluation_collapse(u, m);
    std::set<int> image(beta.begin(), beta.end());
    CHECK(image.size() == 2);
  }

  SECTION("one point") {
    UnaryAlgebra u;
    u.size = 1;
    u.ops.emplace('a', std::vector<int>{0});
    u.distinguished = 0;
    CHECK(evaluation_collapse(u, transformation_monoid(u)).size() == 1);
  }

  SECTION("action algebras of monoids collapse isomorphically") {
    for (const UnaryAlgebra& seed : enumerate_one_generated(2, "ab")) {
      AGenMonoid g = transformation_monoid(seed);
      UnaryAlgebra u = left_action_algebra(g);
      AGenMonoid m = transformation_monoid(u);
      std::vector<int> beta = evaluation_collapse(u, m);
      std::set<int> image(beta.begin(), beta.end());
      CHECK(static_cast<int>(image.size()) == u.size);  // bijective here
      CHECK(m.size() == u.size);
    }
  }

  SECTION("precondition is enforced") {
    UnaryAlgebra u = clamp_chain(2);
    u.distinguished.reset();
    CHECK_THROWS_AS(evaluation_collapse(u, transformation_monoid(u)),
                    std::invalid_argument);
  }
}

TEST_CASE("monoids embed in the transformation monoid of their action algebra") {
  SECTION("trivial monoid") {
    AGenMonoid m;
    m.table = {{0}};
    m.identity = 0;
    m.gamma['a'] = 0;
    CHECK(left_action_faithful(m));
  }

  SECTION("two-element group with one redundant letter") {
    AGenMonoid z2;
    z2.table = {{0, 1}, {1, 0}};
    z2.identity = 0;
    z2.gamma['a'] = 1;
    z2.gamma['b'] = 0;
    z2.validate();
    CHECK(left_action_faithful(z2));
  }

  SECTION("all transformation monoids of small algebras") {
    for (const UnaryAlgebra& u : enumerate_one_generated(3, "ab")) {
      AGenMonoid g = transformation_monoid(u);
      CHECK(left_action_faithful(g));
    }
  }
}

TEST_CASE("homomorphism existence for pointed algebras and generated monoids") {
  UnaryAlgebra u = clamp_chain(3);
  CHECK(hom_exists_algebra(u, u));

  AGenMonoid g = transformation_monoid(clamp_chain(3));
  AGenMonoid trivial;
  trivial.table = {{0}};
  trivial.identity = 0;
  trivial.gamma['a'] = 0;
  CHECK(hom_exists_monoid(g, trivial));

  // Quotients receive maps from the freer object, never conversely when the
  // kernel strictly shrinks.
  UnaryAlgebra big = clamp_chain(4);
  UnaryAlgebra small = clamp_chain(2);
  CHECK(hom_exists_algebra(big, small));
  CHECK_FALSE(hom_exists_algebra(small, big));

  AGenMonoid gb = transformation_monoid(big);
  AGenMonoid gs = transformation_monoid(small);
  CHECK(hom_exists_monoid(gb, gs));
  CHECK_FALSE(hom_exists_monoid(gs, gb));

  UnaryAlgebra no_dist = clamp_chain(2);
  no_dist.distinguished.reset();
  CHECK_THROWS_AS(hom_exists_algebra(no_dist, no_dist), std::invalid_argument);

  AGenMonoid other_letters;
  other_letters.table = {{0}};
  other_letters.identity = 0;
  other_letters.gamma['c'] = 0;
  CHECK_THROWS_AS(hom_exists_monoid(g, other_letters), std::invalid_argument);
}

TEST_CASE("the adjunction biconditional holds on the small corpus") {
  std::vector<UnaryAlgebra> algebras = enumerate_one_generated(2, "ab");
  std::vector<AGenMonoid> monoids;
  std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::pair<char, int>>>> seen;
  for (const UnaryAlgebra& u : algebras) {
    AGenMonoid g = transformation_monoid(u);
    std::vector<std::pair<char, int>> gkey(g.gamma.begin(), g.gamma.end());
    if (seen.emplace(g.table, gkey).second) monoids.push_back(g);
  }
  REQUIRE(!algebras.empty());
  REQUIRE(!monoids.empty());
  for (const AGenMonoid& g : monoids)
    for (const UnaryAlgebra& u : algebras) {
      AdjunctionResult r = adjunction_check(g, u);
      INFO("monoid size " << g.size() << ", algebra size " << u.size);
      CHECK(r.agree());
    }

  SECTION("a monoid paired with its own source algebra has morphisms both ways") {
    for (const UnaryAlgebra& u : algebras) {
      AdjunctionResult r = adjunction_check(transformation_monoid(u), u);
      CHECK(r.algebra_side);
      CHECK(r.monoid_side);
    }
  }
}

TEST_CASE("merging homomorphisms from the clamp chain collapse an initial segment") {
  CollapseReport r = collapse_check(12, 3);
  CHECK(r.algebras > 0);
  CHECK(r.homomorphisms > 0);
  CHECK(r.violations.empty());

  CHECK_THROWS_AS(collapse_check(1, 2), std::invalid_argument);
}

TEST_CASE("towers of onto homomorphisms are functorial and separating") {
  SECTION("clamp chains") {
    std::vector<UnaryAlgebra> levels{clamp_chain(4), clamp_chain(3), clamp_chain(2)};
    // The only onto homomorphisms between decrement chains decrement again.
    std::vector<std::vector<int>> maps{{0, 0, 1, 2, 3}, {0, 0, 1, 2}};
    TowerReport r = tower_check(levels, maps);
    CHECK(r.functorial);
    int total = 0;
    for (int c : r.separation_histogram) total += c;
    CHECK(total == 5 * 4 / 2);  // Gamma(C_4) has 5 elements
  }

  SECTION("constant tower") {
    UnaryAlgebra u = clamp_chain(2);
    std::vector<std::vector<int>> maps{{0, 1, 2}, {0, 1, 2}};
    TowerReport r = tower_check({u, u, u}, maps);
    CHECK(r.functorial);
  }

  SECTION("truncation towers of word monoids") {
    std::vector<UnaryAlgebra> levels;
    std::vector<std::vector<int>> maps;
    for (int n = 5; n >= 2; --n)
      levels.push_back(left_action_algebra(kn_monoid(KnSemigroup(Alphabet("ab"), n))));
    for (int i = 0; i + 1 < static_cast<int>(levels.size()); ++i) {
      KnSemigroup hi(Alphabet("ab"), 5 - i);
      KnSemigroup lo(Alphabet("ab"), 5 - i - 1);
      std::vector<int> phi(levels[i].size);
      phi[0] = 0;  // identity to identity
      for (int j = 1; j < levels[i].size; ++j) {
        std::string w = hi.word_of(j - 1);
        if (static_cast<int>(w.size()) > lo.n()) w.resize(lo.n());
        phi[j] = lo.index_of(w) + 1;
      }
      maps.push_back(std::move(phi));
    }
    TowerReport r = tower_check(levels, maps);
    CHECK(r.functorial);
  }

  SECTION("non-towers are rejected") {
    std::vector<UnaryAlgebra> levels{clamp_chain(3), clamp_chain(2)};
    std::vector<std::vector<int>> bad{{0, 1, 2, 2}};  // not a homomorphism
    CHECK_THROWS_AS(tower_check(levels, bad), std::invalid_argument);
  }
}

TEST_CASE("the word-action algebra matches the adjoined-identity monoid") {
  // Every element of the action algebra of the truncated-word monoid is its
  // witnessing word acting on the distinguished element.
  for (int n = 2; n <= 4; ++n) {
    KnSemigroup kn(Alphabet("ab"), n);
    AGenMonoid m = kn_monoid(kn);
    UnaryAlgebra u = left_action_algebra(m);
    AGenMonoid m2 = transformation_monoid(u);
    REQUIRE(m2.size() == u.size);
    std::vector<int> beta = evaluation_collapse(u, m2);
    std::set<int> image(beta.begin(), beta.end());
    CHECK(static_cast<int>(image.size()) == u.size);
    CHECK(left_action_faithful(m));
    for (int i = 0; i < m2.size(); ++i)
      CHECK(u.act(m2.witness[i], *u.distinguished) == beta[i]);
  }
}

TEST_CASE("letter actions on words are compatible with the swap-tail classes") {
  // The one-generated word algebra: letters act by left concatenation.
  auto act = [](char a, const KWord& w) { return multiply(KWord::finite(std::string(1, a)), w); };
  std::vector<std::pair<KWord, KWord>> pairs{
      {KWord::omega("a", "b"), KWord::omega("b", "a")},
      {multiply(KWord::finite("ba"), KWord::omega("a", "b")),
       multiply(KWord::finite("ba"), KWord::omega("b", "a"))}};
  for (const auto& [x, y] : pairs) {
    REQUIRE(swap_tail_related(x, y));
    for (char a : {'a', 'b'}) CHECK(swap_tail_related(act(a, x), act(a, y)));
  }
}
