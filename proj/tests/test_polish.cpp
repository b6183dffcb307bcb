#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "prok/polish.hpp"
#include "prok/random.hpp"

using namespace prok;

namespace {

Signature sig_uv() {
  return Signature({{'u', 2}, {'v', 3}});
}

Term random_term(Rng& rng, const Signature& sig, int max_depth, int max_var = 3) {
  if (max_depth <= 1 || rng.below(3) == 0)
    return Term::var(static_cast<int>(rng.between(1, max_var)));
  std::vector<char> syms;
  for (const auto& [s, n] : sig.arities()) syms.push_back(s);
  char s = syms[rng.below(syms.size())];
  std::vector<Term> children;
  for (int i = 0; i < sig.arity(s); ++i)
    children.push_back(random_term(rng, sig, max_depth - 1, max_var));
  return Term::app(s, std::move(children));
}

// Fully parenthesized form: injective by construction, independent of the
// codec under test, so it can deduplicate enumerated terms.
std::string paren(const Term& t) {
  if (t.is_variable) return "x" + std::to_string(t.variable);
  std::string s(1, t.symbol);
  s += "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) s += ",";
    s += paren(t.children[i]);
  }
  return s + ")";
}

// All terms of depth <= max_depth over {u binary, f unary, x1}.
std::vector<Term> all_terms(int max_depth) {
  std::vector<Term> cur{Term::var(1)};
  for (int d = 2; d <= max_depth; ++d) {
    std::vector<Term> next = cur;
    for (const Term& t : cur) next.push_back(Term::app('f', {t}));
    for (const Term& t1 : cur)
      for (const Term& t2 : cur) next.push_back(Term::app('u', {t1, t2}));
    std::set<std::string> seen;
    std::vector<Term> dedup;
    for (const Term& t : next)
      if (seen.insert(paren(t)).second) dedup.push_back(t);
    cur = std::move(dedup);
  }
  return cur;
}

}  // namespace

TEST_CASE("encoding drops parentheses and keeps preorder") {
  // u(v(x1, u(x2, x1), x3), u(x3, x2))
  Term t = Term::app(
      'u', {Term::app('v', {Term::var(1), Term::app('u', {Term::var(2), Term::var(1)}),
                            Term::var(3)}),
            Term::app('u', {Term::var(3), Term::var(2)})});
  CHECK(encode(t) == "uvx1ux2x1x3ux3x2");

  Signature chain({{'u', 1}, {'v', 1}});
  CHECK(encode(Term::app('u', {Term::app('v', {Term::var(1)})})) == "uvx1");

  Signature consts({{'c', 0}});
  CHECK(encode(Term::app('c')) == "c");
  CHECK(node_count(t) == 10);
}

TEST_CASE("decoding inverts encoding and reports three error classes") {
  Signature sig = sig_uv();
  Term t = Term::app(
      'u', {Term::app('v', {Term::var(1), Term::app('u', {Term::var(2), Term::var(1)}),
                            Term::var(3)}),
            Term::app('u', {Term::var(3), Term::var(2)})});
  CHECK(decode("uvx1ux2x1x3ux3x2", sig) == t);

  SECTION("truncated input") {
    try {
      decode("uu", sig);
      FAIL("expected a decode error");
    } catch (const DecodeError& e) {
      CHECK(e.kind() == DecodeErrorKind::Truncated);
      CHECK(e.position() == 2);
    }
  }
  SECTION("trailing surplus") {
    try {
      decode("x1x2", sig);
      FAIL("expected a decode error");
    } catch (const DecodeError& e) {
      CHECK(e.kind() == DecodeErrorKind::TrailingSurplus);
      CHECK(e.position() == 2);
    }
  }
  SECTION("unknown symbol") {
    try {
      decode("uqx1", sig);
      FAIL("expected a decode error");
    } catch (const DecodeError& e) {
      CHECK(e.kind() == DecodeErrorKind::UnknownSymbol);
      CHECK(e.position() == 1);
    }
  }

  SECTION("random round trips") {
    Rng rng(2025);
    for (int i = 0; i < 10000; ++i) {
      Term t2 = random_term(rng, sig, 1 + static_cast<int>(rng.below(8)));
      std::string w = encode(t2);
      CHECK(decode(w, sig) == t2);
    }
  }
}

TEST_CASE("signatures refuse variable shadowing") {
  CHECK_THROWS_AS(Signature({{'x', 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Signature({{'3', 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Signature({{'u', -1}}), std::invalid_argument);
}

TEST_CASE("encoding is injective on bounded-depth terms") {
  std::vector<Term> terms = all_terms(4);
  std::set<std::string> codes;
  for (const Term& t : terms) codes.insert(encode(t));
  CHECK(codes.size() == terms.size());
  CHECK(terms.size() == 183);  // 13 at depth <= 3, then 10 + 160 new
}

TEST_CASE("the nested collision terms match their closed-form encodings") {
  CollisionTerms c1 = build_collision_terms(1, 2);
  CHECK(encode(c1.t_term) == "uux1x1ux1x1");
  CHECK(c1.s_term == Term::app('u', {c1.t_term, Term::var(1)}));

  CollisionTerms c2 = build_collision_terms(2, 2);
  CHECK(node_count(c2.t_term) == 17);  // u^2 (u^2 x^3)^3 flattened

  CHECK_THROWS_AS(build_collision_terms(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_collision_terms(0, 2), std::invalid_argument);
}

TEST_CASE("the flip algebra separates the collision terms") {
  for (int n : {2, 3}) {
    Signature sig({{'u', n}});
    TermAlgebra alg = flip_algebra(sig, n);
    CHECK(alg.apply('u', std::vector<int>(n, 1)) == 0);
    std::vector<int> args(n, 0);
    CHECK(alg.apply('u', args) == 1);
    for (int k = 1; k <= 8; ++k) {
      CollisionTerms c = build_collision_terms(k, n);
      std::map<int, int> assign{{1, 0}, {2, 0}, {3, 0}};
      CHECK(evaluate(c.t_term, alg, assign) == 0);
      CHECK(evaluate(c.s_term, alg, assign) == 1);
    }
  }
  CHECK_THROWS_AS(evaluate(Term::var(1), flip_algebra(sig_uv(), 2), {}),
                  std::invalid_argument);
}

TEST_CASE("the idempotent-power identity holds across finite monoids") {
  SECTION("cyclic group of order three") {
    std::vector<std::vector<int>> table(3, std::vector<int>(3));
    std::vector<std::string> names{"0", "1", "2"};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) table[i][j] = (i + j) % 3;
    FinSemigroup z3(names, table);
    OmegaIdentityReport r;
    check_omega_power_identity(z3, 0, r);
    CHECK(r.violations.empty());
    // In a group the omega power is the identity, so all three sides are x.
    int u = 1, x = 2;
    int uw = omega_power_fin(z3, u);
    CHECK(uw == 0);
    CHECK(z3.mul(uw, z3.mul(omega_power_fin(z3, x), x)) == x);
  }

  SECTION("small self-map monoid corpus") {
    OmegaIdentityReport r;
    std::vector<FinSemigroup> corpus = self_map_monoid_corpus(2);
    REQUIRE(!corpus.empty());
    for (std::size_t i = 0; i < corpus.size(); ++i)
      check_omega_power_identity(corpus[i], static_cast<int>(i), r);
    r.monoids = static_cast<int>(corpus.size());
    CHECK(r.violations.empty());
    CHECK(r.pairs > 0);
  }
}

TEST_CASE("separating monoids multiply as maps acting on points") {
  SeparatingMonoid m(2);
  CHECK(m.size() == 7);  // 4 self-maps + 2 points + zero

  Transformation flip{1, 0};
  Transformation consta{0, 0};
  int g = m.map_index(flip);
  int h = m.map_index(consta);
  CHECK(m.mul(g, h) == m.map_index(Transformation{1, 1}));
  CHECK(m.mul(g, m.element(0)) == m.element(1));
  CHECK(m.mul(m.element(0), g) == m.zero());
  CHECK(m.mul(m.element(0), m.element(1)) == m.zero());
  CHECK(m.mul(m.element(0), m.identity()) == m.zero());  // points annihilate maps
  CHECK(m.mul(m.zero(), g) == m.zero());
  // associativity spot check on a mixed triple
  CHECK(m.mul(m.mul(g, h), m.element(1)) == m.mul(g, m.mul(h, m.element(1))));
}

TEST_CASE("polish images in the separating monoid compute evaluation") {
  Signature sig({{'u', 1}, {'c', 0}});
  UnaryStructure f;
  f.size = 2;
  f.unary['u'] = {1, 0};  // flip
  f.constants['c'] = 1;
  SeparatingMonoid m(2);
  std::map<int, int> assign{{1, 0}};

  Term t = Term::app('u', {Term::var(1)});
  Term t2 = Term::var(1);
  CHECK(polish_image(encode(t), sig, f, m, assign) == m.element(1));
  CHECK(polish_image(encode(t2), sig, f, m, assign) == m.element(0));
  CHECK(polish_image(encode(Term::app('c')), sig, f, m, assign) == m.element(1));

  UnarySeparationReport report;
  std::vector<std::pair<Term, Term>> pairs{{t, t2}, {t, t}};
  verify_unary_separation(sig, f, m, pairs, assign, report);
  CHECK(report.pairs == 2);
  CHECK(report.separated_pairs == 1);
  CHECK(report.violations.empty());

  SECTION("random unary term pairs stay separated") {
    Signature usig({{'u', 1}, {'v', 1}, {'c', 0}});
    Rng rng(808);
    auto random_unary_term = [&](int max_depth) {
      Term cur = rng.coin() ? Term::var(1) : Term::app('c');
      int wraps = static_cast<int>(rng.below(max_depth));
      for (int i = 0; i < wraps; ++i)
        cur = Term::app(rng.coin() ? 'u' : 'v', {cur});
      return cur;
    };
    for (int fcode = 0; fcode < 16; ++fcode) {
      UnaryStructure fs;
      fs.size = 2;
      fs.unary['u'] = {fcode & 1, (fcode >> 1) & 1};
      fs.unary['v'] = {(fcode >> 2) & 1, (fcode >> 3) & 1};
      fs.constants['c'] = 0;
      UnarySeparationReport r;
      std::vector<std::pair<Term, Term>> sample;
      for (int i = 0; i < 200; ++i)
        sample.emplace_back(random_unary_term(6), random_unary_term(6));
      verify_unary_separation(usig, fs, m, sample, assign, r);
      CHECK(r.violations.empty());
    }
  }
}
