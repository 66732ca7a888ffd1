#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fincat/finset.hpp>

#include <optional>
#include <vector>

using namespace fincat;

namespace {

FinSet named(std::initializer_list<const char*> ls) {
  std::vector<std::string> v;
  for (auto* l : ls) v.emplace_back(l);
  return FinSet(v);
}

FinSet range_set(int n, const std::string& prefix = "") {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i));
  return FinSet(v);
}

// Test-local odometer over all maps [points] -> [values]; deliberately
// independent of the library's enumeration helper.
struct AllMaps {
  int points, values;
  std::vector<int> cur;
  bool done = false;
  AllMaps(int p, int v) : points(p), values(v), cur(static_cast<std::size_t>(p), 0) {
    if (v == 0 && p > 0) done = true;
  }
  bool advance() {
    for (int i = points - 1; i >= 0; --i) {
      if (++cur[static_cast<std::size_t>(i)] < values) return true;
      cur[static_cast<std::size_t>(i)] = 0;
    }
    done = true;
    return false;
  }
};

// Brute-force oracle: first h (odometer order) with h(m(x)) = x for all x.
std::optional<std::vector<int>> oracle_retraction(const FinFn& m) {
  AllMaps it(m.cod.size(), m.dom.size());
  while (!it.done) {
    bool ok = true;
    for (int x = 0; x < m.dom.size() && ok; ++x) ok = it.cur[static_cast<std::size_t>(m(x))] == x;
    if (ok) return it.cur;
    if (!it.advance()) break;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("finite set construction and indexing") {
  CHECK_THROWS_AS(named({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(FinSet({"a", "b"}, std::vector<int>{3}), std::invalid_argument);
  CHECK_THROWS_AS(FinSet({"a", "b"}, std::vector<int>{2, 0}), std::invalid_argument);

  FinSet p = product_set({named({"0", "1"}), named({"x", "y", "z"})});
  CHECK(p.size() == 6);
  CHECK(p.labels[0] == "(0,x)");
  CHECK(p.labels[5] == "(1,z)");
  CHECK(p.digit(4, 0) == 1);
  CHECK(p.digit(4, 1) == 1);
  CHECK(p.index_of({1, 2}) == 5);
  CHECK(p.factor(0).labels == std::vector<std::string>{"0", "1"});
  CHECK(p.factor(1).labels == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("factor recovery survives nested products") {
  FinSet y = product_set({named({"0", "1"}), named({"0", "1"})});
  FinSet z = product_set({y, y});
  CHECK(z.factor_shape == std::vector<int>{4, 4});
  CHECK(z.factor(0).labels == y.labels);
  CHECK(z.factor(1).labels == y.labels);
}

TEST_CASE("composition laws") {
  FinSet a = named({"a", "b"}), b = named({"0", "1"});
  FinFn f(a, b, {0, 1});
  CHECK(compose(identity(a), f) == f);
  CHECK(compose(f, identity(b)) == f);

  FinFn to_x(b, named({"x"}), {0, 0});
  FinFn g = compose(f, to_x);
  CHECK(g.map == std::vector<int>{0, 0});

  // Associativity, exhaustive over all triples of maps between 3-element sets.
  FinSet s3 = range_set(3);
  for (AllMaps fa(3, 3); !fa.done; fa.advance()) {
    FinFn ff(s3, s3, fa.cur);
    for (AllMaps ga(3, 3); !ga.done; ga.advance()) {
      FinFn gg(s3, s3, ga.cur);
      FinFn fg = compose(ff, gg);
      for (AllMaps ha(3, 3); !ha.done; ha.advance()) {
        FinFn hh(s3, s3, ha.cur);
        CHECK(compose(fg, hh) == compose(ff, compose(gg, hh)));
      }
    }
  }

  CHECK_THROWS_AS(compose(f, f), std::invalid_argument);
}

TEST_CASE("cartesian structure") {
  FinSet a = named({"0", "1"}), b = named({"x", "y"});
  auto cs = cartesian_structure({a, b});
  CHECK(cs.product.size() == 4);
  // p1(<1,x>) = 1
  CHECK(cs.projections[0](cs.product.index_of({1, 0})) == 1);
  // The diagonal duplicates and the terminal map deletes.
  for (int x = 0; x < cs.product.size(); ++x) {
    CHECK(cs.diagonal.cod.digit(cs.diagonal(x), 0) == x);
    CHECK(cs.diagonal.cod.digit(cs.diagonal(x), 1) == x);
    CHECK(cs.terminal(x) == 0);
  }
  CHECK(cs.terminal.cod.size() == 1);

  // <p1,p2> = id on any binary product.
  CHECK(pairing_into({cs.projections[0], cs.projections[1]}, cs.product) == identity(cs.product));

  // The swap is an involution, checked on all 6 elements of a 2x3 product.
  FinSet c = named({"x", "y", "z"});
  FinFn beta = swap_map(a, c), beta_back = swap_map(c, a);
  for (int x = 0; x < 6; ++x) CHECK(beta_back(beta(x)) == x);

  // Universal property: the pairing is the unique map commuting with the
  // projections, exhaustively for all component pairs on sizes <= 3.
  for (int cz = 1; cz <= 3; ++cz)
    for (int az = 1; az <= 3; ++az)
      for (int bz = 1; bz <= 3; ++bz) {
        FinSet C = range_set(cz, "c"), A = range_set(az, "a"), B = range_set(bz, "b");
        FinSet AB = product_set({A, B});
        FinFn p1 = projection(AB, 0), p2 = projection(AB, 1);
        for (AllMaps f1(cz, az); !f1.done; f1.advance())
          for (AllMaps f2(cz, bz); !f2.done; f2.advance()) {
            FinFn ff1(C, A, f1.cur), ff2(C, B, f2.cur);
            FinFn u = pairing_into({ff1, ff2}, AB);
            CHECK(compose(u, p1) == ff1);
            CHECK(compose(u, p2) == ff2);
            int solutions = 0;
            for (AllMaps ua(cz, az * bz); !ua.done; ua.advance()) {
              FinFn cand(C, AB, ua.cur);
              if (compose(cand, p1) == ff1 && compose(cand, p2) == ff2) {
                ++solutions;
                CHECK(cand == u);
              }
            }
            CHECK(solutions == 1);
          }
      }

  CHECK_THROWS_AS(pairing({FinFn(a, a, {0, 0}), FinFn(b, b, {0, 0})}), std::invalid_argument);
}

TEST_CASE("morphism classification") {
  FinSet two = named({"0", "1"});
  CHECK(classify_morphism(identity(two)).iso);
  auto konst = classify_morphism(FinFn(two, two, {0, 0}));
  CHECK_FALSE(konst.mono);
  CHECK_FALSE(konst.epi);
  auto incl = classify_morphism(FinFn(named({"0"}), two, {0}));
  CHECK(incl.mono);
  CHECK_FALSE(incl.epi);
}

TEST_CASE("retraction search") {
  FinSet two = named({"0", "1"}), three = named({"0", "1", "2"});

  auto r = find_retraction(identity(two));
  REQUIRE(r.retraction.has_value());
  CHECK(*r.retraction == identity(two));
  CHECK(r.exhaustive);

  CHECK_FALSE(find_retraction(FinFn(two, two, {1, 1})).retraction.has_value());

  // Frozen from the brute-force oracle over all 8 maps {0,1,2} -> {0,1}.
  FinFn m(two, three, {0, 2});
  auto expect = oracle_retraction(m);
  REQUIRE(expect.has_value());
  CHECK(*expect == std::vector<int>{0, 0, 1});
  auto got = find_retraction(m);
  REQUIRE(got.retraction.has_value());
  CHECK(got.retraction->map == *expect);
  CHECK(compose(m, *got.retraction) == identity(two));

  // Over-budget path must agree with the exhaustive one.
  auto direct = find_retraction(m, 2);
  CHECK_FALSE(direct.exhaustive);
  REQUIRE(direct.retraction.has_value());
  CHECK(direct.retraction->map == *expect);

  // ... also when no retraction exists.
  auto none_direct = find_retraction(FinFn(two, two, {1, 1}), 1);
  CHECK_FALSE(none_direct.exhaustive);
  CHECK_FALSE(none_direct.retraction.has_value());
}

TEST_CASE("product morphism detection") {
  FinSet two = named({"0", "1"});
  FinSet y = product_set({two, two});
  FinSet one2 = product_set({terminal_set(), terminal_set()});

  // The terminal map to 1x1 is a product of constants.
  FinFn everything_to_point(y, one2, {0, 0, 0, 0});
  auto w = is_product_morphism(everything_to_point);
  REQUIRE(w.has_value());
  CHECK(w->components.size() == 2);
  for (const auto& c : w->components) CHECK(c.map == std::vector<int>{0, 0});

  // The swap is not factorwise.
  FinFn beta = swap_map(two, two);
  FinFn beta_as_endo(y, y, beta.map);
  CHECK_FALSE(is_product_morphism(beta_as_endo).has_value());

  // f1 x f2 gives back (f1, f2), exhaustively on 3-element factors.
  FinSet s3 = range_set(3);
  for (AllMaps f1(3, 3); !f1.done; f1.advance())
    for (AllMaps f2(3, 3); !f2.done; f2.advance()) {
      FinFn ff1(s3, s3, f1.cur), ff2(s3, s3, f2.cur);
      FinFn prod = product_map({ff1, ff2});
      auto got = is_product_morphism(prod);
      REQUIRE(got.has_value());
      CHECK(got->components[0].map == f1.cur);
      CHECK(got->components[1].map == f2.cur);
      // Same result from any basepoint.
      auto alt = is_product_morphism(prod, 1);
      REQUIRE(alt.has_value());
      CHECK(alt->components[0].map == f1.cur);
      CHECK(alt->components[1].map == f2.cur);
      // p_i . m = m_ii . p_i
      for (int i = 0; i < 2; ++i)
        CHECK(compose(prod, projection(prod.cod, i)) ==
              compose(projection(prod.dom, i), got->components[static_cast<std::size_t>(i)]));
    }

  // Factor structure is required on both sides.
  CHECK_THROWS_AS(is_product_morphism(FinFn(two, two, {0, 1})), std::invalid_argument);
}

TEST_CASE("transpose and pullback routes agree with the product test") {
  FinSet two = named({"0", "1"});
  FinSet y = product_set({two, two});
  FinFn everything_to_point(y, product_set({terminal_set(), terminal_set()}), {0, 0, 0, 0});
  CHECK(transpose_is_constant(everything_to_point, 0));
  CHECK(transpose_is_constant(everything_to_point, 1));
  CHECK(invariance_via_pullback(everything_to_point, 0));

  FinFn beta_as_endo(y, y, swap_map(two, two).map);
  CHECK_FALSE(transpose_is_constant(beta_as_endo, 0));
  CHECK_FALSE(invariance_via_pullback(beta_as_endo, 0));

  // All 256 maps (2x2) -> (2x2): the three characterizations coincide.
  for (AllMaps ma(4, 4); !ma.done; ma.advance()) {
    FinFn m(y, y, ma.cur);
    bool prod = is_product_morphism(m).has_value();
    bool exp = transpose_is_constant(m, 0) && transpose_is_constant(m, 1);
    bool pull = invariance_via_pullback(m, 0) && invariance_via_pullback(m, 1);
    CHECK(prod == exp);
    CHECK(exp == pull);
  }
}

TEST_CASE("factorwise retraction search") {
  FinSet two = named({"0", "1"});
  FinSet y = product_set({two, two});
  FinSet z = product_set({y, y});

  // Duplicating the factors has a factorwise retraction (project each copy).
  std::vector<int> dup(static_cast<std::size_t>(y.size()));
  for (int i = 0; i < y.size(); ++i) dup[static_cast<std::size_t>(i)] = z.index_of({i, i});
  FinFn delta(y, z, dup);
  auto w = find_modular_retraction(delta);
  REQUIRE(w.has_value());
  CHECK(w->components[0].map == std::vector<int>{0, 0, 1, 1});  // first coordinate
  CHECK(w->components[1].map == std::vector<int>{0, 1, 0, 1});  // second coordinate
  CHECK_FALSE(is_product_morphism(delta).has_value());

  // A constant map from a nontrivial set cannot be retracted factorwise.
  FinFn konst(y, y, {0, 0, 0, 0});
  CHECK_FALSE(find_modular_retraction(konst).has_value());

  // Whenever m is factorwise and split mono, a factorwise retraction exists
  // (exhaustive over component pairs on sizes <= 3).
  for (int s1 = 1; s1 <= 3; ++s1)
    for (int s2 = 1; s2 <= 3; ++s2)
      for (int t1 = 1; t1 <= 3; ++t1)
        for (int t2 = 1; t2 <= 3; ++t2) {
          FinSet Y = product_set({range_set(s1, "a"), range_set(s2, "b")});
          FinSet Z = product_set({range_set(t1, "c"), range_set(t2, "d")});
          for (AllMaps c1(s1, t1); !c1.done; c1.advance())
            for (AllMaps c2(s2, t2); !c2.done; c2.advance()) {
              FinFn m = product_map({FinFn(Y.factor(0), Z.factor(0), c1.cur),
                                     FinFn(Y.factor(1), Z.factor(1), c2.cur)});
              FinFn m2(Y, Z, m.map);
              if (!find_retraction(m2).retraction.has_value()) continue;
              auto h = find_modular_retraction(m2);
              REQUIRE(h.has_value());
              FinFn hp = product_map({h->components[0], h->components[1]});
              for (int x = 0; x < Y.size(); ++x) CHECK(hp(m2(x)) == x);
            }
        }

  // Over-budget construction agrees with the exhaustive search.
  auto cheap = find_modular_retraction(delta, 1);
  REQUIRE(cheap.has_value());
  CHECK(cheap->components[0].map == w->components[0].map);
  CHECK(cheap->components[1].map == w->components[1].map);
}

TEST_CASE("missing-information matrix") {
  FinSet two = named({"0", "1"});
  FinSet y = product_set({two, two});

  // A factorwise m with nonconstant components hides the other factor.
  FinFn m = product_map({identity(two), identity(two)});
  auto grid = missing_information_search(FinFn(y, y, m.map));
  CHECK(grid[0][1] == Tristate::yes);
  CHECK(grid[1][0] == Tristate::yes);

  // Duplicate: the first code determines the second factor.
  FinSet z = product_set({y, y});
  std::vector<int> dup(static_cast<std::size_t>(y.size()));
  for (int i = 0; i < y.size(); ++i) dup[static_cast<std::size_t>(i)] = z.index_of({i, i});
  auto grid2 = missing_information_search(FinFn(y, z, dup));
  CHECK(grid2[0][1] == Tristate::no);
  CHECK(grid2[1][0] == Tristate::no);

  // N = 1: nothing off-diagonal to report.
  FinSet y1 = FinSet(two.labels, std::vector<int>{2});
  auto grid3 = missing_information_search(FinFn(y1, y1, {0, 1}));
  CHECK(grid3.size() == 1);

  // Budget exhaustion is reported, never silently resolved.
  auto grid4 = missing_information_search(FinFn(y, z, dup), 1);
  CHECK(grid4[0][1] == Tristate::undecided);
}

TEST_CASE("two-sided inverses") {
  FinSet two = named({"0", "1"});
  CHECK(is_inverse(identity(two), identity(two)));
  FinFn beta = swap_map(two, two);
  FinFn beta_back(beta.cod, beta.dom, beta.map);
  CHECK(is_inverse(beta, beta_back));
  FinFn incl(named({"0"}), two, {0});
  FinFn back(two, named({"0"}), {0, 0});
  CHECK_FALSE(is_inverse(incl, back));
}
