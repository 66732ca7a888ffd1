#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fincat/algact.hpp>
#include <fincat/generators.hpp>

#include <string>
#include <vector>

using namespace fincat;

namespace {

MonoidTable z2() { return MonoidTable({"e", "g"}, {0, 1, 1, 0}, 0); }

MonoidTable trivial_monoid() { return MonoidTable({"e"}, {0}, 0); }

// Cyclic group of order n.
MonoidTable zn(int n) {
  std::vector<std::string> els;
  for (int i = 0; i < n; ++i) els.push_back(std::to_string(i));
  std::vector<int> tab;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) tab.push_back((a + b) % n);
  return MonoidTable(els, tab, 0);
}

// Klein four-group as bit pairs: 00, 10, 01, 11 with xor.
MonoidTable klein() {
  std::vector<std::string> els = {"00", "10", "01", "11"};
  std::vector<int> tab;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) tab.push_back(a ^ b);
  return MonoidTable(els, tab, 0);
}

MonoidModel flip_model() {
  FinSet c({"0", "1"});
  return MonoidModel{c, {identity(c), FinFn(c, c, {1, 0})}};
}

MonoidModel trivial_model_on(const FinSet& c, int n_elements) {
  MonoidModel m;
  m.carrier = c;
  for (int i = 0; i < n_elements; ++i) m.act.push_back(identity(c));
  return m;
}

}  // namespace

TEST_CASE("monoid table validation") {
  CHECK_FALSE(validate_monoid(z2()).has_value());
  CHECK(is_group(z2()));

  // A three-element table with a broken triple.
  MonoidTable bad({"e", "a", "b"}, {0, 1, 2, 1, 2, 2, 2, 1, 0}, 0);
  auto v = validate_monoid(bad);
  REQUIRE(v.has_value());
  CHECK(v->law == "associativity");
  // First failing triple in scan order, rechecked directly.
  int a = v->where[0], b = v->where[1], c = v->where[2];
  CHECK(bad.op(bad.op(a, b), c) != bad.op(a, bad.op(b, c)));

  // Free monoid on one generator, truncated at length 4 with saturating
  // product: x^i . x^j = x^min(i+j,4).
  std::vector<std::string> els = {"e", "x", "xx", "xxx", "xxxx"};
  std::vector<int> tab;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) tab.push_back(std::min(i + j, 4));
  MonoidTable sat(els, tab, 0);
  CHECK_FALSE(validate_monoid(sat).has_value());
  CHECK_FALSE(is_group(sat));

  MonoidTable unitless({"e", "a"}, {0, 0, 0, 0}, 1);
  CHECK(validate_magma(unitless).has_value());
}

TEST_CASE("model validation") {
  CHECK_FALSE(validate_model(z2(), flip_model()).has_value());

  // An involution whose square is not the identity is not an action.
  FinSet c({"0", "1"});
  MonoidModel broken{c, {identity(c), FinFn(c, c, {0, 0})}};
  auto v = validate_model(z2(), broken);
  REQUIRE(v.has_value());
  CHECK(v->law == "composition");

  // Componentwise Klein-style action on a 2x2 carrier with the literal
  // projections is a valid product-scheme model.
  ProductScheme s{z2(), z2()};
  MonoidModel f1 = flip_model(), f2 = flip_model();
  ProductModel pm;
  pm.at1 = f1;
  pm.at2 = f2;
  FinSet c12 = product_set({f1.carrier, f2.carrier});
  pm.at12.carrier = c12;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      FinFn comp = product_map({f1.act[static_cast<std::size_t>(a)], f2.act[static_cast<std::size_t>(b)]});
      pm.at12.act.emplace_back(c12, c12, comp.map);
    }
  pm.proj1 = projection(c12, 0);
  pm.proj2 = projection(c12, 1);
  CHECK_FALSE(validate_product_model(s, pm).has_value());
  CHECK(is_product_preserving(s, pm));
  CHECK(is_faithful(s, pm));
}

TEST_CASE("equivariance is the action square") {
  MonoidModel flip = flip_model();
  CHECK(is_equivariant(identity(flip.carrier), flip, flip));

  // Saturating successor action of the truncated free monoid on {0..4}:
  // monotone shifts are equivariant, the order reversal is not.
  std::vector<std::string> els = {"e", "x", "xx", "xxx", "xxxx"};
  std::vector<int> tab;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) tab.push_back(std::min(i + j, 4));
  MonoidTable sat(els, tab, 0);
  FinSet five({"0", "1", "2", "3", "4"});
  MonoidModel chain;
  chain.carrier = five;
  for (int k = 0; k < 5; ++k) {
    std::vector<int> m(5);
    for (int x = 0; x < 5; ++x) m[static_cast<std::size_t>(x)] = std::min(x + k, 4);
    chain.act.emplace_back(five, five, m);
  }
  CHECK_FALSE(validate_model(sat, chain).has_value());
  FinFn shift(five, five, {1, 2, 3, 4, 4});
  FinFn reversal(five, five, {4, 3, 2, 1, 0});
  CHECK(is_equivariant(shift, chain, chain));
  CHECK_FALSE(is_equivariant(reversal, chain, chain));

  // Adjoining a reset-to-zero element separates order problems from
  // zero-anchored ones: the shift stays equivariant for the shifts alone,
  // but moves the basepoint, so it fails once the reset is in play.
  {
    // Transformation monoid on {0..4}: saturating shifts s^k plus the
    // constants c_k = s^k . reset. The top shift s^4 already is the
    // constant at 4, so only c_0..c_3 are new.
    std::vector<std::vector<int>> transforms;
    std::vector<std::string> names;
    for (int k = 0; k < 5; ++k) {
      std::vector<int> t(5);
      for (int x = 0; x < 5; ++x) t[static_cast<std::size_t>(x)] = std::min(x + k, 4);
      transforms.push_back(t);
      names.push_back("s" + std::to_string(k));
    }
    for (int k = 0; k < 4; ++k) {
      transforms.push_back(std::vector<int>(5, k));
      names.push_back("c" + std::to_string(k));
    }
    auto index_of_transform = [&](const std::vector<int>& t) {
      for (std::size_t i = 0; i < transforms.size(); ++i)
        if (transforms[i] == t) return static_cast<int>(i);
      FAIL("transformation monoid is not closed");
      return -1;
    };
    std::vector<int> tab;
    for (const auto& ta : transforms)
      for (const auto& tb : transforms) {
        std::vector<int> comp(5);  // (a.b) acts as a after b
        for (int x = 0; x < 5; ++x)
          comp[static_cast<std::size_t>(x)] = ta[static_cast<std::size_t>(tb[static_cast<std::size_t>(x)])];
        tab.push_back(index_of_transform(comp));
      }
    MonoidTable anchored(names, tab, 0);
    CHECK_FALSE(validate_monoid(anchored).has_value());
    MonoidModel act;
    act.carrier = five;
    for (const auto& t : transforms) act.act.emplace_back(five, five, t);
    CHECK_FALSE(validate_model(anchored, act).has_value());
    CHECK(is_equivariant(identity(five), act, act));
    CHECK_FALSE(is_equivariant(shift, act, act));  // f(0) = 1 breaks the reset square
  }

  // A constant map into a fixed-point-free cyclic action fails the square.
  MonoidTable z3 = zn(3);
  FinSet three({"0", "1", "2"});
  MonoidModel rot;
  rot.carrier = three;
  for (int k = 0; k < 3; ++k) {
    std::vector<int> m(3);
    for (int x = 0; x < 3; ++x) m[static_cast<std::size_t>(x)] = (x + k) % 3;
    rot.act.emplace_back(three, three, m);
  }
  CHECK_FALSE(validate_model(z3, rot).has_value());
  MonoidModel still = trivial_model_on(three, 3);
  CHECK_FALSE(is_equivariant(FinFn(three, three, {0, 0, 0}), still, rot));
}

TEST_CASE("encoding into a tuple of actions") {
  MonoidModel flip = flip_model();
  std::vector<MonoidModel> codes = {flip, flip};
  FinFn id2 = identity(flip.carrier);
  CHECK(check_dis2({id2, id2}, flip, codes));

  // One non-equivariant component sinks the pairing.
  FinFn konst(flip.carrier, flip.carrier, {0, 0});
  CHECK_FALSE(check_dis2({id2, konst}, flip, codes));

  // Every pairing of equivariant components is equivariant into the
  // pointwise product, exhaustively for flip models.
  auto eq = all_equivariant_maps(flip, flip);
  for (const auto& c1 : eq)
    for (const auto& c2 : eq) CHECK(check_dis2({c1, c2}, flip, codes));
}

TEST_CASE("encoding between actions of a product monoid") {
  MonoidTable m1 = z2(), m2 = z2();
  MonoidModel f1 = flip_model(), f2 = flip_model();
  // Componentwise action of Z2 x Z2 on the 2x2 carrier.
  FinSet c12 = product_set({f1.carrier, f2.carrier});
  MonoidModel fx;
  fx.carrier = c12;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      fx.act.emplace_back(c12, c12,
                          product_map({f1.act[static_cast<std::size_t>(a)],
                                       f2.act[static_cast<std::size_t>(b)]})
                              .map);
  CHECK(check_dis2prime(identity(c12), fx, fx, m1, m2));

  // Coordinate swap against an action with distinct component monoids: the
  // (g, e) square fails.
  MonoidTable triv = trivial_monoid();
  MonoidModel mixed;  // flip x trivial, indexed over Z2 x {e}
  mixed.carrier = c12;
  for (int a = 0; a < 2; ++a)
    mixed.act.emplace_back(
        c12, c12, product_map({f1.act[static_cast<std::size_t>(a)], identity(f2.carrier)}).map);
  FinFn beta(c12, c12, swap_map(f1.carrier, f2.carrier).map);
  CHECK_FALSE(check_dis2prime(beta, mixed, mixed, m1, triv));

  // The swap works when the codomain action swaps roles accordingly.
  MonoidModel swapped;
  swapped.carrier = c12;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      swapped.act.emplace_back(c12, c12,
                               product_map({f1.act[static_cast<std::size_t>(b)],
                                            f2.act[static_cast<std::size_t>(a)]})
                                   .map);
  CHECK(check_dis2prime(beta, fx, swapped, m1, m2));

  // Generator squares imply all squares: recheck every element.
  MonoidTable prod = product_monoid(m1, m2);
  for (const auto& f : all_equivariant_maps(fx, fx)) {
    CHECK(check_dis2prime(f, fx, fx, m1, m2));
    for (int e = 0; e < prod.size(); ++e)
      CHECK(compose(fx.act[static_cast<std::size_t>(e)], f) ==
            compose(f, fx.act[static_cast<std::size_t>(e)]));
  }
}

TEST_CASE("product preservation can fail two ways") {
  ProductScheme s{z2(), z2()};

  // Collapsing projections from a 3-element carrier: pairing not bijective.
  FinSet three({"p", "q", "r"});
  FinSet two({"0", "1"});
  ProductModel collapsed;
  collapsed.at1 = trivial_model_on(two, 2);
  collapsed.at2 = trivial_model_on(two, 2);
  collapsed.at12 = trivial_model_on(three, 4);
  collapsed.proj1 = FinFn(three, two, {0, 0, 1});
  collapsed.proj2 = FinFn(three, two, {0, 1, 1});
  CHECK_FALSE(is_product_preserving(s, collapsed));

  // Entangling pair action: bijective pairing, but the transported action
  // of (g, e) is not the product of the component actions.
  MonoidModel f1 = flip_model(), f2 = flip_model();
  FinSet c12 = product_set({f1.carrier, f2.carrier});
  ProductModel sheared;
  sheared.at1 = f1;
  sheared.at2 = f2;
  sheared.at12.carrier = c12;
  std::vector<int> shear(4);
  for (int x = 0; x < 4; ++x)
    shear[static_cast<std::size_t>(x)] =
        c12.index_of({c12.digit(x, 0) ^ c12.digit(x, 1), c12.digit(x, 1)});
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      if (a == 1 && b == 0) {
        sheared.at12.act.emplace_back(c12, c12, shear);
      } else {
        sheared.at12.act.emplace_back(c12, c12,
                                      product_map({f1.act[static_cast<std::size_t>(a)],
                                                   f2.act[static_cast<std::size_t>(b)]})
                                          .map);
      }
    }
  sheared.proj1 = projection(c12, 0);
  sheared.proj2 = projection(c12, 1);
  CHECK_FALSE(is_product_preserving(s, sheared));
}

TEST_CASE("faithfulness") {
  FinSet two({"0", "1"});
  CHECK_FALSE(is_faithful(z2(), trivial_model_on(two, 2)));
  CHECK(is_faithful(z2(), flip_model()));

  // The one-point model of any nontrivial scheme is unfaithful.
  FinSet one({"*"});
  ProductScheme s{z2(), z2()};
  ProductModel delta1;
  delta1.at1 = trivial_model_on(one, 2);
  delta1.at2 = trivial_model_on(one, 2);
  delta1.at12 = trivial_model_on(one, 4);
  delta1.proj1 = identity(one);
  delta1.proj2 = identity(one);
  CHECK_FALSE(validate_product_model(s, delta1).has_value());
  CHECK(is_product_preserving(s, delta1));
  CHECK_FALSE(is_faithful(s, delta1));
}

TEST_CASE("equivariant retraction search") {
  MonoidModel flip = flip_model();
  auto idr = find_equivariant_retraction(identity(flip.carrier), flip, flip);
  REQUIRE(idr.witness.has_value());
  CHECK(*idr.witness == identity(flip.carrier));

  // Into the one-point model: not injective, no retraction.
  FinSet one({"*"});
  MonoidModel point = trivial_model_on(one, 2);
  FinFn to_point(flip.carrier, one, {0, 0});
  auto none = find_equivariant_retraction(to_point, flip, point);
  CHECK_FALSE(none.witness.has_value());
  CHECK_FALSE(none.undecided);

  // A fixed point in the codomain blocks every equivariant retraction onto
  // the flip pair: h(2) would have to be a fixed point of the flip.
  FinSet three({"0", "1", "2"});
  MonoidModel flip_plus_fixed{three, {identity(three), FinFn(three, three, {1, 0, 2})}};
  FinFn incl(flip.carrier, three, {0, 1});
  CHECK(is_equivariant(incl, flip, flip_plus_fixed));
  auto blocked = find_equivariant_retraction(incl, flip, flip_plus_fixed);
  CHECK_FALSE(blocked.witness.has_value());
  CHECK_FALSE(blocked.undecided);

  // Two flip pairs side by side: the inclusion retracts equivariantly, and
  // the first witness in candidate order maps the spare pair in step.
  FinSet four({"0", "1", "2", "3"});
  MonoidModel two_pairs{four, {identity(four), FinFn(four, four, {1, 0, 3, 2})}};
  FinFn incl2(flip.carrier, four, {0, 1});
  auto found = find_equivariant_retraction(incl2, flip, two_pairs);
  REQUIRE(found.witness.has_value());
  CHECK(found.witness->map == std::vector<int>{0, 1, 0, 1});
  CHECK(compose(incl2, *found.witness) == identity(flip.carrier));
  CHECK(is_equivariant(*found.witness, two_pairs, flip));

  // Budget too small: reported, not guessed.
  auto tight = find_equivariant_retraction(incl2, flip, two_pairs, 1);
  CHECK(tight.undecided);
  CHECK_FALSE(tight.witness.has_value());
}

TEST_CASE("split mono onto a faithful source forces a faithful target") {
  // Exhaustive over Z2 actions on carriers of size <= 3.
  MonoidTable m = z2();
  for (int cy = 1; cy <= 3; ++cy)
    for (int cz = 1; cz <= 3; ++cz) {
      FinSet ycar = gen_plain_set(cy, "y"), zcar = gen_plain_set(cz, "z");
      for (const auto& fy : all_actions(m, ycar))
        for (const auto& fz : all_actions(m, zcar))
          for (const auto& mu : all_equivariant_maps(fy, fz)) {
            auto r = find_equivariant_retraction(mu, fy, fz);
            REQUIRE_FALSE(r.undecided);
            if (r.witness.has_value() && is_faithful(m, fy)) CHECK(is_faithful(m, fz));
            // Epi direction: a surjective equivariant map out of a model
            // whose target is faithful forces a faithful source.
            if (classify_morphism(mu).epi && is_faithful(m, fz)) CHECK(is_faithful(m, fy));
          }
    }
}

TEST_CASE("binary operations transported along a map") {
  FinSet two({"0", "1"});
  FinSet four({"0", "1", "2", "3"});
  FinFn add2(product_set({two, two}), two, [] {
    std::vector<int> m;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) m.push_back((a + b) % 2);
    return m;
  }());
  FinFn add4(product_set({four, four}), four, [] {
    std::vector<int> m;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) m.push_back((a + b) % 4);
    return m;
  }());

  CHECK(binary_op_naturality(add2, {identity(two)}, add2, {identity(two)}, identity(two)));

  FinFn parity(four, two, {0, 1, 0, 1});
  CHECK(binary_op_naturality(add4, {identity(four)}, add2, {identity(two)}, parity));

  FinFn shift(two, two, {1, 0});
  CHECK_FALSE(binary_op_naturality(add2, {identity(two)}, add2, {identity(two)}, shift));
}

TEST_CASE("magma product decompositions") {
  MonoidTable v4 = klein();
  CHECK(verify_product_decomposition(v4, {0, 1}, {0, 2}));
  CHECK(verify_product_decomposition(v4, {0, 1}, {0, 3}));  // a second decomposition
  CHECK(verify_product_decomposition(v4, {0, 2}, {0, 3}));
  CHECK_FALSE(verify_product_decomposition(v4, {0, 1}, {0, 1}));
  CHECK_THROWS_AS(verify_product_decomposition(v4, {1}, {0, 2}), std::invalid_argument);

  // Cross-pairs in a verified decomposition commute by construction.
  for (int a : {0, 1})
    for (int b : {0, 2}) CHECK(v4.op(a, b) == v4.op(b, a));

  auto dz2 = find_decompositions(z2());
  REQUIRE(dz2.size() == 1);
  CHECK(dz2[0].first == std::vector<int>{0});
  CHECK(dz2[0].second == std::vector<int>{0, 1});

  auto dv4 = find_decompositions(v4);
  // The trivial split plus all three pairings of the 2-element subgroups.
  REQUIRE(dv4.size() == 4);
  CHECK(dv4[0].first == std::vector<int>{0});
  int subgroup_pairs = 0;
  for (const auto& [s1, s2] : dv4)
    if (s1.size() == 2 && s2.size() == 2) ++subgroup_pairs;
  CHECK(subgroup_pairs == 3);

  auto dz4 = find_decompositions(zn(4));
  REQUIRE(dz4.size() == 1);
  CHECK(dz4[0].first == std::vector<int>{0});

  CHECK_THROWS_AS(find_decompositions(zn(4), 3), std::invalid_argument);
}

TEST_CASE("equivariant maps are closed under composition") {
  MonoidTable m = z2();
  FinSet c2({"0", "1"}), c3({"p", "q", "r"});
  for (const auto& fa : all_actions(m, c2))
    for (const auto& fb : all_actions(m, c3))
      for (const auto& fc : all_actions(m, c2)) {
        CHECK(is_equivariant(identity(c2), fa, fa));
        for (const auto& f : all_equivariant_maps(fa, fb))
          for (const auto& g : all_equivariant_maps(fb, fc))
            CHECK(is_equivariant(compose(f, g), fa, fc));
      }
}

TEST_CASE("enumeration helpers are sound") {
  // Monoids on <= 3 points, unit first: each table validates.
  for (int n = 1; n <= 3; ++n) {
    auto ms = all_monoid_tables(n);
    CHECK_FALSE(ms.empty());
    for (const auto& m : ms) CHECK_FALSE(validate_monoid(m).has_value());
  }
  // Z2 has exactly 2 actions on a 2-point carrier: trivial and flip.
  auto acts = all_actions(z2(), FinSet({"0", "1"}));
  CHECK(acts.size() == 2);
  for (const auto& a : acts) CHECK_FALSE(validate_model(z2(), a).has_value());
}
