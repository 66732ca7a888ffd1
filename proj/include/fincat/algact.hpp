#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <fincat/finset.hpp>

namespace fincat {

// Composition-order convention used throughout this module: the action of a
// product a.b at an object is act(a) after act(b), i.e. (a.b)_A = a_A . b_A.
// Group-action literature varies on this; every functoriality check below
// is written against this one convention.

/// A unital binary operation given by its multiplication table.
/// table[a * n + b] is a.b. No associativity is assumed at this level.
struct MagmaTable {
  std::vector<std::string> elements;
  std::vector<int> table;
  int unit = 0;

  MagmaTable() = default;
  MagmaTable(std::vector<std::string> els, std::vector<int> tab, int u)
      : elements(std::move(els)), table(std::move(tab)), unit(u) {
    const std::size_t n = elements.size();
    if (n == 0) throw std::invalid_argument("MagmaTable: need at least the unit");
    if (table.size() != n * n) throw std::invalid_argument("MagmaTable: table must be n x n");
    for (int v : table)
      if (v < 0 || v >= static_cast<int>(n))
        throw std::invalid_argument("MagmaTable: table entry out of range");
    if (unit < 0 || unit >= static_cast<int>(n))
      throw std::invalid_argument("MagmaTable: unit out of range");
  }

  int size() const { return static_cast<int>(elements.size()); }
  int op(int a, int b) const {
    return table[static_cast<std::size_t>(a) * elements.size() + static_cast<std::size_t>(b)];
  }
};

/// A magma whose table is additionally expected to be associative.
/// Validation is a separate step so that a bad table can be loaded,
/// inspected and reported on rather than rejected at construction.
struct MonoidTable : MagmaTable {
  using MagmaTable::MagmaTable;
};

struct LawViolation {
  std::string law;
  std::vector<int> where;
};

inline std::optional<LawViolation> validate_magma(const MagmaTable& t) {
  for (int a = 0; a < t.size(); ++a) {
    if (t.op(t.unit, a) != a) return LawViolation{"left unit", {a}};
    if (t.op(a, t.unit) != a) return LawViolation{"right unit", {a}};
  }
  return std::nullopt;
}

/// Unit laws plus associativity over all triples; reports the first
/// violating triple in scan order.
inline std::optional<LawViolation> validate_monoid(const MonoidTable& t) {
  if (auto v = validate_magma(t)) return v;
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < t.size(); ++b)
      for (int c = 0; c < t.size(); ++c)
        if (t.op(t.op(a, b), c) != t.op(a, t.op(b, c)))
          return LawViolation{"associativity", {a, b, c}};
  return std::nullopt;
}

inline bool is_group(const MonoidTable& t) {
  for (int a = 0; a < t.size(); ++a) {
    bool inv = false;
    for (int b = 0; b < t.size() && !inv; ++b)
      inv = t.op(a, b) == t.unit && t.op(b, a) == t.unit;
    if (!inv) return false;
  }
  return true;
}

/// Componentwise product monoid; pair (a,b) has index a * |M2| + b.
inline MonoidTable product_monoid(const MonoidTable& m1, const MonoidTable& m2) {
  const int n1 = m1.size(), n2 = m2.size();
  std::vector<std::string> els;
  els.reserve(static_cast<std::size_t>(n1 * n2));
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b)
      els.push_back("(" + m1.elements[static_cast<std::size_t>(a)] + "," +
                    m2.elements[static_cast<std::size_t>(b)] + ")");
  std::vector<int> tab(static_cast<std::size_t>(n1 * n2) * static_cast<std::size_t>(n1 * n2));
  for (int a = 0; a < n1 * n2; ++a)
    for (int b = 0; b < n1 * n2; ++b)
      tab[static_cast<std::size_t>(a) * static_cast<std::size_t>(n1 * n2) +
          static_cast<std::size_t>(b)] =
          m1.op(a / n2, b / n2) * n2 + m2.op(a % n2, b % n2);
  return MonoidTable(std::move(els), std::move(tab), m1.unit * n2 + m2.unit);
}

/// An action of a monoid on one carrier: a functor out of the single-object
/// scheme the monoid presents.
struct MonoidModel {
  FinSet carrier;
  std::vector<FinFn> act;  // one endomorphism per monoid element
};

/// Functoriality: unit acts as the identity and act(a.b) = act(a) . act(b)
/// under the convention above.
inline std::optional<LawViolation> validate_model(const MonoidTable& m, const MonoidModel& f) {
  if (static_cast<int>(f.act.size()) != m.size())
    return LawViolation{"one endomorphism per element", {static_cast<int>(f.act.size())}};
  for (const auto& a : f.act)
    if (a.dom.labels != f.carrier.labels || a.cod.labels != f.carrier.labels)
      return LawViolation{"endomorphism carrier", {}};
  if (!(f.act[static_cast<std::size_t>(m.unit)] == identity(f.carrier)))
    return LawViolation{"unit acts as identity", {m.unit}};
  for (int a = 0; a < m.size(); ++a)
    for (int b = 0; b < m.size(); ++b)
      if (!(f.act[static_cast<std::size_t>(m.op(a, b))] ==
            compose(f.act[static_cast<std::size_t>(b)], f.act[static_cast<std::size_t>(a)])))
        return LawViolation{"composition", {a, b}};
  return std::nullopt;
}

/// f is equivariant between two actions of the same monoid when every
/// action square commutes: f . a = a . f for each element a.
inline bool is_equivariant(const FinFn& f, const MonoidModel& from, const MonoidModel& to) {
  if (f.dom.labels != from.carrier.labels || f.cod.labels != to.carrier.labels)
    throw std::invalid_argument("is_equivariant: map does not connect the carriers");
  if (from.act.size() != to.act.size())
    throw std::invalid_argument("is_equivariant: models act for different monoids");
  for (std::size_t a = 0; a < from.act.size(); ++a)
    if (!(compose(from.act[a], f) == compose(f, to.act[a]))) return false;
  return true;
}

/// The pointwise product of actions of one monoid: carrier is the product
/// of carriers, each element acts factorwise.
inline MonoidModel model_product(const std::vector<MonoidModel>& models) {
  if (models.empty()) throw std::invalid_argument("model_product: need at least one model");
  std::vector<FinSet> carriers;
  for (const auto& m : models) carriers.push_back(m.carrier);
  MonoidModel out;
  out.carrier = product_set(carriers);
  const std::size_t n_elems = models[0].act.size();
  for (const auto& m : models)
    if (m.act.size() != n_elems)
      throw std::invalid_argument("model_product: models act for different monoids");
  for (std::size_t a = 0; a < n_elems; ++a) {
    std::vector<FinFn> per;
    per.reserve(models.size());
    for (const auto& m : models) per.push_back(m.act[a]);
    FinFn pm = product_map(per);
    out.act.emplace_back(out.carrier, out.carrier, pm.map);
  }
  return out;
}

/// An encoder into a tuple of single-factor actions: the pairing of the
/// given per-factor maps must be equivariant into the pointwise product of
/// the code models.
inline bool check_dis2(const std::vector<FinFn>& components, const MonoidModel& fx,
                       const std::vector<MonoidModel>& fz) {
  if (components.size() != fz.size())
    throw std::invalid_argument("check_dis2: one component per code model");
  MonoidModel prod = model_product(fz);
  FinFn paired = pairing(components);
  FinFn shaped(fx.carrier, prod.carrier, paired.map);
  return is_equivariant(shaped, fx, prod);
}

/// An encoder between two actions of a product monoid M1 x M2. Equivariance
/// with respect to every pair follows from the generator pairs (a, e) and
/// (e, b), so only those squares are checked.
inline bool check_dis2prime(const FinFn& f, const MonoidModel& fx, const MonoidModel& fz,
                            const MonoidTable& m1, const MonoidTable& m2) {
  const int n1 = m1.size(), n2 = m2.size();
  if (static_cast<int>(fx.act.size()) != n1 * n2 || static_cast<int>(fz.act.size()) != n1 * n2)
    throw std::invalid_argument("check_dis2prime: models must act for the product monoid");
  for (int a = 0; a < n1; ++a) {
    std::size_t idx = static_cast<std::size_t>(a * n2 + m2.unit);
    if (!(compose(fx.act[idx], f) == compose(f, fz.act[idx]))) return false;
  }
  for (int b = 0; b < n2; ++b) {
    std::size_t idx = static_cast<std::size_t>(m1.unit * n2 + b);
    if (!(compose(fx.act[idx], f) == compose(f, fz.act[idx]))) return false;
  }
  return true;
}

/// The three-object scheme presented by a pair of monoids: objects s1, s2
/// and their product s12, hom-sets M1, M2, M1 x M2, and the hom-sets from
/// s12 to each s_i generated by the projections (p_i . (a,b) = a . p_i).
/// Everything else is empty.
struct ProductScheme {
  MonoidTable m1, m2;
};

/// A model of a ProductScheme: one action per object plus the images of the
/// two projections.
struct ProductModel {
  MonoidModel at1, at2;    // actions of M1 and M2
  MonoidModel at12;        // action of M1 x M2, pair (a,b) at index a*|M2|+b
  FinFn proj1, proj2;      // images of the projections
};

inline std::optional<LawViolation> validate_product_model(const ProductScheme& s,
                                                          const ProductModel& f) {
  if (auto v = validate_model(s.m1, f.at1)) return v;
  if (auto v = validate_model(s.m2, f.at2)) return v;
  MonoidTable prod = product_monoid(s.m1, s.m2);
  if (auto v = validate_model(prod, f.at12)) return v;
  if (f.proj1.dom.labels != f.at12.carrier.labels || f.proj1.cod.labels != f.at1.carrier.labels ||
      f.proj2.dom.labels != f.at12.carrier.labels || f.proj2.cod.labels != f.at2.carrier.labels)
    return LawViolation{"projection carriers", {}};
  // Naturality of the projections: q_i . F(a,b) = F_i(a) . q_i.
  const int n2 = s.m2.size();
  for (int a = 0; a < s.m1.size(); ++a)
    for (int b = 0; b < n2; ++b) {
      std::size_t idx = static_cast<std::size_t>(a * n2 + b);
      if (!(compose(f.at12.act[idx], f.proj1) ==
            compose(f.proj1, f.at1.act[static_cast<std::size_t>(a)])))
        return LawViolation{"projection 1 naturality", {a, b}};
      if (!(compose(f.at12.act[idx], f.proj2) ==
            compose(f.proj2, f.at2.act[static_cast<std::size_t>(b)])))
        return LawViolation{"projection 2 naturality", {a, b}};
    }
  return std::nullopt;
}

/// Product-preservation: the pairing of the projection images is a
/// bijection, and it transports each pair action to the product of the
/// component actions.
inline bool is_product_preserving(const ProductScheme& s, const ProductModel& f) {
  FinSet lit = product_set({f.at1.carrier, f.at2.carrier});
  FinFn pair_map = pairing_into({f.proj1, f.proj2}, lit);
  if (!classify_morphism(pair_map).iso) return false;
  const int n2 = s.m2.size();
  for (int a = 0; a < s.m1.size(); ++a)
    for (int b = 0; b < n2; ++b) {
      FinFn componentwise = product_map(
          {f.at1.act[static_cast<std::size_t>(a)], f.at2.act[static_cast<std::size_t>(b)]});
      FinFn shaped(lit, lit, componentwise.map);
      if (!(compose(f.at12.act[static_cast<std::size_t>(a * n2 + b)], pair_map) ==
            compose(pair_map, shaped)))
        return false;
    }
  return true;
}

inline bool is_faithful(const MonoidTable& m, const MonoidModel& f) {
  for (int a = 0; a < m.size(); ++a)
    for (int b = a + 1; b < m.size(); ++b)
      if (f.act[static_cast<std::size_t>(a)].map == f.act[static_cast<std::size_t>(b)].map)
        return false;
  return true;
}

/// Faithfulness of a product-scheme model checks every ordered pair of
/// objects with a nonempty hom-set: the three endomorphism actions and the
/// two projection-generated hom-sets Hom(s12, s_i), whose image of a is
/// F_i(a) . q_i.
inline bool is_faithful(const ProductScheme& s, const ProductModel& f) {
  MonoidTable prod = product_monoid(s.m1, s.m2);
  if (!is_faithful(s.m1, f.at1) || !is_faithful(s.m2, f.at2) || !is_faithful(prod, f.at12))
    return false;
  for (int a = 0; a < s.m1.size(); ++a)
    for (int b = a + 1; b < s.m1.size(); ++b)
      if (compose(f.proj1, f.at1.act[static_cast<std::size_t>(a)]) ==
          compose(f.proj1, f.at1.act[static_cast<std::size_t>(b)]))
        return false;
  for (int a = 0; a < s.m2.size(); ++a)
    for (int b = a + 1; b < s.m2.size(); ++b)
      if (compose(f.proj2, f.at2.act[static_cast<std::size_t>(a)]) ==
          compose(f.proj2, f.at2.act[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

/// Outcome of an equivariant-retraction search. `undecided` is reported
/// when the candidate space exceeds the budget.
struct EquivariantRetraction {
  std::optional<FinFn> witness;
  bool undecided = false;
};

/// Searches for an equivariant h with h . mu = id. Candidates are pinned on
/// the image of mu first (forced values; a non-injective mu is rejected
/// outright), the free positions are enumerated lexicographically, and each
/// completion is filtered by naturality.
inline EquivariantRetraction find_equivariant_retraction(
    const FinFn& mu, const MonoidModel& fy, const MonoidModel& fz,
    std::uint64_t budget = kDefaultSearchBudget) {
  if (!is_equivariant(mu, fy, fz))
    throw std::invalid_argument("find_equivariant_retraction: mu must be equivariant");
  EquivariantRetraction out;
  const int ny = fy.carrier.size(), nz = fz.carrier.size();
  std::vector<int> forced(static_cast<std::size_t>(nz), -1);
  for (int y = 0; y < ny; ++y) {
    int z = mu(y);
    if (forced[static_cast<std::size_t>(z)] != -1) return out;  // not injective: no retraction
    forced[static_cast<std::size_t>(z)] = y;
  }
  std::vector<int> free_pos;
  for (int z = 0; z < nz; ++z)
    if (forced[static_cast<std::size_t>(z)] == -1) free_pos.push_back(z);
  std::uint64_t candidates = pow_capped(static_cast<std::uint64_t>(ny),
                                        static_cast<std::uint64_t>(free_pos.size()), budget);
  if (candidates > budget) {
    out.undecided = true;
    return out;
  }
  for_each_map(static_cast<int>(free_pos.size()), ny, [&](const std::vector<int>& assign) {
    std::vector<int> h = forced;
    for (std::size_t i = 0; i < free_pos.size(); ++i)
      h[static_cast<std::size_t>(free_pos[i])] = assign[i];
    FinFn cand(fz.carrier, fy.carrier, h);
    if (!is_equivariant(cand, fz, fy)) return false;
    out.witness = std::move(cand);
    return true;
  });
  return out;
}

/// Pointwise naturality data for a binary operation: the operation square
/// f(c_X(a_X(x1), b_X(x2))) = c_Z(a_Z(f(x1)), b_Z(f(x2))) over all inputs
/// and all ordered pairs of the supplied actions (matched by index).
inline bool binary_op_naturality(const FinFn& cx, const std::vector<FinFn>& acts_x,
                                 const FinFn& cz, const std::vector<FinFn>& acts_z,
                                 const FinFn& f) {
  if (acts_x.size() != acts_z.size())
    throw std::invalid_argument("binary_op_naturality: action lists must pair up");
  if (!cx.dom.is_factored() || cx.dom.factor_count() != 2 || !cz.dom.is_factored() ||
      cz.dom.factor_count() != 2)
    throw std::invalid_argument("binary_op_naturality: operations must take a binary product");
  const int nx = cx.cod.size();
  for (std::size_t ai = 0; ai < acts_x.size(); ++ai)
    for (std::size_t bi = 0; bi < acts_x.size(); ++bi)
      for (int x1 = 0; x1 < nx; ++x1)
        for (int x2 = 0; x2 < nx; ++x2) {
          int lhs = f(cx(cx.dom.index_of({acts_x[ai](x1), acts_x[bi](x2)})));
          int rhs = cz(cz.dom.index_of({acts_z[ai](f(x1)), acts_z[bi](f(x2))}));
          if (lhs != rhs) return false;
        }
  return true;
}

/// Internal direct-product test for a unital magma: both subsets contain
/// the unit and are closed, elements across the subsets commute, and
/// (m, n) -> m.n is a bijection onto the whole carrier.
inline bool verify_product_decomposition(const MagmaTable& g, const std::vector<int>& s1,
                                         const std::vector<int>& s2) {
  auto contains = [](const std::vector<int>& s, int v) {
    for (int x : s)
      if (x == v) return true;
    return false;
  };
  if (!contains(s1, g.unit) || !contains(s2, g.unit))
    throw std::invalid_argument("verify_product_decomposition: subsets must contain the unit");
  for (const auto& s : {s1, s2})
    for (int a : s)
      for (int b : s)
        if (!contains(s, g.op(a, b))) return false;
  for (int a : s1)
    for (int b : s2)
      if (g.op(a, b) != g.op(b, a)) return false;
  std::vector<int> hit(static_cast<std::size_t>(g.size()), 0);
  for (int a : s1)
    for (int b : s2) ++hit[static_cast<std::size_t>(g.op(a, b))];
  for (int h : hit)
    if (h != 1) return false;
  return true;
}

/// All unordered pairs of unit-containing subsets that decompose the magma,
/// in bitmask order. Subsets come back as sorted index lists.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> find_decompositions(
    const MagmaTable& g, int max_size = 12) {
  if (g.size() > max_size)
    throw std::invalid_argument("find_decompositions: carrier exceeds the size cap");
  const int n = g.size();
  std::vector<std::vector<int>> subsets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & (1u << g.unit))) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i; j < subsets.size(); ++j)
      if (verify_product_decomposition(g, subsets[i], subsets[j]))
        out.emplace_back(subsets[i], subsets[j]);
  return out;
}

// ---- Enumeration helpers (exhaustive, for the theorem suites) ----

/// All monoid tables on [0, n) with unit 0. Every monoid is isomorphic to
/// one of these, which keeps the seeded families canonical.
inline std::vector<MonoidTable> all_monoid_tables(int n) {
  std::vector<std::string> els;
  for (int i = 0; i < n; ++i) els.push_back("m" + std::to_string(i));
  std::vector<MonoidTable> out;
  const int cells = (n - 1) * (n - 1);
  std::vector<int> assign(static_cast<std::size_t>(cells), 0);
  for (;;) {
    std::vector<int> tab(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int v;
        if (a == 0)
          v = b;
        else if (b == 0)
          v = a;
        else
          v = assign[static_cast<std::size_t>((a - 1) * (n - 1) + (b - 1))];
        tab[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = v;
      }
    MonoidTable t(els, tab, 0);
    if (!validate_monoid(t)) out.push_back(std::move(t));
    if (cells == 0) break;
    int i = cells - 1;
    while (i >= 0 && assign[static_cast<std::size_t>(i)] == n - 1)
      assign[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++assign[static_cast<std::size_t>(i)];
  }
  return out;
}

/// All actions of m on the carrier, i.e. all monoid homomorphisms into the
/// endomorphisms of the carrier. Exhaustive; intended for small carriers.
inline std::vector<MonoidModel> all_actions(const MonoidTable& m, const FinSet& carrier) {
  const int n = m.size(), c = carrier.size();
  std::vector<FinFn> endos;
  for_each_map(c, c, [&](const std::vector<int>& e) {
    endos.emplace_back(carrier, carrier, e);
    return false;
  });
  std::vector<MonoidModel> out;
  // Assign an endomorphism index to every non-unit element.
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  const int id_idx = [&] {
    FinFn id = identity(carrier);
    for (std::size_t i = 0; i < endos.size(); ++i)
      if (endos[i] == id) return static_cast<int>(i);
    return 0;
  }();
  pick[static_cast<std::size_t>(m.unit)] = id_idx;
  int cursor = n - 1;
  for (;;) {
    MonoidModel cand;
    cand.carrier = carrier;
    for (int a = 0; a < n; ++a) cand.act.push_back(endos[static_cast<std::size_t>(pick[static_cast<std::size_t>(a)])]);
    if (!validate_model(m, cand)) out.push_back(std::move(cand));
    cursor = n - 1;
    while (cursor >= 0) {
      if (cursor == m.unit) {
        --cursor;
        continue;
      }
      if (pick[static_cast<std::size_t>(cursor)] + 1 < static_cast<int>(endos.size())) {
        ++pick[static_cast<std::size_t>(cursor)];
        break;
      }
      pick[static_cast<std::size_t>(cursor)] = 0;
      --cursor;
    }
    if (cursor < 0) break;
  }
  return out;
}

/// All equivariant maps between two actions of one monoid.
inline std::vector<FinFn> all_equivariant_maps(const MonoidModel& from, const MonoidModel& to) {
  std::vector<FinFn> out;
  for_each_map(from.carrier.size(), to.carrier.size(), [&](const std::vector<int>& f) {
    FinFn cand(from.carrier, to.carrier, f);
    if (is_equivariant(cand, from, to)) out.push_back(std::move(cand));
    return false;
  });
  return out;
}

}  // namespace fincat
