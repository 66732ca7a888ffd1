#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <fincat/finset.hpp>

namespace fincat {

/// A relation between finite sets as a boolean incidence matrix. These are
/// the effectful maps of the powerset monad: an element of the domain is
/// sent to the set of codomain elements it relates to.
///
/// The carriers' cartesian product is only monoidal here -- a relation into
/// a product carries more than its two projections -- which is what the
/// factorization test below probes. The disjoint union (the actual
/// categorical product of relations) plays no role for disentanglement and
/// is not modelled. Duplication and deletion are likewise left out: they
/// are not natural for relations, and the classification flags stand in.
struct FinRel {
  FinSet dom, cod;
  std::vector<std::uint8_t> incidence;  // row-major |dom| x |cod|

  FinRel() = default;
  FinRel(FinSet d, FinSet c, std::vector<std::uint8_t> inc)
      : dom(std::move(d)), cod(std::move(c)), incidence(std::move(inc)) {
    if (incidence.size() != static_cast<std::size_t>(dom.size()) * static_cast<std::size_t>(cod.size()))
      throw std::invalid_argument("FinRel: incidence dimensions do not match carriers");
    for (auto v : incidence)
      if (v > 1) throw std::invalid_argument("FinRel: incidence entries must be 0 or 1");
  }

  bool at(int a, int b) const {
    return incidence[static_cast<std::size_t>(a) * static_cast<std::size_t>(cod.size()) +
                     static_cast<std::size_t>(b)] != 0;
  }
  void set(int a, int b, bool v = true) {
    incidence[static_cast<std::size_t>(a) * static_cast<std::size_t>(cod.size()) +
              static_cast<std::size_t>(b)] = v ? 1 : 0;
  }

  friend bool operator==(const FinRel& a, const FinRel& b) {
    return a.dom.labels == b.dom.labels && a.cod.labels == b.cod.labels &&
           a.incidence == b.incidence;
  }
};

inline FinRel rel_empty(const FinSet& a, const FinSet& b) {
  return FinRel(a, b, std::vector<std::uint8_t>(
                          static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(b.size()), 0));
}

inline FinRel rel_full(const FinSet& a, const FinSet& b) {
  return FinRel(a, b, std::vector<std::uint8_t>(
                          static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(b.size()), 1));
}

inline FinRel rel_identity(const FinSet& a) {
  FinRel r = rel_empty(a, a);
  for (int i = 0; i < a.size(); ++i) r.set(i, i);
  return r;
}

/// Relation composition, r first then s: a ~ c iff some b has a r b and b s c.
inline FinRel rel_compose(const FinRel& r, const FinRel& s) {
  if (r.cod.labels != s.dom.labels)
    throw std::invalid_argument("rel_compose: carriers do not match");
  FinRel out = rel_empty(r.dom, s.cod);
  for (int a = 0; a < r.dom.size(); ++a)
    for (int b = 0; b < r.cod.size(); ++b)
      if (r.at(a, b))
        for (int c = 0; c < s.cod.size(); ++c)
          if (s.at(b, c)) out.set(a, c);
  return out;
}

/// (a,b) ~ (c,d) iff a r c and b s d.
inline FinRel rel_tensor(const FinRel& r, const FinRel& s) {
  FinSet dp = product_set({r.dom, s.dom}), cp = product_set({r.cod, s.cod});
  FinRel out = rel_empty(dp, cp);
  for (int a = 0; a < r.dom.size(); ++a)
    for (int b = 0; b < s.dom.size(); ++b)
      for (int c = 0; c < r.cod.size(); ++c)
        for (int d = 0; d < s.cod.size(); ++d)
          if (r.at(a, c) && s.at(b, d))
            out.set(dp.index_of({a, b}), cp.index_of({c, d}));
  return out;
}

enum class CurryDirection { forward, backward };

/// The hom-set bijection between relations A (x) B ~> C and A ~> B (x) C:
/// forward reads a ~ (b,c) iff (a,b) ~ c, backward inverts it.
inline FinRel rel_curry(const FinRel& r, CurryDirection dir) {
  if (dir == CurryDirection::forward) {
    if (!r.dom.is_factored() || r.dom.factor_count() != 2)
      throw std::invalid_argument("rel_curry: forward direction needs a binary product domain");
    FinSet a = r.dom.factor(0), b = r.dom.factor(1);
    FinSet bc = product_set({b, r.cod});
    FinRel out = rel_empty(a, bc);
    for (int x = 0; x < r.dom.size(); ++x)
      for (int c = 0; c < r.cod.size(); ++c)
        if (r.at(x, c))
          out.set(r.dom.digit(x, 0), bc.index_of({r.dom.digit(x, 1), c}));
    return out;
  }
  if (!r.cod.is_factored() || r.cod.factor_count() != 2)
    throw std::invalid_argument("rel_curry: backward direction needs a binary product codomain");
  FinSet b = r.cod.factor(0), c = r.cod.factor(1);
  FinSet ab = product_set({r.dom, b});
  FinRel out = rel_empty(ab, c);
  for (int a = 0; a < r.dom.size(); ++a)
    for (int y = 0; y < r.cod.size(); ++y)
      if (r.at(a, y))
        out.set(ab.index_of({a, r.cod.digit(y, 0)}), r.cod.digit(y, 1));
  return out;
}

struct RelationClass {
  bool right_unique = false;  // partial function: every source hits at most one target
  bool left_total = false;    // multivalued function: every source hits at least one target
  bool function = false;
};

inline RelationClass classify_relation(const FinRel& r) {
  RelationClass c;
  c.right_unique = true;
  c.left_total = true;
  for (int a = 0; a < r.dom.size(); ++a) {
    int hits = 0;
    for (int b = 0; b < r.cod.size(); ++b)
      if (r.at(a, b)) ++hits;
    if (hits > 1) c.right_unique = false;
    if (hits == 0) c.left_total = false;
  }
  c.function = c.right_unique && c.left_total;
  return c;
}

/// The graph of a function, as a relation.
inline FinRel graph(const FinFn& f) {
  FinRel r = rel_empty(f.dom, f.cod);
  for (int x = 0; x < f.dom.size(); ++x) r.set(x, f(x));
  return r;
}

/// A labeling l : X -> Y turned into the generating relation Y ~> X that
/// sends each label to its preimage.
inline FinRel inverse_image(const FinFn& l) {
  FinRel r = rel_empty(l.cod, l.dom);
  for (int x = 0; x < l.dom.size(); ++x) r.set(l(x), x);
  return r;
}

/// Decides whether m equals a tensor of per-factor relations and, if so,
/// returns them. The candidate components are the existential projections
/// (y_i ~ z_i iff some pair in m matches at position i); if m is a tensor of
/// nonempty components those projections recover them, and the all-empty
/// relation is the tensor of empty components, so testing the reassembled
/// tensor against m is a complete decision procedure.
inline std::optional<std::vector<FinRel>> monoidal_factorization(const FinRel& m) {
  if (!m.dom.is_factored() || !m.cod.is_factored())
    throw std::invalid_argument("monoidal_factorization: factor structure required");
  if (m.dom.factor_count() != m.cod.factor_count())
    throw std::invalid_argument("monoidal_factorization: factor counts must agree");
  const int n = m.dom.factor_count();
  std::vector<FinRel> comps;
  comps.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    FinRel c = rel_empty(m.dom.factor(i), m.cod.factor(i));
    for (int y = 0; y < m.dom.size(); ++y)
      for (int z = 0; z < m.cod.size(); ++z)
        if (m.at(y, z)) c.set(m.dom.digit(y, i), m.cod.digit(z, i));
    comps.push_back(std::move(c));
  }
  FinRel woven = comps[0];
  for (int i = 1; i < n; ++i) woven = rel_tensor(woven, comps[static_cast<std::size_t>(i)]);
  // Nested tensoring flattens to the same mixed-radix layout, so comparing
  // raw incidence is comparing the relations.
  if (woven.incidence != m.incidence) return std::nullopt;
  return comps;
}

}  // namespace fincat
