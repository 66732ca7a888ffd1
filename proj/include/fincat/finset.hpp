#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fincat {

/// Cap on exhaustive map searches, in candidate maps. Searches that would
/// exceed it either fall back to a direct construction (where one is exact)
/// or report the result as undecided.
inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// min(base^exp, cap + 1) without overflow.
inline std::uint64_t pow_capped(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  if (exp == 0) return 1;
  if (base == 0) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

/// Enumerates all maps [points] -> [values] in lexicographic order,
/// calling fn(const std::vector<int>&) for each. fn returns true to stop.
/// Returns whether fn stopped the enumeration.
template <typename Fn>
bool for_each_map(int points, int values, Fn&& fn) {
  if (points == 0) {
    std::vector<int> empty;
    return fn(empty);
  }
  if (values == 0) return false;
  std::vector<int> m(static_cast<std::size_t>(points), 0);
  for (;;) {
    if (fn(m)) return true;
    int i = points - 1;
    while (i >= 0 && m[static_cast<std::size_t>(i)] == values - 1) {
      m[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return false;
    ++m[static_cast<std::size_t>(i)];
  }
}

namespace detail {

/// Splits "(a,b,c)" at top-level commas. Returns nullopt unless the string
/// is a balanced tuple of exactly `arity` parts.
inline std::optional<std::vector<std::string>> split_tuple_label(const std::string& s, int arity) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return std::nullopt;
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') {
      --depth;
      if (depth < 0) return std::nullopt;
    }
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (depth != 0) return std::nullopt;
  parts.push_back(cur);
  if (static_cast<int>(parts.size()) != arity) return std::nullopt;
  for (const auto& p : parts)
    if (p.empty()) return std::nullopt;
  return parts;
}

}  // namespace detail

/// A finite set: ordered distinct labels, plus optional product structure.
/// When factor_shape is present the elements are the tuples of factor
/// elements enumerated in mixed-radix order (first factor most significant),
/// and the flat indexing makes the associator the identity on indices.
struct FinSet {
  std::vector<std::string> labels;
  std::optional<std::vector<int>> factor_shape;

  FinSet() = default;
  explicit FinSet(std::vector<std::string> ls,
                  std::optional<std::vector<int>> shape = std::nullopt)
      : labels(std::move(ls)), factor_shape(std::move(shape)) {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
      throw std::invalid_argument("FinSet: labels must be distinct");
    if (factor_shape) {
      long long prod = 1;
      for (int s : *factor_shape) {
        if (s < 1) throw std::invalid_argument("FinSet: factor sizes must be >= 1");
        prod *= s;
        if (prod > static_cast<long long>(labels.size()))
          throw std::invalid_argument("FinSet: factor_shape does not match label count");
      }
      if (prod != static_cast<long long>(labels.size()))
        throw std::invalid_argument("FinSet: factor_shape does not match label count");
    }
  }

  int size() const { return static_cast<int>(labels.size()); }
  bool is_factored() const { return factor_shape.has_value(); }

  const std::vector<int>& shape() const {
    if (!factor_shape) throw std::invalid_argument("FinSet: factor structure required");
    return *factor_shape;
  }
  int factor_count() const { return static_cast<int>(shape().size()); }
  int factor_size(int i) const { return shape().at(static_cast<std::size_t>(i)); }

  std::vector<int> digits(int index) const {
    const auto& sh = shape();
    std::vector<int> d(sh.size());
    for (int i = static_cast<int>(sh.size()) - 1; i >= 0; --i) {
      d[static_cast<std::size_t>(i)] = index % sh[static_cast<std::size_t>(i)];
      index /= sh[static_cast<std::size_t>(i)];
    }
    return d;
  }

  int index_of(const std::vector<int>& d) const {
    const auto& sh = shape();
    if (d.size() != sh.size()) throw std::invalid_argument("FinSet: digit arity mismatch");
    int idx = 0;
    for (std::size_t i = 0; i < sh.size(); ++i) {
      if (d[i] < 0 || d[i] >= sh[i]) throw std::invalid_argument("FinSet: digit out of range");
      idx = idx * sh[i] + d[i];
    }
    return idx;
  }

  int digit(int index, int i) const {
    const auto& sh = shape();
    int stride = 1;
    for (int j = static_cast<int>(sh.size()) - 1; j > i; --j) stride *= sh[static_cast<std::size_t>(j)];
    return (index / stride) % sh[static_cast<std::size_t>(i)];
  }

  /// The i-th factor as a standalone set. Labels are recovered from the
  /// canonical "(a,b,...)" tuple syntax when the whole set uses it
  /// consistently; otherwise representative product labels stand in.
  FinSet factor(int i) const {
    const auto& sh = shape();
    int n = static_cast<int>(sh.size());
    if (i < 0 || i >= n) throw std::invalid_argument("FinSet: factor index out of range");
    if (n == 1) return FinSet(labels);
    int si = sh[static_cast<std::size_t>(i)];

    std::vector<std::vector<std::string>> parts(labels.size());
    bool parsed = true;
    for (std::size_t x = 0; x < labels.size(); ++x) {
      auto p = detail::split_tuple_label(labels[x], n);
      if (!p) {
        parsed = false;
        break;
      }
      parts[x] = std::move(*p);
    }
    if (parsed) {
      std::vector<std::string> ls(static_cast<std::size_t>(si));
      for (int k = 0; k < si; ++k) {
        std::vector<int> d(static_cast<std::size_t>(n), 0);
        d[static_cast<std::size_t>(i)] = k;
        ls[static_cast<std::size_t>(k)] = parts[static_cast<std::size_t>(index_of(d))][static_cast<std::size_t>(i)];
      }
      bool consistent = true;
      for (int x = 0; x < size() && consistent; ++x)
        consistent = parts[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)] ==
                     ls[static_cast<std::size_t>(digit(x, i))];
      std::set<std::string> uniq(ls.begin(), ls.end());
      if (consistent && uniq.size() == ls.size()) return FinSet(ls);
    }
    // Fallback: label factor elements by a representative product element.
    std::vector<std::string> ls(static_cast<std::size_t>(si));
    for (int k = 0; k < si; ++k) {
      std::vector<int> d(static_cast<std::size_t>(n), 0);
      d[static_cast<std::size_t>(i)] = k;
      ls[static_cast<std::size_t>(k)] = labels[static_cast<std::size_t>(index_of(d))];
    }
    return FinSet(ls);
  }

  /// Re-inserts digit `yi` at position i into the digits of `rest`, an index
  /// into the product of the remaining factors.
  int merge_at(int i, int yi, int rest) const {
    const auto& sh = shape();
    int n = static_cast<int>(sh.size());
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int j = n - 1; j >= 0; --j) {
      if (j == i) continue;
      d[static_cast<std::size_t>(j)] = rest % sh[static_cast<std::size_t>(j)];
      rest /= sh[static_cast<std::size_t>(j)];
    }
    d[static_cast<std::size_t>(i)] = yi;
    return index_of(d);
  }

  int co_factor_size(int i) const {
    const auto& sh = shape();
    int r = 1;
    for (int j = 0; j < static_cast<int>(sh.size()); ++j)
      if (j != i) r *= sh[static_cast<std::size_t>(j)];
    return r;
  }

  friend bool operator==(const FinSet&, const FinSet&) = default;
};

inline FinSet terminal_set() { return FinSet({"*"}); }

/// A total function between finite sets, stored as codomain indices.
struct FinFn {
  FinSet dom, cod;
  std::vector<int> map;

  FinFn() = default;
  FinFn(FinSet d, FinSet c, std::vector<int> m)
      : dom(std::move(d)), cod(std::move(c)), map(std::move(m)) {
    if (static_cast<int>(map.size()) != dom.size())
      throw std::invalid_argument("FinFn: map length must equal domain size");
    for (int v : map)
      if (v < 0 || v >= cod.size())
        throw std::invalid_argument("FinFn: map entry out of codomain range");
  }

  int operator()(int x) const { return map[static_cast<std::size_t>(x)]; }

  /// Carrier labels and the underlying map; factor metadata is not compared.
  friend bool operator==(const FinFn& a, const FinFn& b) {
    return a.dom.labels == b.dom.labels && a.cod.labels == b.cod.labels && a.map == b.map;
  }
};

inline FinFn identity(const FinSet& a) {
  std::vector<int> m(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) m[static_cast<std::size_t>(i)] = i;
  return FinFn(a, a, std::move(m));
}

/// Diagrammatic composite: f first, then g.
inline FinFn compose(const FinFn& f, const FinFn& g) {
  if (f.cod.labels != g.dom.labels)
    throw std::invalid_argument("compose: codomain of first must equal domain of second");
  std::vector<int> m(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i)
    m[i] = g.map[static_cast<std::size_t>(f.map[i])];
  return FinFn(f.dom, g.cod, std::move(m));
}

inline FinSet product_set(const std::vector<FinSet>& factors) {
  if (factors.empty()) throw std::invalid_argument("product_set: need at least one factor");
  std::vector<int> shape;
  shape.reserve(factors.size());
  long long total = 1;
  for (const auto& f : factors) {
    shape.push_back(f.size());
    total *= f.size();
  }
  if (factors.size() == 1) return FinSet(factors[0].labels, shape);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(total));
  std::vector<int> d(factors.size(), 0);
  for (long long x = 0; x < total; ++x) {
    std::string l = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) l += ",";
      l += factors[i].labels[static_cast<std::size_t>(d[i])];
    }
    l += ")";
    labels.push_back(std::move(l));
    for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
      if (++d[static_cast<std::size_t>(i)] < factors[static_cast<std::size_t>(i)].size()) break;
      d[static_cast<std::size_t>(i)] = 0;
    }
  }
  return FinSet(std::move(labels), std::move(shape));
}

inline FinFn projection(const FinSet& prod, int i) {
  FinSet fi = prod.factor(i);
  std::vector<int> m(static_cast<std::size_t>(prod.size()));
  for (int x = 0; x < prod.size(); ++x) m[static_cast<std::size_t>(x)] = prod.digit(x, i);
  return FinFn(prod, std::move(fi), std::move(m));
}

/// The tuple map <f1,...,fN> into a given product. All fs share a domain and
/// fs[i].cod must be the i-th factor carrier.
inline FinFn pairing_into(const std::vector<FinFn>& fs, const FinSet& prod) {
  if (fs.empty()) throw std::invalid_argument("pairing_into: need at least one component");
  if (static_cast<int>(fs.size()) != prod.factor_count())
    throw std::invalid_argument("pairing_into: component count must match factor count");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].dom.labels != fs[0].dom.labels)
      throw std::invalid_argument("pairing_into: components must share a domain");
    if (fs[i].cod.size() != prod.factor_size(static_cast<int>(i)))
      throw std::invalid_argument("pairing_into: component codomain does not match factor");
  }
  std::vector<int> m(static_cast<std::size_t>(fs[0].dom.size()));
  std::vector<int> d(fs.size());
  for (int x = 0; x < fs[0].dom.size(); ++x) {
    for (std::size_t i = 0; i < fs.size(); ++i) d[i] = fs[i](x);
    m[static_cast<std::size_t>(x)] = prod.index_of(d);
  }
  return FinFn(fs[0].dom, prod, std::move(m));
}

inline FinFn pairing(const std::vector<FinFn>& fs) {
  std::vector<FinSet> cods;
  cods.reserve(fs.size());
  for (const auto& f : fs) cods.push_back(f.cod);
  return pairing_into(fs, product_set(cods));
}

/// f1 x f2 x ... acting factorwise between products.
inline FinFn product_map(const std::vector<FinFn>& fs) {
  std::vector<FinSet> doms, cods;
  for (const auto& f : fs) {
    doms.push_back(f.dom);
    cods.push_back(f.cod);
  }
  FinSet dp = product_set(doms), cp = product_set(cods);
  std::vector<int> m(static_cast<std::size_t>(dp.size()));
  std::vector<int> d(fs.size());
  for (int x = 0; x < dp.size(); ++x) {
    for (std::size_t i = 0; i < fs.size(); ++i)
      d[i] = fs[i](dp.digit(x, static_cast<int>(i)));
    m[static_cast<std::size_t>(x)] = cp.index_of(d);
  }
  return FinFn(dp, std::move(cp), std::move(m));
}

inline FinFn terminal_map(const FinSet& a) {
  return FinFn(a, terminal_set(), std::vector<int>(static_cast<std::size_t>(a.size()), 0));
}

inline FinFn diagonal(const FinSet& a) {
  FinFn id = identity(a);
  return pairing({id, id});
}

/// The braiding <p2,p1> : A x B -> B x A.
inline FinFn swap_map(const FinSet& a, const FinSet& b) {
  FinSet ab = product_set({a, b}), ba = product_set({b, a});
  std::vector<int> m(static_cast<std::size_t>(ab.size()));
  for (int x = 0; x < ab.size(); ++x)
    m[static_cast<std::size_t>(x)] = ba.index_of({ab.digit(x, 1), ab.digit(x, 0)});
  return FinFn(ab, std::move(ba), std::move(m));
}

/// Product object together with its universal-property kit.
struct CartesianStructure {
  FinSet product;
  std::vector<FinFn> projections;
  FinFn diagonal;  // product -> product x product
  FinFn terminal;  // product -> 1
};

inline CartesianStructure cartesian_structure(const std::vector<FinSet>& factors) {
  FinSet p = product_set(factors);
  std::vector<FinFn> projs;
  projs.reserve(factors.size());
  for (int i = 0; i < static_cast<int>(factors.size()); ++i) projs.push_back(projection(p, i));
  FinFn diag = diagonal(p);
  FinFn term = terminal_map(p);
  return CartesianStructure{std::move(p), std::move(projs), std::move(diag), std::move(term)};
}

struct MorphismClass {
  bool mono = false;
  bool epi = false;
  bool iso = false;
};

/// In finite sets: mono = injective, epi = surjective, iso = bijective.
inline MorphismClass classify_morphism(const FinFn& f) {
  std::vector<int> hits(static_cast<std::size_t>(f.cod.size()), 0);
  for (int v : f.map) ++hits[static_cast<std::size_t>(v)];
  MorphismClass c;
  c.mono = true;
  c.epi = true;
  for (int h : hits) {
    if (h > 1) c.mono = false;
    if (h == 0) c.epi = false;
  }
  c.iso = c.mono && c.epi;
  return c;
}

inline bool is_injective(const FinFn& f) { return classify_morphism(f).mono; }

/// Result of a retraction search. `exhaustive` records whether the verdict
/// came from full enumeration or from the direct construction that applies
/// when the candidate space exceeds the budget.
struct RetractionSearch {
  std::optional<FinFn> retraction;
  bool exhaustive = false;
};

/// Finds h with h . m = id_dom(m), i.e. decides whether m splits. The first
/// witness in lexicographic candidate order is returned; the over-budget
/// construction (forced preimages, index 0 elsewhere) yields that same
/// witness, so the result does not depend on the path taken.
inline RetractionSearch find_retraction(const FinFn& m,
                                        std::uint64_t budget = kDefaultSearchBudget) {
  const int n = m.dom.size(), c = m.cod.size();
  std::uint64_t candidates = pow_capped(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(c), budget);
  RetractionSearch out;
  if (candidates <= budget) {
    out.exhaustive = true;
    for_each_map(c, n, [&](const std::vector<int>& h) {
      for (int x = 0; x < n; ++x)
        if (h[static_cast<std::size_t>(m(x))] != x) return false;
      out.retraction = FinFn(m.cod, m.dom, h);
      return true;
    });
    return out;
  }
  out.exhaustive = false;
  if (!is_injective(m)) return out;  // a split mono is injective
  std::vector<int> h(static_cast<std::size_t>(c), 0);
  for (int x = 0; x < n; ++x) h[static_cast<std::size_t>(m(x))] = x;
  out.retraction = FinFn(m.cod, m.dom, std::move(h));
  return out;
}

/// Per-factor components of a product morphism (or of a factorwise
/// retraction): components[i] maps the i-th domain factor to the i-th
/// codomain factor.
struct ComponentWitness {
  std::vector<FinFn> components;
};

namespace detail {

inline void require_matching_shapes(const FinFn& m, const char* who) {
  if (!m.dom.is_factored() || !m.cod.is_factored())
    throw std::invalid_argument(std::string(who) + ": factor structure required on both sides");
  if (m.dom.factor_count() != m.cod.factor_count())
    throw std::invalid_argument(std::string(who) + ": factor counts must agree");
}

}  // namespace detail

/// Decides whether m is a product of per-factor maps, i.e. whether each
/// output factor depends only on the matching input factor. On success the
/// components are read off by pinning every other input factor at
/// `basepoint`; the preceding invariance test makes the choice immaterial.
inline std::optional<ComponentWitness> is_product_morphism(const FinFn& m, int basepoint = 0) {
  detail::require_matching_shapes(m, "is_product_morphism");
  const int n = m.dom.factor_count();
  for (int i = 0; i < n; ++i)
    if (basepoint < 0 || basepoint >= m.dom.factor_size(i))
      throw std::invalid_argument("is_product_morphism: basepoint out of range");
  for (int x = 0; x < m.dom.size(); ++x) {
    std::vector<int> d = m.dom.digits(x);
    for (int i = 0; i < n; ++i) {
      std::vector<int> pinned(d.size(), basepoint);
      pinned[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i)];
      int rep = m.dom.index_of(pinned);
      if (m.cod.digit(m(x), i) != m.cod.digit(m(rep), i)) return std::nullopt;
    }
  }
  ComponentWitness w;
  for (int i = 0; i < n; ++i) {
    FinSet di = m.dom.factor(i), ci = m.cod.factor(i);
    std::vector<int> comp(static_cast<std::size_t>(di.size()));
    for (int yi = 0; yi < di.size(); ++yi) {
      std::vector<int> pinned(static_cast<std::size_t>(n), basepoint);
      pinned[static_cast<std::size_t>(i)] = yi;
      comp[static_cast<std::size_t>(yi)] = m.cod.digit(m(m.dom.index_of(pinned)), i);
    }
    w.components.emplace_back(std::move(di), std::move(ci), std::move(comp));
  }
  return w;
}

/// Whether the curried form of m_i = p_i . m, seen as a table of functions
/// on the i-th input factor indexed by the remaining factors, is constant.
inline bool transpose_is_constant(const FinFn& m, int i) {
  detail::require_matching_shapes(m, "transpose_is_constant");
  const int si = m.dom.factor_size(i);
  const int rest = m.dom.co_factor_size(i);
  std::vector<int> first;
  for (int r = 0; r < rest; ++r) {
    std::vector<int> fn(static_cast<std::size_t>(si));
    for (int yi = 0; yi < si; ++yi)
      fn[static_cast<std::size_t>(yi)] = m.cod.digit(m(m.dom.merge_at(i, yi, r)), i);
    if (r == 0)
      first = std::move(fn);
    else if (fn != first)
      return false;
  }
  return true;
}

/// Same invariance decided through the pullback of the i-th projection:
/// materializes {(y, y') : y_i = y'_i} with its two projections and tests
/// m_i . pi1 = m_i . pi2 as honest composites.
inline bool invariance_via_pullback(const FinFn& m, int i) {
  detail::require_matching_shapes(m, "invariance_via_pullback");
  std::vector<int> first, second;
  std::vector<std::string> labels;
  for (int y = 0; y < m.dom.size(); ++y)
    for (int y2 = 0; y2 < m.dom.size(); ++y2)
      if (m.dom.digit(y, i) == m.dom.digit(y2, i)) {
        first.push_back(y);
        second.push_back(y2);
        labels.push_back("(" + m.dom.labels[static_cast<std::size_t>(y)] + "," +
                         m.dom.labels[static_cast<std::size_t>(y2)] + ")");
      }
  FinSet pb(std::move(labels));
  FinFn pi1(pb, m.dom, std::move(first));
  FinFn pi2(pb, m.dom, std::move(second));
  FinFn mi = compose(m, projection(m.cod, i));
  return compose(pi1, mi) == compose(pi2, mi);
}

/// Searches for per-factor maps h_i whose product retracts m, i.e.
/// h_i(m_i(y)) = y_i for every input y. Exhaustive per component within the
/// budget; beyond it the equivalent forced-value construction is used, which
/// produces the same lexicographically-first witness.
inline std::optional<ComponentWitness> find_modular_retraction(
    const FinFn& m, std::uint64_t budget = kDefaultSearchBudget) {
  detail::require_matching_shapes(m, "find_modular_retraction");
  const int n = m.dom.factor_count();
  ComponentWitness w;
  for (int i = 0; i < n; ++i) {
    FinSet yi = m.dom.factor(i), zi = m.cod.factor(i);
    auto retracts = [&](const std::vector<int>& h) {
      for (int y = 0; y < m.dom.size(); ++y)
        if (h[static_cast<std::size_t>(m.cod.digit(m(y), i))] != m.dom.digit(y, i)) return false;
      return true;
    };
    std::uint64_t candidates = pow_capped(static_cast<std::uint64_t>(yi.size()),
                                          static_cast<std::uint64_t>(zi.size()), budget);
    std::optional<std::vector<int>> found;
    if (candidates <= budget) {
      for_each_map(zi.size(), yi.size(), [&](const std::vector<int>& h) {
        if (!retracts(h)) return false;
        found = h;
        return true;
      });
    } else {
      std::vector<int> h(static_cast<std::size_t>(zi.size()), 0);
      std::vector<int> forced(static_cast<std::size_t>(zi.size()), -1);
      bool ok = true;
      for (int y = 0; y < m.dom.size() && ok; ++y) {
        int z = m.cod.digit(m(y), i), want = m.dom.digit(y, i);
        if (forced[static_cast<std::size_t>(z)] == -1)
          forced[static_cast<std::size_t>(z)] = want;
        else if (forced[static_cast<std::size_t>(z)] != want)
          ok = false;
      }
      if (ok) {
        for (int z = 0; z < zi.size(); ++z)
          h[static_cast<std::size_t>(z)] = forced[static_cast<std::size_t>(z)] == -1
                                               ? 0
                                               : forced[static_cast<std::size_t>(z)];
        found = h;
      }
    }
    if (!found) return std::nullopt;
    w.components.emplace_back(std::move(zi), std::move(yi), std::move(*found));
  }
  return w;
}

enum class Tristate { no, yes, undecided };

/// Entry (i,j), i != j, is `yes` when no map h : Z_i -> Y_j reconstructs the
/// j-th input factor from the i-th code, i.e. the i-th code is missing the
/// j-th factor's information. Decided by exhaustive search over the
/// candidate maps; non-existence admits no shortcut, so entries whose
/// candidate space exceeds the budget come back `undecided`. The diagonal is
/// not probed and reads `no`.
inline std::vector<std::vector<Tristate>> missing_information_search(
    const FinFn& m, std::uint64_t budget = kDefaultSearchBudget) {
  detail::require_matching_shapes(m, "missing_information_search");
  const int n = m.dom.factor_count();
  std::vector<std::vector<Tristate>> out(
      static_cast<std::size_t>(n), std::vector<Tristate>(static_cast<std::size_t>(n), Tristate::no));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int zi = m.cod.factor_size(i), yj = m.dom.factor_size(j);
      std::uint64_t candidates = pow_capped(static_cast<std::uint64_t>(yj),
                                            static_cast<std::uint64_t>(zi), budget);
      if (candidates > budget) {
        out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Tristate::undecided;
        continue;
      }
      bool exists = for_each_map(zi, yj, [&](const std::vector<int>& h) {
        for (int y = 0; y < m.dom.size(); ++y)
          if (h[static_cast<std::size_t>(m.cod.digit(m(y), i))] != m.dom.digit(y, j)) return false;
        return true;
      });
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          exists ? Tristate::no : Tristate::yes;
    }
  }
  return out;
}

inline bool is_inverse(const FinFn& f, const FinFn& g) {
  if (f.cod.labels != g.dom.labels || g.cod.labels != f.dom.labels)
    throw std::invalid_argument("is_inverse: carriers do not match up");
  return compose(g, f) == identity(g.dom) && compose(f, g) == identity(f.dom);
}

}  // namespace fincat
