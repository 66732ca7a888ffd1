#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <fincat/finset.hpp>
#include <fincat/rational.hpp>

namespace fincat {

/// A stochastic map between finite sets: one probability row per domain
/// element, in exact rationals. Kernels are total -- every row must sum to 1
/// within the construction tolerance; sub-stochastic rows are rejected.
/// Entries in [-eps, 0) are clamped to zero.
///
/// All equality tests in this module take an explicit tolerance; the theorem
/// suites run with eps = 0 and exact arithmetic throughout.
struct StochMap {
  FinSet dom, cod;
  std::vector<Rat> rows;  // row-major |dom| x |cod|

  StochMap() = default;
  StochMap(FinSet d, FinSet c, std::vector<Rat> r, const Rat& eps = Rat(0))
      : dom(std::move(d)), cod(std::move(c)), rows(std::move(r)) {
    if (rows.size() != static_cast<std::size_t>(dom.size()) * static_cast<std::size_t>(cod.size()))
      throw std::invalid_argument("StochMap: row data does not match carriers");
    for (auto& v : rows) {
      if (v < -eps) throw std::invalid_argument("StochMap: negative entry");
      if (v < Rat(0)) v = Rat(0);
    }
    for (int a = 0; a < dom.size(); ++a) {
      Rat sum(0);
      for (int b = 0; b < cod.size(); ++b) sum += at(a, b);
      if (!approx_equal(sum, Rat(1), eps))
        throw std::invalid_argument("StochMap: row " + std::to_string(a) + " does not sum to 1");
    }
  }

  const Rat& at(int a, int b) const {
    return rows[static_cast<std::size_t>(a) * static_cast<std::size_t>(cod.size()) +
                static_cast<std::size_t>(b)];
  }
  Rat& at(int a, int b) {
    return rows[static_cast<std::size_t>(a) * static_cast<std::size_t>(cod.size()) +
                static_cast<std::size_t>(b)];
  }
};

/// Entrywise comparison within eps; carriers must have the same sizes.
inline bool kernels_equal(const StochMap& a, const StochMap& b, const Rat& eps) {
  if (a.dom.size() != b.dom.size() || a.cod.size() != b.cod.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    if (!approx_equal(a.rows[i], b.rows[i], eps)) return false;
  return true;
}

/// A probability distribution on a finite carrier.
struct FinDist {
  FinSet carrier;
  std::vector<Rat> weights;

  FinDist() = default;
  FinDist(FinSet c, std::vector<Rat> w, const Rat& eps = Rat(0))
      : carrier(std::move(c)), weights(std::move(w)) {
    if (weights.size() != static_cast<std::size_t>(carrier.size()))
      throw std::invalid_argument("FinDist: weight count does not match carrier");
    Rat sum(0);
    for (const auto& v : weights) {
      if (v < -eps) throw std::invalid_argument("FinDist: negative weight");
      sum += v;
    }
    if (!approx_equal(sum, Rat(1), eps))
      throw std::invalid_argument("FinDist: weights do not sum to 1");
  }
};

/// A function embedded as a point-mass kernel.
inline StochMap stoch_embed(const FinFn& f) {
  std::vector<Rat> rows(static_cast<std::size_t>(f.dom.size()) * static_cast<std::size_t>(f.cod.size()),
                        Rat(0));
  StochMap k;
  k.dom = f.dom;
  k.cod = f.cod;
  k.rows = std::move(rows);
  for (int x = 0; x < f.dom.size(); ++x) k.at(x, f(x)) = Rat(1);
  return k;
}

inline StochMap stoch_identity(const FinSet& a) { return stoch_embed(identity(a)); }

/// Kernel composition (p first, then q): the matrix product, which is the
/// discrete Chapman-Kolmogorov sum.
inline StochMap stoch_compose(const StochMap& p, const StochMap& q) {
  if (p.cod.labels != q.dom.labels)
    throw std::invalid_argument("stoch_compose: carriers do not match");
  StochMap out;
  out.dom = p.dom;
  out.cod = q.cod;
  out.rows.assign(static_cast<std::size_t>(p.dom.size()) * static_cast<std::size_t>(q.cod.size()),
                  Rat(0));
  for (int a = 0; a < p.dom.size(); ++a)
    for (int b = 0; b < p.cod.size(); ++b) {
      if (p.at(a, b).is_zero()) continue;
      for (int c = 0; c < q.cod.size(); ++c)
        out.at(a, c) += p.at(a, b) * q.at(b, c);
    }
  return out;
}

inline StochMap stoch_tensor(const StochMap& p, const StochMap& q) {
  FinSet dp = product_set({p.dom, q.dom}), cp = product_set({p.cod, q.cod});
  StochMap out;
  out.dom = dp;
  out.cod = cp;
  out.rows.assign(static_cast<std::size_t>(dp.size()) * static_cast<std::size_t>(cp.size()), Rat(0));
  for (int a = 0; a < p.dom.size(); ++a)
    for (int b = 0; b < q.dom.size(); ++b)
      for (int c = 0; c < p.cod.size(); ++c)
        for (int d = 0; d < q.cod.size(); ++d)
          out.at(dp.index_of({a, b}), cp.index_of({c, d})) = p.at(a, c) * q.at(b, d);
  return out;
}

/// The n-fold copy A -> A (x) ... (x) A (point mass on the diagonal).
inline StochMap stoch_copy_n(const FinSet& a, int n) {
  if (n < 1) throw std::invalid_argument("stoch_copy_n: need n >= 1");
  if (n == 1) return stoch_identity(a);
  std::vector<FinSet> fs(static_cast<std::size_t>(n), a);
  FinSet an = product_set(fs);
  StochMap out;
  out.dom = a;
  out.cod = an;
  out.rows.assign(static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(an.size()), Rat(0));
  std::vector<int> d(static_cast<std::size_t>(n));
  for (int x = 0; x < a.size(); ++x) {
    for (auto& v : d) v = x;
    out.at(x, an.index_of(d)) = Rat(1);
  }
  return out;
}

inline StochMap stoch_delete(const FinSet& a) { return stoch_embed(terminal_map(a)); }

inline StochMap stoch_swap(const FinSet& a, const FinSet& b) {
  return stoch_embed(swap_map(a, b));
}

/// The comonoid structure every object of a Markov category carries.
struct MarkovGenerators {
  StochMap copy;     // A -> A (x) A
  StochMap discard;  // A -> 1
  StochMap swap;     // A (x) A -> A (x) A
};

inline MarkovGenerators markov_generators(const FinSet& a) {
  return MarkovGenerators{stoch_copy_n(a, 2), stoch_delete(a), stoch_swap(a, a)};
}

/// Sums out the codomain factors not listed in `keep` (0-based, strictly
/// increasing). Keeping everything returns the kernel unchanged; keeping
/// nothing composes with discard.
inline StochMap marginalize(const StochMap& m, const std::vector<int>& keep) {
  if (!m.cod.is_factored())
    throw std::invalid_argument("marginalize: factored codomain required");
  const int n = m.cod.factor_count();
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n) throw std::invalid_argument("marginalize: factor index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("marginalize: keep list must be strictly increasing");
  }
  if (static_cast<int>(keep.size()) == n) return m;
  if (keep.empty()) return stoch_compose(m, stoch_delete(m.cod));

  FinSet kc;
  if (keep.size() == 1) {
    kc = m.cod.factor(keep[0]);
  } else {
    std::vector<FinSet> fs;
    for (int i : keep) fs.push_back(m.cod.factor(i));
    kc = product_set(fs);
  }
  StochMap out;
  out.dom = m.dom;
  out.cod = kc;
  out.rows.assign(static_cast<std::size_t>(m.dom.size()) * static_cast<std::size_t>(kc.size()), Rat(0));
  for (int a = 0; a < m.dom.size(); ++a)
    for (int z = 0; z < m.cod.size(); ++z) {
      if (m.at(a, z).is_zero()) continue;
      int kidx = 0;
      for (std::size_t i = 0; i < keep.size(); ++i)
        kidx = kidx * m.cod.factor_size(keep[i]) + m.cod.digit(z, keep[i]);
      out.at(a, kidx) += m.at(a, z);
    }
  return out;
}

/// Deterministic = commutes with copy. For finite kernels this coincides
/// with every row being a point mass; both characterizations are computed
/// and must agree (they can drift apart only under an unreasonably coarse
/// tolerance, which is reported as an error rather than absorbed).
inline bool is_deterministic(const StochMap& f, const Rat& eps = Rat(0)) {
  bool point_mass = true;
  for (int a = 0; a < f.dom.size() && point_mass; ++a) {
    bool has_one = false;
    for (int b = 0; b < f.cod.size(); ++b) {
      const Rat& v = f.at(a, b);
      if (approx_equal(v, Rat(1), eps))
        has_one = true;
      else if (!approx_equal(v, Rat(0), eps))
        point_mass = false;
    }
    point_mass = point_mass && has_one;
  }
  StochMap lhs = stoch_compose(f, stoch_copy_n(f.cod, 2));
  StochMap rhs = stoch_compose(stoch_copy_n(f.dom, 2), stoch_tensor(f, f));
  bool natural = kernels_equal(lhs, rhs, eps);
  if (natural != point_mass)
    throw std::logic_error("is_deterministic: characterizations disagree at this tolerance");
  return natural;
}

/// Whether, for every input, the joint over the output factors equals the
/// product of its own per-factor marginals: m = (tensor of marginals)
/// composed after the multiple copy, checked entrywise.
inline bool is_projectable(const StochMap& m, const Rat& eps = Rat(0)) {
  if (!m.cod.is_factored())
    throw std::invalid_argument("is_projectable: factored codomain required");
  const int n = m.cod.factor_count();
  for (int a = 0; a < m.dom.size(); ++a) {
    // Marginal of this row over each output factor.
    std::vector<std::vector<Rat>> marg(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      marg[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(m.cod.factor_size(i)), Rat(0));
    for (int z = 0; z < m.cod.size(); ++z)
      for (int i = 0; i < n; ++i)
        marg[static_cast<std::size_t>(i)][static_cast<std::size_t>(m.cod.digit(z, i))] += m.at(a, z);
    for (int z = 0; z < m.cod.size(); ++z) {
      Rat prod(1);
      for (int i = 0; i < n; ++i)
        prod *= marg[static_cast<std::size_t>(i)][static_cast<std::size_t>(m.cod.digit(z, i))];
      if (!approx_equal(m.at(a, z), prod, eps)) return false;
    }
  }
  return true;
}

/// Conditional independence of the first and third output factors given the
/// middle one and the input, for a kernel into a ternary product (X, W, Y).
/// Checked by finite disintegration: for every input a and every w with
/// p(w|a) > eps, p(x,y|w,a) must factor as p(x|w,a) p(y|w,a). States below
/// the tolerance impose no constraint, matching the almost-sure reading.
inline bool check_cond_independence(const StochMap& f, const Rat& eps = Rat(0)) {
  if (!f.cod.is_factored() || f.cod.factor_count() != 3)
    throw std::invalid_argument("check_cond_independence: ternary factored codomain required");
  const int nx = f.cod.factor_size(0), nw = f.cod.factor_size(1), ny = f.cod.factor_size(2);
  for (int a = 0; a < f.dom.size(); ++a) {
    for (int w = 0; w < nw; ++w) {
      Rat pw(0);
      for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y) pw += f.at(a, f.cod.index_of({x, w, y}));
      if (pw <= eps) continue;
      for (int x = 0; x < nx; ++x) {
        Rat pxw(0);
        for (int y = 0; y < ny; ++y) pxw += f.at(a, f.cod.index_of({x, w, y}));
        for (int y = 0; y < ny; ++y) {
          Rat pwy(0);
          for (int x2 = 0; x2 < nx; ++x2) pwy += f.at(a, f.cod.index_of({x2, w, y}));
          Rat joint = f.at(a, f.cod.index_of({x, w, y})) / pw;
          Rat split = (pxw / pw) * (pwy / pw);
          if (!approx_equal(joint, split, eps)) return false;
        }
      }
    }
  }
  return true;
}

/// Reshapes m : Y -> Z so that output factor i comes first, a trivial
/// one-point factor sits in the middle, and the remaining factors follow.
/// Feeding the result to check_cond_independence asks whether Z_i is
/// independent of the rest of the code given the input.
inline StochMap isolate_factor(const StochMap& m, int i) {
  if (!m.cod.is_factored())
    throw std::invalid_argument("isolate_factor: factored codomain required");
  const int n = m.cod.factor_count();
  if (i < 0 || i >= n) throw std::invalid_argument("isolate_factor: factor index out of range");
  FinSet zi = m.cod.factor(i);
  std::vector<FinSet> rest_fs;
  for (int j = 0; j < n; ++j)
    if (j != i) rest_fs.push_back(m.cod.factor(j));
  FinSet rest = rest_fs.empty() ? terminal_set()
               : rest_fs.size() == 1 ? rest_fs[0]
                                     : product_set(rest_fs);
  FinSet shaped = product_set({zi, terminal_set(), rest});
  StochMap out;
  out.dom = m.dom;
  out.cod = shaped;
  out.rows.assign(static_cast<std::size_t>(m.dom.size()) * static_cast<std::size_t>(shaped.size()),
                  Rat(0));
  for (int a = 0; a < m.dom.size(); ++a)
    for (int z = 0; z < m.cod.size(); ++z) {
      if (m.at(a, z).is_zero()) continue;
      int rest_idx = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) rest_idx = rest_idx * m.cod.factor_size(j) + m.cod.digit(z, j);
      out.at(a, shaped.index_of({m.cod.digit(z, i), 0, rest_idx})) = m.at(a, z);
    }
  return out;
}

/// Output factor i is independent of the remaining output factors given the
/// input.
inline bool splits_off_factor(const StochMap& m, int i, const Rat& eps = Rat(0)) {
  return check_cond_independence(isolate_factor(m, i), eps);
}

namespace detail {

inline void require_matching_stoch_shapes(const StochMap& m, const char* who) {
  if (!m.dom.is_factored() || !m.cod.is_factored())
    throw std::invalid_argument(std::string(who) + ": factor structure required on both sides");
  if (m.dom.factor_count() != m.cod.factor_count())
    throw std::invalid_argument(std::string(who) + ": factor counts must agree");
}

}  // namespace detail

/// Modularity probe for a stochastic encoder: for every i, the marginal
/// kernel onto output factor i must not react to the non-i input factors.
/// Quantifying the defining diagram over all probes n_i : Y_i -> Y_rest
/// reduces to exactly this at finite scale -- two-point uniform probes force
/// pointwise constancy in the non-i inputs, and constancy makes both sides
/// of the diagram equal for every probe -- so the constancy is what is
/// checked, over every pair of non-i input settings.
inline bool is_modular_stoch(const StochMap& m, const Rat& eps = Rat(0)) {
  detail::require_matching_stoch_shapes(m, "is_modular_stoch");
  const int n = m.dom.factor_count();
  for (int i = 0; i < n; ++i) {
    StochMap mi = marginalize(m, {i});
    const int si = m.dom.factor_size(i);
    const int rest = m.dom.co_factor_size(i);
    for (int yi = 0; yi < si; ++yi)
      for (int r1 = 0; r1 < rest; ++r1)
        for (int r2 = r1 + 1; r2 < rest; ++r2) {
          int a1 = m.dom.merge_at(i, yi, r1), a2 = m.dom.merge_at(i, yi, r2);
          for (int z = 0; z < mi.cod.size(); ++z)
            if (!approx_equal(mi.at(a1, z), mi.at(a2, z), eps)) return false;
        }
  }
  return true;
}

/// Strongest per-factor condition: each marginal m_i literally equals a
/// component kernel on Y_i tensored with discarding the other inputs. On
/// success returns the components m_ii(z_i | y_i), read off at the zero
/// setting of the other inputs; the equality is then re-verified against the
/// tensor-with-discard construction entrywise.
inline std::optional<std::vector<StochMap>> is_componentwise(const StochMap& m,
                                                             const Rat& eps = Rat(0)) {
  detail::require_matching_stoch_shapes(m, "is_componentwise");
  const int n = m.dom.factor_count();
  std::vector<StochMap> comps;
  for (int i = 0; i < n; ++i) {
    StochMap mi = marginalize(m, {i});
    FinSet yi = m.dom.factor(i), zi = m.cod.factor(i);
    StochMap comp;
    comp.dom = yi;
    comp.cod = zi;
    comp.rows.assign(static_cast<std::size_t>(yi.size()) * static_cast<std::size_t>(zi.size()),
                     Rat(0));
    for (int y = 0; y < yi.size(); ++y)
      for (int z = 0; z < zi.size(); ++z) comp.at(y, z) = mi.at(m.dom.merge_at(i, y, 0), z);
    // m_i must equal (z given y_i alone), i.e. the component applied to the
    // i-th input with every other input discarded.
    for (int a = 0; a < m.dom.size(); ++a)
      for (int z = 0; z < zi.size(); ++z)
        if (!approx_equal(mi.at(a, z), comp.at(m.dom.digit(a, i), z), eps)) return std::nullopt;
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// Two distinct joints on {0,1} (x) {0,1} with identical uniform marginals:
/// independent-uniform vs perfectly correlated. Certifies that a joint is
/// not determined by its marginals, i.e. the tensor has no universal
/// property here.
inline std::pair<StochMap, StochMap> marginals_witness() {
  FinSet two({"0", "1"});
  FinSet z = product_set({two, two});
  FinSet one = terminal_set();
  StochMap independent(one, z, {Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)});
  StochMap correlated(one, z, {Rat(1, 2), Rat(0), Rat(0), Rat(1, 2)});
  return {independent, correlated};
}

/// Pushforward of pA along f equals pB.
inline bool is_measure_preserving(const FinDist& pa, const FinFn& f, const FinDist& pb,
                                  const Rat& eps = Rat(0)) {
  if (f.dom.labels != pa.carrier.labels || f.cod.labels != pb.carrier.labels)
    throw std::invalid_argument("is_measure_preserving: carriers do not match");
  std::vector<Rat> push(static_cast<std::size_t>(f.cod.size()), Rat(0));
  for (int x = 0; x < f.dom.size(); ++x)
    push[static_cast<std::size_t>(f(x))] += pa.weights[static_cast<std::size_t>(x)];
  for (int y = 0; y < f.cod.size(); ++y)
    if (!approx_equal(push[static_cast<std::size_t>(y)], pb.weights[static_cast<std::size_t>(y)], eps))
      return false;
  return true;
}

}  // namespace fincat
