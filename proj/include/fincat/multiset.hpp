#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include <fincat/finset.hpp>

namespace fincat {

/// A counting map between finite sets: entry (a, b) says in how many ways b
/// is obtained from a. These are the effectful maps of the nonempty multiset
/// monad, so every row must have at least one nonzero count.
struct MultiFn {
  FinSet dom, cod;
  std::vector<long long> counts;  // row-major |dom| x |cod|

  MultiFn() = default;
  MultiFn(FinSet d, FinSet c, std::vector<long long> cnt)
      : dom(std::move(d)), cod(std::move(c)), counts(std::move(cnt)) {
    if (counts.size() != static_cast<std::size_t>(dom.size()) * static_cast<std::size_t>(cod.size()))
      throw std::invalid_argument("MultiFn: count matrix does not match carriers");
    for (auto v : counts)
      if (v < 0) throw std::invalid_argument("MultiFn: counts must be nonnegative");
    for (int a = 0; a < dom.size(); ++a) {
      bool nonzero = false;
      for (int b = 0; b < cod.size() && !nonzero; ++b) nonzero = at(a, b) != 0;
      if (!nonzero)
        throw std::invalid_argument("MultiFn: row " + std::to_string(a) + " is the empty multiset");
    }
  }

  long long at(int a, int b) const {
    return counts[static_cast<std::size_t>(a) * static_cast<std::size_t>(cod.size()) +
                  static_cast<std::size_t>(b)];
  }
  long long& at(int a, int b) {
    return counts[static_cast<std::size_t>(a) * static_cast<std::size_t>(cod.size()) +
                  static_cast<std::size_t>(b)];
  }

  friend bool operator==(const MultiFn& a, const MultiFn& b) {
    return a.dom.labels == b.dom.labels && a.cod.labels == b.cod.labels && a.counts == b.counts;
  }
};

inline MultiFn mset_identity(const FinSet& a) {
  MultiFn f;
  f.dom = a;
  f.cod = a;
  f.counts.assign(static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(a.size()), 0);
  for (int i = 0; i < a.size(); ++i) f.at(i, i) = 1;
  return f;
}

/// A function embedded as a 0/1 counting map.
inline MultiFn mset_embed(const FinFn& f) {
  MultiFn out;
  out.dom = f.dom;
  out.cod = f.cod;
  out.counts.assign(static_cast<std::size_t>(f.dom.size()) * static_cast<std::size_t>(f.cod.size()), 0);
  for (int x = 0; x < f.dom.size(); ++x) out.at(x, f(x)) = 1;
  return out;
}

/// Composition multiplies ways along each path and sums over the middle:
/// the natural-number matrix product.
inline MultiFn mset_compose(const MultiFn& f, const MultiFn& g) {
  if (f.cod.labels != g.dom.labels)
    throw std::invalid_argument("mset_compose: carriers do not match");
  MultiFn out;
  out.dom = f.dom;
  out.cod = g.cod;
  out.counts.assign(static_cast<std::size_t>(f.dom.size()) * static_cast<std::size_t>(g.cod.size()),
                    0);
  for (int a = 0; a < f.dom.size(); ++a)
    for (int b = 0; b < f.cod.size(); ++b) {
      if (f.at(a, b) == 0) continue;
      for (int c = 0; c < g.cod.size(); ++c) out.at(a, c) += f.at(a, b) * g.at(b, c);
    }
  return out;
}

/// A discrete-time system: states with one total step function, i.e. a
/// diagram indexed by the naturals where the generator acts as `step`.
struct TimedSystem {
  FinSet states;
  FinFn step;

  TimedSystem() = default;
  TimedSystem(FinSet s, FinFn st) : states(std::move(s)), step(std::move(st)) {
    if (step.dom.labels != states.labels || step.cod.labels != states.labels)
      throw std::invalid_argument("TimedSystem: step must be an endofunction on the states");
  }
};

/// Whether the counter reads the same multiset before and after a step,
/// i.e. phi . step = phi exactly. A map into a constant diagram must be
/// invariant under the generator, and invariance under step^n follows by
/// composing the generator square, so checking the generator decides it.
inline bool is_invariant_counter(const MultiFn& phi, const TimedSystem& sys) {
  if (phi.dom.labels != sys.states.labels)
    throw std::invalid_argument("is_invariant_counter: counter domain must be the state space");
  for (int s = 0; s < sys.states.size(); ++s)
    for (int b = 0; b < phi.cod.size(); ++b)
      if (phi.at(sys.step(s), b) != phi.at(s, b)) return false;
  return true;
}

}  // namespace fincat
