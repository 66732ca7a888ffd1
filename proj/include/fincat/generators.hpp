#pragma once

#include <string>
#include <vector>

#include <fincat/finrel.hpp>
#include <fincat/finset.hpp>
#include <fincat/finstoch.hpp>
#include <fincat/rng.hpp>

// Seeded generators for the randomized halves of the theorem suites. All
// draws go through Rng, so a fixed seed reproduces the same family on any
// platform.

namespace fincat {

inline FinSet gen_plain_set(int n, const std::string& prefix) {
  std::vector<std::string> ls;
  ls.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ls.push_back(prefix + std::to_string(i));
  return FinSet(ls);
}

/// A product of N factors with sizes drawn from [1, max_size].
inline FinSet gen_factored_set(Rng& rng, int n_factors, int max_size, const std::string& prefix) {
  std::vector<FinSet> fs;
  fs.reserve(static_cast<std::size_t>(n_factors));
  for (int i = 0; i < n_factors; ++i)
    fs.push_back(gen_plain_set(rng.range(1, max_size), prefix + std::to_string(i) + "_"));
  return product_set(fs);
}

inline FinFn gen_fn(Rng& rng, const FinSet& dom, const FinSet& cod) {
  std::vector<int> m(static_cast<std::size_t>(dom.size()));
  for (auto& v : m) v = rng.range(0, cod.size() - 1);
  return FinFn(dom, cod, std::move(m));
}

inline FinRel gen_rel(Rng& rng, const FinSet& dom, const FinSet& cod) {
  FinRel r = rel_empty(dom, cod);
  for (auto& v : r.incidence) v = rng.coin() ? 1 : 0;
  return r;
}

/// A kernel whose rows are random rationals with numerators up to max_num.
/// Every row gets at least one strictly positive entry.
inline StochMap gen_kernel(Rng& rng, const FinSet& dom, const FinSet& cod, int max_num = 8) {
  StochMap k;
  k.dom = dom;
  k.cod = cod;
  k.rows.assign(static_cast<std::size_t>(dom.size()) * static_cast<std::size_t>(cod.size()), Rat(0));
  for (int a = 0; a < dom.size(); ++a) {
    long long total = 0;
    std::vector<long long> num(static_cast<std::size_t>(cod.size()));
    for (auto& v : num) {
      v = static_cast<long long>(rng.below(static_cast<std::uint64_t>(max_num + 1)));
      total += v;
    }
    if (total == 0) {
      num[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(cod.size())))] = 1;
      total = 1;
    }
    for (int b = 0; b < cod.size(); ++b)
      k.at(a, b) = Rat(num[static_cast<std::size_t>(b)], total);
  }
  return k;
}

}  // namespace fincat
