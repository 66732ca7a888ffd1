#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <fincat/checker.hpp>
#include <fincat/multiset.hpp>

namespace fincat {

/// The moving-objects example: a cyclic three-frame scene with a counter
/// that reads off a multiset per frame. The color counter sees the same
/// multiset in every frame; the position-bucket counter does not.
struct CountingScene {
  TimedSystem system;
  std::vector<std::pair<std::string, MultiFn>> counters;
};

inline CountingScene counting_scene() {
  FinSet frames({"t0", "t1", "t2"});
  CountingScene scene;
  scene.system = TimedSystem(frames, FinFn(frames, frames, {1, 2, 0}));
  // Four objects: a circle that drifts downward across the frames, plus
  // three that stay put. Two are red, one green, one blue.
  FinSet colors({"red", "green", "blue"});
  scene.counters.emplace_back("colors",
                              MultiFn(frames, colors, {2, 1, 1, 2, 1, 1, 2, 1, 1}));
  // Vertical buckets: the circle sits high in the first two frames and low
  // in the last one.
  FinSet buckets({"upper", "lower"});
  scene.counters.emplace_back("buckets", MultiFn(frames, buckets, {1, 3, 1, 3, 0, 4}));
  return scene;
}

/// A worked example with its expected report. Either an encoder instance or
/// a counting scene.
struct GalleryEntry {
  std::string name;
  std::optional<Instance> instance;
  std::optional<CountingScene> scene;
  Report expected;
};

inline Report evaluate_scene(const CountingScene& scene) {
  Report rep;
  rep.category = "count";
  for (const auto& [name, counter] : scene.counters)
    rep.put("invariant[" + name + "]",
            is_invariant_counter(counter, scene.system) ? Verdict::holds : Verdict::fails);
  return rep;
}

/// Golden comparisons cover the verdict table: same category, same keys in
/// the same order, same verdicts. Witness payloads and notes are
/// informational and not part of the expectation.
inline bool verdicts_match(const Report& expected, const Report& actual) {
  return expected.category == actual.category && expected.verdicts == actual.verdicts;
}

namespace detail {

inline Report golden(const char* category,
                     std::initializer_list<std::pair<const char*, Verdict>> verdicts) {
  Report rep;
  rep.category = category;
  for (const auto& [k, v] : verdicts) rep.put(k, v);
  return rep;
}

}  // namespace detail

/// The standing examples: an encoder that collapses everything, an encoder
/// that entangles invertibly, an encoder that duplicates the factors, an
/// encoder with a redundant code, the correlated joint with uniform
/// marginals, and the counting scene. Expected verdicts are embedded as
/// golden data; the theorem suite recomputes and compares them.
inline std::vector<GalleryEntry> gallery() {
  std::vector<GalleryEntry> out;
  const Verdict H = Verdict::holds, F = Verdict::fails, NA = Verdict::not_applicable;

  FinSet two({"0", "1"});
  FinSet y = product_set({two, two});
  FinSet x_flat(y.labels);  // observations carry no factor structure

  {  // Everything to a point: factorwise but nothing can be decoded.
    FinSet z = product_set({terminal_set(), terminal_set()});
    Instance inst{Category::set, y, x_flat, z, identity(x_flat),
                  FinFn(x_flat, z, std::vector<int>(4, 0))};
    GalleryEntry e;
    e.name = "constant";
    e.instance = std::move(inst);
    e.expected = detail::golden("set", {{"D1", H},
                                        {"D1.a", H},
                                        {"D1.b", H},
                                        {"D1.c", F},
                                        {"D1.c'", NA},
                                        {"D1.d", F},
                                        {"D1.e", H},
                                        {"D1.e(1,2)", H},
                                        {"D1.e(2,1)", H},
                                        {"epi", H}});
    out.push_back(std::move(e));
  }

  {  // Invertible shear over GF(2): decodable but entangled.
    std::vector<int> shear(4);
    for (int v = 0; v < 4; ++v)
      shear[static_cast<std::size_t>(v)] =
          y.index_of({y.digit(v, 0) ^ y.digit(v, 1), y.digit(v, 1)});
    Instance inst{Category::set, y, x_flat, y, identity(x_flat), FinFn(x_flat, y, shear)};
    GalleryEntry e;
    e.name = "rotation";
    e.instance = std::move(inst);
    e.expected = detail::golden("set", {{"D1", H},
                                        {"D1.a", F},
                                        {"D1.b", F},
                                        {"D1.c", H},
                                        {"D1.c'", F},
                                        {"D1.d", F},
                                        {"D1.e", H},
                                        {"D1.e(1,2)", H},
                                        {"D1.e(2,1)", H},
                                        {"epi", H}});
    out.push_back(std::move(e));
  }

  {  // Both codes copy all the factors.
    FinSet z = product_set({y, y});
    std::vector<int> dup(4);
    for (int v = 0; v < 4; ++v) dup[static_cast<std::size_t>(v)] = z.index_of({v, v});
    Instance inst{Category::set, y, x_flat, z, identity(x_flat), FinFn(x_flat, z, dup)};
    GalleryEntry e;
    e.name = "duplicate";
    e.instance = std::move(inst);
    e.expected = detail::golden("set", {{"D1", H},
                                        {"D1.a", F},
                                        {"D1.b", F},
                                        {"D1.c", H},
                                        {"D1.c'", NA},
                                        {"D1.d", H},
                                        {"D1.e", F},
                                        {"D1.e(1,2)", F},
                                        {"D1.e(2,1)", F},
                                        {"epi", F}});
    out.push_back(std::move(e));
  }

  {  // The first code stores its factor twice.
    FinSet z1 = product_set({two, two});
    FinSet z = product_set({z1, two});
    std::vector<int> dup_first(4);
    for (int v = 0; v < 4; ++v) {
      int y1 = y.digit(v, 0), y2 = y.digit(v, 1);
      dup_first[static_cast<std::size_t>(v)] = z.index_of({z1.index_of({y1, y1}), y2});
    }
    Instance inst{Category::set, y, x_flat, z, identity(x_flat), FinFn(x_flat, z, dup_first)};
    GalleryEntry e;
    e.name = "redundancy";
    e.instance = std::move(inst);
    e.expected = detail::golden("set", {{"D1", H},
                                        {"D1.a", H},
                                        {"D1.b", H},
                                        {"D1.c", H},
                                        {"D1.c'", NA},
                                        {"D1.d", H},
                                        {"D1.e", H},
                                        {"D1.e(1,2)", H},
                                        {"D1.e(2,1)", H},
                                        {"epi", F}});
    out.push_back(std::move(e));
  }

  {  // Perfectly correlated joint: identical marginals, no factorization.
    FinSet y1 = product_set({terminal_set(), terminal_set()});
    FinSet x1(std::vector<std::string>{"(*,*)"});
    FinSet z = product_set({two, two});
    StochMap g(y1, x1, {Rat(1)});
    StochMap f(x1, z, {Rat(1, 2), Rat(0), Rat(0), Rat(1, 2)});
    Instance inst{Category::stoch, y1, x1, z, std::move(g), std::move(f)};
    GalleryEntry e;
    e.name = "correlated joint";
    e.instance = std::move(inst);
    e.expected = detail::golden(
        "stoch",
        {{"D5", H}, {"D5.a", F}, {"D5.b", F}, {"D5.c", H}, {"D5.d", H}, {"deterministic", F}});
    out.push_back(std::move(e));
  }

  {  // The counting scene.
    GalleryEntry e;
    e.name = "counting scene";
    e.scene = counting_scene();
    e.expected = detail::golden("count", {{"invariant[colors]", H}, {"invariant[buckets]", F}});
    out.push_back(std::move(e));
  }

  return out;
}

}  // namespace fincat
