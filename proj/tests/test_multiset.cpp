#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fincat/generators.hpp>
#include <fincat/multiset.hpp>

#include <vector>

using namespace fincat;

namespace {

// All counting maps between 2-point carriers with entries <= 2 and nonempty
// rows, for the exhaustive law checks.
std::vector<MultiFn> small_multifns(const FinSet& a, const FinSet& b) {
  std::vector<MultiFn> out;
  std::vector<long long> c(4, 0);
  for (c[0] = 0; c[0] <= 2; ++c[0])
    for (c[1] = 0; c[1] <= 2; ++c[1])
      for (c[2] = 0; c[2] <= 2; ++c[2])
        for (c[3] = 0; c[3] <= 2; ++c[3]) {
          if (c[0] + c[1] == 0 || c[2] + c[3] == 0) continue;
          out.emplace_back(a, b, c);
        }
  return out;
}

}  // namespace

TEST_CASE("nonempty rows are enforced") {
  FinSet a({"0", "1"});
  CHECK_THROWS_AS(MultiFn(a, a, {1, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(MultiFn(a, a, {1, 0, 0, -1}), std::invalid_argument);
}

TEST_CASE("composition is the natural-number matrix product") {
  FinSet a({"0", "1"}), one({"*"});
  MultiFn f(a, one, {2, 1});
  MultiFn g(one, a, {3, 0});
  CHECK(mset_compose(mset_identity(a), f) == f);
  CHECK(mset_compose(f, mset_identity(one)) == f);
  CHECK(mset_compose(f, g).at(0, 0) == 6);  // 2 ways then 3 ways

  // Unital and associative, exhaustively over small count matrices.
  auto fs = small_multifns(a, a);
  for (const auto& x : fs) {
    CHECK(mset_compose(mset_identity(a), x) == x);
    CHECK(mset_compose(x, mset_identity(a)) == x);
  }
  for (std::size_t i = 0; i < fs.size(); i += 7)
    for (std::size_t j = 0; j < fs.size(); j += 5)
      for (std::size_t k = 0; k < fs.size(); k += 3)
        CHECK(mset_compose(mset_compose(fs[i], fs[j]), fs[k]) ==
              mset_compose(fs[i], mset_compose(fs[j], fs[k])));

  CHECK_THROWS_AS(mset_compose(g, g), std::invalid_argument);
}

TEST_CASE("functions embed compatibly") {
  Rng rng(31);
  FinSet a({"0", "1", "2"}), b({"x", "y"});
  for (int t = 0; t < 30; ++t) {
    FinFn f = gen_fn(rng, a, b), g = gen_fn(rng, b, a);
    CHECK(mset_compose(mset_embed(f), mset_embed(g)) == mset_embed(compose(f, g)));
  }
}

TEST_CASE("count invariance under a step") {
  // Three frames cycling; an object counter that sees the same multiset of
  // colors in every frame is invariant.
  FinSet frames({"t0", "t1", "t2"});
  TimedSystem sys(frames, FinFn(frames, frames, {1, 2, 0}));
  FinSet colors({"red", "green", "blue"});
  MultiFn color_count(frames, colors, {2, 1, 1, 2, 1, 1, 2, 1, 1});
  CHECK(is_invariant_counter(color_count, sys));

  // A counter keyed to where the moving object sits is not.
  FinSet buckets({"upper", "lower"});
  MultiFn bucket_count(frames, buckets, {1, 3, 1, 3, 0, 4});
  CHECK_FALSE(is_invariant_counter(bucket_count, sys));

  // Invariance propagates to every iterate of the step.
  MultiFn step_fn = mset_embed(sys.step);
  MultiFn iterated = color_count;  // phi . step^k, k = 0, 1, ...
  for (int k = 1; k <= frames.size(); ++k) {
    iterated = mset_compose(step_fn, iterated);
    CHECK(iterated == color_count);
  }

  // A constant step with an identity counter on a 1-state system.
  FinSet single({"s"});
  TimedSystem small(single, identity(single));
  CHECK(is_invariant_counter(mset_identity(single), small));

  // A constant step on two states: invariance requires the counter to agree
  // across the collapse.
  FinSet two({"0", "1"});
  TimedSystem collapse(two, FinFn(two, two, {0, 0}));
  MultiFn agreeing(two, two, {1, 2, 1, 2});
  MultiFn disagreeing(two, two, {1, 2, 2, 1});
  CHECK(is_invariant_counter(agreeing, collapse));
  CHECK_FALSE(is_invariant_counter(disagreeing, collapse));

  CHECK_THROWS_AS(is_invariant_counter(MultiFn(two, two, {1, 0, 0, 1}), sys),
                  std::invalid_argument);
}
