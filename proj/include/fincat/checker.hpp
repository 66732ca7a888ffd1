#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <fincat/finrel.hpp>
#include <fincat/finset.hpp>
#include <fincat/finstoch.hpp>
#include <fincat/rational.hpp>

namespace fincat {

enum class Category { set, rel, stoch };

inline const char* category_name(Category c) {
  switch (c) {
    case Category::set: return "set";
    case Category::rel: return "rel";
    case Category::stoch: return "stoch";
  }
  return "?";
}

using Morphism = std::variant<FinFn, FinRel, StochMap>;

/// One encoder problem: factors Y, observations X, codes Z, a generating
/// morphism g : Y -> X and an encoding morphism f : X -> Z, all in one
/// category. Y and Z carry factor structure with the same number of factors;
/// the checks run on the code generating process m = f . g.
struct Instance {
  Category category = Category::set;
  FinSet Y, X, Z;
  Morphism g, f;
};

enum class Verdict { holds, fails, undecided, not_applicable };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::undecided: return "undecided";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

/// Supporting data attached to a verdict: component maps, a retraction, or
/// kernel rows, in raw index/ratio form.
struct Witness {
  std::string kind;
  std::vector<std::vector<int>> maps;
  std::vector<std::vector<std::string>> rows;
  std::string note;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Report {
  std::string category;
  std::vector<std::pair<std::string, Verdict>> verdicts;  // insertion-ordered, keys unique
  std::vector<std::pair<std::string, Witness>> witnesses;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;

  void put(const std::string& key, Verdict v) {
    for (auto& [k, old] : verdicts)
      if (k == key) throw std::logic_error("Report: duplicate verdict key " + key);
    verdicts.emplace_back(key, v);
  }
  std::optional<Verdict> get(const std::string& key) const {
    for (const auto& [k, v] : verdicts)
      if (k == key) return v;
    return std::nullopt;
  }
  void attach(const std::string& key, Witness w) { witnesses.emplace_back(key, std::move(w)); }

  friend bool operator==(const Report&, const Report&) = default;
};

struct CheckConfig {
  std::uint64_t budget = kDefaultSearchBudget;
  Rat eps = Rat(0);
};

/// The definition identifiers the checker understands, in report order.
inline std::vector<std::string> default_definitions(Category c) {
  switch (c) {
    case Category::set:
      return {"D1", "D1.a", "D1.b", "D1.c", "D1.c'", "D1.d", "D1.e", "epi"};
    case Category::rel:
      return {"D4", "D4.a", "right_unique", "left_total", "function"};
    case Category::stoch:
      return {"D5", "D5.a", "D5.b", "D5.c", "D5.d", "deterministic"};
  }
  return {};
}

inline bool known_definition(const std::string& id) {
  for (Category c : {Category::set, Category::rel, Category::stoch})
    for (const auto& d : default_definitions(c))
      if (d == id) return true;
  return false;
}

namespace detail {

inline const FinFn& as_fn(const Morphism& m, const char* who) {
  if (const auto* f = std::get_if<FinFn>(&m)) return *f;
  throw std::invalid_argument(std::string(who) + ": expected a function");
}
inline const FinRel& as_rel(const Morphism& m, const char* who) {
  if (const auto* r = std::get_if<FinRel>(&m)) return *r;
  throw std::invalid_argument(std::string(who) + ": expected a relation");
}
inline const StochMap& as_kernel(const Morphism& m, const char* who) {
  if (const auto* k = std::get_if<StochMap>(&m)) return *k;
  throw std::invalid_argument(std::string(who) + ": expected a kernel");
}

inline Witness witness_components(const ComponentWitness& w) {
  Witness out;
  out.kind = "components";
  for (const auto& c : w.components) out.maps.push_back(c.map);
  return out;
}

inline std::vector<std::string> kernel_row_strings(const StochMap& k, int row) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(k.cod.size()));
  for (int b = 0; b < k.cod.size(); ++b) out.push_back(k.at(row, b).str());
  return out;
}

}  // namespace detail

inline void validate_instance(const Instance& inst) {
  if (!inst.Y.is_factored() || !inst.Z.is_factored())
    throw std::invalid_argument("instance: Y and Z must carry factor structure");
  if (inst.Y.factor_count() != inst.Z.factor_count())
    throw std::invalid_argument("instance: Y and Z must have the same number of factors");
  auto check_carriers = [&](const auto& m, const FinSet& dom, const FinSet& cod, const char* who) {
    if (m.dom.labels != dom.labels || m.cod.labels != cod.labels)
      throw std::invalid_argument(std::string("instance: ") + who + " carriers are inconsistent");
  };
  switch (inst.category) {
    case Category::set:
      check_carriers(detail::as_fn(inst.g, "instance"), inst.Y, inst.X, "g");
      check_carriers(detail::as_fn(inst.f, "instance"), inst.X, inst.Z, "f");
      break;
    case Category::rel:
      check_carriers(detail::as_rel(inst.g, "instance"), inst.Y, inst.X, "g");
      check_carriers(detail::as_rel(inst.f, "instance"), inst.X, inst.Z, "f");
      break;
    case Category::stoch:
      check_carriers(detail::as_kernel(inst.g, "instance"), inst.Y, inst.X, "g");
      check_carriers(detail::as_kernel(inst.f, "instance"), inst.X, inst.Z, "f");
      break;
  }
}

namespace detail {

inline void warn_if_not_mono(const Instance& inst, Report& rep) {
  switch (inst.category) {
    case Category::set: {
      if (!classify_morphism(as_fn(inst.g, "evaluate")).mono)
        rep.warnings.push_back("generating process is not a monomorphism (g is not injective)");
      break;
    }
    case Category::rel: {
      // Distinct, nonempty rows: injectivity of y -> g[{y}], the functional
      // core of the relation.
      const FinRel& g = as_rel(inst.g, "evaluate");
      bool ok = true;
      for (int y = 0; y < g.dom.size() && ok; ++y) {
        bool nonempty = false;
        for (int x = 0; x < g.cod.size() && !nonempty; ++x) nonempty = g.at(y, x);
        ok = nonempty;
      }
      for (int y = 0; y < g.dom.size() && ok; ++y)
        for (int y2 = y + 1; y2 < g.dom.size() && ok; ++y2) {
          bool same = true;
          for (int x = 0; x < g.cod.size() && same; ++x) same = g.at(y, x) == g.at(y2, x);
          ok = !same;
        }
      if (!ok)
        rep.warnings.push_back(
            "generating process is not a monomorphism (image sets of g collide or are empty)");
      break;
    }
    case Category::stoch: {
      const StochMap& g = as_kernel(inst.g, "evaluate");
      bool ok = true;
      for (int y = 0; y < g.dom.size() && ok; ++y)
        for (int y2 = y + 1; y2 < g.dom.size() && ok; ++y2) {
          bool same = true;
          for (int x = 0; x < g.cod.size() && same; ++x) same = g.at(y, x) == g.at(y2, x);
          ok = !same;
        }
      if (!ok)
        rep.warnings.push_back("generating process is not a monomorphism (rows of g coincide)");
      break;
    }
  }
}

inline void evaluate_set_definition(const std::string& id, const FinFn& m, const Instance& inst,
                                    const CheckConfig& cfg, Report& rep) {
  if (id == "D1") {
    rep.put(id, Verdict::holds);  // the codes carry product structure by construction
    return;
  }
  if (id == "D1.a") {
    auto w = is_product_morphism(m);
    rep.put(id, w ? Verdict::holds : Verdict::fails);
    if (w) rep.attach(id, witness_components(*w));
    return;
  }
  if (id == "D1.b") {
    bool all = true;
    for (int i = 0; i < m.dom.factor_count() && all; ++i) all = transpose_is_constant(m, i);
    rep.put(id, all ? Verdict::holds : Verdict::fails);
    return;
  }
  if (id == "D1.c") {
    auto r = find_retraction(m, cfg.budget);
    rep.put(id, r.retraction ? Verdict::holds : Verdict::fails);
    if (r.retraction) {
      Witness w;
      w.kind = "retraction";
      w.maps.push_back(r.retraction->map);
      w.note = r.exhaustive ? "exhaustive search" : "direct construction";
      rep.attach(id, std::move(w));
    }
    return;
  }
  if (id == "D1.c'") {
    // Only meaningful when codes and factors are literally the same space.
    if (inst.Y.labels != inst.Z.labels || inst.Y.factor_shape != inst.Z.factor_shape) {
      rep.put(id, Verdict::not_applicable);
      return;
    }
    const FinFn& g = as_fn(inst.g, "evaluate");
    const FinFn& f = as_fn(inst.f, "evaluate");
    rep.put(id, is_inverse(f, g) ? Verdict::holds : Verdict::fails);
    return;
  }
  if (id == "D1.d") {
    auto w = find_modular_retraction(m, cfg.budget);
    rep.put(id, w ? Verdict::holds : Verdict::fails);
    if (w) rep.attach(id, witness_components(*w));
    return;
  }
  if (id == "D1.e") {
    auto grid = missing_information_search(m, cfg.budget);
    const int n = m.dom.factor_count();
    // A definite leak anywhere fails the aggregate; only otherwise can an
    // exhausted budget leave it undecided.
    bool any_leak = false, any_undecided = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Tristate t = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        any_leak = any_leak || t == Tristate::no;
        any_undecided = any_undecided || t == Tristate::undecided;
      }
    rep.put(id, any_leak ? Verdict::fails : any_undecided ? Verdict::undecided : Verdict::holds);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Tristate t = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        std::string key =
            "D1.e(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        Verdict v = t == Tristate::yes  ? Verdict::holds
                    : t == Tristate::no ? Verdict::fails
                                        : Verdict::undecided;
        rep.put(key, v);
        if (t == Tristate::undecided)
          rep.warnings.push_back(key + ": search budget exceeded, entry undecided");
      }
    return;
  }
  if (id == "epi") {
    rep.put(id, classify_morphism(m).epi ? Verdict::holds : Verdict::fails);
    return;
  }
  rep.put(id, Verdict::not_applicable);
}

inline void evaluate_rel_definition(const std::string& id, const FinRel& m, Report& rep) {
  if (id == "D4") {
    rep.put(id, Verdict::holds);
    return;
  }
  if (id == "D4.a") {
    auto comps = monoidal_factorization(m);
    rep.put(id, comps ? Verdict::holds : Verdict::fails);
    if (comps) {
      Witness w;
      w.kind = "relation components";
      for (const auto& c : *comps) {
        std::vector<int> flat(c.incidence.begin(), c.incidence.end());
        w.maps.push_back(std::move(flat));
      }
      rep.attach(id, std::move(w));
    }
    return;
  }
  if (id == "right_unique" || id == "left_total" || id == "function") {
    auto c = classify_relation(m);
    bool v = id == "right_unique" ? c.right_unique : id == "left_total" ? c.left_total : c.function;
    rep.put(id, v ? Verdict::holds : Verdict::fails);
    return;
  }
  rep.put(id, Verdict::not_applicable);
}

inline void evaluate_stoch_definition(const std::string& id, const StochMap& m,
                                      const CheckConfig& cfg, Report& rep) {
  if (id == "D5") {
    rep.put(id, Verdict::holds);
    return;
  }
  if (id == "D5.a") {
    bool all = true;
    for (int i = 0; i < m.cod.factor_count() && all; ++i)
      all = splits_off_factor(m, i, cfg.eps);
    rep.put(id, all ? Verdict::holds : Verdict::fails);
    return;
  }
  if (id == "D5.b") {
    rep.put(id, is_projectable(m, cfg.eps) ? Verdict::holds : Verdict::fails);
    return;
  }
  if (id == "D5.c") {
    rep.put(id, is_modular_stoch(m, cfg.eps) ? Verdict::holds : Verdict::fails);
    return;
  }
  if (id == "D5.d") {
    auto comps = is_componentwise(m, cfg.eps);
    rep.put(id, comps ? Verdict::holds : Verdict::fails);
    if (comps) {
      Witness w;
      w.kind = "kernel components";
      for (const auto& c : *comps)
        for (int row = 0; row < c.dom.size(); ++row) w.rows.push_back(kernel_row_strings(c, row));
      rep.attach(id, std::move(w));
    }
    return;
  }
  if (id == "deterministic") {
    rep.put(id, is_deterministic(m, cfg.eps) ? Verdict::holds : Verdict::fails);
    return;
  }
  rep.put(id, Verdict::not_applicable);
}

/// Cross-checks the theorem-level implications between the verdicts that
/// made it into the report. A violation is a bug in the checker itself.
inline void enforce_consistency(const Report& rep) {
  auto holds = [&](const char* k) { return rep.get(k) == Verdict::holds; };
  auto fails = [&](const char* k) { return rep.get(k) == Verdict::fails; };
  if (holds("D1.a") && fails("D1.b"))
    throw std::logic_error("report inconsistency: factorwise but transpose not constant");
  if (fails("D1.a") && holds("D1.b"))
    throw std::logic_error("report inconsistency: transpose constant but not factorwise");
  if (holds("D1.a") && holds("D1.c") && fails("D1.d"))
    throw std::logic_error("report inconsistency: factorwise split mono without factorwise retraction");
  if (holds("D5.d") && fails("D5.c"))
    throw std::logic_error("report inconsistency: componentwise kernel judged non-modular");
}

}  // namespace detail

/// Evaluates the selected definitions (all defaults for the instance's
/// category when the selection is empty) on m = f . g. Definitions that do
/// not apply to the category come back not-applicable. The emitted report is
/// checked against the cross-definition implications before being returned.
inline Report evaluate(const Instance& inst, const std::vector<std::string>& selection = {},
                       const CheckConfig& cfg = {}) {
  validate_instance(inst);
  std::vector<std::string> ids = selection.empty() ? default_definitions(inst.category) : selection;
  for (const auto& id : ids)
    if (!known_definition(id)) throw std::invalid_argument("evaluate: unknown definition id " + id);

  Report rep;
  rep.category = category_name(inst.category);
  detail::warn_if_not_mono(inst, rep);

  switch (inst.category) {
    case Category::set: {
      FinFn m = compose(detail::as_fn(inst.g, "evaluate"), detail::as_fn(inst.f, "evaluate"));
      FinFn shaped(inst.Y, inst.Z, m.map);
      for (const auto& id : ids) detail::evaluate_set_definition(id, shaped, inst, cfg, rep);
      // The three equivalent routes to factorwise-ness must agree on this
      // instance whichever subset was requested.
      if (rep.get("D1.a")) {
        bool direct = is_product_morphism(shaped).has_value();
        bool via_transpose = true, via_pullback = true;
        for (int i = 0; i < shaped.dom.factor_count(); ++i) {
          via_transpose = via_transpose && transpose_is_constant(shaped, i);
          via_pullback = via_pullback && invariance_via_pullback(shaped, i);
        }
        if (direct != via_transpose || direct != via_pullback)
          throw std::logic_error("report inconsistency: factorwise routes disagree");
      }
      break;
    }
    case Category::rel: {
      FinRel m = rel_compose(detail::as_rel(inst.g, "evaluate"), detail::as_rel(inst.f, "evaluate"));
      FinRel shaped(inst.Y, inst.Z, m.incidence);
      for (const auto& id : ids) detail::evaluate_rel_definition(id, shaped, rep);
      break;
    }
    case Category::stoch: {
      StochMap m = stoch_compose(detail::as_kernel(inst.g, "evaluate"),
                                 detail::as_kernel(inst.f, "evaluate"));
      StochMap shaped;
      shaped.dom = inst.Y;
      shaped.cod = inst.Z;
      shaped.rows = m.rows;
      for (const auto& id : ids) detail::evaluate_stoch_definition(id, shaped, cfg, rep);
      if (rep.get("D5.c") && rep.get("D5.d"))
        rep.notes.push_back(
            "D5.c and D5.d are computed independently; on finite stochastic matrices the two "
            "tests coincide (a finite-scale identification, not a general theorem)");
      break;
    }
  }
  detail::enforce_consistency(rep);
  return rep;
}

}  // namespace fincat
