#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <fincat/algact.hpp>
#include <fincat/checker.hpp>
#include <fincat/gallery.hpp>
#include <fincat/multiset.hpp>
#include <fincat/theorems.hpp>

// Versioned JSON schema for everything the command line consumes and emits:
// encoder instances (set / rel / stoch), magma tables, monoid actions,
// counting systems, reports and suite reports. Probabilities are written as
// strings ("1/2", "0.25") or integers; bare JSON floats are rejected so no
// binary rounding sneaks into the data.

namespace fincat {

using Json = nlohmann::ordered_json;

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kSchemaVersion = 1;
inline constexpr std::int64_t kExactModeDenominatorBound = 1000000;

namespace io_detail {

inline const Json& need(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

inline std::string need_string(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_string()) throw SchemaError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

inline int label_index(const FinSet& s, const std::string& label, const char* what) {
  for (int i = 0; i < s.size(); ++i)
    if (s.labels[static_cast<std::size_t>(i)] == label) return i;
  throw SchemaError(std::string("unknown ") + what + " label '" + label + "'");
}

inline Rat rat_from_json(const Json& v, const Rat& eps) {
  if (v.is_number_integer()) return Rat(v.get<std::int64_t>());
  if (!v.is_string())
    throw SchemaError("probabilities must be strings like \"1/2\" or \"0.25\", or integers");
  const std::string text = v.get<std::string>();
  Rat x;
  try {
    x = parse_rat(text);
  } catch (const std::exception& e) {
    throw SchemaError(std::string("bad rational: ") + e.what());
  }
  // Exact mode squeezes decimal notation under a denominator bound, so
  // "0.333333333" means 1/3. Explicit "p/q" rationals pass through as
  // written in either mode; in tolerance mode decimals do too.
  bool decimal = text.find('/') == std::string::npos &&
                 text.find_first_of(".eE") != std::string::npos;
  if (decimal && eps.is_zero()) x = approx_with_den_bound(x, kExactModeDenominatorBound);
  return x;
}

}  // namespace io_detail

inline FinSet set_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("a set must be an object");
  if (j.contains("factors")) {
    const Json& fs = j.at("factors");
    if (!fs.is_array() || fs.empty()) throw SchemaError("'factors' must be a nonempty array");
    std::vector<FinSet> factors;
    for (const auto& f : fs) {
      if (!f.is_array() || f.empty()) throw SchemaError("each factor must be a nonempty label array");
      std::vector<std::string> ls;
      for (const auto& l : f) ls.push_back(l.get<std::string>());
      try {
        factors.emplace_back(std::move(ls));
      } catch (const std::exception& e) {
        throw SchemaError(std::string("bad factor: ") + e.what());
      }
    }
    return product_set(factors);
  }
  if (!j.contains("labels")) throw SchemaError("a set needs 'labels' or 'factors'");
  std::vector<std::string> ls;
  for (const auto& l : j.at("labels")) ls.push_back(l.get<std::string>());
  std::optional<std::vector<int>> shape;
  if (j.contains("factor_shape")) {
    shape.emplace();
    for (const auto& v : j.at("factor_shape")) shape->push_back(v.get<int>());
  }
  try {
    return FinSet(std::move(ls), std::move(shape));
  } catch (const std::exception& e) {
    throw SchemaError(std::string("bad set: ") + e.what());
  }
}

/// A function as {"map": {...label to label...}} or {"map": [cod labels in
/// domain order]}.
inline FinFn fn_from_json(const Json& j, const FinSet& dom, const FinSet& cod) {
  const Json& m = io_detail::need(j, "map");
  std::vector<int> map(static_cast<std::size_t>(dom.size()), -1);
  if (m.is_array()) {
    if (static_cast<int>(m.size()) != dom.size())
      throw SchemaError("'map' array must list one codomain label per domain element");
    for (int i = 0; i < dom.size(); ++i)
      map[static_cast<std::size_t>(i)] =
          io_detail::label_index(cod, m[static_cast<std::size_t>(i)].get<std::string>(), "codomain");
  } else if (m.is_object()) {
    for (const auto& [k, v] : m.items())
      map[static_cast<std::size_t>(io_detail::label_index(dom, k, "domain"))] =
          io_detail::label_index(cod, v.get<std::string>(), "codomain");
    for (int i = 0; i < dom.size(); ++i)
      if (map[static_cast<std::size_t>(i)] == -1)
        throw SchemaError("'map' does not cover domain label '" +
                          dom.labels[static_cast<std::size_t>(i)] + "'");
  } else {
    throw SchemaError("'map' must be an array or an object");
  }
  return FinFn(dom, cod, std::move(map));
}

/// A relation as {"pairs": [["a", "x"], ...]}.
inline FinRel rel_from_json(const Json& j, const FinSet& dom, const FinSet& cod) {
  const Json& ps = io_detail::need(j, "pairs");
  if (!ps.is_array()) throw SchemaError("'pairs' must be an array of [from, to] pairs");
  FinRel r = rel_empty(dom, cod);
  for (const auto& p : ps) {
    if (!p.is_array() || p.size() != 2) throw SchemaError("each pair must be [from, to]");
    r.set(io_detail::label_index(dom, p[0].get<std::string>(), "domain"),
          io_detail::label_index(cod, p[1].get<std::string>(), "codomain"));
  }
  return r;
}

/// A kernel as {"rows": [[entry, ...], ...]}, one row per domain element.
inline StochMap kernel_from_json(const Json& j, const FinSet& dom, const FinSet& cod,
                                 const Rat& eps) {
  const Json& rows = io_detail::need(j, "rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != dom.size())
    throw SchemaError("'rows' must hold one probability row per domain element");
  std::vector<Rat> data;
  data.reserve(static_cast<std::size_t>(dom.size()) * static_cast<std::size_t>(cod.size()));
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != cod.size())
      throw SchemaError("each row must list one entry per codomain element");
    for (const auto& v : row) data.push_back(io_detail::rat_from_json(v, eps));
  }
  try {
    return StochMap(dom, cod, std::move(data), eps);
  } catch (const std::exception& e) {
    throw SchemaError(std::string("bad kernel: ") + e.what());
  }
}

inline std::optional<Verdict> verdict_from_name(const std::string& s) {
  if (s == "holds") return Verdict::holds;
  if (s == "fails") return Verdict::fails;
  if (s == "undecided") return Verdict::undecided;
  if (s == "not-applicable") return Verdict::not_applicable;
  return std::nullopt;
}

/// Optional golden verdicts attached to any checkable file.
inline std::vector<std::pair<std::string, Verdict>> expectations_from_json(const Json& j) {
  std::vector<std::pair<std::string, Verdict>> out;
  if (!j.contains("expect")) return out;
  const Json& e = j.at("expect");
  if (!e.is_object()) throw SchemaError("'expect' must map definition ids to verdicts");
  for (const auto& [k, v] : e.items()) {
    auto verdict = verdict_from_name(v.get<std::string>());
    if (!verdict) throw SchemaError("unknown verdict '" + v.get<std::string>() + "' in 'expect'");
    out.emplace_back(k, *verdict);
  }
  return out;
}

inline Instance instance_from_json(const Json& j, const Rat& eps) {
  std::string cat = io_detail::need_string(j, "category");
  const Json& sets = io_detail::need(j, "sets");
  FinSet y = set_from_json(io_detail::need(sets, "Y"));
  FinSet x = set_from_json(io_detail::need(sets, "X"));
  FinSet z = set_from_json(io_detail::need(sets, "Z"));
  // A single-factor shape is implied for unshaped Y and Z.
  auto ensure_shape = [](FinSet s) {
    if (!s.is_factored()) return FinSet(s.labels, std::vector<int>{s.size()});
    return s;
  };
  y = ensure_shape(std::move(y));
  z = ensure_shape(std::move(z));
  Instance inst;
  inst.Y = y;
  inst.X = x;
  inst.Z = z;
  const Json& gj = io_detail::need(j, "g");
  const Json& fj = io_detail::need(j, "f");
  if (cat == "set") {
    inst.category = Category::set;
    inst.g = fn_from_json(gj, y, x);
    inst.f = fn_from_json(fj, x, z);
  } else if (cat == "rel") {
    inst.category = Category::rel;
    inst.g = rel_from_json(gj, y, x);
    inst.f = rel_from_json(fj, x, z);
  } else if (cat == "stoch") {
    inst.category = Category::stoch;
    inst.g = kernel_from_json(gj, y, x, eps);
    inst.f = kernel_from_json(fj, x, z, eps);
  } else {
    throw SchemaError("unknown category '" + cat + "' (expected set, rel or stoch)");
  }
  try {
    validate_instance(inst);
  } catch (const std::exception& e) {
    throw SchemaError(e.what());
  }
  return inst;
}

inline MagmaTable magma_from_json(const Json& j) {
  std::vector<std::string> els;
  for (const auto& e : io_detail::need(j, "elements")) els.push_back(e.get<std::string>());
  FinSet carrier(els);
  const Json& tj = io_detail::need(j, "table");
  if (!tj.is_array() || static_cast<int>(tj.size()) != carrier.size())
    throw SchemaError("'table' must be a square array of element labels");
  std::vector<int> tab;
  for (const auto& row : tj) {
    if (!row.is_array() || static_cast<int>(row.size()) != carrier.size())
      throw SchemaError("'table' must be a square array of element labels");
    for (const auto& v : row)
      tab.push_back(io_detail::label_index(carrier, v.get<std::string>(), "element"));
  }
  int unit = io_detail::label_index(carrier, io_detail::need_string(j, "unit"), "element");
  try {
    MagmaTable t(std::move(els), std::move(tab), unit);
    if (auto v = validate_magma(t)) throw SchemaError("unit law fails: " + v->law);
    return t;
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(std::string("bad table: ") + e.what());
  }
}

/// A counting system: states, a step map, and named counters.
struct CountCheck {
  TimedSystem system;
  std::vector<std::pair<std::string, MultiFn>> counters;
};

inline CountCheck count_from_json(const Json& j) {
  std::vector<std::string> ls;
  for (const auto& l : io_detail::need(j, "states")) ls.push_back(l.get<std::string>());
  FinSet states(ls);
  CountCheck out;
  out.system = TimedSystem(states, fn_from_json(Json{{"map", io_detail::need(j, "step")}},
                                                states, states));
  const Json& cs = io_detail::need(j, "counters");
  if (!cs.is_object() || cs.empty()) throw SchemaError("'counters' must name at least one counter");
  for (const auto& [name, cj] : cs.items()) {
    std::vector<std::string> ts;
    for (const auto& t : io_detail::need(cj, "targets")) ts.push_back(t.get<std::string>());
    FinSet targets(ts);
    const Json& counts = io_detail::need(cj, "counts");
    if (!counts.is_array() || static_cast<int>(counts.size()) != states.size())
      throw SchemaError("counter '" + name + "' must list one count row per state");
    std::vector<long long> data;
    for (const auto& row : counts) {
      if (!row.is_array() || static_cast<int>(row.size()) != targets.size())
        throw SchemaError("counter '" + name + "' rows must match the target count");
      for (const auto& v : row) {
        if (!v.is_number_integer()) throw SchemaError("counts must be nonnegative integers");
        data.push_back(v.get<long long>());
      }
    }
    try {
      out.counters.emplace_back(name, MultiFn(states, targets, std::move(data)));
    } catch (const std::exception& e) {
      throw SchemaError("counter '" + name + "': " + e.what());
    }
  }
  return out;
}

inline Report evaluate_count(const CountCheck& c) {
  Report rep;
  rep.category = "count";
  for (const auto& [name, counter] : c.counters)
    rep.put("invariant[" + name + "]",
            is_invariant_counter(counter, c.system) ? Verdict::holds : Verdict::fails);
  return rep;
}

/// A monoid action check: one monoid, two models and a map between their
/// carriers.
struct ActionCheck {
  MonoidTable monoid;
  MonoidModel from, to;
  FinFn map;
};

inline MonoidModel model_from_json(const Json& j, const MonoidTable& m) {
  std::vector<std::string> ls;
  for (const auto& l : io_detail::need(j, "carrier")) ls.push_back(l.get<std::string>());
  MonoidModel model;
  model.carrier = FinSet(ls);
  const Json& act = io_detail::need(j, "action");
  if (!act.is_object()) throw SchemaError("'action' must map element labels to endofunctions");
  for (int a = 0; a < m.size(); ++a) {
    const std::string& el = m.elements[static_cast<std::size_t>(a)];
    auto it = act.find(el);
    if (it == act.end()) throw SchemaError("'action' is missing element '" + el + "'");
    model.act.push_back(fn_from_json(Json{{"map", *it}}, model.carrier, model.carrier));
  }
  return model;
}

inline ActionCheck action_from_json(const Json& j) {
  ActionCheck out;
  out.monoid = [&] {
    MagmaTable t = magma_from_json(io_detail::need(j, "monoid"));
    return MonoidTable(t.elements, t.table, t.unit);
  }();
  const Json& models = io_detail::need(j, "models");
  out.from = model_from_json(io_detail::need(models, "X"), out.monoid);
  out.to = model_from_json(io_detail::need(models, "Z"), out.monoid);
  out.map = fn_from_json(io_detail::need(j, "map"), out.from.carrier, out.to.carrier);
  return out;
}

inline Report evaluate_action(const ActionCheck& a, std::uint64_t budget = kDefaultSearchBudget) {
  Report rep;
  rep.category = "action";
  bool monoid_ok = !validate_monoid(MonoidTable(a.monoid.elements, a.monoid.table, a.monoid.unit))
                        .has_value();
  rep.put("monoid", monoid_ok ? Verdict::holds : Verdict::fails);
  bool from_ok = monoid_ok && !validate_model(a.monoid, a.from).has_value();
  bool to_ok = monoid_ok && !validate_model(a.monoid, a.to).has_value();
  rep.put("model[X]", from_ok ? Verdict::holds : Verdict::fails);
  rep.put("model[Z]", to_ok ? Verdict::holds : Verdict::fails);
  if (!from_ok || !to_ok) return rep;
  bool equivariant = is_equivariant(a.map, a.from, a.to);
  rep.put("equivariant", equivariant ? Verdict::holds : Verdict::fails);
  rep.put("faithful[X]", is_faithful(a.monoid, a.from) ? Verdict::holds : Verdict::fails);
  rep.put("faithful[Z]", is_faithful(a.monoid, a.to) ? Verdict::holds : Verdict::fails);
  if (equivariant) {
    auto r = find_equivariant_retraction(a.map, a.from, a.to, budget);
    rep.put("split_mono", r.undecided ? Verdict::undecided
                          : r.witness ? Verdict::holds
                                      : Verdict::fails);
    if (r.undecided) rep.warnings.push_back("split_mono: search budget exceeded");
    if (r.witness) {
      Witness w;
      w.kind = "retraction";
      w.maps.push_back(r.witness->map);
      rep.attach("split_mono", std::move(w));
    }
  } else {
    rep.put("split_mono", Verdict::not_applicable);
  }
  return rep;
}

// ---- Report serialization ----

inline Json report_to_json(const Report& rep) {
  Json j;
  j["version"] = kSchemaVersion;
  j["category"] = rep.category;
  Json verdicts = Json::object();
  for (const auto& [k, v] : rep.verdicts) verdicts[k] = verdict_name(v);
  j["verdicts"] = std::move(verdicts);
  Json witnesses = Json::object();
  for (const auto& [k, w] : rep.witnesses) {
    Json wj;
    wj["kind"] = w.kind;
    wj["maps"] = w.maps;
    wj["rows"] = w.rows;
    wj["note"] = w.note;
    witnesses[k] = std::move(wj);
  }
  j["witnesses"] = std::move(witnesses);
  j["warnings"] = rep.warnings;
  j["notes"] = rep.notes;
  return j;
}

inline Report report_from_json(const Json& j) {
  Report rep;
  rep.category = io_detail::need_string(j, "category");
  for (const auto& [k, v] : io_detail::need(j, "verdicts").items()) {
    auto verdict = verdict_from_name(v.get<std::string>());
    if (!verdict) throw SchemaError("unknown verdict '" + v.get<std::string>() + "'");
    rep.put(k, *verdict);
  }
  for (const auto& [k, wj] : io_detail::need(j, "witnesses").items()) {
    Witness w;
    w.kind = io_detail::need_string(wj, "kind");
    for (const auto& m : io_detail::need(wj, "maps")) w.maps.push_back(m.get<std::vector<int>>());
    for (const auto& r : io_detail::need(wj, "rows"))
      w.rows.push_back(r.get<std::vector<std::string>>());
    w.note = io_detail::need_string(wj, "note");
    rep.attach(k, std::move(w));
  }
  for (const auto& w : io_detail::need(j, "warnings")) rep.warnings.push_back(w.get<std::string>());
  for (const auto& n : io_detail::need(j, "notes")) rep.notes.push_back(n.get<std::string>());
  return rep;
}

inline Json suite_report_to_json(const SuiteConfig& cfg, const SuiteReport& rep) {
  Json j;
  j["version"] = kSchemaVersion;
  j["config"] = {{"seed", cfg.seed},
                 {"max_factor_size", cfg.max_factor_size},
                 {"max_n", cfg.max_N},
                 {"trials", cfg.trials},
                 {"budget", cfg.budget}};
  Json suites = Json::array();
  for (const auto& s : rep.suites) {
    suites.push_back({{"name", s.name},
                      {"cases", s.cases},
                      {"failures", s.failures},
                      {"first_counterexample", s.first_counterexample},
                      {"partial", s.partial}});
  }
  j["suites"] = std::move(suites);
  j["all_passed"] = rep.all_passed();
  return j;
}

}  // namespace fincat
