#include "padicops/json_io.hpp"

namespace padic {

namespace {

json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class mpz_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw padic_error(errc::bad_input, "expected an integer or decimal string");
}

}  // namespace

json scalar_to_json(const PadicScalar& x) {
  if (x.below_precision()) return json{{"O", x.precision_floor()}};
  return json{{"v", x.valuation()}, {"u", mpz_to_json(x.mantissa())}};
}

PadicScalar scalar_from_json(const json& j, long p, int prec) {
  if (j.is_number_integer())
    return PadicScalar::from_integer(mpz_class(j.get<long>()), p, prec);
  if (j.is_string()) return PadicScalar::from_integer(mpz_from_json(j), p, prec);
  if (!j.is_object())
    throw padic_error(errc::bad_input, "malformed scalar value");
  if (j.contains("O")) return PadicScalar::below(p, prec, j.at("O").get<long>());
  if (!j.contains("v") || !j.contains("u"))
    throw padic_error(errc::bad_input, "scalar object needs \"v\" and \"u\"");
  long v = j.at("v").get<long>();
  mpz_class u = mpz_from_json(j.at("u"));
  return PadicScalar::from_unit(p, prec, v, u);
}

json vector_to_json(const PadicVector& v) {
  json entries = json::object();
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].below_precision())
      entries[v.window().label(i)] = scalar_to_json(v[i]);
  return json{{"window", v.window().labels()}, {"entries", entries}};
}

PadicVector vector_from_json(const json& j, long p, int prec) {
  Window w(j.at("window").get<std::vector<std::string>>());
  PadicVector v(w, p, prec);
  for (const auto& [label, val] : j.at("entries").items())
    v.set(label, scalar_from_json(val, p, prec));
  return v;
}

json matrix_to_json(const OperatorMatrix& m) {
  json entries = json::array();
  for (size_t i = 0; i < m.dim(); ++i)
    for (size_t j2 = 0; j2 < m.dim(); ++j2)
      entries.push_back(scalar_to_json(m.at(i, j2)));
  return json{{"window", m.window().labels()}, {"entries", entries}};
}

OperatorMatrix matrix_from_json(const json& j, long p, int prec) {
  Window w(j.at("window").get<std::vector<std::string>>());
  const json& entries = j.at("entries");
  if (entries.size() != w.size() * w.size())
    throw padic_error(errc::bad_input, "matrix entry count mismatch");
  OperatorMatrix m(w, p, prec);
  size_t k = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j2 = 0; j2 < w.size(); ++j2)
      m.set(i, j2, scalar_from_json(entries[k++], p, prec));
  return m;
}

json group_to_json(const FiniteGroup& g) {
  json table = json::array();
  for (size_t a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (size_t b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(row);
  }
  return json{{"elements", g.labels()}, {"table", table}};
}

FiniteGroup group_from_json(const json& j) {
  auto elements = j.at("elements").get<std::vector<std::string>>();
  auto table = j.at("table").get<std::vector<std::vector<size_t>>>();
  return FiniteGroup(std::move(elements), std::move(table));
}

json groupoid_to_json(const FiniteGroupoid& g) {
  json s = json::array(), r = json::array(), inv = json::array();
  for (size_t a = 0; a < g.arrow_count(); ++a) {
    s.push_back(g.source(a));
    r.push_back(g.range(a));
    inv.push_back(g.inv(a));
  }
  json comp = json::array();
  for (size_t a = 0; a < g.arrow_count(); ++a)
    for (size_t b = 0; b < g.arrow_count(); ++b)
      if (g.composable(a, b)) comp.push_back(json::array({a, b, g.compose(a, b)}));
  json objects = json::array();
  for (size_t x = 0; x < g.object_count(); ++x) objects.push_back(g.object_label(x));
  return json{{"objects", objects},  {"arrows", g.arrow_labels()},
              {"s", s},              {"r", r},
              {"inverse", inv},      {"compose", comp}};
}

FiniteGroupoid groupoid_from_json(const json& j) {
  auto objects = j.at("objects").get<std::vector<std::string>>();
  auto arrows = j.at("arrows").get<std::vector<std::string>>();
  auto s = j.at("s").get<std::vector<size_t>>();
  auto r = j.at("r").get<std::vector<size_t>>();
  auto inv = j.at("inverse").get<std::vector<size_t>>();
  std::map<std::pair<size_t, size_t>, size_t> comp;
  for (const auto& triple : j.at("compose")) {
    if (!triple.is_array() || triple.size() != 3)
      throw padic_error(errc::bad_input, "compose entries must be triples");
    comp[{triple[0].get<size_t>(), triple[1].get<size_t>()}] =
        triple[2].get<size_t>();
  }
  // Units are the arrows idempotent under composition.
  std::vector<size_t> units(objects.size(), arrows.size());
  for (size_t a = 0; a < arrows.size(); ++a) {
    if (s[a] != r[a]) continue;
    auto it = comp.find({a, a});
    if (it != comp.end() && it->second == a) {
      // An idempotent endo-arrow in a groupoid is the unit of its object.
      units[s[a]] = a;
    }
  }
  for (size_t x = 0; x < objects.size(); ++x)
    if (units[x] == arrows.size())
      throw padic_error(errc::bad_input,
                        "object without a unit arrow: " + objects[x]);
  return FiniteGroupoid(std::move(objects), std::move(arrows), std::move(s),
                        std::move(r), std::move(inv), std::move(comp),
                        std::move(units));
}

json action_to_json(const GroupAction& a) {
  json perms = json::array();
  for (size_t g = 0; g < a.group().order(); ++g) {
    json row = json::array();
    for (size_t x = 0; x < a.space().size(); ++x) row.push_back(a.act(g, x));
    perms.push_back(row);
  }
  return json{{"group", group_to_json(a.group())},
              {"space", a.space()},
              {"perms", perms}};
}

GroupAction action_from_json(const json& j) {
  FiniteGroup g = group_from_json(j.at("group"));
  auto space = j.at("space").get<std::vector<std::string>>();
  auto perms = j.at("perms").get<std::vector<std::vector<size_t>>>();
  return GroupAction(std::move(g), std::move(space), std::move(perms));
}

json cocycle_to_json(const Cocycle& c) {
  json values = json::array();
  for (size_t g = 0; g < c.group().order(); ++g) {
    json row = json::array();
    for (size_t h = 0; h < c.group().order(); ++h)
      row.push_back(scalar_to_json(c.at(g, h)));
    values.push_back(row);
  }
  return json{{"group", group_to_json(c.group())}, {"values", values}};
}

Cocycle cocycle_from_json(const json& j, long p, int prec) {
  FiniteGroup g = group_from_json(j.at("group"));
  std::vector<std::vector<PadicScalar>> values;
  for (const auto& row : j.at("values")) {
    std::vector<PadicScalar> out_row;
    for (const auto& v : row) out_row.push_back(scalar_from_json(v, p, prec));
    values.push_back(std::move(out_row));
  }
  return Cocycle(std::move(g), std::move(values));
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back(json{{"id", e.id}, {"s", e.source}, {"r", e.range}});
  return json{{"vertices", g.vertices}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  Graph g;
  g.vertices = j.at("vertices").get<std::vector<std::string>>();
  for (const auto& e : j.at("edges"))
    g.edges.push_back({e.at("id").get<std::string>(),
                       e.at("s").get<std::string>(),
                       e.at("r").get<std::string>()});
  for (const auto& e : g.edges) {
    g.vertex_index(e.source);
    g.vertex_index(e.range);
  }
  return g;
}

json group_report_to_json(const FinGenAbGroup& g) {
  json torsion = json::array();
  for (const auto& d : g.invariant_factors) torsion.push_back(mpz_to_json(d));
  return json{{"rank", g.free_rank}, {"torsion", torsion}};
}

json extension_to_json(const ExtensionData& e) {
  json out{{"sub", group_report_to_json(e.sub)},
           {"quot", group_report_to_json(e.quot)}};
  out["resolved"] =
      e.resolved ? group_report_to_json(*e.resolved) : json(nullptr);
  return out;
}

json kh_report_to_json(long degree, const ExtensionData& e) {
  json out;
  out["degree"] = degree;
  out["group"] = e.resolved ? group_report_to_json(*e.resolved) : json(nullptr);
  out["extension"] = e.resolved ? json(nullptr) : extension_to_json(e);
  out["notes"] = e.notes;
  return out;
}

json norm_to_json(const NormValue& n, long p) {
  return json{{"kind", n.is_exact() ? "EXACT" : "UPPER_BOUND"},
              {"exponent", n.exponent},
              {"display", norm_to_string(n, p)}};
}

}  // namespace padic
