#include "sc2/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace sc2 {

namespace {

Json tagged() {
  Json j = Json::object();
  j["format"] = kFormat;
  return j;
}

void check_format(const Json& j) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  if (j.contains("format") && j["format"] != kFormat)
    throw InputError("unsupported format '" + j["format"].dump() + "'");
}

const Json& field_of(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing key '") + key + "'");
  return j.at(key);
}

Field parse_field(const std::string& s) {
  if (s == "Q") return Field::rationals();
  if (s.size() > 1 && s[0] == 'F') {
    try {
      int p = std::stoi(s.substr(1));
      if (p >= 2) return Field::prime(p);
    } catch (const std::exception&) {
    }
  }
  throw InputError("unknown field '" + s + "'");
}

BigInt parse_int(const Json& x) {
  if (x.is_number_integer()) return BigInt(x.get<long long>());
  if (x.is_string()) {
    try {
      return BigInt(x.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InputError("expected an integer, got " + x.dump());
}

Json int_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return Json(x.convert_to<long long>());
  return Json(x.str());
}

Json rows_json(const IntRows& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(int_json(x));
    out.push_back(row);
  }
  return out;
}

Json graph_json(const Multigraph& g, const char* label_key) {
  Json j = tagged();
  Json vs = Json::array();
  for (int v = 0; v < g.n; ++v) vs.push_back("s" + std::to_string(v));
  j["vertices"] = vs;
  Json es = Json::array();
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    Json e;
    e[label_key] = g.labels[i];
    e["endpoints"] = {"s" + std::to_string(g.edges[i].first), "s" + std::to_string(g.edges[i].second)};
    es.push_back(e);
  }
  j["edges"] = es;
  return j;
}

Json map_json(const std::map<std::string, std::string>& m) {
  Json j = Json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

}  // namespace

Json to_json(const Complex2& c) {
  Json j = tagged();
  j["vertices"] = c.vertices();
  Json edges = Json::array();
  for (const auto& e : c.edges()) edges.push_back({e.id, c.vertices()[e.tail], c.vertices()[e.head]});
  j["edges"] = edges;
  Json faces = Json::array();
  for (const auto& f : c.faces()) {
    Json walk = Json::array();
    for (const auto& t : f.walk) walk.push_back({c.edges()[t.edge].id, t.sign});
    faces.push_back({f.id, walk});
  }
  j["faces"] = faces;
  return j;
}

Complex2 complex_from_json(const Json& j) {
  check_format(j);
  ComplexSpec s;
  try {
    for (const auto& v : field_of(j, "vertices")) s.vertices.push_back(v.get<std::string>());
    for (const auto& e : field_of(j, "edges")) {
      if (!e.is_array() || e.size() != 3) throw InputError("edge entries must be [id, tail, head]");
      s.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>());
    }
    for (const auto& f : field_of(j, "faces")) {
      if (!f.is_array() || f.size() != 2) throw InputError("face entries must be [id, walk]");
      std::vector<std::pair<std::string, int>> walk;
      for (const auto& t : f[1]) {
        if (!t.is_array() || t.size() != 2) throw InputError("walk steps must be [edge, sign]");
        walk.emplace_back(t[0].get<std::string>(), t[1].get<int>());
      }
      s.faces.emplace_back(f[0].get<std::string>(), std::move(walk));
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed complex JSON: ") + e.what());
  }
  return Complex2(s);
}

Json to_json(const Matroid& m, std::size_t circuit_bound) {
  Json j = tagged();
  j["field"] = m.field().name();
  j["ground"] = m.ground();
  j["rank"] = m.rank();
  j["rows"] = m.matrix_strings();
  if (m.size() <= circuit_bound) {
    Json cs = Json::array();
    for (const auto& c : m.circuits(circuit_bound)) cs.push_back(m.ids(c));
    j["circuits"] = cs;
  }
  return j;
}

Matroid matroid_from_json(const Json& j) {
  check_format(j);
  try {
    Field field = j.contains("field") ? parse_field(j["field"].get<std::string>()) : Field::prime(3);
    std::vector<std::string> ground = field_of(j, "ground").get<std::vector<std::string>>();
    const auto& rows = field_of(j, "rows");
    for (const auto& r : rows)
      if (r.size() != ground.size()) throw InputError("matroid rows must have one entry per ground element");
    if (field.rational()) {
      Matroid::RatRows q;
      for (const auto& r : rows) {
        std::vector<Rational> row;
        for (const auto& x : r) row.push_back(x.is_string() ? Rational(x.get<std::string>()) : Rational(parse_int(x)));
        q.push_back(std::move(row));
      }
      return Matroid::from_field_rows<RationalOps>(field, ground, q);
    }
    IntRows z;
    for (const auto& r : rows) {
      IntRow row;
      for (const auto& x : r) row.push_back(parse_int(x));
      z.push_back(std::move(row));
    }
    return Matroid::from_rows(field, ground, z);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed matroid JSON: ") + e.what());
  }
}

Json to_json(const IntegerMatrix& a) {
  Json j = tagged();
  j["rows"] = rows_json(a.rows);
  j["row_labels"] = a.row_labels;
  j["col_labels"] = a.col_labels;
  return j;
}

IntegerMatrix matrix_from_json(const Json& j) {
  check_format(j);
  try {
    IntRows rows;
    for (const auto& r : field_of(j, "rows")) {
      IntRow row;
      for (const auto& x : r) row.push_back(parse_int(x));
      rows.push_back(std::move(row));
    }
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    if (j.contains("col_labels") && !j["col_labels"].empty()) cols = j["col_labels"].size();
    auto a = IntegerMatrix::from_rows(std::move(rows), cols);
    if (j.contains("row_labels")) a.row_labels = j["row_labels"].get<std::vector<std::string>>();
    if (j.contains("col_labels")) a.col_labels = j["col_labels"].get<std::vector<std::string>>();
    if (!a.row_labels.empty() && a.row_labels.size() != a.rows.size())
      throw InputError("row_labels must match the number of rows");
    return a;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed matrix JSON: ") + e.what());
  }
}

Json to_json(const Complex2& c, const RotationSystem& s) {
  Json j = tagged();
  Json rot = Json::object();
  for (std::size_t e = 0; e < c.num_edges(); ++e) {
    Json order = Json::array();
    for (const auto& t : s.sigma[e]) order.push_back({c.faces()[t.face].id, t.pos});
    rot[c.edges()[e].id] = order;
  }
  j["rotation"] = rot;
  return j;
}

RotationSystem rotation_from_json(const Complex2& c, const Json& j) {
  check_format(j);
  RotationSystem s;
  s.sigma.resize(c.num_edges());
  try {
    for (const auto& [eid, order] : field_of(j, "rotation").items()) {
      int e = c.edge_index(eid);
      for (const auto& t : order) s.sigma[e].push_back({c.face_index(t[0].get<std::string>()), t[1].get<int>()});
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed rotation JSON: ") + e.what());
  }
  validate_rotation_system(c, s);
  return s;
}

Json dual_graph_to_json(const Multigraph& g) { return graph_json(g, "face"); }

Json graph_to_json(const Multigraph& g) { return graph_json(g, "element"); }

Multigraph dual_graph_from_json(const Json& j) {
  check_format(j);
  Multigraph g;
  try {
    std::map<std::string, int> index;
    for (const auto& v : field_of(j, "vertices")) index.emplace(v.get<std::string>(), g.add_vertex());
    for (const auto& e : field_of(j, "edges")) {
      const auto& ends = field_of(e, "endpoints");
      auto a = index.find(ends.at(0).get<std::string>()), b = index.find(ends.at(1).get<std::string>());
      if (a == index.end() || b == index.end()) throw InputError("dual graph edge names an unknown vertex");
      std::string label = e.contains("face") ? e["face"].get<std::string>() : field_of(e, "element").get<std::string>();
      g.add_edge(a->second, b->second, label);
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
  return g;
}

Json to_json(const LinkGraph& l, const Complex2& c) {
  Json j = tagged();
  j["vertex"] = c.vertices()[l.vertex];
  auto node_name = [&](int n) { return c.edges()[l.nodes[n].edge].id + (l.nodes[n].head ? "@head" : "@tail"); };
  Json nodes = Json::array();
  for (std::size_t n = 0; n < l.nodes.size(); ++n) nodes.push_back(node_name(static_cast<int>(n)));
  j["nodes"] = nodes;
  Json links = Json::array();
  for (const auto& k : l.links) {
    Json x;
    x["face"] = c.faces()[k.face].id;
    x["position"] = k.pos;
    x["endpoints"] = {node_name(k.in), node_name(k.out)};
    links.push_back(x);
  }
  j["links"] = links;
  return j;
}

Json to_json(const SplitResult& r) {
  Json j = tagged();
  j["complex"] = to_json(r.complex);
  j["vertex_clone_map"] = map_json(r.vertex_clone_map);
  j["edge_clone_map"] = map_json(r.edge_clone_map);
  return j;
}

Json to_json(const Constraint& k) {
  Json j;
  j["cell"] = k.cell;
  j["kind"] = k.is_vertex ? "vertex" : "edge";
  j["faces"] = k.faces;
  j["trivial"] = k.trivial;
  return j;
}

Json to_json(const Verdict& v) {
  Json j = tagged();
  j["status"] = to_string(v.status);
  j["reason"] = v.reason;
  j["outside_hypotheses"] = v.outside_hypotheses;
  if (v.certificate) {
    Json cert;
    cert["complex"] = to_json(v.certificate->complex);
    cert["rotation"] = to_json(v.certificate->complex, v.certificate->rotation);
    cert["dual_graph"] = dual_graph_to_json(v.certificate->dual_graph);
    j["certificate"] = cert;
  }
  if (v.minor_witness) {
    Json w;
    w["minor"] = v.minor_witness->name;
    w["deleted"] = v.minor_witness->deleted;
    w["contracted"] = v.minor_witness->contracted;
    j["witness_minor"] = w;
  }
  if (!v.violated.empty()) {
    Json bad = Json::array();
    for (const auto& k : v.violated) bad.push_back(to_json(k));
    j["violated_constraints"] = bad;
  }
  if (!v.violation_map.empty()) j["violation_map"] = v.violation_map;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.complex = complex_from_json(field_of(j, "complex"));
  c.rotation = rotation_from_json(c.complex, field_of(j, "rotation"));
  c.dual_graph = dual_graph_from_json(field_of(j, "dual_graph"));
  return c;
}

Json to_json(const AnFactsReport& r) {
  Json j = tagged();
  j["n"] = r.n;
  j["all_pass"] = r.all_pass;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = checks;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw InputError("cannot write '" + path + "'");
}

}  // namespace sc2
