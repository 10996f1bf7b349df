#include "dcx/json_io.hpp"

#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace dcx {

namespace {

[[noreturn]] void fail(const std::string& what, const std::string& detail) {
  throw std::invalid_argument(what + ": " + detail);
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) fail(what, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(what, std::string("missing field \"") + key + "\"");
  return *it;
}

Index index_from(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(what, "expected a non-negative integer");
  return static_cast<Index>(j.get<long long>());
}

Int int_entry(const Json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      fail(what, "malformed integer \"" + j.get<std::string>() + "\"");
    }
  }
  fail(what, "expected an integer or a decimal string");
}

Rat rat_entry(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  fail(what, "expected \"p/q\", \"p\", or an integer");
}

std::string subset_key(unsigned mask, const std::vector<std::string>& labels) {
  std::string key = "{";
  bool first = true;
  for (size_t i = 0; i < labels.size(); ++i)
    if (mask & (1u << i)) {
      if (!first) key += ",";
      key += labels[i];
      first = false;
    }
  return key + "}";
}

std::string vec_string(const VecZ& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace

Json vec_to_json(const VecZ& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v[i].str());
  return out;
}

VecZ vec_from_json(const Json& j) {
  if (!j.is_array()) fail("vector", "expected an array");
  VecZ v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) v[i] = int_entry(j[static_cast<size_t>(i)], "vector entry");
  return v;
}

Json mat_to_json(const MatZ& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

MatZ mat_from_json(const Json& j) {
  if (!j.is_array()) fail("matrix", "expected an array of rows");
  const Index rows = static_cast<Index>(j.size());
  Index cols = -1;
  for (const Json& row : j) {
    if (!row.is_array()) fail("matrix", "expected an array of rows");
    if (cols < 0) cols = static_cast<Index>(row.size());
    if (static_cast<Index>(row.size()) != cols) fail("matrix", "ragged rows");
  }
  MatZ m(rows, std::max<Index>(cols, 0));
  for (Index i = 0; i < rows; ++i)
    for (Index k = 0; k < m.cols(); ++k)
      m(i, k) = int_entry(j[static_cast<size_t>(i)][static_cast<size_t>(k)], "matrix entry");
  return m;
}

Json qvec_to_json(const VecQ& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(rat_string(v[i]));
  return out;
}

VecQ qvec_from_json(const Json& j) {
  if (!j.is_array()) fail("rational vector", "expected an array");
  VecQ v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i)
    v[i] = rat_entry(j[static_cast<size_t>(i)], "rational entry");
  return v;
}

Json sublattice_to_json(const Sublattice& s) {
  Json out;
  out["ambient"] = s.ambient_rank();
  out["basis"] = mat_to_json(s.basis());
  return out;
}

Sublattice sublattice_from_json(const Json& j) {
  Index ambient = index_from(field(j, "ambient", "sublattice"), "sublattice ambient");
  MatZ basis = mat_from_json(field(j, "basis", "sublattice"));
  if (basis.rows() != ambient && basis.size() != 0)
    fail("sublattice", "basis rows do not match the ambient rank");
  if (basis.size() == 0) basis = MatZ(ambient, 0);
  return Sublattice::from_generators(basis);
}

Json lattice_set_to_json(const LatticeSet& x) {
  Json out;
  out["ambient"] = x.ambient_rank();
  Json pts = Json::array();
  for (const VecZ& p : x.points()) pts.push_back(vec_to_json(p));
  out["points"] = std::move(pts);
  return out;
}

LatticeSet lattice_set_from_json(const Json& j) {
  Index ambient = index_from(field(j, "ambient", "lattice set"), "lattice set ambient");
  const Json& pts = field(j, "points", "lattice set");
  if (!pts.is_array() || pts.empty()) fail("lattice set", "expected a non-empty points array");
  std::vector<VecZ> out;
  for (const Json& p : pts) {
    VecZ v = vec_from_json(p);
    if (v.size() != ambient) fail("lattice set", "point dimension does not match the ambient rank");
    out.push_back(std::move(v));
  }
  return LatticeSet(std::move(out));
}

Json polytope_to_json(const RatPolytope& p) {
  Json out;
  out["vertices"] = Json::array();
  for (const VecQ& v : p.vertices()) out["vertices"].push_back(qvec_to_json(v));
  return out;
}

RatPolytope polytope_from_json(const Json& j) {
  if (j.is_object() && j.contains("vertices")) {
    const Json& vs = j.at("vertices");
    if (!vs.is_array() || vs.empty()) fail("polytope", "expected a non-empty vertices array");
    std::vector<VecQ> pts;
    for (const Json& v : vs) pts.push_back(qvec_from_json(v));
    return RatPolytope::from_points(pts);
  }
  if (j.is_object() && j.contains("facets")) {
    Index ambient = index_from(field(j, "ambient", "polytope"), "polytope ambient");
    std::vector<Facet> fs;
    for (const Json& f : j.at("facets")) {
      VecZ normal = vec_from_json(field(f, "normal", "facet"));
      if (normal.size() != ambient) fail("polytope", "facet normal dimension mismatch");
      fs.push_back({std::move(normal), rat_entry(field(f, "rhs", "facet"), "facet rhs")});
    }
    auto p = RatPolytope::from_inequalities(ambient, fs);
    if (!p) fail("polytope", "the facet system is infeasible");
    return *p;
  }
  fail("polytope", "expected \"vertices\" or \"facets\"");
}

SystemSpec system_spec_from_json(const Json& j) {
  SystemSpec spec;
  if (j.is_object() && j.contains("name")) {
    if (!j.at("name").is_string()) fail("system", "name must be a string");
    spec.name = j.at("name").get<std::string>();
  }
  spec.ambient = index_from(field(j, "ambient", "system"), "system ambient");
  if (j.contains("roots")) {
    if (!j.at("roots").is_array()) fail("system", "roots must be an array");
    for (const Json& r : j.at("roots")) {
      VecZ v = vec_from_json(r);
      if (v.size() != spec.ambient) fail("system", "root dimension does not match the ambient rank");
      spec.roots.push_back(std::move(v));
    }
  }
  return spec;
}

UnimodularSystem system_from_spec(const SystemSpec& spec) {
  if (spec.name) {
    if (!spec.roots.empty()) fail("system", "give either a built-in name or explicit roots");
    return builtin(*spec.name, spec.ambient);
  }
  auto res = validate_unimodular(spec.ambient, spec.roots);
  if (auto* bad = std::get_if<UnimodularFailure>(&res)) {
    std::string detail = "roots are not unimodular; violating subset:";
    for (const VecZ& v : bad->violating) detail += " " + vec_string(v);
    fail("system", detail);
  }
  return std::get<UnimodularSystem>(std::move(res));
}

Json system_to_json(const UnimodularSystem& r) {
  Json out;
  out["ambient"] = r.ambient_rank();
  Json roots = Json::array();
  for (const VecZ& rep : r.line_reps()) roots.push_back(vec_to_json(rep));
  out["roots"] = std::move(roots);
  return out;
}

Json graph_to_json(const Graph& g) {
  Json out;
  out["vertices"] = g.vertex_count;
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges) edges.push_back(Json::array({u, v}));
  out["edges"] = std::move(edges);
  return out;
}

Graph graph_from_json(const Json& j) {
  Graph g;
  g.vertex_count = index_from(field(j, "vertices", "graph"), "graph vertices");
  const Json& edges = field(j, "edges", "graph");
  if (!edges.is_array()) fail("graph", "edges must be an array");
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2) fail("graph", "edges must be [u,v] pairs");
    g.edges.emplace_back(index_from(e[0], "graph edge"), index_from(e[1], "graph edge"));
  }
  return g;
}

Json setfunction_to_json(const SetFunction& b) {
  std::vector<std::string> labels;
  for (Index i = 1; i <= b.ground_size(); ++i) labels.push_back(std::to_string(i));
  Json out;
  out["ground"] = labels;
  Json values = Json::object();
  for (unsigned s = 0; s < b.subset_count(); ++s)
    values[subset_key(s, labels)] = rat_string(b.value(s));
  out["values"] = std::move(values);
  return out;
}

SetFunction setfunction_from_json(const Json& j) {
  const Json& ground = field(j, "ground", "set function");
  if (!ground.is_array() || ground.empty() || ground.size() > 12)
    fail("set function", "ground must list between 1 and 12 labels");
  std::vector<std::string> labels;
  for (const Json& g : ground) {
    if (!g.is_string() || g.get<std::string>().empty())
      fail("set function", "labels must be non-empty strings");
    labels.push_back(g.get<std::string>());
  }
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t k = i + 1; k < labels.size(); ++k)
      if (labels[i] == labels[k]) fail("set function", "duplicate label \"" + labels[i] + "\"");

  const Json& values = field(j, "values", "set function");
  if (!values.is_object()) fail("set function", "values must map subset keys to rationals");
  const unsigned count = 1u << labels.size();
  if (values.size() != count) fail("set function", "values must cover every subset exactly once");
  std::vector<Rat> table(count);
  for (unsigned s = 0; s < count; ++s) {
    std::string key = subset_key(s, labels);
    auto it = values.find(key);
    if (it == values.end()) fail("set function", "missing canonical subset key \"" + key + "\"");
    table[s] = rat_entry(*it, "set function value");
  }
  return SetFunction(static_cast<Index>(labels.size()), std::move(table));
}

Json strong_pair_to_json(const StrongPair& pair) {
  Json out;
  out["b"] = setfunction_to_json(pair.upper());
  out["a"] = setfunction_to_json(pair.lower());
  return out;
}

StrongPair strong_pair_from_json(const Json& j) {
  return StrongPair(setfunction_from_json(field(j, "b", "strong pair")),
                    setfunction_from_json(field(j, "a", "strong pair")));
}

Json fan_function_to_json(const FanFunction& f) {
  Json out;
  out["system"] = system_to_json(f.system());
  Json values = Json::array();
  for (const VecZ& xi : f.keys()) {
    Json entry;
    entry["crossing"] = vec_to_json(xi);
    entry["value"] = rat_string(f.value(xi));
    values.push_back(std::move(entry));
  }
  out["values"] = std::move(values);
  return out;
}

FanFunction fan_function_from_json(const Json& j) {
  UnimodularSystem sys = system_from_spec(system_spec_from_json(field(j, "system", "fan function")));
  const Json& entries = field(j, "values", "fan function");
  if (!entries.is_array()) fail("fan function", "values must be an array");
  std::vector<std::pair<VecZ, Rat>> vals;
  for (const Json& entry : entries)
    vals.emplace_back(vec_from_json(field(entry, "crossing", "fan value")),
                      rat_entry(field(entry, "value", "fan value"), "fan value"));
  return FanFunction(std::move(sys), std::move(vals));
}

Json separation_to_json(const SeparationResult& s) {
  Json out;
  if (s.separation) {
    out["functional"] = vec_to_json(s.separation->functional);
    out["margin"] = rat_string(s.separation->margin);
  } else {
    out["overlap"] = qvec_to_json(*s.overlap_witness);
  }
  return out;
}

}  // namespace dcx
