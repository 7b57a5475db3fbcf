#include "json_io.hpp"

#include <fstream>
#include <sstream>

namespace conetop::io {

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object()) throw invalid_input(std::string("expected an object holding \"") + key + '"');
  auto it = j.find(key);
  if (it == j.end()) throw invalid_input(std::string("missing field \"") + key + '"');
  return *it;
}

int int_from(const json& j, const char* what) {
  if (!j.is_number_integer()) throw invalid_input(std::string(what) + " must be an integer");
  return j.get<int>();
}

const json& array_from(const json& j, const char* what) {
  if (!j.is_array()) throw invalid_input(std::string(what) + " must be an array");
  return j;
}

std::vector<RatVec> matrix_from_json(const json& j, int expect_dim, const char* what) {
  std::vector<RatVec> rows;
  for (const json& r : array_from(j, what)) rows.push_back(vector_from_json(r, expect_dim));
  return rows;
}

json matrix_to_json(const std::vector<RatVec>& rows) {
  json out = json::array();
  for (const RatVec& r : rows) out.push_back(vector_to_json(r));
  return out;
}

Vertex vertex_from_json(const json& j) { return int_from(j, "vertex id"); }

// Cover set keys are vertex ids rendered as strings.
Vertex vertex_from_key(const std::string& key) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(key, &used);
  } catch (const std::exception&) {
    throw invalid_input("set key is not a vertex id: \"" + key + '"');
  }
  if (used != key.size()) throw invalid_input("set key is not a vertex id: \"" + key + '"');
  return v;
}

}  // namespace

Rat rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw invalid_input("rational must be an integer or a \"p/q\" string");
}

json rational_to_json(const Rat& r) { return rat_str(r); }

RatVec vector_from_json(const json& j, int expect_dim) {
  RatVec v;
  for (const json& x : array_from(j, "rational vector")) v.push_back(rational_from_json(x));
  if (expect_dim >= 0 && int(v.size()) != expect_dim)
    throw invalid_input("vector has the wrong dimension");
  return v;
}

json vector_to_json(const RatVec& v) {
  json out = json::array();
  for (const Rat& x : v) out.push_back(rational_to_json(x));
  return out;
}

Simplex simplex_from_json(const json& j) {
  Simplex s;
  for (const json& x : array_from(j, "simplex")) s.push_back(vertex_from_json(x));
  return s;
}

json simplex_to_json(const Simplex& s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

json theta_to_json(const ThetaSet& t) {
  json out = json::array();
  for (size_t i : t) out.push_back(i);
  return out;
}

ComplexPtr complex_from_json(const json& j) {
  std::vector<Simplex> simplices;
  std::vector<Vertex> declared;
  for (const json& v : array_from(need(j, "vertices"), "\"vertices\"")) {
    declared.push_back(vertex_from_json(v));
    simplices.push_back({declared.back()});
  }
  std::sort(declared.begin(), declared.end());
  for (const json& s : array_from(need(j, "maximal_simplices"), "\"maximal_simplices\"")) {
    Simplex sx = simplex_from_json(s);
    for (Vertex v : sx)
      if (!std::binary_search(declared.begin(), declared.end(), v))
        throw invalid_input("simplex uses an undeclared vertex");
    simplices.push_back(std::move(sx));
  }
  return std::make_shared<SimplicialComplex>(SimplicialComplex::from_maximal(simplices));
}

json complex_to_json(const SimplicialComplex& c) {
  json vertices = json::array();
  for (Vertex v : c.vertices()) vertices.push_back(v);
  // A simplex is maximal when it is no one's proper face.
  json maximal = json::array();
  const auto& all = c.simplices();
  for (const Simplex& s : all) {
    bool is_face = false;
    for (const Simplex& t : all) {
      if (t.size() <= s.size()) continue;
      if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        is_face = true;
        break;
      }
    }
    if (!is_face && s.size() > 1) maximal.push_back(simplex_to_json(s));
  }
  return json{{"vertices", vertices}, {"maximal_simplices", maximal}};
}

PolyhedralCone cone_from_json(const json& j, std::optional<int> expect_dim) {
  if (!j.is_object()) throw invalid_input("cone spec must be an object");

  if (j.contains("generators")) {
    if (need(j, "derive").get<std::string>() != "strict_dual")
      throw invalid_input("generator cones support only \"derive\": \"strict_dual\"");
    int dim = expect_dim ? *expect_dim : int_from(need(j, "dim"), "\"dim\"");
    auto gens = matrix_from_json(need(j, "generators"), dim, "\"generators\"");
    return strict_dual(make_generators(dim, std::move(gens)));
  }

  int dim = j.contains("dim") || !expect_dim ? int_from(need(j, "dim"), "\"dim\"") : *expect_dim;
  if (expect_dim && dim != *expect_dim) throw invalid_input("cone dimension mismatch");
  std::vector<RatVec> weak, strict;
  if (j.contains("weak")) weak = matrix_from_json(j.at("weak"), dim, "\"weak\"");
  if (j.contains("strict")) strict = matrix_from_json(j.at("strict"), dim, "\"strict\"");
  bool exclude = false;
  if (j.contains("exclude_origin")) {
    if (!j.at("exclude_origin").is_boolean())
      throw invalid_input("\"exclude_origin\" must be a boolean");
    exclude = j.at("exclude_origin").get<bool>();
  }
  return make_cone(dim, std::move(weak), std::move(strict), exclude);
}

json cone_to_json(const PolyhedralCone& c) {
  return json{{"dim", c.dim},
              {"weak", matrix_to_json(c.weak)},
              {"strict", matrix_to_json(c.strict)},
              {"exclude_origin", c.exclude_origin}};
}

IndexedFamily family_from_json(const json& j, size_t max_index_set) {
  const json& ambient = need(j, "ambient");
  const json& members = need(j, "members");
  if (!members.is_object()) throw invalid_input("\"members\" must be an object");

  FamilyOptions opt;
  opt.max_index_set = max_index_set;

  std::vector<std::string> labels;
  if (ambient.is_object() && ambient.contains("dimension")) {
    int dim = int_from(ambient.at("dimension"), "\"dimension\"");
    std::vector<PolyhedralCone> cones;
    for (const auto& [label, spec] : members.items()) {
      labels.push_back(label);
      cones.push_back(cone_from_json(spec, dim));
    }
    return IndexedFamily::from_cones(std::move(labels), std::move(cones), opt);
  }

  ComplexPtr base = complex_from_json(ambient);
  std::vector<Subcomplex> subs;
  for (const auto& [label, spec] : members.items()) {
    labels.push_back(label);
    std::vector<Simplex> simplices;
    for (const json& s : array_from(spec, "subcomplex member")) {
      simplices.push_back(simplex_from_json(s));
    }
    subs.emplace_back(base, simplices);
  }
  return IndexedFamily::from_subcomplexes(base, std::move(labels), std::move(subs), opt);
}

LoadedCover cover_from_json(const json& j, size_t max_index_set) {
  ComplexPtr base = complex_from_json(need(j, "complex"));
  int level = int_from(need(j, "subdivision_level"), "\"subdivision_level\"");
  if (level < 0 || level > 3) throw invalid_input("subdivision level must be between 0 and 3");

  SubdivisionMap sd = identity_subdivision(base);
  for (int i = 0; i < level; ++i) sd = compose(sd, barycentric_subdivision(sd.source));

  const json& sets = need(j, "sets");
  if (!sets.is_object()) throw invalid_input("\"sets\" must be an object");

  int closed_form = 0, star_form = 0;
  for (const auto& [key, value] : sets.items()) {
    (void)key;
    if (value.contains("simplices")) ++closed_form;
    if (value.contains("star_vertices")) ++star_form;
  }
  if (closed_form && star_form)
    throw invalid_input("cover sets mix \"simplices\" and \"star_vertices\" forms");
  if (size_t(closed_form + star_form) != sets.size())
    throw invalid_input("each cover set needs \"simplices\" or \"star_vertices\"");

  LoadedCover out;
  if (star_form) {
    std::map<Vertex, std::vector<Vertex>> star_sets;
    for (const auto& [key, value] : sets.items()) {
      std::vector<Vertex> centers;
      for (const json& v : array_from(value.at("star_vertices"), "\"star_vertices\""))
        centers.push_back(vertex_from_json(v));
      star_sets.emplace(vertex_from_key(key), std::move(centers));
    }
    out.simple = make_simple_cover(std::move(sd), std::move(star_sets), max_index_set);
  } else {
    std::map<Vertex, Subcomplex> closed_sets;
    for (const auto& [key, value] : sets.items()) {
      std::vector<Simplex> simplices;
      for (const json& s : array_from(value.at("simplices"), "\"simplices\""))
        simplices.push_back(simplex_from_json(s));
      closed_sets.emplace(vertex_from_key(key), Subcomplex(sd.source, simplices));
    }
    out.regular = make_regular_cover(std::move(sd), std::move(closed_sets), max_index_set);
  }
  return out;
}

ConvexPolytopeFamily polytopes_from_json(const json& j, size_t max_index_set) {
  int dim = int_from(need(j, "dim"), "\"dim\"");
  const json& members = need(j, "members");
  if (!members.is_object()) throw invalid_input("\"members\" must be an object");

  std::vector<std::string> labels;
  std::vector<Polytope> polys;
  for (const auto& [label, spec] : members.items()) {
    labels.push_back(label);
    Polytope p;
    p.a = matrix_from_json(need(spec, "A"), dim, "\"A\"");
    p.b = vector_from_json(need(spec, "b"), int(p.a.size()));
    polys.push_back(std::move(p));
  }
  return make_polytope_family(dim, std::move(labels), std::move(polys), max_index_set);
}

Economy economy_from_json(const json& j, size_t max_index_set) {
  int n = int_from(need(j, "n"), "\"n\"");
  std::vector<Trader> traders;
  for (const json& tj : array_from(need(j, "traders"), "\"traders\"")) {
    Trader t;
    t.id = need(tj, "id").get<std::string>();
    t.endowment = vector_from_json(need(tj, "endowment"), n);
    const json& u = need(tj, "utility");
    if (!u.is_object() || u.size() != 1)
      throw invalid_input("\"utility\" must hold exactly one of \"linear\", "
                          "\"min_linear\", \"cone_generators\"");
    if (u.contains("linear")) {
      t.utility = LinearUtility{vector_from_json(u.at("linear"), n)};
    } else if (u.contains("min_linear")) {
      t.utility = MinLinearUtility{matrix_from_json(u.at("min_linear"), n, "\"min_linear\"")};
    } else if (u.contains("cone_generators")) {
      t.utility = ExplicitConeUtility{
          make_generators(n, matrix_from_json(u.at("cone_generators"), n, "\"cone_generators\""))};
    } else {
      throw invalid_input("unknown utility form");
    }
    traders.push_back(std::move(t));
  }
  return make_economy(n, std::move(traders), max_index_set);
}

json economy_to_json(const Economy& e) {
  json traders = json::array();
  for (const Trader& t : e.traders) {
    json u;
    if (const auto* lin = std::get_if<LinearUtility>(&t.utility)) {
      u = json{{"linear", vector_to_json(lin->a)}};
    } else if (const auto* ml = std::get_if<MinLinearUtility>(&t.utility)) {
      u = json{{"min_linear", matrix_to_json(ml->rows)}};
    } else {
      const auto& ec = std::get<ExplicitConeUtility>(t.utility);
      u = json{{"cone_generators", matrix_to_json(ec.closure.generators)}};
    }
    traders.push_back(json{
        {"id", t.id}, {"endowment", vector_to_json(t.endowment)}, {"utility", std::move(u)}});
  }
  return json{{"n", e.n}, {"traders", std::move(traders)}};
}

json profile_to_json(const HomologyProfile& p) {
  json betti = json::object();
  for (const auto& [q, rank] : p.betti) betti[std::to_string(q)] = rank;
  json torsion = json::object();
  for (const auto& [q, factors] : p.torsion) {
    json fs = json::array();
    for (const Int& f : factors) fs.push_back(f.get_str());
    torsion[std::to_string(q)] = std::move(fs);
  }
  return json{{"minus_one_rank", p.minus_one_rank},
              {"betti", std::move(betti)},
              {"torsion", std::move(torsion)},
              {"acyclic", p.is_acyclic()}};
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot read input file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace conetop::io
