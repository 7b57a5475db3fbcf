#include "conetop/simplicial.hpp"

#include <algorithm>
#include <set>

namespace conetop {

namespace {

Simplex normalized(Simplex s) {
  if (s.empty()) throw invalid_input("empty simplex");
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw invalid_input("repeated vertex in simplex");
  return s;
}

std::vector<Vertex> vertices_of(const std::vector<Simplex>& simplices) {
  std::vector<Vertex> v;
  for (const Simplex& s : simplices)
    if (s.size() == 1) v.push_back(s[0]);
  return v;  // already sorted: 0-simplices come first in canonical order
}

}  // namespace

std::vector<Simplex> face_closure(const std::vector<Simplex>& simplices) {
  std::set<Simplex, SimplexOrder> out;
  for (const Simplex& raw : simplices) {
    Simplex s = normalized(raw);
    const int n = int(s.size());
    if (n > 24) throw invalid_input("simplex dimension out of range");
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Simplex f;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) f.push_back(s[i]);
      out.insert(std::move(f));
    }
  }
  return {out.begin(), out.end()};
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<Simplex>& maximal) {
  SimplicialComplex c;
  c.simplices_ = face_closure(maximal);
  c.vertices_ = vertices_of(c.simplices_);
  return c;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
  for (Simplex& s : simplices) s = normalized(std::move(s));
  std::sort(simplices.begin(), simplices.end(), SimplexOrder{});
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());

  SimplicialComplex c;
  c.simplices_ = std::move(simplices);
  c.vertices_ = vertices_of(c.simplices_);

  // Closure under facets implies closure under all faces.
  for (const Simplex& s : c.simplices_) {
    if (s.size() == 1) continue;
    for (size_t drop = 0; drop < s.size(); ++drop) {
      Simplex f;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) f.push_back(s[i]);
      if (!c.contains(f)) throw invalid_input("simplex set is not face-closed");
    }
  }
  return c;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  return std::binary_search(simplices_.begin(), simplices_.end(), s, SimplexOrder{});
}

int SimplicialComplex::dim() const {
  return simplices_.empty() ? -1 : int(simplices_.back().size()) - 1;
}

Subcomplex::Subcomplex(ComplexPtr parent, const std::vector<Simplex>& simplices)
    : parent_(std::move(parent)) {
  if (!parent_) throw invalid_input("subcomplex without parent");
  simplices_ = face_closure(simplices);
  for (const Simplex& s : simplices_)
    if (!parent_->contains(s)) throw invalid_input("subcomplex simplex not in parent");
}

bool Subcomplex::contains(const Simplex& s) const {
  return std::binary_search(simplices_.begin(), simplices_.end(), s, SimplexOrder{});
}

SimplicialComplex Subcomplex::as_complex() const {
  return SimplicialComplex::from_simplices(simplices_);
}

std::vector<Simplex> open_star(const SimplicialComplex& c, Vertex v) {
  if (!c.contains({v})) throw invalid_input("open_star: unknown vertex");
  std::vector<Simplex> out;
  for (const Simplex& s : c.simplices())
    if (std::binary_search(s.begin(), s.end(), v)) out.push_back(s);
  return out;
}

Subcomplex closed_star(ComplexPtr c, Vertex v) {
  if (!c) throw invalid_input("closed_star: null complex");
  return Subcomplex(c, open_star(*c, v));
}

Subcomplex full_subcomplex(ComplexPtr c, const std::vector<Vertex>& w) {
  if (!c) throw invalid_input("full_subcomplex: null complex");
  std::set<Vertex> allowed(w.begin(), w.end());
  for (Vertex v : allowed)
    if (!c->contains({v})) throw invalid_input("full_subcomplex: unknown vertex");

  std::vector<Simplex> keep;
  for (const Simplex& s : c->simplices()) {
    bool inside = true;
    for (Vertex v : s)
      if (!allowed.count(v)) {
        inside = false;
        break;
      }
    if (inside) keep.push_back(s);
  }
  return Subcomplex(c, keep);
}

namespace {

void require_same_parent(const Subcomplex& a, const Subcomplex& b) {
  if (!a.parent() || !b.parent()) throw invalid_input("subcomplex without parent");
  if (a.parent() == b.parent()) return;
  if (*a.parent() == *b.parent()) return;
  throw invalid_input("subcomplex parents differ");
}

}  // namespace

Subcomplex union_sub(const Subcomplex& a, const Subcomplex& b) {
  require_same_parent(a, b);
  std::vector<Simplex> s;
  std::set_union(a.simplices().begin(), a.simplices().end(), b.simplices().begin(),
                 b.simplices().end(), std::back_inserter(s), SimplexOrder{});
  return Subcomplex(a.parent(), s);
}

Subcomplex intersect_sub(const Subcomplex& a, const Subcomplex& b) {
  require_same_parent(a, b);
  std::vector<Simplex> s;
  std::set_intersection(a.simplices().begin(), a.simplices().end(), b.simplices().begin(),
                        b.simplices().end(), std::back_inserter(s), SimplexOrder{});
  return Subcomplex(a.parent(), s);
}

Simplex SubdivisionMap::carrier(const Simplex& s) const {
  // Vertex carriers along a simplex of X' form a nested chain, so their
  // union is the largest of them: the smallest face of X containing s.
  Simplex out;
  for (Vertex v : s) {
    auto it = vertex_carrier.find(v);
    if (it == vertex_carrier.end()) throw invalid_input("carrier: unknown vertex");
    Simplex merged;
    std::set_union(out.begin(), out.end(), it->second.begin(), it->second.end(),
                   std::back_inserter(merged));
    out = std::move(merged);
  }
  if (out.empty()) throw invalid_input("carrier of empty simplex");
  return out;
}

SubdivisionMap identity_subdivision(ComplexPtr c) {
  if (!c) throw invalid_input("identity_subdivision: null complex");
  SubdivisionMap sd;
  sd.source = c;
  sd.target = c;
  for (Vertex v : c->vertices()) sd.vertex_carrier[v] = {v};
  return sd;
}

SubdivisionMap barycentric_subdivision(ComplexPtr c) {
  if (!c) throw invalid_input("barycentric_subdivision: null complex");
  const auto& faces = c->simplices();
  const int nf = int(faces.size());

  std::map<Simplex, int, SimplexOrder> id_of;
  for (int i = 0; i < nf; ++i) id_of.emplace(faces[i], i);

  // chains_to[i]: all chains of faces ordered by proper inclusion that end
  // at faces[i], as increasing id vectors.  Proper faces have smaller ids
  // (canonical order sorts by dimension first), so building in id order
  // sees every tail before its extensions.
  std::vector<std::vector<std::vector<int>>> chains_to(nf);
  std::vector<std::vector<int>> all_chains;
  for (int i = 0; i < nf; ++i) {
    chains_to[i].push_back({i});
    const Simplex& f = faces[i];
    const int n = int(f.size());
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      Simplex g;
      for (int b = 0; b < n; ++b)
        if (mask & (1u << b)) g.push_back(f[b]);
      int gi = id_of.at(g);
      for (const auto& tail : chains_to[gi]) {
        auto chain = tail;
        chain.push_back(i);
        chains_to[i].push_back(std::move(chain));
      }
    }
    for (const auto& ch : chains_to[i]) all_chains.push_back(ch);
  }

  std::vector<Simplex> simplices;
  simplices.reserve(all_chains.size());
  for (auto& ch : all_chains) simplices.push_back(Simplex(ch.begin(), ch.end()));

  SubdivisionMap sd;
  sd.source = std::make_shared<SimplicialComplex>(
      SimplicialComplex::from_simplices(std::move(simplices)));
  sd.target = c;
  for (int i = 0; i < nf; ++i) sd.vertex_carrier[i] = faces[i];
  return sd;
}

SubdivisionMap compose(const SubdivisionMap& outer, const SubdivisionMap& inner) {
  if (inner.target != outer.source && !(inner.target && outer.source && *inner.target == *outer.source))
    throw invalid_input("compose: subdivision maps do not chain");
  SubdivisionMap sd;
  sd.source = inner.source;
  sd.target = outer.target;
  for (const auto& [v, face] : inner.vertex_carrier)
    sd.vertex_carrier[v] = outer.carrier(face);
  return sd;
}

}  // namespace conetop
