#pragma once

#include <map>
#include <memory>
#include <vector>

#include "conetop/errors.hpp"

namespace conetop {

// Vertices are opaque ordered tokens; simplices are kept sorted so equal
// simplex sets compare equal.  Canonical simplex order is (dimension, lex).
using Vertex = int;
using Simplex = std::vector<Vertex>;

struct SimplexOrder {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Finite abstract simplicial complex, immutable after construction.
// Invariants: simplices are sorted vertex lists in canonical order, the set
// is closed under taking faces, and vertices() is exactly the 0-skeleton.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // the empty complex

  // Face closure of the given simplices (duplicates fine, order irrelevant).
  static SimplicialComplex from_maximal(const std::vector<Simplex>& maximal);

  // Requires the set to be face-closed already; throws otherwise.
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

  const std::vector<Simplex>& simplices() const { return simplices_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  bool contains(const Simplex& s) const;
  bool empty() const { return simplices_.empty(); }
  int dim() const;  // -1 for the empty complex
  size_t size() const { return simplices_.size(); }

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Simplex> simplices_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

// Face-closed subset of a fixed parent complex.
class Subcomplex {
 public:
  Subcomplex() = default;

  // Face-closes the given simplices and validates membership in the parent.
  Subcomplex(ComplexPtr parent, const std::vector<Simplex>& simplices);

  const ComplexPtr& parent() const { return parent_; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  bool empty() const { return simplices_.empty(); }
  bool contains(const Simplex& s) const;

  // The subcomplex as a standalone complex (for homology).
  SimplicialComplex as_complex() const;

  bool operator==(const Subcomplex& o) const { return simplices_ == o.simplices_; }

 private:
  ComplexPtr parent_;
  std::vector<Simplex> simplices_;
};

std::vector<Simplex> face_closure(const std::vector<Simplex>& simplices);

// All simplices having v as a vertex.  Deliberately *not* face-closed: this
// is the combinatorial open star.
std::vector<Simplex> open_star(const SimplicialComplex& c, Vertex v);

// Face closure of the open star.
Subcomplex closed_star(ComplexPtr c, Vertex v);

// Simplices whose vertices all lie in w.  Unknown vertices are an error;
// empty w gives the empty subcomplex.
Subcomplex full_subcomplex(ComplexPtr c, const std::vector<Vertex>& w);

// Simplex-set union / intersection.  Parents must agree.
Subcomplex union_sub(const Subcomplex& a, const Subcomplex& b);
Subcomplex intersect_sub(const Subcomplex& a, const Subcomplex& b);

// A subdivision X' -> X with its carrier map.  vertex_carrier[v] is the face
// of X whose relative interior holds the new vertex v; the carrier of a
// simplex of X' is the smallest face of X containing it.
struct SubdivisionMap {
  ComplexPtr source;  // X'
  ComplexPtr target;  // X
  std::map<Vertex, Simplex> vertex_carrier;  // keyed by X' vertex id

  Simplex carrier(const Simplex& s) const;
};

// X' = X with the identity carrier.
SubdivisionMap identity_subdivision(ComplexPtr c);

// Barycentric subdivision: one vertex per face of X, simplices = chains of
// faces.  New vertex ids are dense, in canonical face order.
SubdivisionMap barycentric_subdivision(ComplexPtr c);

// Compose outer: X' -> X with inner: X'' -> X' into X'' -> X.
SubdivisionMap compose(const SubdivisionMap& outer, const SubdivisionMap& inner);

}  // namespace conetop
