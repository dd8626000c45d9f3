#pragma once

#include <string>

#include "kls/poset.hpp"

namespace kls {

// Boolean lattice of rank n (subsets of {1..n}); n <= 8.
PosetPtr boolean_lattice(int n);

// Chain with n+1 elements (rank n); n <= 64.
PosetPtr chain_poset(int n);

// Face lattice of the d-dimensional cube, 3^d + 1 elements; d <= 4.
PosetPtr cube_face_lattice(int d);

// Face lattice of the d-dimensional cross-polytope, 3^d + 1 elements;
// d <= 4.
PosetPtr cross_polytope_face_lattice(int d);

// Built-in 6-element rank-3 Eulerian example (two atoms a,b under two
// rank-2 elements c,d).
PosetPtr fig1_poset();

// Built-in 8-element rank-4 Eulerian example (a,b < c,d < e,f).
PosetPtr fig2_poset();

// Dispatch by kind name: boolean, chain, cube_faces,
// cross_polytope_faces, paper_fig1, paper_fig2.  Throws UnknownKind or
// ParameterOutOfRange.
PosetPtr generate(const std::string& kind, int n);

// True when the kind requires a numeric parameter.
bool generator_takes_parameter(const std::string& kind);

}  // namespace kls
