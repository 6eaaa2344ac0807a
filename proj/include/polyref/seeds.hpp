#pragma once

#include "polyref/andreev.hpp"
#include "polyref/complex.hpp"

namespace polyref {

// Plain complexes used as medial inputs and test fixtures.
SurfaceComplex tetrahedron_complex();
SurfaceComplex cube_complex();
SurfaceComplex icosahedron_complex();
SurfaceComplex prism_complex(int n);  // n >= 3

/// The octahedron, colored and certified.
ColoredPolyhedron seed_octahedron();

/// n-gonal antiprism: two n-gons and 2n triangles, V = 2n. Throws InvalidN for n < 3.
ColoredPolyhedron seed_antiprism(int n);

/// Medial complex: one vertex per edge of c, one face per face of c followed
/// by one face per vertex of c (in id order). Vertex e of the result is edge e
/// of c. Throws DegreeTooLow when c has a vertex of degree below 3.
SurfaceComplex medial(const SurfaceComplex& c);

}  // namespace polyref
