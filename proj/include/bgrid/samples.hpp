#ifndef BGRID_SAMPLES_HPP
#define BGRID_SAMPLES_HPP

#include <map>
#include <string>

#include "bgrid/io.hpp"

namespace bgrid {

// Built-in generators. All outputs are conforming meshes of simply connected
// domains (Euler characteristic 1).
//
//   fan j          j triangles around one interior vertex (unit circle);
//                  2-colorable iff j is even
//   strip n        n triangles in a strip, no interior vertices; always
//                  2-colorable (element graph is a path)
//   square-grid n  n x n unit squares split by parallel diagonals
//   l-shape n      square-grid cells over an L-shaped domain (three
//                  quadrants of a 2n x 2n grid)
//   tent j         j tets around one interior edge (cone over fan j);
//                  2-colorable iff j is even
//   cube5          unit cube split into 5 tets (4 corners + regular center)
//   cube6          unit cube split into 6 tets around the main diagonal
//   tet            the unit corner tetrahedron
TriMesh sample_fan(int j);
TriMesh sample_strip(int n);
TriMesh sample_square_grid(int n);
TriMesh sample_l_shape(int n);
TetMesh sample_tent(int j);
TetMesh sample_cube5();
TetMesh sample_cube6();
TetMesh sample_corner_tet();

// Dispatch by generator name as listed above. Parameter key is "j" for
// fan/tent and "n" for strip/square-grid/l-shape; the parameterless
// generators accept no keys. Throws InvalidParam on unknown names, missing,
// unexpected or out-of-range parameters.
AnyMesh sample_mesh(const std::string& name,
                    const std::map<std::string, int>& params);

}  // namespace bgrid

#endif
