#pragma once

#include <array>
#include <utility>
#include <vector>

#include "matwork/matrix.hpp"

namespace matwork {

struct CochainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A graph drawn on a surface: vertices, oriented edges, and polygonal faces
/// given as closed boundary walks of (edge index, sign) steps. Sign +1 means
/// the edge is traversed with its stored orientation.
struct CellComplex2 {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // (tail, head)
    std::vector<std::vector<std::pair<std::size_t, int>>> faces;
    bool closed = false;  // every edge on exactly two face boundary slots

    /// Throws CochainError if a walk is not a closed path, or if the closed
    /// flag is set but some edge does not appear with total multiplicity 2.
    void validate() const;

    std::size_t edge_count() const { return edges.size(); }
    std::size_t face_count() const { return faces.size(); }
    long euler_characteristic() const {
        return vertex_count - static_cast<long>(edges.size()) +
               static_cast<long>(faces.size());
    }
};

/// Gradient: per oriented edge, head value minus tail value.
std::vector<mpq_class> d0(const CellComplex2& x, const std::vector<mpq_class>& f0,
                          const FieldSpec& field);

/// Curl: per face, signed sum of boundary edge values.
std::vector<mpq_class> d1(const CellComplex2& x, const std::vector<mpq_class>& f1,
                          const FieldSpec& field);

ExactMatrix d0_matrix(const CellComplex2& x, const FieldSpec& field);
ExactMatrix d1_matrix(const CellComplex2& x, const FieldSpec& field);

/// (h0, h1, h2) by rank-nullity over the exact field. The alternating sum is
/// checked against the Euler characteristic before returning.
std::array<std::size_t, 3> cohomology_dims(const CellComplex2& x, const FieldSpec& field);

/// k x k square grid on the torus with wraparound; k >= 2.
CellComplex2 torus_grid(int k);

/// Surface of the cube: 8 vertices, 12 edges, 6 square faces.
CellComplex2 cube_surface();

/// Triangulated 3x3 grid torus (9 vertices, 27 edges, 18 triangles); the
/// simplicial stand-in for the one-vertex hexagon gluing, which is not a
/// polygonal complex.
CellComplex2 simplicial_torus();

/// Refinement placing one new vertex on every edge.
CellComplex2 subdivide_edges(const CellComplex2& x);

}  // namespace matwork
