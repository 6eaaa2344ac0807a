#include "polyref/seeds.hpp"

#include <string>
#include <vector>

#include "polyref/errors.hpp"

namespace polyref {

SurfaceComplex tetrahedron_complex()
{
    const std::vector<std::vector<VertexId>> faces{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
    return SurfaceComplex::from_faces(faces);
}

SurfaceComplex cube_complex()
{
    const std::vector<std::vector<VertexId>> faces{{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
                                                   {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};
    return SurfaceComplex::from_faces(faces);
}

SurfaceComplex icosahedron_complex()
{
    // Apex 0, upper ring 1..5, lower ring 6..10, apex 11.
    std::vector<std::vector<VertexId>> faces;
    auto up = [](int i) { return static_cast<VertexId>(1 + (i % 5)); };
    auto low = [](int i) { return static_cast<VertexId>(6 + (i % 5)); };
    for (int i = 0; i < 5; ++i) {
        faces.push_back({0, up(i), up(i + 1)});
        faces.push_back({up(i + 1), up(i), low(i)});
        faces.push_back({up(i + 1), low(i), low(i + 1)});
        faces.push_back({11, low(i + 1), low(i)});
    }
    return SurfaceComplex::from_faces(faces);
}

SurfaceComplex prism_complex(int n)
{
    if (n < 3) throw Error(ErrorCode::InvalidN, "prism needs n >= 3, got " + std::to_string(n));
    const auto N = static_cast<VertexId>(n);
    std::vector<std::vector<VertexId>> faces;
    std::vector<VertexId> bottom;
    std::vector<VertexId> top;
    for (VertexId i = 0; i < N; ++i) {
        bottom.push_back(N - 1 - i);
        top.push_back(N + i);
    }
    faces.push_back(bottom);
    faces.push_back(top);
    for (VertexId i = 0; i < N; ++i) {
        const VertexId j = (i + 1) % N;
        faces.push_back({i, j, N + j, N + i});
    }
    return SurfaceComplex::from_faces(faces);
}

ColoredPolyhedron seed_octahedron()
{
    const std::vector<std::vector<VertexId>> faces{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
                                                   {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
    return checkerboard(SurfaceComplex::from_faces(faces));
}

ColoredPolyhedron seed_antiprism(int n)
{
    if (n < 3) throw Error(ErrorCode::InvalidN, "antiprism needs n >= 3, got " + std::to_string(n));
    const auto N = static_cast<VertexId>(n);
    // Top ring t_i = i, bottom ring b_i = N + i sits between t_i and t_{i+1}.
    std::vector<std::vector<VertexId>> faces;
    std::vector<VertexId> top;
    std::vector<VertexId> bottom;
    for (VertexId i = 0; i < N; ++i) {
        top.push_back(i);
        bottom.push_back(2 * N - 1 - i);
    }
    faces.push_back(top);
    faces.push_back(bottom);
    for (VertexId i = 0; i < N; ++i) {
        const VertexId t0 = i;
        const VertexId t1 = (i + 1) % N;
        const VertexId b0 = N + i;
        const VertexId b1 = N + (i + 1) % N;
        faces.push_back({t1, t0, b0});
        faces.push_back({t1, b0, b1});
    }
    return checkerboard(SurfaceComplex::from_faces(faces));
}

SurfaceComplex medial(const SurfaceComplex& c)
{
    for (VertexId v = 0; v < c.num_vertices(); ++v) {
        if (c.degree(v) < 3)
            throw Error(ErrorCode::DegreeTooLow,
                        "vertex " + std::to_string(v) + " has degree " + std::to_string(c.degree(v)));
    }
    std::vector<std::vector<VertexId>> faces;
    faces.reserve(c.num_faces() + c.num_vertices());
    for (FaceId f = 0; f < c.num_faces(); ++f) {
        std::vector<VertexId> walk;
        for (HalfEdgeId h : c.face_half_edges(f)) walk.push_back(SurfaceComplex::edge(h));
        faces.push_back(std::move(walk));
    }
    for (VertexId v = 0; v < c.num_vertices(); ++v) {
        std::vector<VertexId> walk;
        for (HalfEdgeId h : c.vertex_star(v)) walk.push_back(SurfaceComplex::edge(h));
        faces.push_back(std::move(walk));
    }
    return SurfaceComplex::from_faces(faces);
}

}  // namespace polyref
