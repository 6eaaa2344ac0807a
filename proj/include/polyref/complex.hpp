#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polyref {

using VertexId = std::uint32_t;
using FaceId = std::uint32_t;
using EdgeId = std::uint32_t;
using HalfEdgeId = std::uint32_t;

inline constexpr std::uint32_t kNone = 0xffffffffu;

class SurfaceComplex;

namespace detail {

// Raw half-edge arrays. Half-edges 2e and 2e+1 are the two sides of edge e.
struct RawComplex {
    std::vector<VertexId> origin;
    std::vector<HalfEdgeId> next;
    std::vector<FaceId> face;
    std::vector<HalfEdgeId> face_edge;
    std::vector<std::uint32_t> face_size;
    std::vector<HalfEdgeId> vertex_edge;
    std::vector<std::uint32_t> degree;
};

// Trusts the caller: arrays must already describe a valid sphere complex.
SurfaceComplex assemble(RawComplex&& raw);

}  // namespace detail

/// Oriented cell complex on the 2-sphere, stored as a half-edge structure.
///
/// Faces are traversed counterclockwise seen from outside, so each face lies
/// to the left of its half-edges. The underlying graph is simple and
/// connected, every face boundary is a simple cycle of length at least 3 and
/// V - E + F = 2. Instances are immutable once built.
class SurfaceComplex {
public:
    SurfaceComplex() = default;

    /// Validating constructor from cyclic vertex walks (vertex ids 0..n-1).
    /// Throws Error with NonManifold, OrientationClash, NotSphere,
    /// Disconnected or DegenerateFace.
    static SurfaceComplex from_faces(std::span<const std::vector<VertexId>> walks);

    std::size_t num_vertices() const { return vertex_edge_.size(); }
    std::size_t num_edges() const { return origin_.size() / 2; }
    std::size_t num_faces() const { return face_edge_.size(); }
    std::size_t num_half_edges() const { return origin_.size(); }

    VertexId origin(HalfEdgeId h) const { return origin_[h]; }
    VertexId target(HalfEdgeId h) const { return origin_[h ^ 1u]; }
    static HalfEdgeId twin(HalfEdgeId h) { return h ^ 1u; }
    static EdgeId edge(HalfEdgeId h) { return h >> 1; }
    HalfEdgeId next(HalfEdgeId h) const { return next_[h]; }
    HalfEdgeId prev(HalfEdgeId h) const { return prev_[h]; }
    FaceId face(HalfEdgeId h) const { return face_[h]; }

    // Successor of h among the half-edges leaving origin(h).
    HalfEdgeId rotate_ccw(HalfEdgeId h) const { return twin(prev_[h]); }
    HalfEdgeId rotate_cw(HalfEdgeId h) const { return next_[twin(h)]; }

    HalfEdgeId face_half_edge(FaceId f) const { return face_edge_[f]; }
    std::uint32_t face_size(FaceId f) const { return face_size_[f]; }
    HalfEdgeId vertex_half_edge(VertexId v) const { return vertex_edge_[v]; }
    std::uint32_t degree(VertexId v) const { return degree_[v]; }

    std::vector<HalfEdgeId> face_half_edges(FaceId f) const;
    std::vector<VertexId> face_walk(FaceId f) const;
    std::vector<std::vector<VertexId>> face_walks() const;
    /// Outgoing half-edges of v in counterclockwise order.
    std::vector<HalfEdgeId> vertex_star(VertexId v) const;

private:
    friend SurfaceComplex detail::assemble(detail::RawComplex&& raw);

    std::vector<VertexId> origin_;
    std::vector<HalfEdgeId> next_;
    std::vector<HalfEdgeId> prev_;
    std::vector<FaceId> face_;
    std::vector<HalfEdgeId> face_edge_;
    std::vector<std::uint32_t> face_size_;
    std::vector<HalfEdgeId> vertex_edge_;
    std::vector<std::uint32_t> degree_;
};

inline SurfaceComplex build_from_faces(std::span<const std::vector<VertexId>> walks)
{
    return SurfaceComplex::from_faces(walks);
}

struct DualLink {
    FaceId a;
    FaceId b;
    EdgeId edge;  // primal edge crossed by the link
};

/// Face adjacency of a complex: one node per face, one link per primal edge.
struct DualGraph {
    std::size_t num_nodes = 0;
    std::vector<DualLink> links;
    // adjacency[f] lists (neighbour face, crossed edge) in the face's walk order.
    std::vector<std::vector<std::pair<FaceId, EdgeId>>> adjacency;
};

DualGraph dual_graph(const SurfaceComplex& c);

/// Relabeling- and reflection-invariant code of the combinatorial map.
struct CanonicalCode {
    std::vector<std::uint32_t> words;

    auto operator<=>(const CanonicalCode&) const = default;
    bool operator==(const CanonicalCode&) const = default;

    std::string to_string() const;
};

CanonicalCode canonical_code(const SurfaceComplex& c);

struct ComplexStats {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t faces = 0;
    std::map<std::uint32_t, std::size_t> degree_counts;     // degree -> multiplicity
    std::map<std::uint32_t, std::size_t> face_size_counts;  // size -> multiplicity
};

ComplexStats stats(const SurfaceComplex& c);

}  // namespace polyref
