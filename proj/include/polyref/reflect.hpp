#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polyref/andreev.hpp"
#include "polyref/complex.hpp"

namespace polyref {

/// Which faces of the current polyhedron contain which faces of the
/// round-start ("base") polyhedron as subfaces. Stored as base id -> holder
/// face, so the sets of different faces are disjoint by construction.
class ProvenanceMap {
public:
    ProvenanceMap() = default;

    /// Every face holds itself.
    static ProvenanceMap identity(std::size_t num_faces);

    std::size_t num_bases() const { return holder_.size(); }
    /// Face currently holding a base id, or kNone once it was consumed.
    FaceId holder(FaceId base) const { return holder_[base]; }
    /// Sorted base ids held by face f.
    std::vector<FaceId> of(FaceId f) const;
    /// Number of base ids still held by some face.
    std::size_t total() const;

    /// Reassign holders after a reflection through `reflected`. Ids held by
    /// the reflected face are consumed; `moved_from`/`moved_to` describe a
    /// face id relabeling (kNone when there is none).
    ProvenanceMap after_reflection(FaceId reflected, FaceId moved_from, FaceId moved_to) const;

    bool operator==(const ProvenanceMap&) const = default;

private:
    std::vector<FaceId> holder_;
};

struct StepRecord {
    std::size_t step = 0;  // j: the reflection turns P_j into P_{j+1}
    FaceId face = 0;
    Color color = Color::black;
    std::uint32_t face_size = 0;  // S_{f_j}
    std::uint64_t vertices = 0;   // V_{j+1}
    std::uint64_t edges = 0;      // E_{j+1}
    std::uint64_t faces = 0;      // F_{j+1}
    std::uint32_t black_max = 0;  // B_{j+1}
    std::uint32_t white_max = 0;  // W_{j+1}

    bool operator==(const StepRecord&) const = default;
};

struct ReflectionResult {
    ColoredPolyhedron polyhedron;
    ProvenanceMap provenance;
    StepRecord record;
    // mirror_face[g] is the id of the mirror copy of face g (g itself when g
    // was merged with its mirror, kNone for the reflected face).
    std::vector<FaceId> mirror_face;
    // Face that was renumbered to keep ids contiguous, if any.
    FaceId moved_from = kNone;
    FaceId moved_to = kNone;
};

/// Double a certified polyhedron across face f.
///
/// Two copies of the complex lose face f and are glued along its boundary
/// with reversed orientation; the S_f glued edges are then dissolved, so each
/// neighbour of f merges with its mirror image. Original faces keep their ids
/// (merged faces included). Mirror faces fill the freed slot f first and are
/// then appended; mirror vertices are appended in original id order.
///
/// The result carries the input certificate with CertificateSource::reflection.
/// Throws UnknownFace, or NotAndreev when the input certificate fails or some
/// face shares more than one edge with f.
ReflectionResult reflect(const ColoredPolyhedron& p, const ProvenanceMap& prov, FaceId f, std::size_t step = 1);

struct StepCheck {
    std::string name;
    std::int64_t lhs = 0;
    std::string relation;  // "==", "<=", ">="
    std::int64_t rhs = 0;
    bool ok = false;
};

/// Re-derive the counting identities of a step from the two polyhedra:
/// vertex/edge/face doubling formulas, merged and duplicated face sizes,
/// color inheritance, and the color-maximum inequalities. Returns all checks;
/// throws Violation listing the failed ones.
std::vector<StepCheck> verify_step(const ColoredPolyhedron& before, const ColoredPolyhedron& after,
                                   const StepRecord& rec);

}  // namespace polyref
