#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polyref/complex.hpp"

namespace polyref {

enum class Color : std::uint8_t { black = 0, white = 1 };

inline Color opposite(Color c) { return c == Color::black ? Color::white : Color::black; }
std::string to_string(Color c);

/// A closed walk in the dual graph together with the primal edges it crosses.
struct PrismaticCircuit {
    std::vector<FaceId> faces;
    std::vector<EdgeId> edges;  // edges[i] separates faces[i] and faces[i+1 mod k]

    bool operator==(const PrismaticCircuit&) const = default;
};

struct FaceTriple {
    FaceId first;
    FaceId middle;
    FaceId last;

    bool operator==(const FaceTriple&) const = default;
};

/// Outcome of the four realizability conditions for right-angled ideal
/// polyhedra, plus the polyhedrality premise (faces pairwise meet in nothing,
/// one vertex or one edge, which for these complexes is 3-connectivity).
/// Each flag is false exactly when its witness list is nonempty.
struct AndreevReport {
    std::size_t face_count = 0;
    bool cond1_faces_ge_6 = false;

    bool cond2_valence_4 = false;
    std::vector<VertexId> bad_valence;

    bool cond3_triples = false;
    std::vector<FaceTriple> bad_triples;

    bool cond4_no_prismatic_4circuit = false;
    std::vector<PrismaticCircuit> prismatic_4circuits;

    bool polyhedral = false;
    std::vector<std::pair<FaceId, FaceId>> improper_face_pairs;

    bool passes() const
    {
        return cond1_faces_ge_6 && cond2_valence_4 && cond3_triples && cond4_no_prismatic_4circuit && polyhedral;
    }
};

AndreevReport check_andreev(const SurfaceComplex& c);

/// All simple k-cycles of the dual whose crossed primal edges are pairwise
/// vertex-disjoint. Each circuit starts at its smallest face and is oriented
/// so that faces[1] < faces[k-1]; the list is sorted. Throws InvalidK for k < 3.
std::vector<PrismaticCircuit> find_prismatic_circuits(const SurfaceComplex& c, int k);

enum class CertificateSource : std::uint8_t {
    computed,    // check_andreev ran on this complex
    reflection,  // carried over from a certified polyhedron by reflect()
};

/// Sphere complex with a proper black/white face coloring and its Andreev
/// certificate.
class ColoredPolyhedron {
public:
    ColoredPolyhedron(SurfaceComplex complex, std::vector<Color> colors, AndreevReport certificate,
                      CertificateSource source);

    const SurfaceComplex& complex() const { return complex_; }
    Color color(FaceId f) const { return colors_[f]; }
    const std::vector<Color>& colors() const { return colors_; }
    const AndreevReport& certificate() const { return certificate_; }
    CertificateSource certificate_source() const { return source_; }

private:
    SurfaceComplex complex_;
    std::vector<Color> colors_;
    AndreevReport certificate_;
    CertificateSource source_;
};

/// Proper 2-coloring of the faces with the smallest face id black; attaches a
/// freshly computed certificate. Throws NotBipartiteDual when some vertex has
/// odd degree.
ColoredPolyhedron checkerboard(SurfaceComplex c);

struct ColorMaxima {
    std::uint32_t black = 0;
    std::uint32_t white = 0;

    std::uint32_t of(Color c) const { return c == Color::black ? black : white; }
};

ColorMaxima color_maxima(const ColoredPolyhedron& p);

}  // namespace polyref
