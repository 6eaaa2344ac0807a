#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyref/andreev.hpp"
#include "polyref/complex.hpp"
#include "polyref/enumerate.hpp"
#include "polyref/tower.hpp"

namespace polyref {

// ---- polyhedron JSON: {"faces": [[0, 1, 2], ...]}

/// One face per line, so identical complexes give identical bytes.
std::string polyhedron_json(const SurfaceComplex& c);
void write_polyhedron(const SurfaceComplex& c, const std::string& path);

/// Face walks from JSON text. `source` names the input in error messages.
/// Throws ParseError.
std::vector<std::vector<VertexId>> parse_faces(const std::string& text, const std::string& source = "<input>");

/// A complex as read from disk. Coloring fails for odd-degree complexes, so
/// it is optional; the certificate is always computed.
struct LoadedPolyhedron {
    SurfaceComplex complex;
    AndreevReport certificate;
    std::optional<ColoredPolyhedron> colored;
    std::string coloring_error;  // set when `colored` is empty
};

/// Throws ParseError, or the build error of the complex prefixed with the
/// source name and face index.
LoadedPolyhedron parse_polyhedron(const std::string& text, const std::string& source = "<input>");
LoadedPolyhedron load_polyhedron(const std::string& path);

// ---- trace CSV

/// Columns j,color,face_id,S_fj,V_j,E_j,F_j,B_j,W_j,bound_Vj_rhs,r_j_num,r_j_den,
/// one row per level. The step columns describe the reflection leaving P_j and
/// are blank on the last row; bound_Vj_rhs is blank below j = 6. Co-final round
/// markers and the truncation flag follow as '#' lines.
std::string trace_csv(const TowerTrace& trace);
void write_trace(const TowerTrace& trace, const std::string& path);

/// Inverse of trace_csv. Throws ParseError on malformed text and
/// ChecksumMismatch when a row disagrees with the doubling identity, the
/// 4-valent counts, the stored rationals or the stored bound.
TowerTrace parse_trace(const std::string& text, const std::string& source = "<input>");
TowerTrace read_trace(const std::string& path);

// ---- census CSV: code,V,B,W,slack

std::string census_csv(const Census& census);

// ---- files

std::string read_text_file(const std::string& path);  // ParseError if unreadable
void write_text_file(const std::string& path, const std::string& text);

}  // namespace polyref
