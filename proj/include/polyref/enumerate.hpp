#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polyref/andreev.hpp"
#include "polyref/complex.hpp"

namespace polyref {

struct CensusEntry {
    CanonicalCode code;
    std::size_t vertices = 0;
    std::uint32_t black_max = 0;
    std::uint32_t white_max = 0;
    AndreevReport report;
    std::vector<std::vector<VertexId>> faces;  // a representative

    /// V - (B + W - 1); the claim says this is never negative.
    std::int64_t slack() const
    {
        return static_cast<std::int64_t>(vertices) - (static_cast<std::int64_t>(black_max + white_max) - 1);
    }
};

struct Census {
    std::size_t max_vertices = 0;
    std::vector<CensusEntry> entries;   // sorted by (V, code)
    std::vector<CensusEntry> rejected;  // 4-valent candidates failing some condition, same order
    std::size_t plane_graphs = 0;      // candidate face graphs (medial inputs)
    std::size_t pre_filter = 0;        // distinct 4-valent complexes before the Andreev filter
};

/// Every isomorphism class of 4-valent sphere complexes with V <= maxV that
/// passes all realizability conditions, each exactly once.
///
/// Such a complex is the medial of its black-face graph (vertices = black
/// faces, edges = vertices), which is simple, 2-connected, of minimum degree
/// at least 3; either that graph or its dual has no more vertices than faces.
/// Those graphs are grown by ear additions from cycles, deduplicated by
/// canonical code level by level, and their medials are then filtered.
/// maxV below 6 yields an empty census. Throws OutOfRange for maxV > 14.
/// Honors POLYREF_THREADS for the filtering stage.
Census enumerate_polyhedra(int max_vertices);

struct ClaimReport {
    std::size_t checked = 0;
    std::int64_t min_slack = 0;
    std::vector<CanonicalCode> tight;  // slack == 0
};

/// V >= B + W - 1 over a census. Throws ClaimViolated naming the offender.
ClaimReport verify_claim_v1(const Census& census);
ClaimReport verify_claim_v1(int max_vertices);

/// k boundary points of a disk, k - 1 non-crossing chords, chord degrees 1 at
/// the two low positions and 2 elsewhere.
struct ChordProblem {
    int k = 0;
    int low1 = 0;
    int low2 = 0;
};

struct Chord {
    int a = 0;
    int b = 0;  // a < b

    auto operator<=>(const Chord&) const = default;
};

struct ChordConfiguration {
    ChordProblem problem;
    std::vector<Chord> chords;
    std::vector<int> region_sides;  // inner regions, boundary arcs count as sides
};

struct DiskSearchReport {
    int k = 0;
    std::size_t placements = 0;
    std::size_t configurations = 0;  // chord systems examined
    std::vector<ChordConfiguration> feasible;
    int best_min_sides = 0;  // largest "fewest sides of a region" seen

    bool infeasible() const { return feasible.empty(); }
};

/// All chord systems for one placement of the degree-1 points, with regions.
std::vector<ChordConfiguration> chord_systems(const ChordProblem& problem);

/// Exhaustive search over every placement and chord system for a subdivision
/// with all regions at least 3-sided. Throws OutOfPrecondition for k < 4.
DiskSearchReport disk_subdivision_search(int k);

/// Threads requested through POLYREF_THREADS (at least 1, default 1).
unsigned configured_threads();

}  // namespace polyref
