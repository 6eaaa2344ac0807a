#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "polyref/enumerate.hpp"
#include "polyref/errors.hpp"
#include "polyref/seeds.hpp"

using namespace polyref;

namespace {

std::set<CanonicalCode> codes_with(const Census& c, std::size_t v)
{
    std::set<CanonicalCode> out;
    for (const CensusEntry& e : c.entries)
        if (e.vertices == v) out.insert(e.code);
    return out;
}

}  // namespace

TEST_CASE("tiny censuses")
{
    for (int v = 0; v <= 5; ++v) CHECK(enumerate_polyhedra(v).entries.empty());
    const Census six = enumerate_polyhedra(6);
    REQUIRE(six.entries.size() == 1);
    CHECK(six.entries[0].code == canonical_code(seed_octahedron().complex()));
    CHECK(six.entries[0].vertices == 6);
    CHECK(six.entries[0].black_max == 3);
    CHECK(six.entries[0].white_max == 3);
    CHECK(six.entries[0].report.passes());
}

TEST_CASE("range")
{
    CHECK_THROWS_AS(enumerate_polyhedra(15), Error);
    try {
        enumerate_polyhedra(-1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OutOfRange);
    }
}

TEST_CASE("census at 8 contains the 4-antiprism")
{
    const Census c = enumerate_polyhedra(8);
    CHECK(codes_with(c, 8).count(canonical_code(seed_antiprism(4).complex())) == 1);
}

TEST_CASE("census agrees with rotation-system brute force")
{
    const Census c = enumerate_polyhedra(8);
    for (std::uint32_t n = 6; n <= 8; ++n) {
        const auto brute = oracle::rotation_census(n);
        CHECK_MESSAGE(codes_with(c, n) == brute, "n=" << n);
    }
    CHECK(oracle::rotation_census(7).empty());
}

TEST_CASE("census counts match duality pairs of 3-connected planar graphs")
{
    // Realizable 4-valent complexes are exactly the medials of 3-connected
    // planar graphs, and G and its dual give the same medial. So the number on
    // n vertices is (p(n) + s(n)) / 2, where p(n) counts 3-connected planar
    // graphs with n edges (OEIS A002840) and s(n) the self-dual ones.
    const std::map<int, int> polyhedra{{6, 1}, {7, 0}, {8, 1}, {9, 2}, {10, 2}, {11, 4}, {12, 12}, {13, 22}, {14, 58}};
    const std::map<int, int> self_dual{{6, 1}, {8, 1}, {10, 2}, {12, 6}, {14, 16}};
    const Census c = enumerate_polyhedra(14);
    for (int n = 6; n <= 14; ++n) {
        const int sd = self_dual.count(n) ? self_dual.at(n) : 0;
        const auto found = codes_with(c, static_cast<std::size_t>(n)).size();
        CHECK_MESSAGE(found == static_cast<std::size_t>((polyhedra.at(n) + sd) / 2), "n=" << n);
    }
    CHECK(c.entries.size() == 64);
}

TEST_CASE("census entries are unique, sorted and valid")
{
    const Census c = enumerate_polyhedra(12);
    CHECK(c.pre_filter == c.entries.size() + c.rejected.size());
    CHECK(c.pre_filter >= c.entries.size());
    std::set<CanonicalCode> seen;
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
        const CensusEntry& e = c.entries[i];
        CHECK(seen.insert(e.code).second);
        const SurfaceComplex s = SurfaceComplex::from_faces(e.faces);
        CHECK(canonical_code(s) == e.code);
        CHECK(check_andreev(s).passes());
        for (VertexId v = 0; v < s.num_vertices(); ++v) CHECK(s.degree(v) == 4);
        if (i > 0) {
            const CensusEntry& p = c.entries[i - 1];
            CHECK((p.vertices < e.vertices || (p.vertices == e.vertices && p.code < e.code)));
        }
        // Mirror images land on the same entry.
        CHECK(canonical_code(SurfaceComplex::from_faces(oracle::mirror(e.faces))) == e.code);
    }
    for (const CensusEntry& e : c.rejected) CHECK_FALSE(e.report.passes());
}

TEST_CASE("census is independent of the thread count")
{
    const Census a = enumerate_polyhedra(11);
    setenv("POLYREF_THREADS", "3", 1);
    CHECK(configured_threads() == 3);
    const Census b = enumerate_polyhedra(11);
    unsetenv("POLYREF_THREADS");
    CHECK(configured_threads() == 1);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].code == b.entries[i].code);
    CHECK(a.pre_filter == b.pre_filter);
}

TEST_CASE("claim V >= B + W - 1")
{
    const Census c = enumerate_polyhedra(10);
    const ClaimReport r = verify_claim_v1(c);
    CHECK(r.checked == c.entries.size());
    CHECK(r.min_slack >= 0);
    for (const CensusEntry& e : c.entries) {
        if (e.code == canonical_code(seed_octahedron().complex())) CHECK(e.slack() == 1);
        if (e.code == canonical_code(seed_antiprism(4).complex())) CHECK(e.slack() == 1);
    }
    Census forged = c;
    forged.entries[0].black_max = 50;
    try {
        verify_claim_v1(forged);
        FAIL("expected ClaimViolated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ClaimViolated);
    }
}

TEST_CASE("disk subdivision search")
{
    CHECK_THROWS_AS(disk_subdivision_search(3), Error);
    try {
        disk_subdivision_search(3);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OutOfPrecondition);
    }
    for (int k = 4; k <= 8; ++k) {
        const DiskSearchReport r = disk_subdivision_search(k);
        CHECK(r.infeasible());
        CHECK(r.placements == static_cast<std::size_t>(k * (k - 1) / 2));
        CHECK(r.configurations > 0);
        CHECK(r.best_min_sides <= 2);
    }
}

TEST_CASE("chord systems: region counting oracle")
{
    // k - 1 non-crossing chords cut the disk into k regions whose sides add up
    // to k arcs plus two sides per chord, 3k - 2 < 3k, so some region has at
    // most 2 sides.
    for (int k = 4; k <= 8; ++k) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                for (const ChordConfiguration& cfg : chord_systems(ChordProblem{k, i, j})) {
                    CHECK(cfg.chords.size() == static_cast<std::size_t>(k - 1));
                    CHECK(cfg.region_sides.size() == static_cast<std::size_t>(k));
                    CHECK(std::accumulate(cfg.region_sides.begin(), cfg.region_sides.end(), 0) == 3 * k - 2);
                    std::vector<int> deg(static_cast<std::size_t>(k), 0);
                    for (const Chord& c : cfg.chords) {
                        CHECK(c.a < c.b);
                        ++deg[static_cast<std::size_t>(c.a)];
                        ++deg[static_cast<std::size_t>(c.b)];
                    }
                    for (int p = 0; p < k; ++p) CHECK(deg[static_cast<std::size_t>(p)] == ((p == i || p == j) ? 1 : 2));
                }
            }
    }
}

TEST_CASE("chord systems for k = 4 by hand")
{
    // Every system for this placement still leaves a region with at most 2 sides.
    const auto cfgs = chord_systems(ChordProblem{4, 0, 1});
    for (const auto& c : cfgs) CHECK(c.region_sides.front() <= 2);
    CHECK_THROWS_AS(chord_systems(ChordProblem{4, 1, 1}), Error);
}
