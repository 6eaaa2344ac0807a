#include <doctest.h>

#include <set>

#include "polyref/andreev.hpp"
#include "polyref/errors.hpp"
#include "polyref/seeds.hpp"

using namespace polyref;

TEST_CASE("octahedron seed")
{
    const ColoredPolyhedron p = seed_octahedron();
    CHECK(p.complex().num_vertices() == 6);
    CHECK(p.complex().num_edges() == 12);
    CHECK(p.complex().num_faces() == 8);
    const ColorMaxima m = color_maxima(p);
    CHECK(m.black == 3);
    CHECK(m.white == 3);
    CHECK(check_andreev(p.complex()).passes());
    CHECK(p.certificate().passes());
}

TEST_CASE("antiprism seeds")
{
    CHECK(canonical_code(seed_antiprism(3).complex()) == canonical_code(seed_octahedron().complex()));
    const ColoredPolyhedron a4 = seed_antiprism(4);
    CHECK(a4.complex().num_vertices() == 8);
    CHECK(color_maxima(a4).black == 4);
    CHECK(color_maxima(a4).white == 4);
    CHECK(a4.certificate().passes());
    for (int n = 3; n <= 12; ++n) {
        const ColoredPolyhedron a = seed_antiprism(n);
        const ColorMaxima m = color_maxima(a);
        const auto V = static_cast<std::int64_t>(a.complex().num_vertices());
        CHECK(V == 2 * n);
        CHECK(V - static_cast<std::int64_t>(m.black + m.white) == (n == 3 ? 0 : 0));
        CHECK(a.certificate().passes());
    }
    try {
        seed_antiprism(2);
        FAIL("expected InvalidN");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidN);
    }
    CHECK_THROWS_AS(prism_complex(2), Error);
}

TEST_CASE("medial constructions")
{
    CHECK(canonical_code(medial(tetrahedron_complex())) == canonical_code(seed_octahedron().complex()));

    const SurfaceComplex cubo = medial(cube_complex());
    const ComplexStats s = stats(cubo);
    CHECK(s.vertices == 12);
    CHECK(s.face_size_counts == std::map<std::uint32_t, std::size_t>{{3, 8}, {4, 6}});

    const ColoredPolyhedron ico = checkerboard(medial(icosahedron_complex()));
    CHECK(ico.complex().num_vertices() == 30);
    const ColorMaxima m = color_maxima(ico);
    CHECK(std::set<std::uint32_t>{m.black, m.white} == std::set<std::uint32_t>{3, 5});
    CHECK(30 - static_cast<int>(m.black + m.white) == 22);
    CHECK(ico.certificate().passes());

    // A vertex of degree 2 would make a 2-sided face.
    const std::vector<std::vector<VertexId>> theta{{0, 1, 2, 3}, {0, 3, 2, 1}};
    try {
        medial(SurfaceComplex::from_faces(theta));
        FAIL("expected DegreeTooLow");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegreeTooLow);
    }
}

TEST_CASE("medial counts and coloring classes")
{
    for (const SurfaceComplex& g : {tetrahedron_complex(), cube_complex(), icosahedron_complex(), prism_complex(5),
                                    prism_complex(9), seed_antiprism(5).complex()}) {
        const SurfaceComplex m = medial(g);
        CHECK(m.num_vertices() == g.num_edges());
        CHECK(m.num_edges() == 2 * g.num_edges());
        CHECK(m.num_faces() == g.num_faces() + g.num_vertices());
        for (VertexId v = 0; v < m.num_vertices(); ++v) CHECK(m.degree(v) == 4);
        const ColoredPolyhedron p = checkerboard(m);
        // Face-class and vertex-class faces take opposite colors.
        for (FaceId f = 0; f < g.num_faces(); ++f) {
            CHECK(p.color(f) == p.color(0));
            CHECK(m.face_size(f) == g.face_size(f));
        }
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            const FaceId f = static_cast<FaceId>(g.num_faces() + v);
            CHECK(p.color(f) != p.color(0));
            CHECK(m.face_size(f) == g.degree(v));
        }
    }
}

TEST_CASE("prism medials give unbounded seed constants")
{
    std::int64_t last = -1;
    for (int n = 3; n <= 10; ++n) {
        const ColoredPolyhedron p = checkerboard(medial(prism_complex(n)));
        const ColorMaxima m = color_maxima(p);
        const std::int64_t C = static_cast<std::int64_t>(p.complex().num_vertices()) - (m.black + m.white);
        CHECK(C > last);
        last = C;
        MESSAGE("prism " << n << ": V=" << p.complex().num_vertices() << " C=" << C
                         << " passes=" << p.certificate().passes());
    }
}
