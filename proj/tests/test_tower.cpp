#include <doctest.h>

#include <functional>
#include <set>
#include <string>
#include <tuple>

#include "polyref/errors.hpp"
#include "polyref/seeds.hpp"
#include "polyref/tower.hpp"

using namespace polyref;

namespace {

std::vector<ColoredPolyhedron> seeds()
{
    std::vector<ColoredPolyhedron> out{seed_octahedron()};
    for (int n = 3; n <= 6; ++n) out.push_back(seed_antiprism(n));
    out.push_back(checkerboard(medial(cube_complex())));
    return out;
}

ErrorCode code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::ParseError;
}

// Worst case of the step recursion: every reflected face as large as allowed
// and every other-color maximum doubled. Independent of the closed forms.
struct Worst {
    std::vector<std::int64_t> V, B, W;
};

Worst worst_case(std::int64_t v1, std::int64_t b1, std::int64_t w1, std::size_t J)
{
    Worst w{{v1}, {b1}, {w1}};
    for (std::size_t j = 1; j < J; ++j) {
        const bool black = j % 2 == 1;
        const std::int64_t S = black ? w.B.back() : w.W.back();
        w.V.push_back(2 * w.V.back() - S);
        if (black) {
            w.B.push_back(w.B.back());
            w.W.push_back(2 * w.W.back() - 2);
        } else {
            w.W.push_back(w.W.back());
            w.B.push_back(2 * w.B.back() - 2);
        }
    }
    return w;
}

}  // namespace

TEST_CASE("octahedron MaxFace tower")
{
    const TowerTrace t = run_tower(seed_octahedron(), MaxFace{}, 4);
    REQUIRE(t.length() == 4);
    std::vector<std::uint64_t> v;
    for (const Level& l : t.levels) v.push_back(l.vertices);
    CHECK(v == std::vector<std::uint64_t>{6, 9, 14, 24});
    CHECK(t.steps[0].color == Color::black);
    CHECK(t.steps[1].color == Color::white);
    CHECK(t.steps[2].color == Color::black);
    for (std::size_t j = 1; j < 4; ++j)
        CHECK(t.level(j + 1).vertices == 2 * t.level(j).vertices - t.steps[j - 1].face_size);
    CHECK(TowerTrace::degree(4) == 8);
}

TEST_CASE("length one is just the seed")
{
    const TowerTrace t = run_tower(seed_octahedron(), MaxFace{}, 1);
    CHECK(t.length() == 1);
    CHECK(t.steps.empty());
    CHECK(t.level(1).vertices == 6);
    CHECK(t.seed.has_value());
    CHECK(code_of([] { run_tower(seed_octahedron(), MaxFace{}, 0); }) == ErrorCode::OutOfRange);
}

TEST_CASE("scripted strategy")
{
    const ColoredPolyhedron oct = seed_octahedron();
    FaceId white = 0;
    while (oct.color(white) != Color::white) ++white;
    CHECK(code_of([&] { run_tower(oct, Scripted{{white}}, 2); }) == ErrorCode::ScriptWrongColor);
    CHECK(code_of([&] { run_tower(oct, Scripted{{0}}, 3); }) == ErrorCode::ScriptExhausted);
    CHECK(code_of([&] { run_tower(oct, Scripted{{99}}, 2); }) == ErrorCode::UnknownFace);

    // Replaying MaxFace choices as a script gives the same trace.
    const TowerTrace m = run_tower(oct, MaxFace{}, 6);
    Scripted s;
    for (const StepRecord& r : m.steps) s.faces.push_back(r.face);
    CHECK(run_tower(oct, s, 6).same_data(m));
}

TEST_CASE("white-first towers swap the roles")
{
    TowerOptions opt;
    opt.first_color = Color::white;
    const TowerTrace t = run_tower(seed_antiprism(4), MaxFace{}, 10, opt);
    CHECK(t.steps[0].color == Color::white);
    CHECK(t.steps[1].color == Color::black);
    CHECK(verify_bounds(t).all_pass());
}

TEST_CASE("towers are deterministic")
{
    for (const Strategy& s : {Strategy{MaxFace{}}, Strategy{Cofinal{}}, Strategy{RandomAlternating{5}}}) {
        const TowerTrace a = run_tower(seed_antiprism(5), s, 9);
        const TowerTrace b = run_tower(seed_antiprism(5), s, 9);
        CHECK(a.same_data(b));
    }
    CHECK_FALSE(run_tower(seed_antiprism(5), RandomAlternating{1}, 9)
                    .same_data(run_tower(seed_antiprism(5), RandomAlternating{2}, 9)));
}

TEST_CASE("resource limit")
{
    TowerOptions opt;
    opt.max_vertices = 100;
    CHECK(code_of([&] { run_tower(seed_octahedron(), MaxFace{}, 10, opt); }) == ErrorCode::ResourceLimit);
}

TEST_CASE("seed must be certified")
{
    const std::vector<std::vector<VertexId>> glued{{0, 1, 2}, {0, 2, 3}, {1, 3, 2}, {1, 0, 4},
                                                   {0, 5, 4}, {1, 4, 5}, {0, 3, 1, 5}};
    const ColoredPolyhedron bad = checkerboard(medial(SurfaceComplex::from_faces(glued)));
    CHECK(code_of([&] { run_tower(bad, MaxFace{}, 3); }) == ErrorCode::NotAndreev);
}

TEST_CASE("V_j lower bound threshold for the octahedron")
{
    CHECK(vj_lower_bound(6, 6, 3, 3) == 48);
    const TowerTrace t = run_tower(seed_octahedron(), MaxFace{}, 6);
    CHECK(t.level(6).vertices >= 48);
}

TEST_CASE("closed forms match the worst-case recursion")
{
    // Feed the exact worst case through the verifier: every closed form must
    // hold, and the color bounds must be tight.
    for (auto [v1, b1, w1] : {std::tuple{6, 3, 3}, std::tuple{8, 4, 4}, std::tuple{30, 5, 3}, std::tuple{30, 3, 5}}) {
        const std::size_t J = 21;
        const Worst w = worst_case(v1, b1, w1, J);
        TowerTrace t;
        for (std::size_t j = 1; j <= J; ++j) {
            Level l;
            l.vertices = static_cast<std::uint64_t>(w.V[j - 1]);
            l.edges = 2 * l.vertices;
            l.faces = l.vertices + 2;
            l.black_max = static_cast<std::uint32_t>(w.B[j - 1]);
            l.white_max = static_cast<std::uint32_t>(w.W[j - 1]);
            t.levels.push_back(l);
        }
        for (std::size_t j = 1; j < J; ++j) {
            StepRecord s;
            s.step = j;
            s.color = j % 2 == 1 ? Color::black : Color::white;
            s.face_size = static_cast<std::uint32_t>(j % 2 == 1 ? w.B[j - 1] : w.W[j - 1]);
            t.steps.push_back(s);
        }
        const BoundsReport rep = verify_bounds(t);
        for (const BoundCheck& c : rep.checks) {
            CHECK_MESSAGE(c.pass, c.name << " j=" << c.index << " " << c.lhs << " vs " << c.rhs);
            if (c.name == "W_exp_bound" || c.name == "B_exp_bound") CHECK(c.lhs == c.rhs);
            if (c.name == "V_even_closed_form" || c.name == "V_odd_closed_form") CHECK(c.lhs == c.rhs);
        }
    }
}

TEST_CASE("verify_bounds on real towers")
{
    const TowerTrace t = run_tower(seed_octahedron(), MaxFace{}, 20);
    const BoundsReport rep = verify_bounds(t);
    CHECK(rep.all_pass());
    CHECK(rep.failures() == 0);
    std::set<std::string> names;
    for (const BoundCheck& c : rep.checks) names.insert(c.name);
    for (const char* n : {"claim_v1", "vertex_doubling", "vertex_lower_step", "reflected_color_max", "other_color_max",
                          "W_exp_bound", "B_exp_bound", "V_even_closed_form", "V_odd_closed_form",
                          "V_j_lower_bound", "index_doubling"})
        CHECK(names.count(n) == 1);
}

TEST_CASE("fault injection is reported with both sides")
{
    TowerTrace t = run_tower(seed_octahedron(), MaxFace{}, 8);
    t.levels[6].vertices -= 60;  // V_7
    const BoundsReport rep = verify_bounds(t);
    bool found = false;
    for (const BoundCheck& c : rep.checks) {
        if (c.name == "V_j_lower_bound" && c.index == 7) {
            CHECK_FALSE(c.pass);
            CHECK(c.lhs < c.rhs);
            found = true;
        }
    }
    CHECK(found);
    CHECK_FALSE(rep.all_pass());

    TowerTrace swapped = run_tower(seed_octahedron(), MaxFace{}, 5);
    swapped.steps[1].color = Color::black;
    CHECK(code_of([&] { verify_bounds(swapped); }) == ErrorCode::AlternationMismatch);
}

TEST_CASE("bounds hold for many random alternating strategies")
{
    for (const ColoredPolyhedron& seed : seeds()) {
        for (std::uint64_t s = 0; s < 100; ++s) {
            const TowerTrace t = run_tower(seed, RandomAlternating{s}, 10);
            const BoundsReport rep = verify_bounds(t);
            CHECK(rep.all_pass());
            CHECK(rank_gradient_report(t).all_pass());
            for (std::size_t j = 1; j <= t.length(); ++j)
                CHECK(t.level(j).vertices <= TowerTrace::degree(j) * t.level(1).vertices);
        }
    }
}

TEST_CASE("rationals")
{
    CHECK(Rational::of(10, 4) == Rational{5, 2});
    CHECK(Rational::of(3, -6) == Rational{-1, 2});
    CHECK(Rational::of(0, 7) == Rational{0, 1});
    CHECK(Rational{1, 3} < Rational{1, 2});
    CHECK(Rational{(std::int64_t{1} << 40) + 1, std::int64_t{1} << 41} > Rational{1, 2});
    CHECK(Rational{7, 2}.to_string() == "7/2");
    CHECK(code_of([] { Rational::of(1, 0); }) == ErrorCode::OutOfRange);
}

TEST_CASE("rank gradient of the octahedron")
{
    const TowerTrace t = run_tower(seed_octahedron(), MaxFace{}, 20);
    const RankGradientReport rep = rank_gradient_report(t);
    CHECK(rep.r[0] == Rational{5, 1});
    CHECK(rep.seed_constant == 0);
    REQUIRE(rep.half_bound.size() == 15);
    for (const GradientCheck& g : rep.half_bound) {
        CHECK(g.pass);
        CHECK(g.bound == Rational::of((std::int64_t{1} << (g.j - 2)) - 1, std::int64_t{1} << (g.j - 1)));
    }
    CHECK(rep.all_pass());
    REQUIRE(rep.running_min.has_value());
    CHECK(*rep.running_min >= Rational{1, 2});
}

TEST_CASE("medial icosahedron seed has a large rank gradient")
{
    const ColoredPolyhedron seed = checkerboard(medial(icosahedron_complex()));
    REQUIRE(seed.certificate().passes());
    const TowerTrace t = run_tower(seed, MaxFace{}, 20);
    const RankGradientReport rep = rank_gradient_report(t);
    CHECK(rep.seed_constant == 22);
    CHECK(rep.r[19] > Rational{22, 1});
    CHECK(rep.all_pass());
    CHECK(verify_bounds(t).all_pass());
}

TEST_CASE("co-final scheduler, first round")
{
    for (const ColoredPolyhedron& seed : {seed_octahedron(), seed_antiprism(4)}) {
        const TowerTrace t = cofinal_rounds(seed, 1);
        REQUIRE(t.rounds.size() == 1);
        const Round& r = t.rounds[0];
        CHECK(r.complete);
        CHECK(r.residual == 0);
        CHECK(r.first_step == 1);
        CHECK(r.last_step <= 2 * seed.complex().num_faces());
        CHECK(r.base_faces == seed.complex().num_faces());
        CHECK(t.steps.size() == r.last_step);
        CHECK_FALSE(t.truncated);
        for (std::size_t j = 1; j < t.length(); ++j) CHECK(t.level(j + 1).vertices > t.level(j).vertices);
        CHECK(verify_bounds(t).all_pass());
    }
    // Every base face is consumed by reflecting its holder, one per step.
    CHECK(cofinal_rounds(seed_octahedron(), 1).rounds[0].last_step == 8);
}

TEST_CASE("co-final rounds stop at the vertex budget")
{
    TowerOptions opt;
    opt.max_vertices = 200000;
    const TowerTrace t = cofinal_rounds(seed_octahedron(), 3, opt);
    CHECK(t.truncated);
    REQUIRE(t.rounds.size() == 2);
    CHECK(t.rounds[0].complete);
    CHECK_FALSE(t.rounds[1].complete);
    CHECK(t.rounds[1].first_step == t.rounds[0].last_step + 1);
    CHECK(t.rounds[1].base_faces == t.level(t.rounds[0].last_step + 1).faces);
    CHECK(t.rounds[1].residual > 0);
    // A round can only finish after one reflection per base face.
    CHECK(t.rounds[1].last_step - t.rounds[1].first_step + 1 < t.rounds[1].base_faces);
}

TEST_CASE("Cofinal strategy inside run_tower records rounds")
{
    const TowerTrace t = run_tower(seed_octahedron(), Cofinal{}, 12);
    REQUIRE_FALSE(t.rounds.empty());
    CHECK(t.rounds[0].complete);
    CHECK(t.rounds[0].last_step == 8);
}
