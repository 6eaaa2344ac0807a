#include "polyref/tower.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "polyref/errors.hpp"

namespace polyref {

std::string describe(const Strategy& s)
{
    struct Visitor {
        std::string operator()(const MaxFace&) const { return "maxface"; }
        std::string operator()(const Scripted& x) const { return "script(" + std::to_string(x.faces.size()) + ")"; }
        std::string operator()(const Cofinal&) const { return "cofinal"; }
        std::string operator()(const RandomAlternating& x) const { return "random:" + std::to_string(x.seed); }
    };
    return std::visit(Visitor{}, s);
}

bool TowerTrace::same_data(const TowerTrace& other) const
{
    return first_color == other.first_color && levels == other.levels && steps == other.steps &&
           rounds == other.rounds && truncated == other.truncated;
}

namespace {

Level level_of(const ColoredPolyhedron& p)
{
    const SurfaceComplex& c = p.complex();
    const ColorMaxima m = color_maxima(p);
    return Level{c.num_vertices(), c.num_edges(), c.num_faces(), m.black, m.white};
}

Level level_of(const StepRecord& r) { return Level{r.vertices, r.edges, r.faces, r.black_max, r.white_max}; }

// Largest face of color col, smallest id on ties; `eligible` filters further.
template <class Pred>
FaceId largest_face(const ColoredPolyhedron& p, Color col, Pred eligible)
{
    const SurfaceComplex& c = p.complex();
    FaceId best = kNone;
    std::uint32_t best_size = 0;
    for (FaceId f = 0; f < c.num_faces(); ++f) {
        if (p.color(f) != col || !eligible(f)) continue;
        if (best == kNone || c.face_size(f) > best_size) {
            best = f;
            best_size = c.face_size(f);
        }
    }
    return best;
}

struct Driver {
    const Strategy& strategy;
    TowerOptions options;
    bool throw_on_budget;
    std::size_t max_steps;   // reflections to perform (upper limit)
    std::size_t max_rounds;  // 0: unlimited

    TowerTrace run(const ColoredPolyhedron& seed)
    {
        if (!seed.certificate().passes())
            throw Error(ErrorCode::NotAndreev, "tower seed fails the realizability conditions");

        TowerTrace trace;
        trace.seed = seed;
        trace.first_color = options.first_color;
        trace.levels.push_back(level_of(seed));

        const bool cofinal = std::holds_alternative<Cofinal>(strategy);
        std::mt19937_64 rng(std::holds_alternative<RandomAlternating>(strategy)
                                 ? std::get<RandomAlternating>(strategy).seed
                                 : 0);

        ColoredPolyhedron current = seed;
        ProvenanceMap prov = ProvenanceMap::identity(cofinal ? current.complex().num_faces() : 0);
        if (cofinal) trace.rounds.push_back(Round{1, 0, current.complex().num_faces(), false, prov.total()});

        std::vector<std::uint8_t> held;
        for (std::size_t step = 1; step <= max_steps; ++step) {
            const Color col = (step % 2 == 1) ? options.first_color : opposite(options.first_color);
            FaceId f = kNone;
            if (cofinal) {
                held.assign(current.complex().num_faces(), 0);
                for (FaceId b = 0; b < prov.num_bases(); ++b)
                    if (prov.holder(b) != kNone) held[prov.holder(b)] = 1;
                f = largest_face(current, col, [&](FaceId g) { return held[g] != 0; });
                if (f == kNone) f = largest_face(current, col, [](FaceId) { return true; });
            } else {
                f = select(current, col, step, rng);
            }
            if (f == kNone)
                throw Error(ErrorCode::NotAndreev, "no " + to_string(col) + " face at step " + std::to_string(step));

            const std::uint64_t V = current.complex().num_vertices();
            const std::uint64_t predicted = 2 * V - current.complex().face_size(f);
            if (predicted > options.max_vertices) {
                if (throw_on_budget)
                    throw Error(ErrorCode::ResourceLimit, "step " + std::to_string(step) + " would reach " +
                                                              std::to_string(predicted) + " vertices (budget " +
                                                              std::to_string(options.max_vertices) + ")");
                trace.truncated = true;
                break;
            }

            ReflectionResult res = reflect(current, prov, f, step);
            trace.steps.push_back(res.record);
            trace.levels.push_back(level_of(res.record));
            current = std::move(res.polyhedron);
            prov = std::move(res.provenance);

            if (cofinal) {
                Round& r = trace.rounds.back();
                r.last_step = step;
                r.residual = prov.total();
                if (r.residual == 0) {
                    r.complete = true;
                    if (max_rounds != 0 && trace.rounds.size() >= max_rounds) break;
                    prov = ProvenanceMap::identity(current.complex().num_faces());
                    trace.rounds.push_back(Round{step + 1, step, current.complex().num_faces(), false, prov.total()});
                }
            }
        }
        // A round opened after the last step with no steps of its own is dropped.
        if (cofinal && trace.rounds.size() > 1 && trace.rounds.back().last_step < trace.rounds.back().first_step)
            trace.rounds.pop_back();
        return trace;
    }

    FaceId select(const ColoredPolyhedron& p, Color col, std::size_t step, std::mt19937_64& rng) const
    {
        if (std::holds_alternative<MaxFace>(strategy))
            return largest_face(p, col, [](FaceId) { return true; });
        if (const auto* s = std::get_if<Scripted>(&strategy)) {
            if (step > s->faces.size())
                throw Error(ErrorCode::ScriptExhausted, "script has " + std::to_string(s->faces.size()) +
                                                            " faces, step " + std::to_string(step) + " needs more");
            const FaceId f = s->faces[step - 1];
            if (f >= p.complex().num_faces())
                throw Error(ErrorCode::UnknownFace, "script face " + std::to_string(f) + " at step " +
                                                        std::to_string(step) + " does not exist");
            if (p.color(f) != col)
                throw Error(ErrorCode::ScriptWrongColor, "step " + std::to_string(step) + " needs a " +
                                                             to_string(col) + " face, script gives " +
                                                             std::to_string(f) + " (" + to_string(p.color(f)) + ")");
            return f;
        }
        std::vector<FaceId> pool;
        for (FaceId f = 0; f < p.complex().num_faces(); ++f)
            if (p.color(f) == col) pool.push_back(f);
        if (pool.empty()) return kNone;
        return pool[rng() % pool.size()];
    }
};

}  // namespace

TowerTrace run_tower(const ColoredPolyhedron& seed, const Strategy& strategy, std::size_t J,
                     const TowerOptions& options)
{
    if (J < 1) throw Error(ErrorCode::OutOfRange, "tower length must be at least 1");
    Driver d{strategy, options, true, J - 1, 0};
    return d.run(seed);
}

TowerTrace cofinal_rounds(const ColoredPolyhedron& seed, std::size_t rounds, const TowerOptions& options)
{
    if (rounds < 1) throw Error(ErrorCode::OutOfRange, "need at least one round");
    const Strategy s = Cofinal{};
    Driver d{s, options, false, static_cast<std::size_t>(-1), rounds};
    return d.run(seed);
}

// ---------------------------------------------------------------- bounds

bool BoundsReport::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
}

std::size_t BoundsReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const BoundCheck& c) { return !c.pass; }));
}

namespace {

std::int64_t pow2(std::size_t k) { return std::int64_t{1} << k; }

// 2^a + ... + 2^b, zero when b < a.
std::int64_t geo(std::int64_t a, std::int64_t b)
{
    if (b < a) return 0;
    return pow2(static_cast<std::size_t>(b + 1)) - pow2(static_cast<std::size_t>(a));
}

void add(BoundsReport& rep, std::string name, std::size_t index, std::int64_t lhs, Relation rel, std::int64_t rhs)
{
    bool ok = false;
    switch (rel) {
    case Relation::eq: ok = lhs == rhs; break;
    case Relation::le: ok = lhs <= rhs; break;
    case Relation::ge: ok = lhs >= rhs; break;
    }
    rep.checks.push_back(BoundCheck{std::move(name), index, lhs, rel, rhs, ok});
}

}  // namespace

std::int64_t vj_lower_bound(std::size_t j, std::int64_t v1, std::int64_t b1, std::int64_t w1)
{
    return pow2(j - 1) * v1 - pow2(j - 1) * (b1 + w1) + pow2(j - 1) + pow2(j - 2);
}

BoundsReport verify_bounds(const TowerTrace& trace)
{
    const std::size_t J = trace.length();
    if (J == 0) throw Error(ErrorCode::OutOfRange, "empty trace");
    if (J > 60) throw Error(ErrorCode::OutOfRange, "trace too long for exact 64-bit bounds");
    if (trace.steps.size() + 1 != J)
        throw Error(ErrorCode::OutOfRange, "trace has " + std::to_string(J) + " levels but " +
                                               std::to_string(trace.steps.size()) + " steps");
    const Color first = trace.first_color;
    for (std::size_t j = 1; j < J; ++j) {
        const Color expected = (j % 2 == 1) ? first : opposite(first);
        if (trace.steps[j - 1].color != expected)
            throw Error(ErrorCode::AlternationMismatch, "step " + std::to_string(j) + " reflects a " +
                                                            to_string(trace.steps[j - 1].color) +
                                                            " face, expected " + to_string(expected));
    }

    // "Black" below is the color reflected first.
    auto V = [&](std::size_t j) { return static_cast<std::int64_t>(trace.level(j).vertices); };
    auto Bm = [&](std::size_t j) {
        const Level& l = trace.level(j);
        return static_cast<std::int64_t>(first == Color::black ? l.black_max : l.white_max);
    };
    auto Wm = [&](std::size_t j) {
        const Level& l = trace.level(j);
        return static_cast<std::int64_t>(first == Color::black ? l.white_max : l.black_max);
    };
    const std::int64_t v1 = V(1), b1 = Bm(1), w1 = Wm(1);

    BoundsReport rep;
    add(rep, "claim_v1", 1, v1, Relation::ge, b1 + w1 - 1);

    for (std::size_t j = 1; j < J; ++j) {
        const StepRecord& s = trace.steps[j - 1];
        const bool black_step = j % 2 == 1;
        const std::int64_t S = s.face_size;
        add(rep, "vertex_doubling", j + 1, V(j + 1), Relation::eq, 2 * V(j) - S);
        add(rep, "face_size_le_color_max", j, S, Relation::le, black_step ? Bm(j) : Wm(j));
        add(rep, "vertex_lower_step", j + 1, V(j + 1), Relation::ge, 2 * V(j) - (black_step ? Bm(j) : Wm(j)));
        if (black_step) {
            add(rep, "reflected_color_max", j + 1, Bm(j + 1), Relation::le, Bm(j));
            add(rep, "other_color_max", j + 1, Wm(j + 1), Relation::le, 2 * Wm(j) - 2);
        } else {
            add(rep, "reflected_color_max", j + 1, Wm(j + 1), Relation::le, Wm(j));
            add(rep, "other_color_max", j + 1, Bm(j + 1), Relation::le, 2 * Bm(j) - 2);
        }
        add(rep, "index_doubling", j + 1, V(j + 1), Relation::le, pow2(j) * v1);
    }

    // Exponential color bounds: W_{2j}, W_{2j+1} and B_{2j+1}, B_{2j+2}.
    for (std::size_t j = 1; 2 * j <= J; ++j) {
        const std::int64_t wr = pow2(j) * w1 - (pow2(j + 1) - 2);
        const std::int64_t br = pow2(j) * b1 - (pow2(j + 1) - 2);
        add(rep, "W_exp_bound", 2 * j, Wm(2 * j), Relation::le, wr);
        if (2 * j + 1 <= J) {
            add(rep, "W_exp_bound", 2 * j + 1, Wm(2 * j + 1), Relation::le, wr);
            add(rep, "B_exp_bound", 2 * j + 1, Bm(2 * j + 1), Relation::le, br);
        }
        if (2 * j + 2 <= J) add(rep, "B_exp_bound", 2 * j + 2, Bm(2 * j + 2), Relation::le, br);
    }

    // Closed-form vertex bounds for even and odd indices, j >= 3.
    for (std::int64_t j = 3; 2 * j <= static_cast<std::int64_t>(J); ++j) {
        const auto i = static_cast<std::size_t>(j);
        const std::int64_t even = pow2(2 * i - 1) * v1 - b1 * geo(j - 1, 2 * j - 2) - w1 * geo(j, 2 * j - 2) +
                                  geo(j + 2, 2 * j - 1) + pow2(i) + 2;
        add(rep, "V_even_closed_form", 2 * i, V(2 * i), Relation::ge, even);
        if (2 * i + 1 <= J) {
            const std::int64_t odd = pow2(2 * i) * v1 - b1 * geo(j, 2 * j - 1) - w1 * geo(j, 2 * j - 1) +
                                     geo(j + 2, 2 * j) + 2;
            add(rep, "V_odd_closed_form", 2 * i + 1, V(2 * i + 1), Relation::ge, odd);
        }
    }

    for (std::size_t j = 6; j <= J; ++j)
        add(rep, "V_j_lower_bound", j, V(j), Relation::ge, vj_lower_bound(j, v1, b1, w1));
    return rep;
}

// ---------------------------------------------------------------- rationals

Rational Rational::of(std::int64_t n, std::int64_t d)
{
    if (d == 0) throw Error(ErrorCode::OutOfRange, "zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    return Rational{n / (g == 0 ? 1 : g), d / (g == 0 ? 1 : g)};
}

__extension__ typedef __int128 wide;

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    const wide l = static_cast<wide>(a.num) * b.den;
    const wide r = static_cast<wide>(b.num) * a.den;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

bool RankGradientReport::all_pass() const
{
    auto ok = [](const GradientCheck& g) { return g.pass; };
    return std::all_of(half_bound.begin(), half_bound.end(), ok) &&
           std::all_of(constant_bound.begin(), constant_bound.end(), ok);
}

RankGradientReport rank_gradient_report(const TowerTrace& trace)
{
    const std::size_t J = trace.length();
    if (J == 0) throw Error(ErrorCode::OutOfRange, "empty trace");
    if (J > 60) throw Error(ErrorCode::OutOfRange, "trace too long for exact 64-bit rationals");
    RankGradientReport rep;
    const Level& first = trace.level(1);
    rep.seed_constant = static_cast<std::int64_t>(first.vertices) -
                        static_cast<std::int64_t>(first.black_max + first.white_max);
    for (std::size_t j = 1; j <= J; ++j) {
        const auto v = static_cast<std::int64_t>(trace.level(j).vertices);
        rep.r.push_back(Rational::of(v - 1, pow2(j - 1)));
    }
    for (std::size_t j = 6; j <= J; ++j) {
        const Rational& r = rep.r[j - 1];
        if (!rep.running_min || r < *rep.running_min) rep.running_min = r;
        const Rational half = Rational::of(pow2(j - 2) - 1, pow2(j - 1));
        const Rational with_c = Rational::of((2 * rep.seed_constant + 3) * pow2(j - 2) - 1, pow2(j - 1));
        rep.half_bound.push_back(GradientCheck{j, r, half, r >= half});
        rep.constant_bound.push_back(GradientCheck{j, r, with_c, r >= with_c});
    }
    return rep;
}

}  // namespace polyref
