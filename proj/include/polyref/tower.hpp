#pragma once

#include <cstddef>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polyref/andreev.hpp"
#include "polyref/reflect.hpp"

namespace polyref {

/// Largest face of the required color; ties go to the smallest id.
struct MaxFace {};

/// Explicit face ids, one per step.
struct Scripted {
    std::vector<FaceId> faces;
};

/// Provenance-exhausting scheduler: prefer faces holding a round-start face
/// as a subface, then largest size, then smallest id; fall back to MaxFace.
struct Cofinal {};

/// Uniformly random face of the required color (deterministic in the seed).
struct RandomAlternating {
    std::uint64_t seed = 0;
};

using Strategy = std::variant<MaxFace, Scripted, Cofinal, RandomAlternating>;

std::string describe(const Strategy& s);

/// Counts of P_j.
struct Level {
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;
    std::uint64_t faces = 0;
    std::uint32_t black_max = 0;
    std::uint32_t white_max = 0;

    bool operator==(const Level&) const = default;
};

/// One co-final round: steps [first_step, last_step] (1-based step indices).
struct Round {
    std::size_t first_step = 0;
    std::size_t last_step = 0;
    std::size_t base_faces = 0;  // faces of the round-start polyhedron
    bool complete = false;
    std::size_t residual = 0;  // provenance ids left when the run stopped

    bool operator==(const Round&) const = default;
};

/// levels[j-1] describes P_j; steps[j-1] is the reflection P_j -> P_{j+1}.
struct TowerTrace {
    std::optional<ColoredPolyhedron> seed;  // not persisted
    Color first_color = Color::black;
    std::vector<Level> levels;
    std::vector<StepRecord> steps;
    std::vector<Round> rounds;  // only filled by the co-final scheduler
    bool truncated = false;     // stopped early by the vertex budget

    std::size_t length() const { return levels.size(); }
    const Level& level(std::size_t j) const { return levels.at(j - 1); }
    /// Index of P_j over P_1: 2^{j-1}.
    static std::uint64_t degree(std::size_t j) { return std::uint64_t{1} << (j - 1); }

    /// Field-for-field equality of the persisted data (seed excluded).
    bool same_data(const TowerTrace& other) const;
};

struct TowerOptions {
    Color first_color = Color::black;
    /// run_tower throws ResourceLimit and cofinal_rounds stops once a step
    /// would exceed this many vertices.
    std::uint64_t max_vertices = std::uint64_t{1} << 24;
};

/// Run J-1 alternating reflections from a certified seed, giving P_1..P_J.
/// Throws NotAndreev, ScriptExhausted, ScriptWrongColor, UnknownFace,
/// ResourceLimit.
TowerTrace run_tower(const ColoredPolyhedron& seed, const Strategy& strategy, std::size_t J,
                     const TowerOptions& options = {});

/// Run the co-final scheduler until `rounds` rounds completed or the vertex
/// budget stops it (trace.truncated, last round incomplete).
TowerTrace cofinal_rounds(const ColoredPolyhedron& seed, std::size_t rounds, const TowerOptions& options = {});

enum class Relation { eq, le, ge };

struct BoundCheck {
    std::string name;
    std::size_t index = 0;  // the j of the quantity on the left
    std::int64_t lhs = 0;
    Relation relation = Relation::le;
    std::int64_t rhs = 0;
    bool pass = false;
};

struct BoundsReport {
    std::vector<BoundCheck> checks;

    bool all_pass() const;
    std::size_t failures() const;
};

/// Evaluate every growth bound at every index where it applies, with exact
/// integers. For a white-first trace the black and white roles swap.
/// Throws AlternationMismatch when step colors do not alternate.
BoundsReport verify_bounds(const TowerTrace& trace);

/// Right side of the V_j lower bound valid for j >= 6:
/// 2^{j-1} V_1 - 2^{j-1} (B_1 + W_1) + 2^{j-1} + 2^{j-2}.
std::int64_t vj_lower_bound(std::size_t j, std::int64_t v1, std::int64_t b1, std::int64_t w1);

/// Exact rational, kept in lowest terms with a positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t n, std::int64_t d);
    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
    std::string to_string() const;
};

struct GradientCheck {
    std::size_t j = 0;
    Rational value;
    Rational bound;
    bool pass = false;
};

struct RankGradientReport {
    std::vector<Rational> r;  // r[j-1] = (V_j - 1) / 2^{j-1}
    std::optional<Rational> running_min;  // min over 6 <= j <= J
    std::int64_t seed_constant = 0;       // C = V_1 - (B_1 + W_1)
    std::vector<GradientCheck> half_bound;      // r_j >= 1/2 - 2^{1-j}
    std::vector<GradientCheck> constant_bound;  // r_j >= C + 3/2 - 2^{1-j}

    bool all_pass() const;
};

RankGradientReport rank_gradient_report(const TowerTrace& trace);

}  // namespace polyref
