#include "polyref/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <utility>

#include "polyref/errors.hpp"
#include "polyref/seeds.hpp"

namespace polyref {

unsigned configured_threads()
{
    const char* env = std::getenv("POLYREF_THREADS");
    if (env == nullptr) return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || v < 1) return 1;
    return static_cast<unsigned>(std::min<long>(v, 256));
}

namespace {

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += threads) fn(i);
        });
    for (auto& th : pool) th.join();
}

// 2-connected simple plane graph given by its face walks.
struct PlaneGraph {
    std::uint32_t n = 0;
    std::vector<std::vector<VertexId>> faces;
};

struct GraphInfo {
    std::size_t edges = 0;
    std::vector<std::uint32_t> degree;
    std::set<std::pair<VertexId, VertexId>> adjacent;
};

GraphInfo info_of(const PlaneGraph& g)
{
    GraphInfo info;
    info.degree.assign(g.n, 0);
    for (const auto& w : g.faces) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            const VertexId a = w[i];
            const VertexId b = w[(i + 1) % w.size()];
            if (a < b) {
                info.adjacent.insert({a, b});
                ++info.degree[a];
                ++info.degree[b];
            }
        }
    }
    info.edges = info.adjacent.size();
    return info;
}

using GraphLevel = std::map<CanonicalCode, PlaneGraph>;

// All candidate black-face graphs with at most max_edges edges.
std::vector<PlaneGraph> face_graphs(std::size_t max_edges)
{
    const std::size_t vertex_cap = (max_edges + 2) / 2;
    std::vector<PlaneGraph> finals;
    GraphLevel level;
    for (std::uint32_t n = 3; n <= vertex_cap; ++n) {
        if (n + (n + 1) / 2 > max_edges) break;
        PlaneGraph c;
        c.n = n;
        std::vector<VertexId> ring(n);
        for (VertexId i = 0; i < n; ++i) ring[i] = i;
        c.faces.push_back(ring);
        std::reverse(ring.begin(), ring.end());
        c.faces.push_back(ring);
        level.emplace(canonical_code(SurfaceComplex::from_faces(c.faces)), std::move(c));
    }

    while (!level.empty()) {
        GraphLevel next;
        for (const auto& [code, g] : level) {
            const GraphInfo info = info_of(g);
            const std::size_t d2 = static_cast<std::size_t>(std::count(info.degree.begin(), info.degree.end(), 2u));
            if (d2 == 0 && g.n <= g.faces.size() && info.edges >= 6) finals.push_back(g);

            for (std::size_t fi = 0; fi < g.faces.size(); ++fi) {
                const auto& w = g.faces[fi];
                const std::size_t m = w.size();
                for (std::size_t a = 0; a < m; ++a) {
                    for (std::size_t b = a + 1; b < m; ++b) {
                        const VertexId u = w[a];
                        const VertexId v = w[b];
                        const std::size_t freed = (info.degree[u] == 2) + (info.degree[v] == 2);
                        for (std::uint32_t k = 0;; ++k) {
                            const std::size_t e = info.edges + k + 1;
                            const std::size_t low = d2 + k - freed;
                            if (e + (low + 1) / 2 > max_edges || g.n + k > vertex_cap) break;
                            if (k == 0 && info.adjacent.count({std::min(u, v), std::max(u, v)})) continue;

                            PlaneGraph child;
                            child.n = g.n + k;
                            std::vector<VertexId> path;  // u -> v interior
                            for (std::uint32_t i = 0; i < k; ++i) path.push_back(g.n + i);
                            std::vector<VertexId> left(w.begin() + static_cast<long>(a), w.begin() + static_cast<long>(b) + 1);
                            left.insert(left.end(), path.rbegin(), path.rend());
                            std::vector<VertexId> right(w.begin() + static_cast<long>(b), w.end());
                            right.insert(right.end(), w.begin(), w.begin() + static_cast<long>(a) + 1);
                            right.insert(right.end(), path.begin(), path.end());
                            child.faces = g.faces;
                            child.faces[fi] = std::move(left);
                            child.faces.push_back(std::move(right));
                            CanonicalCode cc = canonical_code(SurfaceComplex::from_faces(child.faces));
                            next.try_emplace(std::move(cc), std::move(child));
                        }
                    }
                }
            }
        }
        level = std::move(next);
    }
    return finals;
}

}  // namespace

Census enumerate_polyhedra(int max_vertices)
{
    if (max_vertices > 14 || max_vertices < 0)
        throw Error(ErrorCode::OutOfRange, "census supports 0 <= maxV <= 14, got " + std::to_string(max_vertices));
    Census census;
    census.max_vertices = static_cast<std::size_t>(max_vertices);
    if (max_vertices < 6) return census;

    const std::vector<PlaneGraph> graphs = face_graphs(static_cast<std::size_t>(max_vertices));
    census.plane_graphs = graphs.size();
    const unsigned threads = configured_threads();

    std::vector<SurfaceComplex> media(graphs.size());
    std::vector<CanonicalCode> codes(graphs.size());
    parallel_for(graphs.size(), threads, [&](std::size_t i) {
        media[i] = medial(SurfaceComplex::from_faces(graphs[i].faces));
        codes[i] = canonical_code(media[i]);
    });

    std::map<CanonicalCode, std::size_t> unique;
    for (std::size_t i = 0; i < graphs.size(); ++i) unique.try_emplace(codes[i], i);
    census.pre_filter = unique.size();

    std::vector<std::size_t> order;
    for (const auto& kv : unique) order.push_back(kv.second);
    std::vector<AndreevReport> reports(order.size());
    parallel_for(order.size(), threads, [&](std::size_t i) { reports[i] = check_andreev(media[order[i]]); });

    for (std::size_t i = 0; i < order.size(); ++i) {
        const SurfaceComplex& c = media[order[i]];
        const ColoredPolyhedron p = checkerboard(c);
        const ColorMaxima m = color_maxima(p);
        CensusEntry entry;
        entry.code = codes[order[i]];
        entry.vertices = c.num_vertices();
        entry.black_max = m.black;
        entry.white_max = m.white;
        entry.report = std::move(reports[i]);
        entry.faces = c.face_walks();
        (entry.report.passes() ? census.entries : census.rejected).push_back(std::move(entry));
    }
    auto by_size = [](const CensusEntry& x, const CensusEntry& y) {
        if (x.vertices != y.vertices) return x.vertices < y.vertices;
        return x.code < y.code;
    };
    std::sort(census.entries.begin(), census.entries.end(), by_size);
    std::sort(census.rejected.begin(), census.rejected.end(), by_size);
    return census;
}

ClaimReport verify_claim_v1(const Census& census)
{
    ClaimReport rep;
    bool first = true;
    for (const CensusEntry& e : census.entries) {
        const std::int64_t s = e.slack();
        if (s < 0)
            throw Error(ErrorCode::ClaimViolated, "V=" + std::to_string(e.vertices) + " B=" +
                                                      std::to_string(e.black_max) + " W=" +
                                                      std::to_string(e.white_max) + " code " + e.code.to_string());
        if (s == 0) rep.tight.push_back(e.code);
        if (first || s < rep.min_slack) rep.min_slack = s;
        first = false;
        ++rep.checked;
    }
    return rep;
}

ClaimReport verify_claim_v1(int max_vertices) { return verify_claim_v1(enumerate_polyhedra(max_vertices)); }

// ---------------------------------------------------------------- chords

namespace {

bool crosses(const Chord& x, const Chord& y)
{
    return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

// Side counts of the inner regions cut out by the chords.
std::vector<int> regions(int k, const std::vector<Chord>& chords)
{
    struct Half {
        int from;
        int to;
        double key;  // angular position around `from`
    };
    std::vector<Half> half;
    auto key = [k](int p, int q, bool arc) {
        if (arc) return ((q - p + k) % k == 1) ? 0.5 : k - 0.5;
        return static_cast<double>((q - p + k) % k);
    };
    auto add_edge = [&](int p, int q, bool arc) {
        half.push_back({p, q, key(p, q, arc)});
        half.push_back({q, p, key(q, p, arc)});
    };
    for (int p = 0; p < k; ++p) add_edge(p, (p + 1) % k, true);
    for (const Chord& c : chords) add_edge(c.a, c.b, false);

    // Counterclockwise rotation at every point.
    std::vector<std::vector<std::size_t>> rot(static_cast<std::size_t>(k));
    for (std::size_t h = 0; h < half.size(); ++h) rot[static_cast<std::size_t>(half[h].from)].push_back(h);
    std::vector<std::size_t> pos(half.size());
    for (auto& r : rot) {
        std::sort(r.begin(), r.end(), [&](std::size_t x, std::size_t y) { return half[x].key < half[y].key; });
        for (std::size_t i = 0; i < r.size(); ++i) pos[r[i]] = i;
    }
    // Face on the left: leave the target through the half-edge just
    // clockwise of the reversed one.
    auto next = [&](std::size_t h) {
        const std::size_t t = h ^ 1u;
        const auto& r = rot[static_cast<std::size_t>(half[t].from)];
        return r[(pos[t] + r.size() - 1) % r.size()];
    };

    std::vector<std::uint8_t> seen(half.size(), 0);
    std::vector<int> out;
    // The outer region runs clockwise along the boundary, through 1 -> 0.
    const std::size_t outer_start = 1;  // half-edge 1 is the arc 1 -> 0
    for (std::size_t s = 0; s < half.size(); ++s) {
        if (seen[s]) continue;
        int sides = 0;
        bool outer = false;
        std::size_t h = s;
        do {
            seen[h] = 1;
            if (h == outer_start) outer = true;
            ++sides;
            h = next(h);
        } while (h != s);
        if (!outer) out.push_back(sides);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void extend(int k, std::vector<int>& need, std::vector<Chord>& chords, std::set<std::vector<Chord>>& found)
{
    int p = 0;
    while (p < k && need[static_cast<std::size_t>(p)] == 0) ++p;
    if (p == k) {
        std::vector<Chord> sorted = chords;
        std::sort(sorted.begin(), sorted.end());
        found.insert(std::move(sorted));
        return;
    }
    for (int q = p + 1; q < k; ++q) {
        if (need[static_cast<std::size_t>(q)] == 0) continue;
        const Chord c{p, q};
        if (std::find(chords.begin(), chords.end(), c) != chords.end()) continue;
        if (std::any_of(chords.begin(), chords.end(), [&](const Chord& o) { return crosses(c, o); })) continue;
        --need[static_cast<std::size_t>(p)];
        --need[static_cast<std::size_t>(q)];
        chords.push_back(c);
        extend(k, need, chords, found);
        chords.pop_back();
        ++need[static_cast<std::size_t>(p)];
        ++need[static_cast<std::size_t>(q)];
    }
}

}  // namespace

std::vector<ChordConfiguration> chord_systems(const ChordProblem& problem)
{
    const int k = problem.k;
    if (k < 4) throw Error(ErrorCode::OutOfPrecondition, "disk search needs k >= 4, got " + std::to_string(k));
    if (problem.low1 == problem.low2 || problem.low1 < 0 || problem.low2 < 0 || problem.low1 >= k ||
        problem.low2 >= k)
        throw Error(ErrorCode::OutOfPrecondition, "degree-1 positions must be two distinct points of 0..k-1");
    std::vector<int> need(static_cast<std::size_t>(k), 2);
    need[static_cast<std::size_t>(problem.low1)] = 1;
    need[static_cast<std::size_t>(problem.low2)] = 1;
    std::vector<Chord> chords;
    std::set<std::vector<Chord>> found;
    extend(k, need, chords, found);

    std::vector<ChordConfiguration> out;
    for (const auto& cs : found) out.push_back(ChordConfiguration{problem, cs, regions(k, cs)});
    return out;
}

DiskSearchReport disk_subdivision_search(int k)
{
    if (k < 4) throw Error(ErrorCode::OutOfPrecondition, "disk search needs k >= 4, got " + std::to_string(k));
    DiskSearchReport rep;
    rep.k = k;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            ++rep.placements;
            for (ChordConfiguration& cfg : chord_systems(ChordProblem{k, i, j})) {
                ++rep.configurations;
                const int fewest = cfg.region_sides.empty() ? 0 : cfg.region_sides.front();
                rep.best_min_sides = std::max(rep.best_min_sides, fewest);
                if (fewest >= 3) rep.feasible.push_back(std::move(cfg));
            }
        }
    }
    return rep;
}

}  // namespace polyref
