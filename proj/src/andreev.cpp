#include "polyref/andreev.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "polyref/errors.hpp"

namespace polyref {

std::string to_string(Color c) { return c == Color::black ? "black" : "white"; }

namespace {

struct EdgeEnds {
    VertexId a;
    VertexId b;
};

EdgeEnds ends(const SurfaceComplex& c, EdgeId e) { return {c.origin(2 * e), c.origin(2 * e + 1)}; }

bool disjoint(const SurfaceComplex& c, EdgeId e, EdgeId f)
{
    const EdgeEnds x = ends(c, e);
    const EdgeEnds y = ends(c, f);
    return x.a != y.a && x.a != y.b && x.b != y.a && x.b != y.b;
}

std::uint64_t pair_key(FaceId a, FaceId b)
{
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

bool share_vertex(const std::vector<VertexId>& x, const std::vector<VertexId>& y)
{
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() && j != y.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i;
        else ++j;
    }
    return false;
}

std::vector<FaceTriple> bad_triples(const SurfaceComplex& c)
{
    std::vector<std::vector<VertexId>> sorted_walks(c.num_faces());
    for (FaceId f = 0; f < c.num_faces(); ++f) {
        sorted_walks[f] = c.face_walk(f);
        std::sort(sorted_walks[f].begin(), sorted_walks[f].end());
    }
    std::vector<FaceTriple> out;
    for (FaceId mid = 0; mid < c.num_faces(); ++mid) {
        const auto hs = c.face_half_edges(mid);
        const std::size_t n = hs.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = i + 2; l < n; ++l) {
                if (i == 0 && l == n - 1) continue;  // consecutive around the cycle
                const FaceId fi = c.face(SurfaceComplex::twin(hs[i]));
                const FaceId fk = c.face(SurfaceComplex::twin(hs[l]));
                if (fi == fk) continue;
                if (share_vertex(sorted_walks[fi], sorted_walks[fk]))
                    out.push_back({std::min(fi, fk), mid, std::max(fi, fk)});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const FaceTriple& x, const FaceTriple& y) {
        return std::tie(x.first, x.middle, x.last) < std::tie(y.first, y.middle, y.last);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool circuit_less(const PrismaticCircuit& x, const PrismaticCircuit& y)
{
    return std::tie(x.faces, x.edges) < std::tie(y.faces, y.edges);
}

// Prismatic 4-circuits via length-2 dual paths bucketed by their far end.
std::vector<PrismaticCircuit> prismatic_four_circuits(const SurfaceComplex& c, const DualGraph& dual)
{
    struct TwoPath {
        FaceId via;
        EdgeId first;
        EdgeId second;
    };
    std::vector<std::vector<TwoPath>> bucket(c.num_faces());
    std::vector<FaceId> touched;
    std::vector<PrismaticCircuit> out;

    for (FaceId a = 0; a < c.num_faces(); ++a) {
        touched.clear();
        for (const auto& [b, e1] : dual.adjacency[a]) {
            if (b <= a) continue;
            for (const auto& [far, e2] : dual.adjacency[b]) {
                if (far <= a || far == b || !disjoint(c, e1, e2)) continue;
                if (bucket[far].empty()) touched.push_back(far);
                bucket[far].push_back({b, e1, e2});
            }
        }
        for (FaceId far : touched) {
            auto& paths = bucket[far];
            for (std::size_t i = 0; i < paths.size(); ++i) {
                for (std::size_t j = 0; j < paths.size(); ++j) {
                    const TwoPath& x = paths[i];
                    const TwoPath& y = paths[j];
                    if (x.via >= y.via) continue;
                    if (!disjoint(c, x.first, y.first) || !disjoint(c, x.first, y.second) ||
                        !disjoint(c, x.second, y.first) || !disjoint(c, x.second, y.second))
                        continue;
                    out.push_back({{a, x.via, far, y.via}, {x.first, x.second, y.second, y.first}});
                }
            }
            paths.clear();
        }
    }
    std::sort(out.begin(), out.end(), circuit_less);
    return out;
}

std::vector<std::pair<FaceId, FaceId>> improper_pairs(const SurfaceComplex& c)
{
    std::unordered_map<std::uint64_t, std::uint32_t> shared;
    shared.reserve(c.num_vertices() * 6);
    for (VertexId v = 0; v < c.num_vertices(); ++v) {
        std::vector<FaceId> around;
        for (HalfEdgeId h : c.vertex_star(v)) around.push_back(c.face(h));
        for (std::size_t i = 0; i < around.size(); ++i)
            for (std::size_t j = i + 1; j < around.size(); ++j) ++shared[pair_key(around[i], around[j])];
    }
    std::unordered_map<std::uint64_t, std::uint32_t> common_edges;
    for (EdgeId e = 0; e < c.num_edges(); ++e) ++common_edges[pair_key(c.face(2 * e), c.face(2 * e + 1))];

    std::vector<std::pair<FaceId, FaceId>> out;
    for (const auto& [key, count] : shared) {
        if (count <= 1) continue;
        auto it = common_edges.find(key);
        if (count == 2 && it != common_edges.end() && it->second == 1) continue;
        out.emplace_back(static_cast<FaceId>(key >> 32), static_cast<FaceId>(key & 0xffffffffu));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

AndreevReport check_andreev(const SurfaceComplex& c)
{
    AndreevReport r;
    r.face_count = c.num_faces();
    r.cond1_faces_ge_6 = c.num_faces() >= 6;

    for (VertexId v = 0; v < c.num_vertices(); ++v)
        if (c.degree(v) != 4) r.bad_valence.push_back(v);
    r.cond2_valence_4 = r.bad_valence.empty();

    r.bad_triples = bad_triples(c);
    r.cond3_triples = r.bad_triples.empty();

    r.prismatic_4circuits = prismatic_four_circuits(c, dual_graph(c));
    r.cond4_no_prismatic_4circuit = r.prismatic_4circuits.empty();

    r.improper_face_pairs = improper_pairs(c);
    r.polyhedral = r.improper_face_pairs.empty();
    return r;
}

std::vector<PrismaticCircuit> find_prismatic_circuits(const SurfaceComplex& c, int k)
{
    if (k < 3) throw Error(ErrorCode::InvalidK, "k = " + std::to_string(k) + " is below 3");
    const DualGraph dual = dual_graph(c);
    const auto len = static_cast<std::size_t>(k);
    std::vector<PrismaticCircuit> out;
    std::vector<std::uint8_t> used_vertex(c.num_vertices(), 0);
    std::vector<std::uint8_t> on_path(c.num_faces(), 0);
    std::vector<FaceId> faces;
    std::vector<EdgeId> edges;

    auto mark = [&](EdgeId e, std::uint8_t value) {
        const EdgeEnds x = ends(c, e);
        used_vertex[x.a] = value;
        used_vertex[x.b] = value;
    };
    auto free_edge = [&](EdgeId e) {
        const EdgeEnds x = ends(c, e);
        return !used_vertex[x.a] && !used_vertex[x.b];
    };

    auto extend = [&](auto&& self, FaceId start) -> void {
        const FaceId tail = faces.back();
        for (const auto& [nb, e] : dual.adjacency[tail]) {
            if (!free_edge(e)) continue;
            if (faces.size() == len) {
                if (nb == start && faces[1] < faces[len - 1]) {
                    PrismaticCircuit circuit{faces, edges};
                    circuit.edges.push_back(e);
                    out.push_back(std::move(circuit));
                }
                continue;
            }
            if (nb <= start || on_path[nb]) continue;
            faces.push_back(nb);
            edges.push_back(e);
            on_path[nb] = 1;
            mark(e, 1);
            self(self, start);
            mark(e, 0);
            on_path[nb] = 0;
            edges.pop_back();
            faces.pop_back();
        }
    };

    for (FaceId s = 0; s < c.num_faces(); ++s) {
        faces.assign(1, s);
        edges.clear();
        on_path[s] = 1;
        extend(extend, s);
        on_path[s] = 0;
    }
    std::sort(out.begin(), out.end(), circuit_less);
    return out;
}

ColoredPolyhedron::ColoredPolyhedron(SurfaceComplex complex, std::vector<Color> colors, AndreevReport certificate,
                                     CertificateSource source)
    : complex_(std::move(complex)), colors_(std::move(colors)), certificate_(std::move(certificate)), source_(source)
{
    if (colors_.size() != complex_.num_faces())
        throw Error(ErrorCode::NotBipartiteDual, "coloring size does not match face count");
    for (EdgeId e = 0; e < complex_.num_edges(); ++e) {
        if (colors_[complex_.face(2 * e)] == colors_[complex_.face(2 * e + 1)])
            throw Error(ErrorCode::NotBipartiteDual, "faces across edge " + std::to_string(e) + " share a color");
    }
}

ColoredPolyhedron checkerboard(SurfaceComplex c)
{
    for (VertexId v = 0; v < c.num_vertices(); ++v) {
        if (c.degree(v) % 2 != 0)
            throw Error(ErrorCode::NotBipartiteDual,
                        "vertex " + std::to_string(v) + " has odd degree " + std::to_string(c.degree(v)));
    }
    std::vector<Color> colors(c.num_faces(), Color::black);
    std::vector<std::uint8_t> seen(c.num_faces(), 0);
    std::vector<FaceId> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const FaceId f = queue[head];
        HalfEdgeId h = c.face_half_edge(f);
        do {
            const FaceId g = c.face(SurfaceComplex::twin(h));
            if (!seen[g]) {
                seen[g] = 1;
                colors[g] = opposite(colors[f]);
                queue.push_back(g);
            } else if (colors[g] == colors[f]) {
                throw Error(ErrorCode::NotBipartiteDual, "odd cycle in the dual graph");
            }
            h = c.next(h);
        } while (h != c.face_half_edge(f));
    }
    AndreevReport report = check_andreev(c);
    return ColoredPolyhedron(std::move(c), std::move(colors), std::move(report), CertificateSource::computed);
}

ColorMaxima color_maxima(const ColoredPolyhedron& p)
{
    ColorMaxima m;
    const SurfaceComplex& c = p.complex();
    for (FaceId f = 0; f < c.num_faces(); ++f) {
        std::uint32_t& slot = p.color(f) == Color::black ? m.black : m.white;
        slot = std::max(slot, c.face_size(f));
    }
    return m;
}

}  // namespace polyref
