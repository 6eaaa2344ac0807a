#include "polyref/complex.hpp"

#include <algorithm>
#include <unordered_map>

#include "polyref/errors.hpp"

namespace polyref {

namespace detail {

SurfaceComplex assemble(RawComplex&& raw)
{
    SurfaceComplex c;
    c.origin_ = std::move(raw.origin);
    c.next_ = std::move(raw.next);
    c.face_ = std::move(raw.face);
    c.face_edge_ = std::move(raw.face_edge);
    c.face_size_ = std::move(raw.face_size);
    c.vertex_edge_ = std::move(raw.vertex_edge);
    c.degree_ = std::move(raw.degree);
    c.prev_.assign(c.next_.size(), kNone);
    for (HalfEdgeId h = 0; h < c.next_.size(); ++h) c.prev_[c.next_[h]] = h;
    return c;
}

}  // namespace detail

namespace {

std::string walk_label(std::size_t index) { return "face #" + std::to_string(index); }

}  // namespace

SurfaceComplex SurfaceComplex::from_faces(std::span<const std::vector<VertexId>> walks)
{
    if (walks.empty()) throw Error(ErrorCode::NotSphere, "no faces");

    VertexId max_id = 0;
    for (std::size_t i = 0; i < walks.size(); ++i) {
        const auto& w = walks[i];
        if (w.size() < 3) throw Error(ErrorCode::DegenerateFace, walk_label(i) + " has fewer than 3 vertices");
        std::vector<VertexId> sorted(w);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(ErrorCode::DegenerateFace, walk_label(i) + " repeats a vertex");
        max_id = std::max(max_id, sorted.back());
    }
    const std::size_t n = static_cast<std::size_t>(max_id) + 1;

    detail::RawComplex raw;
    std::size_t total = 0;
    for (const auto& w : walks) total += w.size();
    if (total % 2 != 0) throw Error(ErrorCode::NonManifold, "odd number of face sides");
    raw.origin.assign(total, kNone);
    raw.next.assign(total, kNone);
    raw.face.assign(total, kNone);

    struct Slot {
        EdgeId edge;
        std::uint32_t uses;
    };
    std::unordered_map<std::uint64_t, Slot> edges;
    edges.reserve(total);
    EdgeId next_edge = 0;

    raw.face_edge.resize(walks.size());
    raw.face_size.resize(walks.size());
    for (std::size_t fi = 0; fi < walks.size(); ++fi) {
        const auto& w = walks[fi];
        std::vector<HalfEdgeId> sides(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            const VertexId u = w[i];
            const VertexId v = w[(i + 1) % w.size()];
            const std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
            auto [it, fresh] = edges.try_emplace(key, Slot{next_edge, 0});
            Slot& slot = it->second;
            if (fresh) {
                if (next_edge * 2u + 1u >= total)
                    throw Error(ErrorCode::NonManifold, "more distinct edges than face sides can pair");
                ++next_edge;
            }
            ++slot.uses;
            if (slot.uses > 2)
                throw Error(ErrorCode::NonManifold, "edge {" + std::to_string(u) + "," + std::to_string(v) + "} lies on more than two faces");
            HalfEdgeId h = slot.edge * 2u + (slot.uses - 1);
            if (slot.uses == 2 && raw.origin[h ^ 1u] == u)
                throw Error(ErrorCode::OrientationClash, "directed edge (" + std::to_string(u) + "," + std::to_string(v) + ") appears twice");
            raw.origin[h] = u;
            raw.face[h] = static_cast<FaceId>(fi);
            sides[i] = h;
        }
        for (std::size_t i = 0; i < sides.size(); ++i) raw.next[sides[i]] = sides[(i + 1) % sides.size()];
        raw.face_edge[fi] = sides[0];
        raw.face_size[fi] = static_cast<std::uint32_t>(w.size());
    }
    for (const auto& [key, slot] : edges) {
        if (slot.uses != 2)
            throw Error(ErrorCode::NonManifold,
                        "edge {" + std::to_string(key >> 32) + "," + std::to_string(key & 0xffffffffu) + "} lies on one face only");
    }
    // Every side was matched, so the edge count is exactly half the sides.
    const std::size_t num_edges = total / 2;

    raw.vertex_edge.assign(n, kNone);
    raw.degree.assign(n, 0);
    for (HalfEdgeId h = 0; h < total; ++h) {
        const VertexId v = raw.origin[h];
        if (raw.vertex_edge[v] == kNone) raw.vertex_edge[v] = h;
        ++raw.degree[v];
    }
    for (VertexId v = 0; v < n; ++v) {
        if (raw.vertex_edge[v] == kNone)
            throw Error(ErrorCode::Disconnected, "vertex " + std::to_string(v) + " lies on no face");
    }

    SurfaceComplex c = detail::assemble(std::move(raw));

    // The faces around each vertex must form a single disk.
    for (VertexId v = 0; v < n; ++v) {
        std::uint32_t orbit = 0;
        HalfEdgeId h = c.vertex_edge_[v];
        do {
            ++orbit;
            h = c.rotate_ccw(h);
        } while (h != c.vertex_edge_[v] && orbit <= c.degree_[v]);
        if (orbit != c.degree_[v])
            throw Error(ErrorCode::NonManifold, "faces around vertex " + std::to_string(v) + " do not form a disk");
    }

    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (HalfEdgeId h : c.vertex_star(v)) {
            const VertexId w = c.target(h);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != n)
        throw Error(ErrorCode::Disconnected, std::to_string(n - reached) + " vertices unreachable from vertex 0");

    const long long euler = static_cast<long long>(n) - static_cast<long long>(num_edges) + static_cast<long long>(walks.size());
    if (euler != 2) throw Error(ErrorCode::NotSphere, "V - E + F = " + std::to_string(euler));
    return c;
}

std::vector<HalfEdgeId> SurfaceComplex::face_half_edges(FaceId f) const
{
    std::vector<HalfEdgeId> out;
    out.reserve(face_size_[f]);
    HalfEdgeId h = face_edge_[f];
    do {
        out.push_back(h);
        h = next_[h];
    } while (h != face_edge_[f]);
    return out;
}

std::vector<VertexId> SurfaceComplex::face_walk(FaceId f) const
{
    std::vector<VertexId> out;
    out.reserve(face_size_[f]);
    HalfEdgeId h = face_edge_[f];
    do {
        out.push_back(origin_[h]);
        h = next_[h];
    } while (h != face_edge_[f]);
    return out;
}

std::vector<std::vector<VertexId>> SurfaceComplex::face_walks() const
{
    std::vector<std::vector<VertexId>> out;
    out.reserve(num_faces());
    for (FaceId f = 0; f < num_faces(); ++f) out.push_back(face_walk(f));
    return out;
}

std::vector<HalfEdgeId> SurfaceComplex::vertex_star(VertexId v) const
{
    std::vector<HalfEdgeId> out;
    out.reserve(degree_[v]);
    HalfEdgeId h = vertex_edge_[v];
    do {
        out.push_back(h);
        h = rotate_ccw(h);
    } while (h != vertex_edge_[v]);
    return out;
}

DualGraph dual_graph(const SurfaceComplex& c)
{
    DualGraph g;
    g.num_nodes = c.num_faces();
    g.links.reserve(c.num_edges());
    for (EdgeId e = 0; e < c.num_edges(); ++e) g.links.push_back({c.face(2 * e), c.face(2 * e + 1), e});
    g.adjacency.resize(c.num_faces());
    for (FaceId f = 0; f < c.num_faces(); ++f) {
        for (HalfEdgeId h : c.face_half_edges(f))
            g.adjacency[f].emplace_back(c.face(SurfaceComplex::twin(h)), SurfaceComplex::edge(h));
    }
    return g;
}

// Breadth-first numbering from every dart in both rotation senses; the
// lexicographically smallest word sequence wins. Word layout: V, then for each
// vertex in BFS order the labels (+1) of its neighbours in rotation order
// followed by a 0 separator.
CanonicalCode canonical_code(const SurfaceComplex& c)
{
    const std::size_t V = c.num_vertices();
    const std::size_t H = c.num_half_edges();
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> cur;
    cur.reserve(H + V + 1);
    std::vector<std::uint32_t> label(V);
    std::vector<HalfEdgeId> first(V);
    std::vector<VertexId> queue(V);

    for (int mirror = 0; mirror < 2; ++mirror) {
        for (HalfEdgeId start = 0; start < H; ++start) {
            std::fill(label.begin(), label.end(), kNone);
            cur.clear();
            int cmp = best.empty() ? -1 : 0;
            bool abandoned = false;
            auto emit = [&](std::uint32_t w) {
                const std::size_t pos = cur.size();
                cur.push_back(w);
                if (cmp == 0) {
                    if (w < best[pos]) cmp = -1;
                    else if (w > best[pos]) abandoned = true;
                }
            };
            emit(static_cast<std::uint32_t>(V));
            std::size_t head = 0;
            std::size_t tail = 0;
            std::uint32_t next_label = 0;
            const VertexId root = c.origin(start);
            label[root] = next_label++;
            first[root] = start;
            queue[tail++] = root;
            while (head < tail && !abandoned) {
                const VertexId v = queue[head++];
                HalfEdgeId h = first[v];
                for (std::uint32_t i = 0; i < c.degree(v) && !abandoned; ++i) {
                    const VertexId w = c.target(h);
                    if (label[w] == kNone) {
                        label[w] = next_label++;
                        first[w] = SurfaceComplex::twin(h);
                        queue[tail++] = w;
                    }
                    emit(label[w] + 1);
                    h = mirror ? c.rotate_cw(h) : c.rotate_ccw(h);
                }
                if (!abandoned) emit(0);
            }
            if (!abandoned && cmp < 0) best = cur;
        }
    }
    return CanonicalCode{std::move(best)};
}

std::string CanonicalCode::to_string() const
{
    static constexpr char alphabet[] = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    if (words.empty()) return {};
    std::string out = std::to_string(words[0]) + ":";
    const bool compact = std::all_of(words.begin() + 1, words.end(), [](std::uint32_t w) { return w < 62; });
    for (std::size_t i = 1; i < words.size(); ++i) {
        if (compact) {
            out.push_back(alphabet[words[i]]);
        } else {
            if (i > 1) out.push_back('.');
            out += std::to_string(words[i]);
        }
    }
    return out;
}

ComplexStats stats(const SurfaceComplex& c)
{
    ComplexStats s;
    s.vertices = c.num_vertices();
    s.edges = c.num_edges();
    s.faces = c.num_faces();
    for (VertexId v = 0; v < c.num_vertices(); ++v) ++s.degree_counts[c.degree(v)];
    for (FaceId f = 0; f < c.num_faces(); ++f) ++s.face_size_counts[c.face_size(f)];
    return s;
}

}  // namespace polyref
