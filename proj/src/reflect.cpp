#include "polyref/reflect.hpp"

#include <algorithm>
#include <map>

#include "polyref/errors.hpp"

namespace polyref {

ProvenanceMap ProvenanceMap::identity(std::size_t num_faces)
{
    ProvenanceMap m;
    m.holder_.resize(num_faces);
    for (FaceId f = 0; f < num_faces; ++f) m.holder_[f] = f;
    return m;
}

std::vector<FaceId> ProvenanceMap::of(FaceId f) const
{
    std::vector<FaceId> out;
    for (FaceId b = 0; b < holder_.size(); ++b)
        if (holder_[b] == f) out.push_back(b);
    return out;
}

std::size_t ProvenanceMap::total() const
{
    return static_cast<std::size_t>(std::count_if(holder_.begin(), holder_.end(), [](FaceId h) { return h != kNone; }));
}

ProvenanceMap ProvenanceMap::after_reflection(FaceId reflected, FaceId moved_from, FaceId moved_to) const
{
    ProvenanceMap m;
    m.holder_ = holder_;
    for (FaceId& h : m.holder_) {
        if (h == reflected) h = kNone;
        else if (h != kNone && h == moved_from) h = moved_to;
    }
    return m;
}

ReflectionResult reflect(const ColoredPolyhedron& p, const ProvenanceMap& prov, FaceId f, std::size_t step)
{
    const SurfaceComplex& c = p.complex();
    if (f >= c.num_faces())
        throw Error(ErrorCode::UnknownFace, "face " + std::to_string(f) + " not in a complex with " +
                                                std::to_string(c.num_faces()) + " faces");
    if (!p.certificate().passes()) throw Error(ErrorCode::NotAndreev, "input polyhedron is not Andreev-certified");

    const std::size_t V = c.num_vertices();
    const std::size_t E = c.num_edges();
    const std::size_t F = c.num_faces();
    const std::uint32_t S = c.face_size(f);

    std::vector<std::uint8_t> on_f_edge(E, 0);
    std::vector<std::uint8_t> on_f_vertex(V, 0);
    std::vector<std::uint8_t> adjacent(F, 0);
    for (HalfEdgeId h : c.face_half_edges(f)) {
        on_f_edge[SurfaceComplex::edge(h)] = 1;
        on_f_vertex[c.origin(h)] = 1;
        const FaceId g = c.face(SurfaceComplex::twin(h));
        if (adjacent[g])
            throw Error(ErrorCode::NotAndreev, "face " + std::to_string(g) + " shares several edges with face " +
                                                   std::to_string(f));
        adjacent[g] = 1;
    }

    // Surviving edges of one copy, renumbered compactly.
    std::vector<EdgeId> kept(E, kNone);
    EdgeId kept_edges = 0;
    for (EdgeId e = 0; e < E; ++e)
        if (!on_f_edge[e]) kept[e] = kept_edges++;
    auto copy_a = [&](HalfEdgeId h) { return 2 * kept[h >> 1] + (h & 1u); };
    auto copy_b = [&](HalfEdgeId h) { return 2 * (kept_edges + kept[h >> 1]) + (h & 1u); };

    std::vector<VertexId> mirror_vertex(V);
    VertexId next_vertex = static_cast<VertexId>(V);
    for (VertexId v = 0; v < V; ++v) mirror_vertex[v] = on_f_vertex[v] ? v : next_vertex++;

    std::vector<FaceId> mirror_face(F, kNone);
    std::vector<FaceId> mirrored;  // faces that get a separate mirror copy, ascending
    for (FaceId g = 0; g < F; ++g) {
        if (g == f) continue;
        if (adjacent[g]) mirror_face[g] = g;
        else mirrored.push_back(g);
    }
    FaceId next_face = static_cast<FaceId>(F);
    for (std::size_t i = 0; i < mirrored.size(); ++i) mirror_face[mirrored[i]] = (i == 0) ? f : next_face++;
    const std::size_t new_faces = 2 * F - S - 2;

    // Only possible for non-polyhedral inputs: every other face touches f.
    FaceId moved_from = kNone;
    FaceId moved_to = kNone;
    if (mirrored.empty() && f != F - 1) {
        moved_from = static_cast<FaceId>(F - 1);
        moved_to = f;
    }
    auto face_a = [&](FaceId g) { return g == moved_from ? moved_to : g; };

    detail::RawComplex raw;
    const std::size_t H = 4 * static_cast<std::size_t>(kept_edges);
    raw.origin.resize(H);
    raw.next.resize(H);
    raw.face.resize(H);
    for (HalfEdgeId h = 0; h < c.num_half_edges(); ++h) {
        if (on_f_edge[h >> 1]) continue;
        const HalfEdgeId a = copy_a(h);
        const HalfEdgeId b = copy_b(h);
        const FaceId g = c.face(h);
        raw.origin[a] = c.origin(h);
        raw.face[a] = face_a(g);
        raw.next[a] = on_f_edge[c.next(h) >> 1] ? b : copy_a(c.next(h));
        // The mirror copy runs backwards: b goes m(target h) -> m(origin h).
        raw.origin[b] = mirror_vertex[c.target(h)];
        raw.face[b] = adjacent[g] ? face_a(g) : mirror_face[g];
        raw.next[b] = on_f_edge[c.prev(h) >> 1] ? a : copy_b(c.prev(h));
    }

    raw.face_edge.assign(new_faces, kNone);
    raw.face_size.assign(new_faces, 0);
    std::vector<Color> colors(new_faces, Color::black);
    for (FaceId g = 0; g < F; ++g) {
        if (g == f) continue;
        HalfEdgeId h = c.face_half_edge(g);
        while (on_f_edge[h >> 1]) h = c.next(h);
        const std::uint32_t size = c.face_size(g);
        const FaceId ga = face_a(g);
        raw.face_edge[ga] = copy_a(h);
        raw.face_size[ga] = adjacent[g] ? 2 * size - 2 : size;
        colors[ga] = p.color(g);
        if (!adjacent[g]) {
            raw.face_edge[mirror_face[g]] = copy_b(h);
            raw.face_size[mirror_face[g]] = size;
            colors[mirror_face[g]] = p.color(g);
        }
    }

    const std::size_t new_vertices = 2 * V - S;
    raw.vertex_edge.assign(new_vertices, kNone);
    raw.degree.assign(new_vertices, 0);
    for (VertexId v = 0; v < V; ++v) {
        HalfEdgeId h = c.vertex_half_edge(v);
        while (on_f_edge[h >> 1]) h = c.rotate_ccw(h);
        raw.vertex_edge[v] = copy_a(h);
        if (on_f_vertex[v]) {
            raw.degree[v] = 2 * c.degree(v) - 4;
        } else {
            raw.degree[v] = c.degree(v);
            raw.vertex_edge[mirror_vertex[v]] = copy_b(SurfaceComplex::twin(h));
            raw.degree[mirror_vertex[v]] = c.degree(v);
        }
    }

    if (moved_from != kNone) mirror_face[moved_from] = moved_to;

    AndreevReport carried = p.certificate();
    carried.face_count = new_faces;
    ColoredPolyhedron out(detail::assemble(std::move(raw)), std::move(colors), std::move(carried),
                          CertificateSource::reflection);

    StepRecord rec;
    rec.step = step;
    rec.face = f;
    rec.color = p.color(f);
    rec.face_size = S;
    rec.vertices = out.complex().num_vertices();
    rec.edges = out.complex().num_edges();
    rec.faces = out.complex().num_faces();
    const ColorMaxima maxima = color_maxima(out);
    rec.black_max = maxima.black;
    rec.white_max = maxima.white;

    ProvenanceMap next_prov = prov.after_reflection(f, moved_from, moved_to);
    return ReflectionResult{std::move(out), std::move(next_prov), rec, std::move(mirror_face), moved_from, moved_to};
}

namespace {

std::vector<std::uint32_t> sorted_sizes(const SurfaceComplex& c)
{
    std::vector<std::uint32_t> out(c.num_faces());
    for (FaceId f = 0; f < c.num_faces(); ++f) out[f] = c.face_size(f);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<StepCheck> verify_step(const ColoredPolyhedron& before, const ColoredPolyhedron& after,
                                   const StepRecord& rec)
{
    const SurfaceComplex& b = before.complex();
    const SurfaceComplex& a = after.complex();
    std::vector<StepCheck> checks;
    auto add = [&](std::string name, std::int64_t lhs, std::string rel, std::int64_t rhs) {
        bool ok = rel == "==" ? lhs == rhs : rel == "<=" ? lhs <= rhs : lhs >= rhs;
        checks.push_back({std::move(name), lhs, std::move(rel), rhs, ok});
    };
    if (rec.face >= b.num_faces())
        throw Error(ErrorCode::UnknownFace, "record names face " + std::to_string(rec.face));

    const auto V = static_cast<std::int64_t>(b.num_vertices());
    const auto E = static_cast<std::int64_t>(b.num_edges());
    const auto F = static_cast<std::int64_t>(b.num_faces());
    const auto S = static_cast<std::int64_t>(b.face_size(rec.face));
    const Color color = before.color(rec.face);

    add("record S_f", rec.face_size, "==", S);
    add("record color is black", rec.color == Color::black, "==", color == Color::black);
    add("record V'", static_cast<std::int64_t>(rec.vertices), "==", static_cast<std::int64_t>(a.num_vertices()));
    add("record E'", static_cast<std::int64_t>(rec.edges), "==", static_cast<std::int64_t>(a.num_edges()));
    add("record F'", static_cast<std::int64_t>(rec.faces), "==", static_cast<std::int64_t>(a.num_faces()));
    add("V' = 2V - S_f", static_cast<std::int64_t>(rec.vertices), "==", 2 * V - S);
    add("E' = 2E - 2S_f", static_cast<std::int64_t>(rec.edges), "==", 2 * E - 2 * S);
    add("F' = 2F - S_f - 2", static_cast<std::int64_t>(rec.faces), "==", 2 * F - S - 2);
    add("V' - E' + F'",
        static_cast<std::int64_t>(a.num_vertices()) - static_cast<std::int64_t>(a.num_edges()) +
            static_cast<std::int64_t>(a.num_faces()),
        "==", 2);

    std::int64_t non4_before = 0;
    std::int64_t non4_after = 0;
    for (VertexId v = 0; v < b.num_vertices(); ++v) non4_before += b.degree(v) != 4;
    for (VertexId v = 0; v < a.num_vertices(); ++v) non4_after += a.degree(v) != 4;
    add("vertices of degree != 4", non4_after, "<=", non4_before);

    std::vector<std::uint8_t> adjacent(b.num_faces(), 0);
    for (HalfEdgeId h : b.face_half_edges(rec.face)) adjacent[b.face(SurfaceComplex::twin(h))] = 1;
    std::int64_t merged_bad = 0;
    std::int64_t kept_bad = 0;
    std::int64_t color_bad = 0;
    std::vector<std::uint32_t> expected_sizes;
    for (FaceId g = 0; g < b.num_faces(); ++g) {
        if (g == rec.face) continue;
        const std::uint32_t size = b.face_size(g);
        if (g < a.num_faces()) {
            if (adjacent[g]) merged_bad += a.face_size(g) != 2 * size - 2;
            else kept_bad += a.face_size(g) != size;
            color_bad += after.color(g) != before.color(g);
        }
        if (adjacent[g]) {
            expected_sizes.push_back(2 * size - 2);
        } else {
            expected_sizes.push_back(size);
            expected_sizes.push_back(size);
        }
    }
    std::sort(expected_sizes.begin(), expected_sizes.end());
    add("merged faces with size != 2S-2", merged_bad, "==", 0);
    add("non-adjacent faces with changed size", kept_bad, "==", 0);
    add("face size multiset matches doubling", expected_sizes == sorted_sizes(a), "==", 1);
    add("faces that changed color", color_bad, "==", 0);

    const ColorMaxima m0 = color_maxima(before);
    const ColorMaxima m1 = color_maxima(after);
    add("record B'", rec.black_max, "==", m1.black);
    add("record W'", rec.white_max, "==", m1.white);
    if (color == Color::black) {
        add("B' <= B", m1.black, "<=", m0.black);
        add("W' <= 2W - 2", m1.white, "<=", 2 * static_cast<std::int64_t>(m0.white) - 2);
        add("V' >= 2V - B", static_cast<std::int64_t>(rec.vertices), ">=", 2 * V - m0.black);
    } else {
        add("W' <= W", m1.white, "<=", m0.white);
        add("B' <= 2B - 2", m1.black, "<=", 2 * static_cast<std::int64_t>(m0.black) - 2);
        add("V' >= 2V - W", static_cast<std::int64_t>(rec.vertices), ">=", 2 * V - m0.white);
    }

    std::string failed;
    for (const StepCheck& ch : checks) {
        if (ch.ok) continue;
        failed += (failed.empty() ? "" : "; ") + ch.name + ": " + std::to_string(ch.lhs) + " " + ch.relation + " " +
                  std::to_string(ch.rhs) + " fails";
    }
    if (!failed.empty()) throw Error(ErrorCode::Violation, failed);
    return checks;
}

}  // namespace polyref
