#pragma once
// Brute-force reference implementations shared by the unit and acceptance tests.
// They favour obviousness over speed and use only face walks and vertex sets.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "polyref/andreev.hpp"
#include "polyref/complex.hpp"
#include "polyref/seeds.hpp"

namespace oracle {

using polyref::SurfaceComplex;
using Faces = std::vector<std::vector<std::uint32_t>>;
using Edge = std::pair<std::uint32_t, std::uint32_t>;

inline Edge undirected(std::uint32_t a, std::uint32_t b) { return {std::min(a, b), std::max(a, b)}; }

inline std::vector<std::set<Edge>> face_edges(const Faces& faces)
{
    std::vector<std::set<Edge>> out;
    for (const auto& w : faces) {
        std::set<Edge> s;
        for (std::size_t i = 0; i < w.size(); ++i) s.insert(undirected(w[i], w[(i + 1) % w.size()]));
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<Edge> shared_edges(const std::set<Edge>& a, const std::set<Edge>& b)
{
    std::vector<Edge> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool vertex_disjoint(const Edge& x, const Edge& y)
{
    return x.first != y.first && x.first != y.second && x.second != y.first && x.second != y.second;
}

/// Face cycles (as rotated/reflected-minimal face lists) of all prismatic
/// 4-circuits, by trying every ordered 4-tuple of faces.
inline std::set<std::vector<std::uint32_t>> prismatic_4(const Faces& faces)
{
    const auto fe = face_edges(faces);
    const std::size_t F = faces.size();
    std::set<std::vector<std::uint32_t>> out;
    for (std::uint32_t a = 0; a < F; ++a)
        for (std::uint32_t b = 0; b < F; ++b)
            for (std::uint32_t c = 0; c < F; ++c)
                for (std::uint32_t d = 0; d < F; ++d) {
                    const std::array<std::uint32_t, 4> cyc{a, b, c, d};
                    if (std::set<std::uint32_t>(cyc.begin(), cyc.end()).size() != 4) continue;
                    std::array<std::vector<Edge>, 4> opts;
                    bool ok = true;
                    for (int i = 0; i < 4 && ok; ++i) {
                        opts[i] = shared_edges(fe[cyc[i]], fe[cyc[(i + 1) % 4]]);
                        ok = !opts[i].empty();
                    }
                    if (!ok) continue;
                    bool found = false;
                    for (const Edge& e0 : opts[0])
                        for (const Edge& e1 : opts[1])
                            for (const Edge& e2 : opts[2])
                                for (const Edge& e3 : opts[3]) {
                                    const std::array<Edge, 4> es{e0, e1, e2, e3};
                                    bool disjoint = true;
                                    for (int i = 0; i < 4; ++i)
                                        for (int j = i + 1; j < 4; ++j) disjoint = disjoint && vertex_disjoint(es[i], es[j]);
                                    found = found || disjoint;
                                }
                    if (!found) continue;
                    // Normalize: start at the smallest face, then the smaller neighbour second.
                    std::vector<std::uint32_t> v(cyc.begin(), cyc.end());
                    std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
                    if (v[1] > v[3]) std::swap(v[1], v[3]);
                    out.insert(v);
                }
    return out;
}

/// (min(i,k), j, max(i,k)) for every violation of the triple condition.
inline std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> bad_triples(const Faces& faces)
{
    const auto fe = face_edges(faces);
    std::vector<std::set<std::uint32_t>> fv;
    for (const auto& w : faces) fv.emplace_back(w.begin(), w.end());
    const std::size_t F = faces.size();
    std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t i = 0; i < F; ++i)
        for (std::uint32_t j = 0; j < F; ++j)
            for (std::uint32_t k = i + 1; k < F; ++k) {
                if (i == j || j == k) continue;
                bool pattern = false;
                for (const Edge& x : shared_edges(fe[i], fe[j]))
                    for (const Edge& y : shared_edges(fe[j], fe[k])) pattern = pattern || vertex_disjoint(x, y);
                if (!pattern) continue;
                bool meet = false;
                for (std::uint32_t v : fv[i]) meet = meet || fv[k].count(v);
                if (meet) out.insert({i, j, k});
            }
    return out;
}

inline bool connected_without(std::uint32_t n, const std::set<Edge>& edges, std::uint32_t x, std::uint32_t y)
{
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t a) {
        return parent[a] == a ? a : parent[a] = find(parent[a]);
    };
    for (const Edge& e : edges) {
        if (e.first == x || e.first == y || e.second == x || e.second == y) continue;
        parent[find(e.first)] = find(e.second);
    }
    std::set<std::uint32_t> roots;
    for (std::uint32_t v = 0; v < n; ++v)
        if (v != x && v != y) roots.insert(find(v));
    return roots.size() <= 1;
}

/// 1-skeleton is 3-connected (no separating vertex pair).
inline bool three_connected(const Faces& faces)
{
    std::uint32_t n = 0;
    std::set<Edge> edges;
    for (const auto& s : face_edges(faces)) edges.insert(s.begin(), s.end());
    for (const auto& w : faces)
        for (std::uint32_t v : w) n = std::max(n, v + 1);
    if (n < 4) return false;
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = x + 1; y < n; ++y)
            if (!connected_without(n, edges, x, y)) return false;
    return true;
}

inline Faces relabel(const Faces& faces, const std::vector<std::uint32_t>& perm)
{
    Faces out = faces;
    for (auto& w : out)
        for (auto& v : w) v = perm[v];
    return out;
}

inline Faces mirror(const Faces& faces)
{
    Faces out = faces;
    for (auto& w : out) std::reverse(w.begin(), w.end());
    return out;
}

inline Faces shuffled(const Faces& faces, std::mt19937_64& rng)
{
    std::uint32_t n = 0;
    for (const auto& w : faces)
        for (std::uint32_t v : w) n = std::max(n, v + 1);
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    Faces out = relabel(faces, perm);
    std::shuffle(out.begin(), out.end(), rng);
    for (auto& w : out) std::rotate(w.begin(), w.begin() + static_cast<long>(rng() % w.size()), w.end());
    return out;
}

/// Codes of every realizable 4-valent sphere complex on n vertices, found by
/// trying every rotation system of every 4-regular simple graph on n
/// vertices (n <= 8).
std::set<polyref::CanonicalCode> rotation_census(std::uint32_t n);

}  // namespace oracle
