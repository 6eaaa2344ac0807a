// polyref: reflection towers of right-angled ideal polyhedra.
//
// Exit status: 0 when every requested verification passes, 1 when one fails,
// 2 on usage or input errors.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polyref/andreev.hpp"
#include "polyref/enumerate.hpp"
#include "polyref/errors.hpp"
#include "polyref/io.hpp"
#include "polyref/reflect.hpp"
#include "polyref/seeds.hpp"
#include "polyref/tower.hpp"

using namespace polyref;

namespace {

std::string join(const std::vector<VertexId>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

void print_report(const AndreevReport& r)
{
    auto flag = [](bool b) { return b ? "pass" : "FAIL"; };
    std::cout << "faces: " << r.face_count << '\n';
    std::cout << "cond1 faces>=6: " << flag(r.cond1_faces_ge_6) << '\n';
    std::cout << "cond2 valence 4: " << flag(r.cond2_valence_4);
    if (!r.bad_valence.empty()) std::cout << "  vertices: " << join(r.bad_valence);
    std::cout << '\n';
    std::cout << "cond3 triples: " << flag(r.cond3_triples) << '\n';
    for (const FaceTriple& t : r.bad_triples)
        std::cout << "  triple " << t.first << ' ' << t.middle << ' ' << t.last << '\n';
    std::cout << "cond4 no prismatic 4-circuit: " << flag(r.cond4_no_prismatic_4circuit) << '\n';
    for (const PrismaticCircuit& c : r.prismatic_4circuits)
        std::cout << "  circuit faces " << join(c.faces) << " edges " << join(c.edges) << '\n';
    std::cout << "polyhedral: " << flag(r.polyhedral) << '\n';
    for (const auto& [a, b] : r.improper_face_pairs) std::cout << "  faces " << a << ' ' << b << '\n';
    std::cout << "result: " << (r.passes() ? "PASS" : "FAIL") << '\n';
}

void print_record(const StepRecord& s)
{
    std::cout << "step " << s.step << ": face " << s.face << " (" << to_string(s.color) << ", S=" << s.face_size
              << ") -> V=" << s.vertices << " E=" << s.edges << " F=" << s.faces << " B=" << s.black_max
              << " W=" << s.white_max << '\n';
}

// Built-in seed names, or a JSON file.
ColoredPolyhedron seed_from(const std::string& name)
{
    if (name == "octahedron") return seed_octahedron();
    if (name.rfind("antiprism:", 0) == 0) {
        int n = 0;
        try {
            n = std::stoi(name.substr(10));
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidN, "bad antiprism size '" + name.substr(10) + "'");
        }
        return seed_antiprism(n);
    }
    if (name.rfind("medial:", 0) == 0) return checkerboard(medial(load_polyhedron(name.substr(7)).complex));
    LoadedPolyhedron p = load_polyhedron(name);
    if (!p.colored) throw Error(ErrorCode::NotBipartiteDual, name + ": " + p.coloring_error);
    return *p.colored;
}

Strategy parse_strategy(const std::string& s)
{
    if (s == "maxface") return MaxFace{};
    if (s == "cofinal") return Cofinal{};
    if (s.rfind("random:", 0) == 0) {
        try {
            return RandomAlternating{std::stoull(s.substr(7))};
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad random seed '" + s.substr(7) + "'");
        }
    }
    if (s.rfind("script:", 0) == 0) {
        std::istringstream in(read_text_file(s.substr(7)));
        Scripted sc;
        std::string tok;
        while (in >> tok) {
            for (char& ch : tok)
                if (ch == ',') ch = ' ';
            std::istringstream t(tok);
            long long v = 0;
            while (t >> v) {
                if (v < 0) throw Error(ErrorCode::ParseError, "negative face id in script");
                sc.faces.push_back(static_cast<FaceId>(v));
            }
        }
        return sc;
    }
    throw Error(ErrorCode::ParseError, "unknown strategy '" + s + "'");
}

int report_bounds(const TowerTrace& t)
{
    const BoundsReport rep = verify_bounds(t);
    for (const BoundCheck& c : rep.checks) {
        if (c.pass) continue;
        const char* rel = c.relation == Relation::eq ? "==" : c.relation == Relation::le ? "<=" : ">=";
        std::cout << "VIOLATION " << c.name << " j=" << c.index << ": " << c.lhs << ' ' << rel << ' ' << c.rhs << '\n';
    }
    std::cout << "bounds: " << rep.checks.size() << " checks, " << rep.failures() << " failed\n";
    return rep.all_pass() ? 0 : 1;
}

int report_gradient(const TowerTrace& t)
{
    const RankGradientReport rep = rank_gradient_report(t);
    std::cout << "C = V1 - (B1 + W1) = " << rep.seed_constant << '\n';
    for (std::size_t j = 1; j <= rep.r.size(); ++j) std::cout << "r_" << j << " = " << rep.r[j - 1].to_string() << '\n';
    if (rep.running_min) std::cout << "min r_j (j>=6) = " << rep.running_min->to_string() << '\n';
    for (std::size_t i = 0; i < rep.half_bound.size(); ++i) {
        const GradientCheck& h = rep.half_bound[i];
        const GradientCheck& c = rep.constant_bound[i];
        if (!h.pass) std::cout << "VIOLATION r_" << h.j << " < " << h.bound.to_string() << '\n';
        if (!c.pass) std::cout << "VIOLATION r_" << c.j << " < " << c.bound.to_string() << '\n';
    }
    std::cout << "gradient bounds: " << (rep.all_pass() ? "pass" : "FAIL") << '\n';
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Reflection towers of right-angled ideal polyhedra"};
    app.require_subcommand(1);

    std::string file;
    auto* check = app.add_subcommand("check", "Report the realizability conditions of a polyhedron");
    check->add_option("file", file, "polyhedron JSON")->required();

    auto* color = app.add_subcommand("color", "Checkerboard-color a polyhedron");
    color->add_option("file", file, "polyhedron JSON")->required();

    FaceId face = 0;
    std::string out;
    auto* refl = app.add_subcommand("reflect", "Double a polyhedron across one face");
    refl->add_option("file", file, "polyhedron JSON or built-in seed")->required();
    refl->add_option("--face", face, "face id")->required();
    refl->add_option("--out", out, "output JSON (default: stdout)");

    std::string strategy = "maxface";
    std::size_t steps = 1;
    std::size_t rounds = 0;
    std::string csv;
    bool white_first = false;
    std::uint64_t max_vertices = std::uint64_t{1} << 24;
    auto* tower = app.add_subcommand("tower", "Run a reflection tower");
    tower->add_option("seed", file, "polyhedron JSON, octahedron, antiprism:<n> or medial:<file>")->required();
    tower->add_option("--strategy", strategy, "maxface | cofinal | script:<file> | random:<seed>");
    tower->add_option("--steps", steps, "trace length J (levels P_1..P_J)");
    tower->add_option("--rounds", rounds, "co-final rounds to run instead of a fixed length");
    tower->add_option("--csv", csv, "write the trace here");
    tower->add_flag("--white-first", white_first, "reflect a white face first");
    tower->add_option("--max-vertices", max_vertices, "vertex budget");

    auto* bounds = app.add_subcommand("bounds", "Re-verify the growth bounds of a stored trace");
    bounds->add_option("trace", file, "trace CSV")->required();

    auto* gradient = app.add_subcommand("gradient", "Rank-gradient lower bounds of a stored trace");
    gradient->add_option("trace", file, "trace CSV")->required();

    int max_v = 10;
    auto* census = app.add_subcommand("census", "Enumerate small polyhedra and check V >= B + W - 1");
    census->add_option("--max-v", max_v, "largest vertex count (<= 14)");
    census->add_option("--out", out, "census CSV");

    int k = 4;
    auto* disk = app.add_subcommand("diskcheck", "Exhaustive disk-subdivision search");
    disk->add_option("--k", k, "boundary points (>= 4)");

    auto* seed = app.add_subcommand("seed", "Write a built-in seed");
    seed->add_option("name", file, "octahedron | antiprism:<n> | medial:<file>")->required();
    seed->add_option("--out", out, "output JSON (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            const LoadedPolyhedron p = load_polyhedron(file);
            const ComplexStats st = stats(p.complex);
            std::cout << "V=" << st.vertices << " E=" << st.edges << " F=" << st.faces << '\n';
            print_report(p.certificate);
            return p.certificate.passes() ? 0 : 1;
        }
        if (*color) {
            const LoadedPolyhedron p = load_polyhedron(file);
            if (!p.colored) {
                std::cout << p.coloring_error << '\n';
                return 1;
            }
            std::size_t black = 0;
            for (FaceId f = 0; f < p.complex.num_faces(); ++f) {
                std::cout << "face " << f << ": " << to_string(p.colored->color(f)) << " (size "
                          << p.complex.face_size(f) << ")\n";
                black += p.colored->color(f) == Color::black;
            }
            const ColorMaxima m = color_maxima(*p.colored);
            std::cout << "black=" << black << " white=" << p.complex.num_faces() - black << " B=" << m.black
                      << " W=" << m.white << '\n';
            return 0;
        }
        if (*refl) {
            const ColoredPolyhedron p = seed_from(file);
            const ReflectionResult r = reflect(p, ProvenanceMap::identity(p.complex().num_faces()), face, 1);
            const std::string json = polyhedron_json(r.polyhedron.complex());
            if (out.empty()) std::cout << json;
            else write_text_file(out, json);
            print_record(r.record);
            int rc = 0;
            try {
                verify_step(p, r.polyhedron, r.record);
                std::cout << "step identities: pass\n";
            } catch (const Error& e) {
                std::cout << e.what() << '\n';
                rc = 1;
            }
            const bool ok = check_andreev(r.polyhedron.complex()).passes();
            std::cout << "result realizable: " << (ok ? "pass" : "FAIL") << '\n';
            return ok ? rc : 1;
        }
        if (*tower) {
            const ColoredPolyhedron p = seed_from(file);
            TowerOptions opt;
            opt.first_color = white_first ? Color::white : Color::black;
            opt.max_vertices = max_vertices;
            const TowerTrace t = rounds > 0 ? cofinal_rounds(p, rounds, opt)
                                            : run_tower(p, parse_strategy(strategy), steps, opt);
            for (const StepRecord& s : t.steps) print_record(s);
            for (std::size_t i = 0; i < t.rounds.size(); ++i) {
                const Round& r = t.rounds[i];
                std::cout << "round " << i + 1 << ": steps " << r.first_step << ".." << r.last_step << " base faces "
                          << r.base_faces << ' ' << (r.complete ? "complete" : "incomplete") << " residual "
                          << r.residual << '\n';
            }
            if (t.truncated) std::cout << "stopped by the vertex budget\n";
            if (!csv.empty()) write_trace(t, csv);
            int rc = report_bounds(t);
            if (rounds > 0 && (t.rounds.size() < rounds || !t.rounds.back().complete)) rc = 1;
            return rc;
        }
        if (*bounds) return report_bounds(read_trace(file));
        if (*gradient) return report_gradient(read_trace(file));
        if (*census) {
            const Census c = enumerate_polyhedra(max_v);
            if (!out.empty()) write_text_file(out, census_csv(c));
            std::cout << "plane graphs: " << c.plane_graphs << "\n4-valent complexes: " << c.pre_filter
                      << "\nrealizable classes: " << c.entries.size() << '\n';
            const ClaimReport rep = verify_claim_v1(c);
            std::cout << "claim V >= B + W - 1: pass (" << rep.checked << " checked, min slack " << rep.min_slack
                      << ", " << rep.tight.size() << " tight)\n";
            return 0;
        }
        if (*disk) {
            const DiskSearchReport r = disk_subdivision_search(k);
            std::cout << "k=" << r.k << " placements=" << r.placements << " chord systems=" << r.configurations
                      << " largest fewest-sides=" << r.best_min_sides << '\n';
            for (const ChordConfiguration& cfg : r.feasible) {
                std::cout << "feasible:";
                for (const Chord& ch : cfg.chords) std::cout << ' ' << ch.a << '-' << ch.b;
                std::cout << '\n';
            }
            std::cout << (r.infeasible() ? "infeasible" : "FEASIBLE") << '\n';
            return r.infeasible() ? 0 : 1;
        }
        if (*seed) {
            const ColoredPolyhedron p = seed_from(file);
            const std::string json = polyhedron_json(p.complex());
            if (out.empty()) std::cout << json;
            else write_text_file(out, json);
            return p.certificate().passes() ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "polyref: " << e.what() << '\n';
        return e.code() == ErrorCode::ClaimViolated ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "polyref: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
