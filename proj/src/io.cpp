#include "polyref/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polyref/errors.hpp"

namespace polyref {

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::ParseError, path + ": cannot open for writing");
    out << text;
    if (!out) throw Error(ErrorCode::ParseError, path + ": write failed");
}

// ---------------------------------------------------------------- JSON

std::string polyhedron_json(const SurfaceComplex& c)
{
    std::string out = "{\"faces\": [\n";
    for (FaceId f = 0; f < c.num_faces(); ++f) {
        out += "  [";
        const std::vector<VertexId> walk = c.face_walk(f);
        for (std::size_t i = 0; i < walk.size(); ++i) {
            if (i) out += ", ";
            out += std::to_string(walk[i]);
        }
        out += (f + 1 < c.num_faces()) ? "],\n" : "]\n";
    }
    out += "]}\n";
    return out;
}

void write_polyhedron(const SurfaceComplex& c, const std::string& path) { write_text_file(path, polyhedron_json(c)); }

namespace {

std::size_t line_of(const std::string& text, std::size_t byte)
{
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

}  // namespace

std::vector<std::vector<VertexId>> parse_faces(const std::string& text, const std::string& source)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError,
                    source + ":" + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) + ": malformed JSON");
    }
    if (!doc.is_object() || !doc.contains("faces") || !doc["faces"].is_array())
        throw Error(ErrorCode::ParseError, source + ": expected an object with a \"faces\" array");
    std::vector<std::vector<VertexId>> faces;
    const auto& arr = doc["faces"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& w = arr[i];
        if (!w.is_array())
            throw Error(ErrorCode::ParseError, source + ": face #" + std::to_string(i) + " is not an array");
        std::vector<VertexId> walk;
        for (const auto& v : w) {
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() >= kNone)
                throw Error(ErrorCode::ParseError,
                            source + ": face #" + std::to_string(i) + " has an entry that is not a vertex id");
            walk.push_back(static_cast<VertexId>(v.get<std::int64_t>()));
        }
        faces.push_back(std::move(walk));
    }
    return faces;
}

LoadedPolyhedron parse_polyhedron(const std::string& text, const std::string& source)
{
    const auto faces = parse_faces(text, source);
    SurfaceComplex c;
    try {
        c = SurfaceComplex::from_faces(faces);
    } catch (const Error& e) {
        throw Error(e.code(), source + ": " + e.detail());
    }
    LoadedPolyhedron out{c, check_andreev(c), std::nullopt, {}};
    try {
        out.colored.emplace(checkerboard(c));
    } catch (const Error& e) {
        out.coloring_error = e.what();
    }
    return out;
}

LoadedPolyhedron load_polyhedron(const std::string& path) { return parse_polyhedron(read_text_file(path), path); }

// ---------------------------------------------------------------- trace CSV

namespace {

constexpr const char* kTraceHeader = "j,color,face_id,S_fj,V_j,E_j,F_j,B_j,W_j,bound_Vj_rhs,r_j_num,r_j_den";

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

struct Cursor {
    const std::string& source;
    std::size_t line;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line) + ": " + what);
    }
    [[noreturn]] void mismatch(const std::string& what) const
    {
        throw Error(ErrorCode::ChecksumMismatch, source + ":" + std::to_string(line) + ": " + what);
    }

    std::int64_t integer(const std::string& field, const char* name) const
    {
        std::int64_t v = 0;
        const char* b = field.data();
        const char* e = b + field.size();
        auto [p, ec] = std::from_chars(b, e, v);
        if (field.empty() || ec != std::errc() || p != e) fail(std::string("bad integer in ") + name + ": '" + field + "'");
        return v;
    }
    std::int64_t non_negative(const std::string& field, const char* name) const
    {
        const std::int64_t v = integer(field, name);
        if (v < 0) fail(std::string(name) + " is negative");
        return v;
    }
    Color color(const std::string& field) const
    {
        if (field == "black") return Color::black;
        if (field == "white") return Color::white;
        fail("bad color '" + field + "'");
    }
};

std::string rhs_field(const TowerTrace& t, std::size_t j)
{
    if (j < 6) return "";
    const Level& l = t.level(1);
    const std::int64_t b = t.first_color == Color::black ? l.black_max : l.white_max;
    const std::int64_t w = t.first_color == Color::black ? l.white_max : l.black_max;
    return std::to_string(vj_lower_bound(j, static_cast<std::int64_t>(l.vertices), b, w));
}

}  // namespace

std::string trace_csv(const TowerTrace& t)
{
    if (t.length() == 0) throw Error(ErrorCode::OutOfRange, "empty trace");
    if (t.length() > 60) throw Error(ErrorCode::OutOfRange, "trace too long for exact rationals");
    std::string out = kTraceHeader;
    out += '\n';
    for (std::size_t j = 1; j <= t.length(); ++j) {
        const Level& l = t.level(j);
        out += std::to_string(j) + ',';
        if (j < t.length()) {
            const StepRecord& s = t.steps[j - 1];
            out += to_string(s.color) + ',' + std::to_string(s.face) + ',' + std::to_string(s.face_size) + ',';
        } else {
            out += ",,,";
        }
        const Rational r = Rational::of(static_cast<std::int64_t>(l.vertices) - 1, std::int64_t{1} << (j - 1));
        out += std::to_string(l.vertices) + ',' + std::to_string(l.edges) + ',' + std::to_string(l.faces) + ',' +
               std::to_string(l.black_max) + ',' + std::to_string(l.white_max) + ',' + rhs_field(t, j) + ',' +
               std::to_string(r.num) + ',' + std::to_string(r.den) + '\n';
    }
    if (!t.rounds.empty() || t.truncated || t.first_color == Color::white) {
        out += "# first_color=" + to_string(t.first_color) + '\n';
        for (const Round& r : t.rounds)
            out += "# round," + std::to_string(r.first_step) + ',' + std::to_string(r.last_step) + ',' +
                   std::to_string(r.base_faces) + ',' + (r.complete ? "complete" : "open") + ',' +
                   std::to_string(r.residual) + '\n';
        if (t.truncated) out += "# truncated\n";
    }
    return out;
}

void write_trace(const TowerTrace& trace, const std::string& path) { write_text_file(path, trace_csv(trace)); }

TowerTrace parse_trace(const std::string& text, const std::string& source)
{
    const std::vector<std::string> lines = lines_of(text);
    if (lines.empty()) throw Error(ErrorCode::ParseError, source + ": empty trace file");
    if (lines[0] != kTraceHeader) throw Error(ErrorCode::ParseError, source + ":1: unexpected header");

    struct Row {
        std::size_t line;
        bool has_step;
        Color color;
        std::int64_t face, size;
        Level level;
        std::string rhs;
        std::int64_t rnum, rden;
    };
    std::vector<Row> rows;
    TowerTrace t;
    std::optional<Color> declared_first;
    std::size_t i = 1;
    for (; i < lines.size() && (lines[i].empty() || lines[i][0] != '#'); ++i) {
        Cursor cur{source, i + 1};
        if (lines[i].empty()) cur.fail("blank line");
        const auto f = split(lines[i], ',');
        if (f.size() != 12) cur.fail("expected 12 columns, found " + std::to_string(f.size()));
        Row r{};
        r.line = i + 1;
        if (cur.integer(f[0], "j") != static_cast<std::int64_t>(rows.size() + 1))
            cur.mismatch("row index " + f[0] + " out of sequence");
        r.has_step = !(f[1].empty() && f[2].empty() && f[3].empty());
        if (r.has_step) {
            r.color = cur.color(f[1]);
            r.face = cur.non_negative(f[2], "face_id");
            r.size = cur.non_negative(f[3], "S_fj");
        }
        r.level.vertices = static_cast<std::uint64_t>(cur.non_negative(f[4], "V_j"));
        r.level.edges = static_cast<std::uint64_t>(cur.non_negative(f[5], "E_j"));
        r.level.faces = static_cast<std::uint64_t>(cur.non_negative(f[6], "F_j"));
        r.level.black_max = static_cast<std::uint32_t>(cur.non_negative(f[7], "B_j"));
        r.level.white_max = static_cast<std::uint32_t>(cur.non_negative(f[8], "W_j"));
        r.rhs = f[9];
        if (!r.rhs.empty()) cur.integer(r.rhs, "bound_Vj_rhs");
        r.rnum = cur.integer(f[10], "r_j_num");
        r.rden = cur.non_negative(f[11], "r_j_den");
        rows.push_back(std::move(r));
    }
    for (; i < lines.size(); ++i) {
        Cursor cur{source, i + 1};
        const std::string& l = lines[i];
        if (l.rfind("# first_color=", 0) == 0) {
            declared_first = cur.color(l.substr(14));
        } else if (l.rfind("# round,", 0) == 0) {
            const auto f = split(l.substr(8), ',');
            if (f.size() != 5 || (f[3] != "complete" && f[3] != "open")) cur.fail("bad round marker");
            t.rounds.push_back(Round{static_cast<std::size_t>(cur.non_negative(f[0], "round start")),
                                     static_cast<std::size_t>(cur.non_negative(f[1], "round end")),
                                     static_cast<std::size_t>(cur.non_negative(f[2], "round base")),
                                     f[3] == "complete",
                                     static_cast<std::size_t>(cur.non_negative(f[4], "round residual"))});
        } else if (l == "# truncated") {
            t.truncated = true;
        } else {
            cur.fail("unexpected line after the table");
        }
    }
    if (rows.empty()) throw Error(ErrorCode::ParseError, source + ": trace has no rows");
    if (rows.size() > 60) throw Error(ErrorCode::ParseError, source + ": trace too long");

    t.first_color = declared_first.value_or(rows[0].has_step ? rows[0].color : Color::black);
    for (std::size_t j = 1; j <= rows.size(); ++j) {
        const Row& r = rows[j - 1];
        Cursor cur{source, r.line};
        const bool last = j == rows.size();
        if (r.has_step == last) cur.mismatch(last ? "last row carries a step" : "missing step columns");
        const Level& l = r.level;
        if (l.edges != 2 * l.vertices) cur.mismatch("E_j != 2 V_j");
        if (l.faces != l.vertices + 2) cur.mismatch("F_j != V_j + 2");
        const Rational expect = Rational::of(static_cast<std::int64_t>(l.vertices) - 1, std::int64_t{1} << (j - 1));
        if (r.rnum != expect.num || r.rden != expect.den)
            cur.mismatch("r_j " + std::to_string(r.rnum) + "/" + std::to_string(r.rden) + " != " + expect.to_string());
        if (!last) {
            const Row& n = rows[j];
            const Color want = (j % 2 == 1) ? t.first_color : opposite(t.first_color);
            if (r.color != want) cur.mismatch("step colors do not alternate");
            if (static_cast<std::int64_t>(n.level.vertices) != 2 * static_cast<std::int64_t>(l.vertices) - r.size)
                cur.mismatch("V_{j+1} != 2 V_j - S_fj");
            StepRecord s;
            s.step = j;
            s.face = static_cast<FaceId>(r.face);
            s.color = r.color;
            s.face_size = static_cast<std::uint32_t>(r.size);
            s.vertices = n.level.vertices;
            s.edges = n.level.edges;
            s.faces = n.level.faces;
            s.black_max = n.level.black_max;
            s.white_max = n.level.white_max;
            t.steps.push_back(s);
        }
        t.levels.push_back(l);
    }
    for (std::size_t j = 1; j <= rows.size(); ++j) {
        if (rows[j - 1].rhs != rhs_field(t, j))
            Cursor{source, rows[j - 1].line}.mismatch("bound_Vj_rhs disagrees with the first row");
    }
    return t;
}

TowerTrace read_trace(const std::string& path) { return parse_trace(read_text_file(path), path); }

// ---------------------------------------------------------------- census CSV

std::string census_csv(const Census& census)
{
    std::string out = "code,V,B,W,slack\n";
    for (const CensusEntry& e : census.entries)
        out += e.code.to_string() + ',' + std::to_string(e.vertices) + ',' + std::to_string(e.black_max) + ',' +
               std::to_string(e.white_max) + ',' + std::to_string(e.slack()) + '\n';
    return out;
}

}  // namespace polyref
