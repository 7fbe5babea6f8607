#include "kenmotsu/structure_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace kenmotsu {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

StructureFile to_structure(const MetricLieAlgebra& a, const AlmostContactData& s) {
    StructureFile sf;
    sf.dim = a.dim;
    for (int i = 0; i < a.dim; ++i)
        for (int j = i + 1; j < a.dim; ++j) {
            const double* row = a.bracket_row(i, j);
            bool nonzero = false;
            for (int k = 0; k < a.dim; ++k)
                if (row[k] != 0.0) {
                    nonzero = true;
                    break;
                }
            if (nonzero) sf.brackets.push_back({i, j, Vec(row, row + a.dim)});
        }
    sf.gram = a.gram;
    sf.phi = s.phi;
    sf.xi = s.xi;
    return sf;
}

std::pair<MetricLieAlgebra, AlmostContactData> from_structure(const StructureFile& sf) {
    if (sf.dim < 1 || sf.dim > kMaxDim)
        fail(ErrorKind::ParseError, "structure file: dim must be in [1, 129]");
    if (sf.gram.rows != sf.dim || sf.gram.cols != sf.dim)
        fail(ErrorKind::ParseError, "structure file: gram shape does not match dim");
    if (sf.phi.rows != sf.dim || sf.phi.cols != sf.dim)
        fail(ErrorKind::ParseError, "structure file: phi shape does not match dim");
    if (static_cast<int>(sf.xi.size()) != sf.dim)
        fail(ErrorKind::ParseError, "structure file: xi length does not match dim");
    for (int i = 0; i < sf.dim; ++i)
        for (int j = i + 1; j < sf.dim; ++j)
            if (std::abs(sf.gram(i, j) - sf.gram(j, i)) > 0.0)
                fail(ErrorKind::ParseError, "structure file: gram is not symmetric");

    MetricLieAlgebra a(sf.dim, sf.gram);
    std::set<std::pair<int, int>> seen;
    for (const auto& entry : sf.brackets) {
        if (entry.i < 0 || entry.j >= sf.dim || entry.i >= entry.j)
            fail(ErrorKind::ParseError, "structure file: bracket indices must satisfy 0 <= i < j < dim");
        if (!seen.insert({entry.i, entry.j}).second)
            fail(ErrorKind::ParseError, "structure file: duplicate bracket pair");
        if (static_cast<int>(entry.v.size()) != sf.dim)
            fail(ErrorKind::ParseError, "structure file: bracket vector length does not match dim");
        for (int k = 0; k < sf.dim; ++k) {
            a.c(entry.i, entry.j, k) = entry.v[k];
            a.c(entry.j, entry.i, k) = -entry.v[k];
        }
    }
    validate_algebra(a);

    AlmostContactData s;
    s.phi = sf.phi;
    s.xi = sf.xi;
    for (double x : s.xi)
        if (!std::isfinite(x)) fail(ErrorKind::ParseError, "structure file: xi has non-finite entry");
    for (double x : s.phi.entries)
        if (!std::isfinite(x)) fail(ErrorKind::ParseError, "structure file: phi has non-finite entry");
    return {std::move(a), std::move(s)};
}

namespace {

void append_vec(std::string& out, const Vec& v) {
    out += '[';
    for (size_t k = 0; k < v.size(); ++k) {
        if (k) out += ", ";
        out += format_double(v[k]);
    }
    out += ']';
}

void append_matrix(std::string& out, const RealMatrix& m, const char* indent) {
    out += "[\n";
    for (int i = 0; i < m.rows; ++i) {
        out += indent;
        Vec row(m.cols);
        for (int j = 0; j < m.cols; ++j) row[j] = m(i, j);
        append_vec(out, row);
        if (i + 1 < m.rows) out += ',';
        out += '\n';
    }
    out += "  ]";
}

} // namespace

std::string serialize_structure(const StructureFile& sf) {
    // Hand-rolled emitter: the format is fixed and numbers must carry 17
    // significant digits.
    std::string out;
    out += "{\n";
    out += "  \"dim\": " + std::to_string(sf.dim) + ",\n";
    out += "  \"brackets\": [";
    for (size_t b = 0; b < sf.brackets.size(); ++b) {
        out += b ? ",\n    " : "\n    ";
        out += "{\"i\": " + std::to_string(sf.brackets[b].i) +
               ", \"j\": " + std::to_string(sf.brackets[b].j) + ", \"v\": ";
        append_vec(out, sf.brackets[b].v);
        out += '}';
    }
    out += sf.brackets.empty() ? "],\n" : "\n  ],\n";
    out += "  \"gram\": ";
    append_matrix(out, sf.gram, "    ");
    out += ",\n  \"phi\": ";
    append_matrix(out, sf.phi, "    ");
    out += ",\n  \"xi\": ";
    append_vec(out, sf.xi);
    out += "\n}\n";
    return out;
}

namespace {

using nlohmann::json;

Vec parse_vec(const json& j, const char* what) {
    if (!j.is_array()) fail(ErrorKind::ParseError, std::string("structure file: ") + what + " must be an array");
    Vec v;
    v.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number()) fail(ErrorKind::ParseError, std::string("structure file: ") + what + " entries must be numbers");
        v.push_back(x.get<double>());
    }
    return v;
}

RealMatrix parse_matrix(const json& j, const char* what) {
    if (!j.is_array() || j.empty())
        fail(ErrorKind::ParseError, std::string("structure file: ") + what + " must be a non-empty array of rows");
    const int rows = static_cast<int>(j.size());
    RealMatrix m;
    for (int i = 0; i < rows; ++i) {
        const Vec row = parse_vec(j[i], what);
        if (i == 0) m = RealMatrix(rows, static_cast<int>(row.size()));
        if (static_cast<int>(row.size()) != m.cols)
            fail(ErrorKind::ParseError, std::string("structure file: ") + what + " rows have unequal lengths");
        for (int k = 0; k < m.cols; ++k) m(i, k) = row[k];
    }
    return m;
}

} // namespace

StructureFile parse_structure(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::ParseError, "structure file: invalid JSON");
    if (!j.is_object()) fail(ErrorKind::ParseError, "structure file: top level must be an object");
    for (const char* key : {"dim", "brackets", "gram", "phi", "xi"})
        if (!j.contains(key))
            fail(ErrorKind::ParseError, std::string("structure file: missing field '") + key + "'");

    StructureFile sf;
    if (!j["dim"].is_number_integer())
        fail(ErrorKind::ParseError, "structure file: dim must be an integer");
    sf.dim = j["dim"].get<int>();
    if (!j["brackets"].is_array())
        fail(ErrorKind::ParseError, "structure file: brackets must be an array");
    for (const auto& e : j["brackets"]) {
        if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("v") ||
            !e["i"].is_number_integer() || !e["j"].is_number_integer())
            fail(ErrorKind::ParseError, "structure file: bracket entries need integer i, j and vector v");
        sf.brackets.push_back({e["i"].get<int>(), e["j"].get<int>(), parse_vec(e["v"], "bracket v")});
    }
    sf.gram = parse_matrix(j["gram"], "gram");
    sf.phi = parse_matrix(j["phi"], "phi");
    sf.xi = parse_vec(j["xi"], "xi");
    return sf;
}

void write_structure_file(const std::string& path, const StructureFile& sf) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::ParseError, "cannot open '" + path + "' for writing");
    out << serialize_structure(sf);
    if (!out) fail(ErrorKind::ParseError, "failed writing '" + path + "'");
}

StructureFile read_structure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_structure(ss.str());
}

} // namespace kenmotsu
