#include "matwork/json_io.hpp"

#include <sstream>

namespace matwork::io {

mpq_class parse_rational(const json& j) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (j.is_string()) {
        mpq_class q;
        if (q.set_str(j.get<std::string>(), 10) != 0)
            throw ParseError("bad rational literal: " + j.get<std::string>());
        if (q.get_den() == 0)
            throw ParseError("zero denominator: " + j.get<std::string>());
        q.canonicalize();
        return q;
    }
    throw ParseError("expected integer or \"num/den\" string");
}

json rational_to_json(const mpq_class& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

ExactMatrix parse_matrix(const json& j) {
    if (!j.contains("field") || !j.contains("rows")) throw ParseError("matrix needs field and rows");
    FieldSpec field = FieldSpec::rationals();
    const json& fj = j.at("field");
    if (fj.is_string() && fj.get<std::string>() == "Q") {
        // rationals
    } else if (fj.is_object() && fj.contains("p")) {
        field = FieldSpec::prime_field(fj.at("p").get<long>());
    } else {
        throw ParseError("field must be \"Q\" or {\"p\": prime}");
    }
    std::vector<std::vector<mpq_class>> rows;
    for (const json& row : j.at("rows")) {
        std::vector<mpq_class> r;
        for (const json& entry : row) r.push_back(parse_rational(entry));
        rows.push_back(std::move(r));
    }
    return ExactMatrix(field, std::move(rows));
}

json matrix_to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j2 = 0; j2 < m.cols(); ++j2) row.push_back(rational_to_json(m.at(i, j2)));
        rows.push_back(std::move(row));
    }
    json field = m.field().is_rationals() ? json("Q")
                                          : json{{"p", m.field().characteristic()}};
    return json{{"field", field}, {"rows", rows}};
}

Matroid parse_matroid(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "linear") return Matroid::linear(parse_matrix(j.at("matrix")));
    if (type == "lines") {
        std::vector<Subset> lines;
        for (const json& l : j.at("lines")) lines.push_back(Subset::of(l.get<std::vector<int>>()));
        return Matroid::from_lines(j.at("n").get<int>(), lines);
    }
    if (type == "uniform") return Matroid::uniform(j.at("r").get<int>(), j.at("n").get<int>());
    if (type == "named") return Matroid::named(j.at("name").get<std::string>());
    throw ParseError("unknown matroid type: " + type);
}

json lattice_to_json(const FlatLattice& lat) {
    json by_rank = json::array();
    for (int r = 0; r <= lat.top_rank(); ++r) {
        json level = json::array();
        for (const Flat& f : lat.of_rank(r)) level.push_back(f.members.members());
        by_rank.push_back(std::move(level));
    }
    return json{{"rank", lat.top_rank()}, {"flats_by_rank", by_rank}};
}

MonomialAlgebraSpec parse_algebra_spec(const json& j) {
    if (!j.contains("caps") || !j.contains("degrees"))
        throw ParseError("algebra spec needs caps and degrees");
    return MonomialAlgebraSpec(j.at("caps").get<std::vector<int>>(),
                               j.at("degrees").get<std::vector<int>>());
}

namespace {

TropValue parse_trop_value(const json& j) {
    if (j.is_string() && j.get<std::string>() == "-inf") return TropValue::neg_inf();
    return TropValue::of(parse_rational(j));
}

}  // namespace

TropPoint parse_trop_point(const json& j) {
    TropPoint p;
    for (const json& c : j.at("coords")) p.coords.push_back(parse_trop_value(c));
    return p;
}

TropPolynomial parse_trop_polynomial(const json& j) {
    TropPolynomial p;
    if (!j.contains("n") || !j.contains("terms"))
        throw ParseError("tropical polynomial needs n and terms");
    p.n = j.at("n").get<std::size_t>();
    for (const json& t : j.at("terms")) {
        auto beta = t.at("beta").get<std::vector<long>>();
        if (beta.size() != p.n)
            throw ParseError("term exponent vector length does not match n");
        p.terms.push_back({std::move(beta), parse_trop_value(t.at("val"))});
    }
    return p;
}

json trop_value_to_json(const TropValue& v) {
    if (!v.finite) return "-inf";
    return rational_to_json(v.v);
}

CellComplex2 parse_complex(const json& j) {
    if (!j.contains("V") || !j.contains("edges") || !j.contains("faces"))
        throw ParseError("cell complex needs V, edges, and faces");
    CellComplex2 x;
    x.vertex_count = j.at("V").get<int>();
    for (const json& e : j.at("edges"))
        x.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    for (const json& f : j.at("faces")) {
        std::vector<std::pair<std::size_t, int>> walk;
        for (const json& step : f)
            walk.emplace_back(step.at(0).get<std::size_t>(), step.at(1).get<int>());
        x.faces.push_back(std::move(walk));
    }
    x.closed = j.value("closed", false);
    x.validate();
    return x;
}

json complex_to_json(const CellComplex2& x) {
    json edges = json::array();
    for (const auto& [t, h] : x.edges) edges.push_back(json::array({t, h}));
    json faces = json::array();
    for (const auto& walk : x.faces) {
        json w = json::array();
        for (auto [e, sign] : walk) w.push_back(json::array({e, sign}));
        faces.push_back(std::move(w));
    }
    return json{{"V", x.vertex_count}, {"edges", edges}, {"faces", faces}, {"closed", x.closed}};
}

json matching_to_json(const MatchingResult& m) {
    json pairs = json::array();
    for (const auto& [f, g] : m.pairs)
        pairs.push_back(json::array({f.members.members(), g.members.members()}));
    return json{
        {"r", m.r}, {"r_prime", m.r_prime}, {"complete", m.complete}, {"pairs", pairs}};
}

namespace {

std::string flat_label(const Flat& f) {
    std::string s = "{";
    bool first = true;
    for (int i : f.members.members()) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

}  // namespace

std::string matching_to_dot(const Matroid& m, const MatchingResult& res) {
    ContainmentGraph g = ContainmentGraph::build(m, res.r, res.r_prime);
    std::ostringstream out;
    out << "graph matching {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < g.left.size(); ++i)
        out << "  L" << i << " [label=\"" << flat_label(g.left[i]) << "\", shape=circle];\n";
    for (std::size_t j = 0; j < g.right.size(); ++j)
        out << "  R" << j << " [label=\"" << flat_label(g.right[j]) << "\", shape=box];\n";
    for (std::size_t i = 0; i < g.left.size(); ++i)
        for (std::size_t j : g.adj[i]) {
            out << "  L" << i << " -- R" << j;
            if (res.assignment.size() > i && res.assignment[i] == j)
                out << " [style=bold, penwidth=2]";
            out << ";\n";
        }
    out << "}\n";
    return out.str();
}

json omega_matrix_dump(const MobiusAlgebra& a, int r, int r_prime, const ExactMatrix& m) {
    json rows = json::array(), cols = json::array();
    for (std::size_t i = 0; i < a.lattice().of_rank(r_prime).size(); ++i) rows.push_back(i);
    for (std::size_t i = 0; i < a.lattice().of_rank(r).size(); ++i) cols.push_back(i);
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"r", r}, {"r_prime", r_prime}, {"rows", rows}, {"cols", cols},
                {"entries", entries}};
}

}  // namespace matwork::io
