#include "hypercert/json_io.hpp"

#include "hypercert/errors.hpp"

#include <fstream>
#include <sstream>

namespace hypercert {

Json rational_to_json(const Q& v) {
    Json j;
    j["num"] = v.get_num().get_str();
    j["den"] = v.get_den().get_str();
    return j;
}

Q rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Q(static_cast<long>(j.get<long long>()));
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw parse_error("rational: expected {num, den} object or string");
    Q num = parse_rational(j["num"].get<std::string>());
    Q den = parse_rational(j["den"].get<std::string>());
    if (den == 0) throw parse_error("rational: zero denominator");
    return num / den;
}

Json vector_to_json(const QVec& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(rational_str(x));
    return arr;
}

QVec vector_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("vector: expected array");
    QVec v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

Json mvpoly_to_json(const MvPoly& p) {
    Json j;
    j["nvars"] = p.nvars();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e;
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

MvPoly mvpoly_from_json(const Json& j) {
    if (!j.contains("nvars") || !j.contains("terms")) throw parse_error("polynomial: missing fields");
    MvPoly p(j["nvars"].get<size_t>());
    for (const auto& t : j["terms"]) {
        Exponents e = t["exp"].get<Exponents>();
        Q num = parse_rational(t["num"].get<std::string>());
        Q den = parse_rational(t["den"].get<std::string>());
        if (den == 0) throw parse_error("polynomial: zero denominator");
        p.add_term(e, num / den);
    }
    return p;
}

Json polyfile_to_json(const PolyFile& f) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["poly"] = mvpoly_to_json(f.poly);
    if (f.e) j["e"] = vector_to_json(*f.e);
    if (!f.var_names.empty()) j["varmap"] = f.var_names;
    if (!f.kind.empty()) j["kind"] = f.kind;
    if (!f.params.is_null()) j["params"] = f.params;
    return j;
}

PolyFile polyfile_from_json(const Json& j) {
    PolyFile f;
    if (j.contains("poly")) f.poly = mvpoly_from_json(j["poly"]);
    else f.poly = mvpoly_from_json(j); // bare polynomial files are accepted
    if (j.contains("e")) f.e = vector_from_json(j["e"]);
    if (j.contains("varmap")) f.var_names = j["varmap"].get<std::vector<std::string>>();
    if (j.contains("kind")) f.kind = j["kind"].get<std::string>();
    if (j.contains("params")) f.params = j["params"];
    return f;
}

Json qmatrix_to_json(const QMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < m.cols(); ++k) row.push_back(rational_str(m.at(i, k)));
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

QMatrix qmatrix_from_json(const Json& j) {
    QMatrix m(j["rows"].get<size_t>(), j["cols"].get<size_t>());
    const Json& rows = j["entries"];
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t k = 0; k < m.cols(); ++k) m.at(i, k) = rational_from_json(rows[i][k]);
    return m;
}

std::string qmatrix_to_csv(const QMatrix& m) {
    std::ostringstream os;
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t k = 0; k < m.cols(); ++k) {
            if (k) os << ",";
            os << rational_str(m.at(i, k));
        }
        os << "\n";
    }
    return os.str();
}

Json polymatrix_to_json(const PolyMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["nvars"] = m.nvars();
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < m.cols(); ++k) row.push_back(mvpoly_to_json(m.at(i, k)));
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["nverts"] = g.nverts();
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    j["edges"] = edges;
    return j;
}

Graph graph_from_json(const Json& j) {
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) edges.push_back({e[0].get<int>(), e[1].get<int>()});
    return Graph(j["nverts"].get<int>(), std::move(edges));
}

Json gram_certificate_to_json(const GramCertificate& c) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["target"] = mvpoly_to_json(c.target);
    Json basis = Json::array();
    for (const auto& b : c.basis) basis.push_back(mvpoly_to_json(b));
    j["basis"] = basis;
    j["gram"] = qmatrix_to_json(c.gram);
    return j;
}

GramCertificate gram_certificate_from_json(const Json& j) {
    GramCertificate c;
    c.target = mvpoly_from_json(j.at("target"));
    for (const auto& b : j.at("basis")) c.basis.push_back(mvpoly_from_json(b));
    c.gram = qmatrix_from_json(j.at("gram"));
    return c;
}

Json separation_certificate_to_json(const SeparationCertificate& c) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["target"] = mvpoly_to_json(c.target);
    Json func = Json::array();
    for (const auto& [e, v] : c.functional) {
        Json entry;
        entry["exp"] = e;
        entry["value"] = rational_str(v);
        func.push_back(entry);
    }
    j["functional"] = func;
    Json basis = Json::array();
    for (const auto& b : c.admissible_basis) basis.push_back(mvpoly_to_json(b));
    j["basis"] = basis;
    return j;
}

SeparationCertificate separation_certificate_from_json(const Json& j) {
    SeparationCertificate c;
    c.target = mvpoly_from_json(j.at("target"));
    for (const auto& entry : j.at("functional"))
        c.functional[entry.at("exp").get<Exponents>()] = rational_from_json(entry.at("value"));
    for (const auto& b : j.at("basis")) c.admissible_basis.push_back(mvpoly_from_json(b));
    return c;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write file: " + path);
    out << contents;
}

Graph load_graph(const std::string& path) {
    std::string text = read_file(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return graph_from_json(Json::parse(text));
    return Graph::from_edge_list_text(text);
}

} // namespace hypercert
