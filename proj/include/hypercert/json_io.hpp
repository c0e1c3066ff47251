#pragma once

// JSON (and CSV) serialization for polynomials, matrices, graphs and run
// reports. All rational values are carried as exact decimal num/den strings.

#include "hypercert/certificates.hpp"
#include "hypercert/graphs.hpp"
#include "hypercert/mvpoly.hpp"
#include "hypercert/polymatrix.hpp"
#include "hypercert/qmatrix.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hypercert {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "hypercert/v1";

Json rational_to_json(const Q& v);   // {"num": "...", "den": "..."}
Q rational_from_json(const Json& j); // accepts the object form or "p/q" string

Json vector_to_json(const QVec& v);
QVec vector_from_json(const Json& j);

Json mvpoly_to_json(const MvPoly& p);
MvPoly mvpoly_from_json(const Json& j);

// Polynomial file bundle: polynomial + optional metadata (e vector, names,
// construction kind and parameters).
struct PolyFile {
    MvPoly poly;
    std::optional<QVec> e;
    std::vector<std::string> var_names;
    std::string kind;
    Json params;
};
Json polyfile_to_json(const PolyFile& f);
PolyFile polyfile_from_json(const Json& j);

Json qmatrix_to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);
// CSV with "p/q" literals, one row per line.
std::string qmatrix_to_csv(const QMatrix& m);

Json polymatrix_to_json(const PolyMatrix& m);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json gram_certificate_to_json(const GramCertificate& c);
GramCertificate gram_certificate_from_json(const Json& j);

Json separation_certificate_to_json(const SeparationCertificate& c);
SeparationCertificate separation_certificate_from_json(const Json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// Loads a graph from either the JSON format or edge-list text, by extension.
Graph load_graph(const std::string& path);

} // namespace hypercert
