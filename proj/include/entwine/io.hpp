#ifndef ENTWINE_IO_HPP
#define ENTWINE_IO_HPP

// Structure files: one JSON document with a "field" and one or more payload
// keys ("algebra", "coalgebra", "bialgebra", "entwining", "doi_hopf",
// "factorization", "ring_extension"). Structure constants are nested arrays
// of scalar strings:
//   mult[i][j][k]     coefficient of e_k in e_i e_j
//   comult[i][j][k]   coefficient of e_j (x) e_k in Delta(e_i)
//   psi[c][a][a2][c2] coefficient of e_a2 (x) e_c2 in psi(e_c (x) e_a)
//   coaction[a][a2][h] coefficient of e_a2 (x) h_h in rho(e_a)
//   action[c][h][c2]  coefficient of e_c2 in e_c . h_h
//   r[a][b][b2][a2]   coefficient of e_b2 (x) e_a2 in R(e_a (x) e_b)
//   i[r][s]           coefficient of e_s in i(e_r)

#include "entwine/corpus.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace entwine::io {

using json = nlohmann::json;

struct StructureFile {
    Field field;
    /// Payloads in file key order, keyed by their JSON key.
    std::vector<std::pair<std::string, corpus::Payload>> payloads;
    std::optional<CoalgebraData> dual_of;
};

/// Throws ParseError with a JSON-pointer location on malformed input. No
/// validation beyond shapes; see corpus::validate.
StructureFile parse_structure(const json& doc);
StructureFile parse_structure_text(const std::string& text);

Field parse_field(const json& j, const std::string& path = "/field");
json field_to_json(const Field& f);

json scalar_to_json(const Scalar& s);
/// Row-major nested arrays for the matrix of a map.
json linmap_to_json(const LinMap& m);

json payload_to_json(const corpus::Payload& p);
/// The structure file for a corpus entry.
json entry_to_json(const corpus::CorpusEntry& e);

/// The JSON key used for a payload kind.
std::string payload_key(corpus::Kind k);

} // namespace entwine::io

#endif
