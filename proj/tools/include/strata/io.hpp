// File formats and the machine-readable report envelope shared by all CLI
// subcommands. States and expressions travel as UTF-8 JSON with complex
// entries encoded as [re, im] pairs; vectors are row-major, index
// (j-1)*m + (s-1) for e_j (x) d_s.

#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "strata/states.hpp"
#include "strata/types.hpp"

namespace strata::io {

using json = nlohmann::ordered_json;

struct LoadedState {
  PureState state;
  std::vector<std::string> warnings;  // e.g. renormalization notice
};

// {"n": .., "m": .., "vec": [[re, im], ...]}. Norm within 1e-9 loads
// silently; within 1e-3 it is renormalized with a warning; beyond that
// the file is rejected.
LoadedState load_state_file(const std::string& path);
void save_state_file(const std::string& path, const PureState& state);

// {"n", "m", "k", "left": [k vectors of n pairs], "right": [k vectors of
// m pairs]}.
TensorExpression load_expression_file(const std::string& path);
void save_expression_file(const std::string& path, const TensorExpression& expr);

json complex_to_json(const cxd& z);
json vector_to_json(const Vec& v);
json matrix_to_json(const Mat& m);  // array of rows
json real_vector_to_json(const RVec& v);
Vec vector_from_json(const json& j, const std::string& what);

// Envelope for every subcommand: command, echoed inputs, payload,
// warnings, artifact version. Serialization order is fixed, so identical
// inputs yield byte-identical payloads.
struct ReportEnvelope {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  std::vector<std::string> warnings;

  json to_json() const;
  std::string human_readable() const;  // formatting layer over to_json()
};

}  // namespace strata::io
