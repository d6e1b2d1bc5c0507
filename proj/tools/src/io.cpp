#include "strata/io.hpp"

#include <fstream>
#include <sstream>

#include "strata/version.hpp"

namespace strata::io {

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("FileError", path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("FileError", path + ": " + e.what());
  }
}

cxd complex_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error("FileError", what + ": complex entries must be [re, im] pairs");
  return cxd(j[0].get<double>(), j[1].get<double>());
}

int int_field(const json& j, const char* key, const std::string& what) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw Error("FileError", what + ": missing integer field '" + key + "'");
  return j[key].get<int>();
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("FileError", path + ": cannot open file for writing");
  out << j.dump(2) << '\n';
}

}  // namespace

json complex_to_json(const cxd& z) { return json::array({z.real(), z.imag()}); }

json vector_to_json(const Vec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

json matrix_to_json(const Mat& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

json real_vector_to_json(const RVec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Vec vector_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw Error("FileError", what + ": expected an array");
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i], what);
  return v;
}

LoadedState load_state_file(const std::string& path) {
  const json j = parse_file(path);
  const int n = int_field(j, "n", path);
  const int m = int_field(j, "m", path);
  if (!j.contains("vec"))
    throw Error("FileError", path + ": missing field 'vec'");
  Vec v = vector_from_json(j["vec"], path);
  if (v.size() != static_cast<Eigen::Index>(n) * m)
    throw DimensionMismatchError(path + ": vec has " + std::to_string(v.size()) +
                                 " entries, expected n*m = " + std::to_string(n * m));

  const double norm = v.norm();
  if (norm < 1e-12) throw ZeroStateError(path + ": state vector is numerically zero");
  if (std::abs(norm - 1.0) > 1e-3)
    throw Error("NotNormalized",
                path + ": vector norm " + std::to_string(norm) + " too far from 1");
  LoadedState out{PureState::oriented(n, m, v), {}};
  if (std::abs(norm - 1.0) > 1e-9)
    out.warnings.push_back("state renormalized (input norm deviated by " +
                           std::to_string(std::abs(norm - 1.0)) + ")");
  return out;
}

void save_state_file(const std::string& path, const PureState& state) {
  json j;
  j["n"] = state.left_dim();
  j["m"] = state.right_dim();
  j["vec"] = vector_to_json(state.vec());
  write_file(path, j);
}

TensorExpression load_expression_file(const std::string& path) {
  const json j = parse_file(path);
  const int n = int_field(j, "n", path);
  const int m = int_field(j, "m", path);
  const int k = int_field(j, "k", path);
  if (!j.contains("left") || !j.contains("right"))
    throw Error("FileError", path + ": missing 'left'/'right' vector lists");
  const json& left = j["left"];
  const json& right = j["right"];
  if (!left.is_array() || !right.is_array() || static_cast<int>(left.size()) != k ||
      static_cast<int>(right.size()) != k)
    throw UnequalLengthError(path + ": expected k = " + std::to_string(k) +
                             " left and right vectors");
  std::vector<std::pair<Vec, Vec>> terms;
  terms.reserve(k);
  for (int i = 0; i < k; ++i) {
    Vec x = vector_from_json(left[i], path);
    Vec y = vector_from_json(right[i], path);
    if (x.size() != n || y.size() != m)
      throw DimensionMismatchError(path + ": term " + std::to_string(i + 1) +
                                   " has wrong vector lengths");
    terms.emplace_back(std::move(x), std::move(y));
  }
  return TensorExpression(n, m, std::move(terms));
}

void save_expression_file(const std::string& path, const TensorExpression& expr) {
  json j;
  j["n"] = expr.left_dim();
  j["m"] = expr.right_dim();
  j["k"] = expr.term_count();
  json left = json::array(), right = json::array();
  for (const auto& [x, y] : expr.terms()) {
    left.push_back(vector_to_json(x));
    right.push_back(vector_to_json(y));
  }
  j["left"] = left;
  j["right"] = right;
  write_file(path, j);
}

json ReportEnvelope::to_json() const {
  json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["inputs"] = inputs;
  j["result"] = result;
  j["warnings"] = warnings;
  return j;
}

namespace {

void print_human(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      print_human(out, value, indent + 2);
    } else {
      out << pad << key << ": " << value.dump() << '\n';
    }
  }
}

}  // namespace

std::string ReportEnvelope::human_readable() const {
  const json j = to_json();
  std::ostringstream out;
  out << "== " << command << " (strata " << kVersion << ") ==\n";
  print_human(out, j["inputs"], 0);
  out << "result:\n";
  print_human(out, j["result"], 2);
  for (const auto& w : warnings) out << "warning: " << w << '\n';
  return out.str();
}

}  // namespace strata::io
