#include "isoclinic/json_io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace isoclinic::io {

namespace {

double finite_number(const Json& v, const char* what) {
  if (!v.is_number()) {
    throw ParseError(std::string(what) + " is not a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw ParseError(std::string(what) + " is not finite");
  }
  return x;
}

Json complex_pair(const Complex& z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json matrix_to_json(const ComplexMatrix& a) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(complex_pair(a(i, j)));
    data.push_back(std::move(row));
  }
  Json out;
  out["rows"] = a.rows();
  out["cols"] = a.cols();
  out["data"] = std::move(data);
  return out;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
    throw ParseError("matrix must be an object with rows, cols and data");
  }
  const auto nonneg = [](const Json& v) { return v.is_number_integer() && v.get<std::int64_t>() >= 0; };
  if (!nonneg(j["rows"]) || !nonneg(j["cols"])) {
    throw ParseError("rows and cols must be nonnegative integers");
  }
  const auto rows = j["rows"].get<Eigen::Index>();
  const auto cols = j["cols"].get<Eigen::Index>();
  const Json& data = j["data"];
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows) {
    throw ParseError("data must hold exactly " + std::to_string(rows) + " rows");
  }
  ComplexMatrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = data[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError("row " + std::to_string(i) + " must hold exactly " + std::to_string(cols) +
                       " entries");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const Json& z = row[static_cast<std::size_t>(k)];
      if (!z.is_array() || z.size() != 2) {
        throw ParseError("entry (" + std::to_string(i) + ", " + std::to_string(k) +
                         ") must be a [re, im] pair");
      }
      a(i, k) = Complex(finite_number(z[0], "real part"), finite_number(z[1], "imaginary part"));
    }
  }
  return a;
}

Json model_to_json(const ErrorModel& model) {
  Json ops = Json::array();
  for (const auto& e : model.kraus()) ops.push_back(matrix_to_json(e));
  Json out;
  out["operators"] = std::move(ops);
  return out;
}

std::vector<ComplexMatrix> operators_from_json(const Json& j) {
  if (j.is_object() && j.contains("operators")) {
    const Json& ops = j["operators"];
    if (!ops.is_array() || ops.empty()) {
      throw ParseError("operators must be a nonempty array");
    }
    std::vector<ComplexMatrix> out;
    for (const auto& op : ops) out.push_back(matrix_from_json(op));
    return out;
  }
  return {matrix_from_json(j)};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path.string() + ": cannot open");
  }
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error(path.string() + ": cannot open for writing");
  }
  out << dump(j);
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  try {
    return matrix_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Json real_matrix_to_json(const Eigen::MatrixXd& a) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const subspaces::CanonicalAngles& a) {
  Json out;
  out["angles"] = a.angles;
  out["cosines"] = a.cosines;
  return out;
}

Json to_json(const subspaces::IsoclinicReport& r) {
  Json out;
  out["isoclinic"] = r.isoclinic;
  out["lambda"] = r.lambda;
  out["canonical_angle"] = r.canonical_angle;
  out["lambda_angle"] = r.lambda_angle;
  out["spread"] = r.spread;
  Json res;
  res["unitary_multiple"] = r.residuals.unitary_multiple;
  res["compression_v"] = r.residuals.compression_v;
  res["compression_w"] = r.residuals.compression_w;
  out["residuals"] = std::move(res);
  Json conds;
  conds["equal_angles"] = r.equal_angles;
  conds["unitary_multiple"] = r.unitary_multiple;
  conds["compressions"] = r.compressions;
  out["conditions"] = std::move(conds);
  return out;
}

Json to_json(const subspaces::FamilyReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json entry;
    entry["i"] = p.i;
    entry["j"] = p.j;
    entry["report"] = to_json(p.report);
    pairs.push_back(std::move(entry));
  }
  Json out;
  out["isoclinic"] = r.isoclinic;
  out["pairs"] = std::move(pairs);
  return out;
}

Json to_json(const qec::KLReport& r) {
  Json out;
  out["correctable"] = r.correctable;
  out["alpha"] = matrix_to_json(r.alpha);
  out["residuals"] = real_matrix_to_json(r.residuals);
  out["nondegenerate"] = r.nondegenerate;
  out["gram_spectrum"] = r.gram_spectrum;
  out["alpha_psd"] = r.alpha_psd;
  out["tol"] = r.tolerance;
  return out;
}

Json to_json(const qec::ExtractionResult& r) {
  Json subspaces = Json::array();
  for (const auto& s : r.subspaces) subspaces.push_back(matrix_to_json(s.basis()));
  Json isometries = Json::array();
  for (const auto& u : r.partial_isometries) isometries.push_back(matrix_to_json(u));
  Json out;
  out["subspaces"] = std::move(subspaces);
  out["partial_isometries"] = std::move(isometries);
  out["lambda_matrix"] = matrix_to_json(r.lambda_matrix);
  out["pairwise_lambda"] = real_matrix_to_json(r.pairwise_lambda);
  out["identity_residuals"] = real_matrix_to_json(r.identity_residuals);
  out["identities_hold"] = r.identities_hold;
  out["family"] = to_json(r.family);
  out["family_isoclinic"] = r.family_isoclinic;
  return out;
}

Json to_json(const numrange::NumRangeInterval& r) {
  Json out;
  out["k"] = r.k;
  out["lower"] = r.lower;
  out["upper"] = r.upper;
  out["empty"] = r.empty;
  return out;
}

Json to_json(const numrange::PairSymmetryReport& r) {
  Json out;
  out["pqp_holds"] = r.pqp_holds;
  out["qpq_holds"] = r.qpq_holds;
  out["mu_pqp"] = r.mu_pqp;
  out["mu_qpq"] = r.mu_qpq;
  out["residual_pqp"] = r.residual_pqp;
  out["residual_qpq"] = r.residual_qpq;
  out["verdicts_agree"] = r.verdicts_agree;
  out["mu_agree"] = r.mu_agree;
  out["trace_identity_gap"] = r.trace_identity_gap;
  return out;
}

Json to_json(const gallery::WongReport& r) {
  Json out;
  out["lambda_bestfit"] = r.lambda_bestfit;
  out["residual"] = r.residual;
  out["holds"] = r.holds;
  out["projector_lambda"] = r.projector_lambda;
  out["projector_residual"] = r.projector_residual;
  out["isoclinic"] = to_json(r.isoclinic);
  out["consistent"] = r.consistent;
  return out;
}

}  // namespace isoclinic::io
