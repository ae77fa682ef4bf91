#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "isoclinic/gallery.hpp"
#include "isoclinic/matcore.hpp"
#include "isoclinic/numrange.hpp"
#include "isoclinic/qec.hpp"
#include "isoclinic/subspaces.hpp"

// Matrix wire format:
//   {"rows": n, "cols": m, "data": [[[re, im], ... m pairs ...], ... n rows ...]}
// Error models: {"operators": [<matrix>, ...]}.
// Reports use ordered keys so identical inputs serialize byte-identically.
namespace isoclinic::io {

using Json = nlohmann::ordered_json;

/// Malformed or ill-shaped input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const Json& j);

Json model_to_json(const ErrorModel& model);
/// Accepts either a model document or a single matrix (a one-operator list).
std::vector<ComplexMatrix> operators_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);
/// Two-space indented dump followed by a newline.
std::string dump(const Json& j);

ComplexMatrix read_matrix_file(const std::filesystem::path& path);

Json to_json(const subspaces::CanonicalAngles& a);
Json to_json(const subspaces::IsoclinicReport& r);
Json to_json(const subspaces::FamilyReport& r);
Json to_json(const qec::KLReport& r);
Json to_json(const qec::ExtractionResult& r);
Json to_json(const numrange::NumRangeInterval& r);
Json to_json(const numrange::PairSymmetryReport& r);
Json to_json(const gallery::WongReport& r);

Json real_matrix_to_json(const Eigen::MatrixXd& a);

}  // namespace isoclinic::io
