// Command-line front end: canonical angles, isoclinic tests, Knill-Laflamme
// checks, family extraction and the worked-example gallery.
//
// Exit codes: 0 = property holds, 1 = property fails, 2 = usage or parse error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isoclinic/gallery.hpp"
#include "isoclinic/json_io.hpp"
#include "isoclinic/numrange.hpp"
#include "isoclinic/qec.hpp"
#include "isoclinic/subspaces.hpp"

namespace fs = std::filesystem;
using namespace isoclinic;
using io::Json;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

struct CliConfig {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string output;  // empty = stdout
  std::string format = "json";

  Tolerance tolerance() const { return Tolerance(tol); }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw UsageError(cfg.output + ": cannot open for writing");
  out << text;
}

void require_json(const CliConfig& cfg) {
  if (cfg.format != "json") throw UsageError("--format " + cfg.format + " is not supported here");
}

Json with_tol(const CliConfig& cfg, Json body) {
  Json out;
  out["tol"] = cfg.tol;
  for (auto& [key, value] : body.items()) out[key] = value;
  return out;
}

Subspace subspace_file(const fs::path& path, const Tolerance& tol) {
  const ComplexMatrix raw = io::read_matrix_file(path);
  try {
    return subspaces::subspace_from_columns(raw, tol);
  } catch (const DomainError& e) {
    throw io::ParseError(path.string() + ": " + e.what());
  }
}

OrthProjection projection_file(const fs::path& path) {
  const ComplexMatrix m = io::read_matrix_file(path);
  try {
    return OrthProjection(m);
  } catch (const DomainError& e) {
    throw io::ParseError(path.string() + ": " + e.what());
  }
}

ErrorModel model_files(const std::vector<std::string>& paths) {
  std::vector<ComplexMatrix> ops;
  for (const auto& p : paths) {
    std::vector<ComplexMatrix> part;
    try {
      part = io::operators_from_json(io::read_json_file(p));
    } catch (const io::ParseError& e) {
      const std::string msg = e.what();
      throw io::ParseError(msg.rfind(p, 0) == 0 ? msg : p + ": " + msg);
    }
    ops.insert(ops.end(), part.begin(), part.end());
  }
  return ErrorModel(std::move(ops));
}

int cmd_angles(const CliConfig& cfg, const std::string& left, const std::string& right) {
  require_json(cfg);
  const Subspace v = subspace_file(left, cfg.tolerance());
  const Subspace w = subspace_file(right, cfg.tolerance());
  if (v.ambient_dim() != w.ambient_dim()) {
    throw io::ParseError(left + " and " + right + " have different row counts");
  }
  emit(cfg, io::dump(with_tol(cfg, io::to_json(subspaces::canonical_angles(v, w)))));
  return kHolds;
}

int cmd_isoclinic(const CliConfig& cfg, const std::vector<std::string>& files,
                  std::size_t samples) {
  require_json(cfg);
  std::vector<Subspace> family;
  for (const auto& f : files) family.push_back(subspace_file(f, cfg.tolerance()));
  for (const auto& s : family) {
    if (s.ambient_dim() != family.front().ambient_dim() || s.dim() != family.front().dim()) {
      throw io::ParseError("all subspaces must share ambient and subspace dimension");
    }
  }
  const auto report = subspaces::family_isoclinic_check(family, cfg.tolerance());
  Json body = io::to_json(report);
  for (std::size_t k = 0; k < report.pairs.size(); ++k) {
    const auto& pr = report.pairs[k];
    const auto fwd = subspaces::ratio_probe(family[pr.i], family[pr.j], samples, cfg.seed);
    const auto bwd = subspaces::ratio_probe(family[pr.j], family[pr.i], samples, cfg.seed);
    Json probe;
    probe["samples"] = samples;
    probe["forward"] = Json::array({fwd.min_ratio, fwd.max_ratio});
    probe["backward"] = Json::array({bwd.min_ratio, bwd.max_ratio});
    body["pairs"][k]["ratio_probe"] = std::move(probe);
  }
  emit(cfg, io::dump(with_tol(cfg, std::move(body))));
  return report.isoclinic ? kHolds : kFails;
}

int cmd_klcheck(const CliConfig& cfg, const std::string& code,
                const std::vector<std::string>& errors) {
  require_json(cfg);
  const Subspace c = subspace_file(code, cfg.tolerance());
  const ErrorModel model = model_files(errors);
  if (c.ambient_dim() != model.dim()) {
    throw io::ParseError(code + ": code dimension does not match the error operators");
  }
  const auto rep = qec::kl_check(c, model, cfg.tolerance());
  emit(cfg, io::dump(with_tol(cfg, io::to_json(rep))));
  return rep.correctable ? kHolds : kFails;
}

int cmd_extract(const CliConfig& cfg, const std::string& code,
                const std::vector<std::string>& errors, const std::string& outdir) {
  require_json(cfg);
  const Subspace c = subspace_file(code, cfg.tolerance());
  const ErrorModel model = model_files(errors);
  if (c.ambient_dim() != model.dim()) {
    throw io::ParseError(code + ": code dimension does not match the error operators");
  }
  qec::ExtractionResult res;
  try {
    res = qec::extract_isoclinic_family(c, model, cfg.tolerance());
  } catch (const PreconditionError& e) {
    std::cerr << "extract: " << e.what() << '\n';
    return kFails;
  } catch (const DegeneracyError& e) {
    std::cerr << "extract: " << e.what() << '\n';
    return kFails;
  }
  fs::create_directories(outdir);
  for (std::size_t i = 0; i < res.subspaces.size(); ++i) {
    io::write_json_file(fs::path(outdir) / ("subspace_" + std::to_string(i + 1) + ".json"),
                        io::matrix_to_json(res.subspaces[i].basis()));
  }
  const std::string report = io::dump(with_tol(cfg, io::to_json(res)));
  std::ofstream(fs::path(outdir) / "extraction.json") << report;
  emit(cfg, report);
  return res.family_isoclinic ? kHolds : kFails;
}

int cmd_converse(const CliConfig& cfg, const std::string& a, const std::string& b) {
  require_json(cfg);
  const OrthProjection p1 = projection_file(a);
  const OrthProjection p2 = projection_file(b);
  if (p1.ambient_dim() != p2.ambient_dim() || p1.rank() != p2.rank()) {
    throw io::ParseError(a + " and " + b + " must have equal size and rank");
  }
  std::pair<qec::KLReport, qec::KLReport> reps;
  try {
    reps = qec::converse_check(p1, p2, cfg.tolerance());
  } catch (const PreconditionError& e) {
    std::cerr << "converse: " << e.what() << '\n';
    return kFails;
  }
  Json body;
  body["code_1"] = io::to_json(reps.first);
  body["code_2"] = io::to_json(reps.second);
  emit(cfg, io::dump(with_tol(cfg, std::move(body))));
  return reps.first.correctable && reps.second.correctable ? kHolds : kFails;
}

int cmd_numrange(const CliConfig& cfg, const std::string& file, std::size_t k) {
  require_json(cfg);
  const ComplexMatrix a = io::read_matrix_file(file);
  numrange::NumRangeInterval iv;
  try {
    iv = numrange::hermitian_rank_k_range(a, k, Tolerance(cfg.tol, true));
  } catch (const DomainError& e) {
    throw io::ParseError(file + ": " + e.what());
  }
  emit(cfg, io::dump(with_tol(cfg, io::to_json(iv))));
  return iv.empty ? kFails : kHolds;
}

int cmd_witness(const CliConfig& cfg, const std::string& file, std::size_t k, double lambda) {
  require_json(cfg);
  const OrthProjection p = projection_file(file);
  OrthProjection r = numrange::projection_witness(p, k, lambda);
  emit(cfg, io::dump(io::matrix_to_json(r.matrix())));
  return kHolds;
}

int cmd_gallery_bitflip(const CliConfig& cfg, double p) {
  require_json(cfg);
  emit(cfg, io::dump(io::model_to_json(gallery::bitflip_model(p))));
  return kHolds;
}

int cmd_gallery_rotate(const CliConfig& cfg, double p, double phi) {
  require_json(cfg);
  emit(cfg, io::dump(io::model_to_json(qec::rotate_model(gallery::bitflip_model(p), phi))));
  return kHolds;
}

int cmd_gallery_code(const CliConfig& cfg, int which) {
  require_json(cfg);
  if (which != 1 && which != 2) throw UsageError("--which must be 1 or 2");
  const Subspace c = which == 1 ? gallery::code_c1() : gallery::code_c2();
  emit(cfg, io::dump(io::matrix_to_json(c.basis())));
  return kHolds;
}

int cmd_gallery_surface(const CliConfig& cfg, std::size_t p_steps, std::size_t phi_steps) {
  const auto surface = gallery::theta_surface(p_steps, phi_steps);
  if (cfg.format == "csv") {
    std::ostringstream os;
    gallery::write_surface_csv(os, surface);
    emit(cfg, os.str());
    return kHolds;
  }
  Json rows = Json::array();
  for (const auto& pt : surface) rows.push_back(Json::array({pt.p, pt.phi, pt.theta}));
  Json body;
  body["columns"] = Json::array({"p", "phi", "theta"});
  body["rows"] = std::move(rows);
  emit(cfg, io::dump(body));
  return kHolds;
}

int cmd_gallery_wong(const CliConfig& cfg) {
  require_json(cfg);
  const auto [a, b] = gallery::wong_example_pair();
  const auto rep = gallery::wong_equation_check(a, b, cfg.tolerance());
  Json body;
  body["A"] = io::matrix_to_json(a.m);
  body["B"] = io::matrix_to_json(b.m);
  body["basis_A"] = io::matrix_to_json(gallery::graph_subspace(a).basis());
  body["basis_B"] = io::matrix_to_json(gallery::graph_subspace(b).basis());
  body["report"] = io::to_json(rep);
  emit(cfg, io::dump(with_tol(cfg, std::move(body))));
  return rep.holds ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical angles, isoclinic subspaces and Knill-Laflamme checks"};
  app.require_subcommand(1);
  CliConfig cfg;
  app.add_option("--tol", cfg.tol, "Absolute tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized probes");
  app.add_option("--out", cfg.output, "Output file (default stdout)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::string left, right;
  auto* angles = app.add_subcommand("angles", "Canonical angles between two column spans");
  angles->add_option("left", left)->required();
  angles->add_option("right", right)->required();

  std::vector<std::string> iso_files;
  std::size_t samples = 64;
  auto* iso = app.add_subcommand("isoclinic", "Pairwise isoclinic test of a family of spans");
  iso->add_option("files", iso_files)->required()->expected(2, -1);
  iso->add_option("--samples", samples, "Random vectors per ratio probe")->check(CLI::PositiveNumber);

  std::string code;
  std::vector<std::string> errors;
  auto* kl = app.add_subcommand("klcheck", "Knill-Laflamme conditions for a code");
  kl->add_option("code", code)->required();
  kl->add_option("errors", errors)->required()->expected(1, -1);

  std::string outdir;
  auto* ext = app.add_subcommand("extract", "Isoclinic family induced by a correctable code");
  ext->add_option("code", code)->required();
  ext->add_option("errors", errors)->required()->expected(1, -1);
  ext->add_option("--outdir", outdir)->required();

  std::string proj1, proj2;
  auto* conv = app.add_subcommand("converse", "KL check of {P1/sqrt2, P2/sqrt2} on both ranges");
  conv->add_option("proj1", proj1)->required();
  conv->add_option("proj2", proj2)->required();

  std::string matrix_file;
  std::size_t k = 1;
  auto* nr = app.add_subcommand("numrange", "Rank-k numerical range of a Hermitian matrix");
  nr->add_option("matrix", matrix_file)->required();
  nr->add_option("--k", k)->required()->check(CLI::PositiveNumber);

  double lambda = 0.0;
  auto* wit = app.add_subcommand("witness", "Rank-k projection R with R P R = lambda R");
  wit->add_option("proj", matrix_file)->required();
  wit->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  wit->add_option("--lambda", lambda)->required()->check(CLI::Range(0.0, 1.0));

  auto* gal = app.add_subcommand("gallery", "Worked examples");
  gal->require_subcommand(1);
  double p = 0.3, phi = 0.0;
  auto* g_bitflip = gal->add_subcommand("bitflip", "Bit-flip error model on two qubits");
  g_bitflip->add_option("--p", p)->required();
  auto* g_rotate = gal->add_subcommand("rotate", "Rotated bit-flip error model");
  g_rotate->add_option("--p", p)->required();
  g_rotate->add_option("--phi", phi)->required();
  int which = 1;
  auto* g_code = gal->add_subcommand("code", "Basis of code C1 or C2");
  g_code->add_option("--which", which);
  std::size_t steps = 50, p_steps = 0, phi_steps = 0;
  auto* g_surface = gal->add_subcommand("surface", "theta(p, phi) grid");
  g_surface->add_option("--steps", steps, "Grid points per axis")->check(CLI::PositiveNumber);
  g_surface->add_option("--p-steps", p_steps)->check(CLI::PositiveNumber);
  g_surface->add_option("--phi-steps", phi_steps)->check(CLI::PositiveNumber);
  auto* g_wong = gal->add_subcommand("wong", "Graph-subspace equation for the diag(1,-1) example pair");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*angles) return cmd_angles(cfg, left, right);
    if (*iso) return cmd_isoclinic(cfg, iso_files, samples);
    if (*kl) return cmd_klcheck(cfg, code, errors);
    if (*ext) return cmd_extract(cfg, code, errors, outdir);
    if (*conv) return cmd_converse(cfg, proj1, proj2);
    if (*nr) return cmd_numrange(cfg, matrix_file, k);
    if (*wit) return cmd_witness(cfg, matrix_file, k, lambda);
    if (*g_bitflip) return cmd_gallery_bitflip(cfg, p);
    if (*g_rotate) return cmd_gallery_rotate(cfg, p, phi);
    if (*g_code) return cmd_gallery_code(cfg, which);
    if (*g_surface) {
      return cmd_gallery_surface(cfg, p_steps ? p_steps : steps, phi_steps ? phi_steps : steps);
    }
    if (*g_wong) return cmd_gallery_wong(cfg);
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFails;
  }
  return kUsage;
}
