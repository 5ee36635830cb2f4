#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ellarr/coxeter_an.hpp"
#include "ellarr/elliptic.hpp"
#include "ellarr/homology.hpp"
#include "ellarr/pi1.hpp"

using namespace ellarr;
namespace fs = std::filesystem;

namespace {

constexpr const char* kSchema = "ellarr-report-1";

std::string fnv1a(const std::string& s) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream ss;
  ss << std::hex << h;
  return ss.str();
}

ArrangementSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("spec parse error in " + path + ": " + e.what());
  }
  auto spec = spec_from_json(j);
  validate_spec(spec);
  return spec;
}

// Face categories are cached on disk keyed by a content hash of the spec.
ToricBundle cached_bundle(const ArrangementSpec& spec, int margin_cap) {
  std::string key = fnv1a(spec_to_json(spec).dump() + "#" + std::to_string(margin_cap));
  fs::path dir = ".ellarr-cache";
  fs::path file = dir / (key + ".json");
  if (fs::exists(file)) {
    std::ifstream in(file);
    nlohmann::json j;
    in >> j;
    return bundle_from_json(j);
  }
  ToricBundle bundle = toric_face_category(spec, margin_cap);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!ec) {
    std::ofstream out(file);
    out << bundle_to_json(bundle).dump(2) << "\n";
  }
  return bundle;
}

void emit(const nlohmann::json& report, const std::string& out_path) {
  std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write output file: " + out_path);
    out << text;
  }
}

nlohmann::json face_counts(const ToricBundle& bundle) {
  std::vector<long long> counts(bundle.spec.d + 1, 0);
  for (const auto& o : bundle.cat.objects) ++counts[o.rank];
  return counts;
}

nlohmann::json abelian_json(const AbelianInvariants& inv) {
  nlohmann::json j;
  j["free_rank"] = inv.free_rank;
  j["torsion"] = nlohmann::json::array();
  for (const auto& t : inv.torsion) j["torsion"].push_back(t.get_str());
  return j;
}

nlohmann::json homology_json(const HomologySummary& h) {
  nlohmann::json j;
  j["betti"] = h.betti;
  j["torsion"] = nlohmann::json::array();
  for (const auto& degree : h.torsion) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& f : degree) t.push_back(f.get_str());
    j["torsion"].push_back(t);
  }
  return j;
}

struct PipelineOut {
  nlohmann::json report;
  bool pass = true;
};

PipelineOut run_faces(const ArrangementSpec& spec, int margin_cap) {
  PipelineOut out;
  auto bundle = cached_bundle(spec, margin_cap);
  out.report["command"] = "faces";
  out.report["counts_by_rank"] = face_counts(bundle);
  out.report["margin"] = bundle.margin_used;
  out.report["category"] = category_to_json(bundle.cat);
  nlohmann::json geom = nlohmann::json::array();
  for (const auto& f : bundle.geom) {
    nlohmann::json g;
    g["id"] = f.id;
    g["dim"] = f.dim;
    g["support"] = f.support;
    nlohmann::json bc = nlohmann::json::array();
    for (const auto& c : f.barycenter) bc.push_back(rat_to_string(c));
    g["barycenter"] = bc;
    geom.push_back(g);
  }
  out.report["geometry"] = geom;
  return out;
}

PipelineOut run_model(const ArrangementSpec& spec, int margin_cap, bool certify) {
  PipelineOut out;
  auto model = build_model(cached_bundle(spec, margin_cap));
  out.report["command"] = "model";
  out.report["f_vector"] = f_vector(model);
  out.report["euler_characteristic"] = model_euler_characteristic(model);
  if (certify) {
    auto cw = verify_cw(model);
    out.report["cw_certified"] = cw.all_pass;
    out.report["cw_objects_checked"] = cw.entries.size();
    out.pass = cw.all_pass;
  }
  return out;
}

PipelineOut run_homology(const ArrangementSpec& spec, int margin_cap, int max_dim) {
  PipelineOut out;
  auto model = build_model(cached_bundle(spec, margin_cap));
  out.report["command"] = "homology";
  out.report["homology"] = homology_json(homology(model.cat, max_dim));
  return out;
}

PipelineOut run_pi1(const ArrangementSpec& spec, int margin_cap, bool certify) {
  PipelineOut out;
  auto model = build_model(cached_bundle(spec, margin_cap));
  auto graph = chamber_graph(model.bundle);
  auto tree = spanning_tree_chambers(model.bundle, graph);
  auto pres = presentation(model, graph, tree, certify);
  auto simplified = tietze_simplify(pres);
  out.report["command"] = "pi1";
  out.report["presentation"] = presentation_to_json(pres);
  out.report["simplified"] = presentation_to_json(simplified);
  out.report["abelianization"] = abelian_json(abelianization(pres));
  return out;
}

PipelineOut run_an(int n, bool certify) {
  PipelineOut out;
  auto cat = cyclic_partitions_category(n);
  out.report["command"] = "an";
  out.report["n"] = n;
  out.report["objects"] = cat.objects.size();
  out.report["morphisms"] = cat.morphisms.size();
  out.report["walls"] = an_walls(n).size();
  out.report["chambers"] = an_chambers(n).size();
  out.report["tree_size"] = an_tree(n).size();
  auto pres = an_presentation(n);
  out.report["presentation"] = presentation_to_json(pres);
  out.report["abelianization"] = abelian_json(abelianization(pres));
  if (certify && n <= 3) {
    auto iso = verify_an_iso(n);
    out.report["geometric_iso"] = {{"found", true}, {"objects", iso.obj_map.size()}};
  }
  return out;
}

PipelineOut run_check(const ArrangementSpec& spec, int margin_cap) {
  PipelineOut out;
  out.report["command"] = "check";
  nlohmann::json checks;
  auto bundle = cached_bundle(spec, margin_cap);
  checks["face_category_valid"] = validate(bundle.cat).ok();
  auto model = build_model(bundle);
  checks["model_valid"] = validate(model.cat).ok();
  checks["euler_cells_equals_nerve"] =
      euler_characteristic_cells(model.cat) == euler_characteristic_nerve(model.cat);
  auto cw = verify_cw(model);
  checks["cw_certified"] = cw.all_pass;
  auto graph = chamber_graph(model.bundle);
  auto tree = spanning_tree_chambers(model.bundle, graph);
  size_t fd = graph.chambers.size();
  checks["model_tree_size"] = model_tree(model, graph, tree).size() == fd * fd - 1;
  auto pres = presentation(model, graph, tree, false);
  auto inv = abelianization(pres);
  auto h = homology(model.cat, 2);
  checks["abelianization_matches_h1"] =
      inv.free_rank == h.betti[1] && inv.torsion == h.torsion[1];
  out.report["checks"] = checks;
  bool all = true;
  for (const auto& [k, v] : checks.items()) all = all && v.get<bool>();
  out.report["all_pass"] = all;
  out.pass = all;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial models of elliptic arrangement complements"};
  app.require_subcommand(1);

  std::string spec_path, out_path;
  int margin_cap = 64, max_dim = -1, an_n = 1;
  bool no_certify = false;
  app.add_option("--out", out_path, "write the report to a file instead of stdout");
  app.add_option("--margin-cap", margin_cap, "largest lift margin to try")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-dim", max_dim, "truncate nerve chains at this dimension");
  app.add_flag("--no-certify", no_certify, "skip CW certification");

  auto* faces = app.add_subcommand("faces", "face category of the toric arrangement");
  faces->add_option("spec", spec_path, "arrangement spec JSON")->required();
  auto* model = app.add_subcommand("model", "elliptic model: f-vector, Euler characteristic, CW");
  model->add_option("spec", spec_path, "arrangement spec JSON")->required();
  auto* hom = app.add_subcommand("homology", "Betti numbers and torsion of the model nerve");
  hom->add_option("spec", spec_path, "arrangement spec JSON")->required();
  auto* pi1 = app.add_subcommand("pi1", "fundamental group presentation");
  pi1->add_option("spec", spec_path, "arrangement spec JSON")->required();
  auto* an = app.add_subcommand("an", "type A_n cyclic-partition pipeline");
  an->add_option("n", an_n, "rank of the arrangement")->required()->check(CLI::PositiveNumber);
  auto* check = app.add_subcommand("check", "full invariant suite");
  check->add_option("spec", spec_path, "arrangement spec JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    PipelineOut out;
    if (faces->parsed()) out = run_faces(load_spec(spec_path), margin_cap);
    if (model->parsed()) out = run_model(load_spec(spec_path), margin_cap, !no_certify);
    if (hom->parsed()) out = run_homology(load_spec(spec_path), margin_cap, max_dim);
    if (pi1->parsed()) out = run_pi1(load_spec(spec_path), margin_cap, !no_certify);
    if (an->parsed()) out = run_an(an_n, !no_certify);
    if (check->parsed()) out = run_check(load_spec(spec_path), margin_cap);
    out.report["schema"] = kSchema;
    emit(out.report, out_path);
    return out.pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
