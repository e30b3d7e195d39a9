#include "netform/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace netform {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

ordered_json config_json(const ExperimentConfig& cfg) {
  ordered_json j;
  j["model"] = cfg.model;
  j["agents"] = cfg.agents;
  j["rounds"] = cfg.rounds;
  j["runs"] = cfg.runs;
  j["seed"] = cfg.seed;
  j["discount"] = cfg.discount;
  j["noise"] = cfg.noise;
  j["revision_prob"] = cfg.revision_prob;
  j["init_weight"] = cfg.init_weight;
  j["graph_eps"] = cfg.graph_eps;
  j["fixation_tol"] = cfg.fixation_tol;
  j["stride"] = cfg.stride;
  j["out"] = cfg.out_dir;
  j["format"] = cfg.format;
  return j;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

}  // namespace

std::string probability_csv(const ProbabilityMatrix& pm) {
  const int n = pm.n();
  std::string out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j > 0) out += ',';
      out += (i == j) ? "0" : fixed6(pm.p(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string probability_json(const ProbabilityMatrix& pm) {
  const int n = pm.n();
  ordered_json j;
  j["n"] = n;
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < n; ++i) {
    ordered_json row = ordered_json::array();
    for (int j2 = 0; j2 < n; ++j2) row.push_back(pm.p(i, j2));
    rows.push_back(std::move(row));
  }
  j["p"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string summary_json(const ExperimentResult& result) {
  ordered_json j;
  j["config"] = config_json(result.config);

  ordered_json counts;
  for (const auto& [label, count] : result.summary.class_counts) {
    counts[label] = count;
  }
  j["class_counts"] = std::move(counts);

  ordered_json absorption;
  absorption["all_stag"] = result.summary.all_stag;
  absorption["all_rabbit"] = result.summary.all_rabbit;
  absorption["mixed"] = result.summary.mixed;
  j["absorption"] = std::move(absorption);

  ordered_json stats;
  stats["mean_distance_to_uniform"] = result.summary.mean_distance_to_uniform;
  stats["mean_symmetry_defect"] = result.summary.mean_symmetry_defect;
  stats["ks_p01_uniform"] = {{"d", result.summary.ks_entry01.d},
                             {"p_value", result.summary.ks_entry01.p_value}};
  for (const auto& [key, value] : result.scalar_stats) stats[key] = value;
  for (const auto& [key, values] : result.vector_stats) stats[key] = values;
  j["statistics"] = std::move(stats);

  return j.dump(2) + "\n";
}

void write_experiment_files(ExperimentResult& result) {
  namespace fs = std::filesystem;
  const fs::path dir(result.config.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create directory: " + dir.string());
  }

  const bool csv = result.config.format == "csv";
  char name[64];
  for (std::size_t k = 0; k < result.final_matrices.size(); ++k) {
    std::snprintf(name, sizeof(name), "p_final_%04zu.%s", k,
                  csv ? "csv" : "json");
    const fs::path path = dir / name;
    write_text_file(path, csv ? probability_csv(result.final_matrices[k])
                              : probability_json(result.final_matrices[k]));
    result.written_files.push_back(path.string());
  }

  const fs::path summary_path = dir / "summary.json";
  write_text_file(summary_path, summary_json(result));
  result.written_files.push_back(summary_path.string());
}

}  // namespace netform
