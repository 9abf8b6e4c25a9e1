#pragma once

#include <nlohmann/json.hpp>

#include "autoarc/classify.hpp"

namespace autoarc {

/// Declarative job: one experiment per file.
struct Job {
  long characteristic = 0;
  std::vector<std::string> ring_vars;

  struct FatPointSpec {
    enum class Kind { Linear, Germ } kind = Kind::Linear;
    int order = 1;
    std::vector<std::string> vars;         // germ variables
    std::vector<std::string> ideal_texts;  // germ ideal generators
  };
  std::optional<FatPointSpec> fatpoint;

  struct DeformationSpec {
    std::vector<std::string> params;      // empty: trivial deformation (Hom)
    std::vector<std::string> poly_texts;  // F_i(x; t)
  };
  std::optional<DeformationSpec> deformation;

  std::string task;  // arc-ideal | endo-ideal | dimension | components |
                     // flatness | classify | defects | motivic | validate
  std::optional<std::pair<int, int>> range;  // defects | motivic
  std::vector<std::string> base_override;    // flatness base variables
  std::optional<std::vector<std::string>> line;  // dominance line direction

  std::string output_format = "text";  // text | json
  std::optional<std::string> output_file;
};

Job parse_job(const std::string& text);
Job load_job(const std::string& path);

struct Report {
  nlohmann::ordered_json payload;  // canonical machine-readable result
  std::vector<std::string> ideal_alias;  // alias-rendered ideal (text report)
  std::vector<std::pair<std::string, double>> timings_ms;  // text report only
};

Report run_job(const Job& job);

/// format = "text" or "json"; json is the canonical payload (timings
/// excluded), so identical jobs render byte-identically.
std::string render_report(const Report& r, const std::string& format);

}  // namespace autoarc
