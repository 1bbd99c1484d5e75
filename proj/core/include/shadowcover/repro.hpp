#ifndef SHADOWCOVER_REPRO_HPP
#define SHADOWCOVER_REPRO_HPP

#include <optional>

#include <json.hpp>

#include "shadowcover/shadow.hpp"

namespace shadowcover {

struct ReproItem {
  std::string id;
  std::string description;
  double paper_value = 0.0;
  double computed_value = 0.0;
  double tolerance = 0.0;
  bool relative = false;
  bool pass = false;
};

struct ReproReport {
  std::uint64_t seed = 0;
  double runtime_seconds = 0.0;
  std::vector<ReproItem> items;
  bool all_pass = false;
  std::string note;
};

/// Recomputes every reported number and sharpness example. The seed
/// steers direction sampling only; fixture generation is pinned so the
/// pass/fail pattern is seed-stable.
ReproReport run_paper_repro(std::uint64_t seed);

nlohmann::json to_json(const ReproReport& r);

/// A body whose coordinate-simplex shadows admit translated covers while
/// the simplex itself holds no translate of the body; produced by
/// scaling a seeded random polytope between the two critical scales.
struct HiddenBodyInstance {
  Body body;
  double alpha_contain = 0.0;  // max scale fitting inside the simplex
  double alpha_shadow = 0.0;   // min over sampled shadows of the per-shadow max scale
  double scale = 0.0;          // the scale actually applied
};

std::optional<HiddenBodyInstance> make_hidden_body(int n, std::uint64_t seed,
                                                   int direction_count);

}  // namespace shadowcover

#endif
