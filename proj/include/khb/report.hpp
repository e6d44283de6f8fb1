#pragma once

#include "khb/polytope.hpp"
#include "khb/session.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace khb {

struct RunOptions {
  std::optional<int> degree_bound;  // overrides the per-command default
  std::uint64_t seed = 1;           // randomized extensions in nobody-alg1
  bool timing = false;              // adds elapsed_ms (breaks byte stability)
  std::optional<std::filesystem::path> svg_dir;
};

struct RunResult {
  nlohmann::ordered_json report;
  bool all_ok = true;
  std::vector<std::filesystem::path> svg_files;
};

/// Runs every command in order; a failed command is reported and the rest
/// still run (later ones may then fail on missing results).
RunResult run_session(const Session& session, const RunOptions& options = {});

/// Standalone SVG: hull polygon, lattice points of the bounding box, and
/// vertices labelled with exact coordinates. Throws unless ambient_dim == 2.
std::string svg_of(const Polytope& p, const std::string& title);

nlohmann::ordered_json polynomial_json(const Polynomial& f, const std::vector<std::string>& vars,
                                       const MonomialOrder* order = nullptr);
nlohmann::ordered_json matrix_json(const RatMatrix& m);
nlohmann::ordered_json vector_json(const RatVector& v);
nlohmann::ordered_json polytope_json(const Polytope& p);

}  // namespace khb
