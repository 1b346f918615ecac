#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "logseg/core_model.hpp"

namespace logseg {

/// Unit-variance normal deviates from mt19937_64 via Box-Muller.
///
/// mt19937_64 output is fixed by the standard; each uniform takes the top 53
/// bits of one draw, and both Box-Muller outputs are used in order.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}
  double next();

 private:
  double uniform_open_closed();  // (0, 1]
  double uniform_closed_open();  // [0, 1)

  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

enum class GeneratorKind { GaussIid, Step, Slope };

struct StepBlock {
  std::size_t length;
  double mean;
};

/// gauss-iid: N(0, 1). step: concatenated N(mean, 1) blocks. slope: N(i / 100, 1).
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::GaussIid;
  std::size_t length = 0;  // ignored for step (sum of block lengths)
  std::vector<StepBlock> blocks;
};

std::string_view to_string(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator_kind(std::string_view name);

/// Parses "1000:0,1000:5,1000:-5" into blocks. Throws Error on malformed input.
std::vector<StepBlock> parse_step_blocks(std::string_view text);

Sequence generate(const GeneratorSpec& spec, std::uint64_t seed);

/// Four-segment step spec used by the step-sequence experiment: 4 x 1000 points
/// with means 0, 5, -5, 0.
GeneratorSpec step_experiment_spec();

/// 200-point toy step sequence with change points after 70, 100 and 130.
GeneratorSpec toy_spec();

}  // namespace logseg
