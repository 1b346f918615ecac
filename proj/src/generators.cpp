#include "logseg/generators.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

namespace logseg {

double GaussianSource::uniform_open_closed() {
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double GaussianSource::uniform_closed_open() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double GaussianSource::next() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform_open_closed()));
  const double angle = 2.0 * std::numbers::pi * uniform_closed_open();
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::GaussIid: return "gauss-iid";
    case GeneratorKind::Step: return "step";
    case GeneratorKind::Slope: return "slope";
  }
  return "unknown";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) {
  if (name == "gauss-iid") return GeneratorKind::GaussIid;
  if (name == "step") return GeneratorKind::Step;
  if (name == "slope") return GeneratorKind::Slope;
  return std::nullopt;
}

std::vector<StepBlock> parse_step_blocks(std::string_view text) {
  std::vector<StepBlock> blocks;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);

    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw Error("step block '" + std::string(item) + "' is not length:mean");
    StepBlock b{};
    const auto len = item.substr(0, colon);
    const auto mean = item.substr(colon + 1);
    auto r1 = std::from_chars(len.data(), len.data() + len.size(), b.length);
    auto r2 = std::from_chars(mean.data(), mean.data() + mean.size(), b.mean);
    if (r1.ec != std::errc{} || r1.ptr != len.data() + len.size() || r2.ec != std::errc{} ||
        r2.ptr != mean.data() + mean.size() || b.length == 0 || !std::isfinite(b.mean)) {
      throw Error("step block '" + std::string(item) + "' is not length:mean");
    }
    blocks.push_back(b);
  }
  if (blocks.empty()) throw Error("step generator needs at least one block");
  return blocks;
}

Sequence generate(const GeneratorSpec& spec, std::uint64_t seed) {
  GaussianSource noise(seed);
  std::vector<double> v;
  switch (spec.kind) {
    case GeneratorKind::GaussIid:
      v.reserve(spec.length);
      for (std::size_t i = 0; i < spec.length; ++i) v.push_back(noise.next());
      break;
    case GeneratorKind::Step:
      for (const StepBlock& b : spec.blocks)
        for (std::size_t i = 0; i < b.length; ++i) v.push_back(b.mean + noise.next());
      break;
    case GeneratorKind::Slope:
      v.reserve(spec.length);
      for (std::size_t i = 1; i <= spec.length; ++i)
        v.push_back(static_cast<double>(i) / 100.0 + noise.next());
      break;
  }
  return Sequence(std::move(v));
}

GeneratorSpec step_experiment_spec() {
  return {GeneratorKind::Step, 4000, {{1000, 0.0}, {1000, 5.0}, {1000, -5.0}, {1000, 0.0}}};
}

GeneratorSpec toy_spec() {
  return {GeneratorKind::Step, 200, {{70, -2.0}, {30, 2.0}, {30, -2.0}, {70, 1.0}}};
}

}  // namespace logseg
