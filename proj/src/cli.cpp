#include "logseg/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "logseg/io.hpp"

namespace logseg::cli {

namespace {

std::string expand(std::string path, std::uint64_t seed) {
  const std::string key = "{seed}";
  for (auto pos = path.find(key); pos != std::string::npos; pos = path.find(key, pos))
    path.replace(pos, key.size(), std::to_string(seed));
  return path;
}

template <typename Writer>
void emit(const std::optional<std::string>& target, std::uint64_t seed, std::ostream& out,
          Writer&& write) {
  if (!target) return;
  if (*target == "-") {
    write(out);
    return;
  }
  const std::string path = expand(*target, seed);
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write(file);
  file.flush();
  if (!file) throw IoError("write to '" + path + "' failed");
}

Sequence acquire(const RunConfig& config) {
  if (config.input) return load_sequence(*config.input, config.column);
  return generate(*config.generator, config.seed);
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.input.has_value() == config.generator.has_value())
      throw CLI::ValidationError("exactly one of --input and --generate is required");
    const Sequence seq = acquire(config);
    emit(config.sequence_out, config.seed, out, [&](std::ostream& s) { write_sequence(s, seq); });

    SegmentOptions options;
    options.execution = config.execution;
    options.prune = config.prune;
    options.capture_tree_dot = config.tree_dot_out.has_value();

    const auto t0 = std::chrono::steady_clock::now();
    const SegmentationResult result =
        run_solver(config.solver, seq, config.family, config.segments, options);
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    emit(config.segments_out, config.seed, out, [&](std::ostream& s) { write_segments_csv(s, result); });
    emit(config.lifetimes_out, config.seed, out,
         [&](std::ostream& s) { write_lifetimes_csv(s, result.counters); });
    emit(config.stats_out, config.seed, out, [&](std::ostream& s) {
      const RunSummary summary{config.solver, config.family, config.segments, seq.size(),
                               config.seed, ms};
      s << stats_json(summary, result).dump() << '\n';
    });
    emit(config.tree_dot_out, config.seed, out, [&](std::ostream& s) {
      for (std::size_t k = 0; k < result.tree_dumps.size(); ++k)
        s << "// level " << (k + 2) << '\n' << result.tree_dumps[k];
    });
    return kOk;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InfeasibleError& e) {
    err << "error: infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const DomainError& e) {
    err << "error: domain: " << e.what() << '\n';
    return kDomain;
  } catch (const IoError& e) {
    err << "error: io: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return kParse;
  } catch (const InvalidSequence& e) {
    err << "error: parse: " << e.what() << '\n';
    return kParse;
  } catch (const InstanceTooLarge& e) {
    err << "error: too large: " << e.what() << '\n';
    return kTooLarge;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact K-segmentation of a 1-D sequence with candidate pruning"};
  app.option_defaults()->always_capture_default();

  RunConfig config;
  std::string input, generator, blocks, model = "gaussian", solver = "pruned";
  std::string prune = "overlapping";
  std::string segments_out = "-", stats_out, lifetimes_out, sequence_out, dot_out;
  std::size_t column = 0, length = 0, jobs = 1;
  std::vector<std::uint64_t> seeds;
  bool parallel = false;

  auto* in_opt = app.add_option("--input", input, "Text or CSV file with one value per row");
  auto* col_opt = app.add_option("--column", column, "0-based CSV column")->needs(in_opt);
  auto* gen_opt = app.add_option("--generate", generator, "gauss-iid | step | slope")
                      ->check(CLI::IsMember({"gauss-iid", "step", "slope"}));
  in_opt->excludes(gen_opt);
  auto* len_opt = app.add_option("--length", length, "Generated length (gauss-iid, slope)")
                      ->check(CLI::PositiveNumber);
  auto* blk_opt = app.add_option("--blocks", blocks, "Step blocks, length:mean,...");
  app.add_option("--segments,-K", config.segments, "Number of segments K")
      ->required()
      ->check(CLI::PositiveNumber);
  app.add_option("--model", model, "gaussian | poisson | bernoulli")
      ->check(CLI::IsMember({"gaussian", "poisson", "bernoulli"}));
  app.add_option("--solver", solver, "pruned | baseline | exhaustive")
      ->check(CLI::IsMember({"pruned", "baseline", "exhaustive"}));
  app.add_option("--prune", prune, "overlapping | touching (pruned solver)")
      ->check(CLI::IsMember({"overlapping", "touching"}));
  app.add_flag("--parallel", parallel, "OpenMP argmax for the baseline solver");
  app.add_option("--seed", config.seed, "Generator seed");
  auto* seeds_opt = app.add_option("--seeds", seeds, "Sweep over several seeds")->delimiter(',');
  app.add_option("--jobs", jobs, "Concurrent runs in a seed sweep")->check(CLI::PositiveNumber);
  app.add_option("--out-segments", segments_out, "Segments CSV path, - for stdout");
  auto* stats_opt = app.add_option("--out-stats", stats_out, "Stats JSON path, - for stdout");
  auto* life_opt = app.add_option("--out-lifetimes", lifetimes_out, "Lifetimes CSV path");
  auto* seq_opt = app.add_option("--save-sequence", sequence_out, "Write the input sequence");
  auto* dot_opt = app.add_option("--dump-tree", dot_out, "DOT dump of final border trees");
  (void)col_opt;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (!in_opt->count() && !gen_opt->count()) {
    err << "error: one of --input or --generate is required\n";
    return kUsage;
  }
  if (in_opt->count()) {
    config.input = input;
    if (col_opt->count()) config.column = column;
  } else {
    GeneratorSpec spec;
    spec.kind = *parse_generator_kind(generator);
    if (spec.kind == GeneratorKind::Step) {
      if (!blk_opt->count()) {
        spec = step_experiment_spec();
      } else {
        try {
          spec.blocks = parse_step_blocks(blocks);
        } catch (const Error& e) {
          err << "error: " << e.what() << '\n';
          return kUsage;
        }
      }
      spec.length = 0;
      for (const auto& b : spec.blocks) spec.length += b.length;
    } else {
      if (!len_opt->count()) {
        err << "error: --length is required for --generate " << generator << '\n';
        return kUsage;
      }
      spec.length = length;
    }
    config.generator = spec;
  }
  config.family = *parse_score_family(model);
  config.solver = *parse_solver(solver);
  config.prune = *parse_prune_rule(prune);
  config.execution = parallel ? Execution::Parallel : Execution::Serial;
  config.segments_out = segments_out.empty() ? std::nullopt : std::optional(segments_out);
  if (stats_opt->count()) config.stats_out = stats_out;
  if (life_opt->count()) config.lifetimes_out = lifetimes_out;
  if (seq_opt->count()) config.sequence_out = sequence_out;
  if (dot_opt->count()) config.tree_dot_out = dot_out;

  if (!seeds_opt->count()) return run(config, out, err);

  // Seed sweep: every file output must be seed-specific.
  for (const auto* path : {&config.segments_out, &config.stats_out, &config.lifetimes_out,
                           &config.sequence_out, &config.tree_dot_out}) {
    if (*path && **path != "-" && seeds.size() > 1 && path->value().find("{seed}") == std::string::npos) {
      err << "error: output path '" << **path << "' needs a {seed} placeholder in a sweep\n";
      return kUsage;
    }
  }
  const long count = static_cast<long>(seeds.size());
  std::vector<std::string> outs(seeds.size()), errs(seeds.size());
  std::vector<int> codes(seeds.size(), kOk);
#pragma omp parallel for schedule(dynamic) num_threads(static_cast<int>(jobs))
  for (long s = 0; s < count; ++s) {
    RunConfig one = config;
    one.seed = seeds[static_cast<std::size_t>(s)];
    std::ostringstream o, e;
    codes[s] = run(one, o, e);
    outs[s] = o.str();
    errs[s] = e.str();
  }
  int status = kOk;
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    out << outs[s];
    err << errs[s];
    if (status == kOk) status = codes[s];
  }
  return status;
}

}  // namespace logseg::cli
