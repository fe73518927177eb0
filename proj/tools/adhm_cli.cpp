// Command-line front end for the monad toolkit. Every subcommand prints a
// JSON report on stdout and exits 0 (success), 1 (I/O or parse error) or
// 2 (mathematically invalid data).

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "adhm/commands.hpp"

namespace {

int emit(const adhm::CommandResult& result) {
  std::cout << result.report.dump(2) << '\n';
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact monad data on P^2 and its blowup: validation, strata, reduction, trivializations"};
  app.require_subcommand(1);

  std::string input, output, family = "charge_one", batch_command = "validate";
  std::size_t k = 1, r = 1, samples = 10, oracle_maxlen = 0;
  std::uint64_t seed = 0;
  std::int64_t bound = 16;
  unsigned jobs = 0;
  bool use_float = false;

  auto* validate = app.add_subcommand("validate", "Check integrability (and surjectivity for blowup data)");
  validate->add_option("file", input, "Instance document")->required();

  auto* classify = app.add_subcommand("classify", "Decide membership in S0 for blowup data");
  classify->add_option("file", input, "Blowup instance document")->required();
  auto* oracle_opt =
      classify->add_option("--oracle-maxlen", oracle_maxlen, "Cross-check against all words up to this length");

  auto* push = app.add_subcommand("pushforward", "Push blowup data down to P^2");
  push->add_option("file", input, "Blowup instance document")->required();
  auto* push_out = push->add_option("-o,--output", output, "Write the P^2 document here instead of stdout");

  auto* reduce = app.add_subcommand("reduce", "Canonical completely reducible representative");
  reduce->add_option("file", input, "Instance document")->required();
  reduce->add_flag("--float", use_float, "Fall back to floating-point eigenvalues outside Q(i)");

  auto* trivialize = app.add_subcommand("trivialize", "Verify the explicit trivialization away from [0:0:1]");
  trivialize->add_option("file", input, "Instance document concentrated at the origin")->required();
  trivialize->add_option("--samples", samples, "Number of chart points")->capture_default_str();
  trivialize->add_option("--seed", seed, "Seed for the chart points")->capture_default_str();

  auto* gen = app.add_subcommand("generate", "Generate a seeded instance");
  gen->add_option("--family", family, "charge_one, commuting_points, block_concentrated, blowup_zero_d, "
                                      "blowup_generic or invalid_integrability")
      ->capture_default_str();
  gen->add_option("--k", k, "Charge")->capture_default_str();
  gen->add_option("--r", r, "Framing rank")->capture_default_str();
  gen->add_option("--seed", seed, "Random seed")->capture_default_str();
  gen->add_option("--bound", bound, "Bound on random numerators and denominators")->capture_default_str();
  auto* gen_out = gen->add_option("-o,--output", output, "Write the document here instead of stdout");

  auto* batch = app.add_subcommand("batch", "Run a command over every *.json file in a directory");
  batch->add_option("dir", input, "Directory of instance documents")->required();
  batch->add_option("--command", batch_command, "validate, classify, reduce or trivialize")->capture_default_str();
  batch->add_option("--jobs", jobs, "Worker threads (default: number of processors)");
  auto* batch_oracle = batch->add_option("--oracle-maxlen", oracle_maxlen, "Passed to classify");
  batch->add_flag("--float", use_float, "Passed to reduce");
  batch->add_option("--samples", samples, "Passed to trivialize")->capture_default_str();
  batch->add_option("--seed", seed, "Passed to trivialize")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : adhm::kExitInputError;
  }

  auto maybe_path = [&](CLI::Option* opt) -> std::optional<std::filesystem::path> {
    if (opt->count() == 0) return std::nullopt;
    return std::filesystem::path(output);
  };

  if (*validate) return emit(adhm::cmd_validate(input));
  if (*classify) {
    std::optional<std::size_t> maxlen;
    if (oracle_opt->count()) maxlen = oracle_maxlen;
    return emit(adhm::cmd_classify(input, maxlen));
  }
  if (*push) return emit(adhm::cmd_pushforward(input, maybe_path(push_out)));
  if (*reduce) return emit(adhm::cmd_reduce(input, use_float));
  if (*trivialize) return emit(adhm::cmd_trivialize(input, samples, seed));
  if (*gen) {
    adhm::GenSpec spec;
    try {
      spec.family = adhm::parse_family(family);
    } catch (const adhm::Error& e) {
      return emit({adhm::kExitInputError, adhm::Json{{"error", e.kind()}, {"message", e.what()}}});
    }
    spec.k = k;
    spec.r = r;
    spec.seed = seed;
    spec.bound = bound;
    // Printed without -o, the document has the same bytes -o would write.
    return emit(adhm::cmd_generate(spec, maybe_path(gen_out)));
  }

  adhm::BatchOptions options;
  try {
    options.command = adhm::parse_batch_command(batch_command);
  } catch (const adhm::Error& e) {
    return emit({adhm::kExitInputError, adhm::Json{{"error", e.kind()}, {"message", e.what()}}});
  }
  options.jobs = jobs;
  if (batch_oracle->count()) options.oracle_maxlen = oracle_maxlen;
  options.float_fallback = use_float;
  options.samples = samples;
  options.seed = seed;
  const adhm::BatchResult result = adhm::cmd_batch(input, options);
  for (const auto& line : result.files) std::cout << line.dump() << '\n';
  std::cout << result.summary.dump() << '\n';
  return result.exit_code;
}
