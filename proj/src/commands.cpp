#include "adhm/commands.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "adhm/stratify.hpp"
#include "adhm/trivialize.hpp"

namespace adhm {

namespace fs = std::filesystem;

namespace {

bool is_input_error(const Error& e) { return e.kind() == "ParseError" || e.kind() == "DimensionMismatch"; }

CommandResult error_result(const Error& e) {
  Json report{{"error", e.kind()}, {"message", e.what()}};
  if (const auto* iv = dynamic_cast<const IntegrabilityViolation*>(&e)) report["defect"] = to_json(iv->defect());
  if (const auto* sv = dynamic_cast<const SurjectivityViolation*>(&e)) report["cokernel_dim"] = sv->cokernel_dim();
  return {is_input_error(e) ? kExitInputError : kExitInvalid, std::move(report)};
}

// Runs a command body and maps exceptions onto the exit-code contract.
template <class F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return error_result(e);
  } catch (const std::exception& e) {
    return {kExitInputError, Json{{"error", "IOError"}, {"message", e.what()}}};
  }
}

BlowupTuple expect_blowup(const GeneratedInstance& doc) {
  if (const auto* t = std::get_if<BlowupTuple>(&doc)) return *t;
  throw ParseError("expected a document of kind 'blowup'");
}

// P^2 data for commands that work on P^2: blowup documents are pushed forward.
MonadDataP2 as_p2(const GeneratedInstance& doc) {
  if (const auto* t = std::get_if<P2Tuple>(&doc)) return MonadDataP2(*t);
  return pushforward(validate(std::get<BlowupTuple>(doc)));
}

Json optional_index(const std::optional<std::size_t>& n) { return n ? Json(*n) : Json(nullptr); }

Json approx_json(const std::complex<double>& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

CommandResult cmd_validate(const fs::path& path) {
  return guarded([&]() -> CommandResult {
    const GeneratedInstance doc = read_instance_file(path);
    Json report{{"kind", std::holds_alternative<P2Tuple>(doc) ? "p2" : "blowup"}};
    if (const auto* t = std::get_if<P2Tuple>(&doc))
      (void)MonadDataP2(*t);
    else
      (void)validate(std::get<BlowupTuple>(doc));
    report["valid"] = true;
    return {kExitOk, std::move(report)};
  });
}

CommandResult cmd_classify(const fs::path& path, std::optional<std::size_t> oracle_maxlen) {
  return guarded([&]() -> CommandResult {
    const MonadDataBlowup m = validate(expect_blowup(read_instance_file(path)));
    const StratumReport rep = classify_s0(m);
    Json report{{"is_s0", rep.is_s0},
                {"nilpotency_da1", optional_index(rep.nilpotency_da1)},
                {"nilpotency_da2", optional_index(rep.nilpotency_da2)},
                {"krylov_dim", rep.krylov_dim},
                {"witness", rep.witness ? Json(rep.witness->describe()) : Json(nullptr)}};
    if (rep.witness && rep.witness->kind == StratumWitness::Kind::word) report["witness_word"] = rep.witness->word;
    if (oracle_maxlen) {
      const bool oracle = classify_s0_oracle(m, *oracle_maxlen);
      report["oracle_maxlen"] = *oracle_maxlen;
      report["oracle_is_s0"] = oracle;
      report["oracle_agrees"] = oracle == rep.is_s0;
    }
    return {kExitOk, std::move(report)};
  });
}

CommandResult cmd_pushforward(const fs::path& path, const std::optional<fs::path>& out) {
  return guarded([&]() -> CommandResult {
    const MonadDataBlowup m = validate(expect_blowup(read_instance_file(path)));
    const GeneratedInstance pushed = pushforward(m).tuple();
    if (!out) return {kExitOk, to_json(pushed)};
    write_instance_file(*out, pushed);
    return {kExitOk, Json{{"written", out->string()}, {"kind", "p2"}}};
  });
}

CommandResult cmd_reduce(const fs::path& path, bool float_fallback) {
  return guarded([&]() -> CommandResult {
    const MonadDataP2 m = as_p2(read_instance_file(path));
    const DUPoint du = canonical_reduction(m, float_fallback ? SpectrumMode::float_fallback : SpectrumMode::exact);
    Json points = Json::array();
    if (du.approximate) {
      for (const auto& p : du.approximate_points) points.push_back({approx_json(p[0]), approx_json(p[1])});
    } else {
      for (const auto& p : du.points) points.push_back({to_json(p[0]), to_json(p[1])});
    }
    const ChargeLabel label = charge_label(du, m.k());
    Json report{{"k", m.k()},
                {"l", du.charge()},
                {"points", std::move(points)},
                {"points_at_origin", label.points_at_origin},
                {"approx", du.approximate},
                {"reduced", to_json(du.reduced.tuple())}};
    return {kExitOk, std::move(report)};
  });
}

CommandResult cmd_trivialize(const fs::path& path, std::size_t samples, std::uint64_t seed) {
  return guarded([&]() -> CommandResult {
    const MonadDataP2 m = as_p2(read_instance_file(path));
    const auto points = sample_chart_points(samples, seed);
    const TrivializationReport rep = verify_trivialization(m, points);
    Json report{{"ok", rep.ok},
                {"points_checked", rep.points_checked},
                {"transitions_checked", rep.transitions_checked},
                {"failures", rep.failures}};
    return {rep.ok ? kExitOk : kExitInvalid, std::move(report)};
  });
}

CommandResult cmd_generate(const GenSpec& spec, const std::optional<fs::path>& out) {
  return guarded([&]() -> CommandResult {
    const GeneratedInstance doc = generate(spec);
    if (!out) return {kExitOk, to_json(doc)};
    write_instance_file(*out, doc);
    return {kExitOk, Json{{"written", out->string()}, {"family", family_name(spec.family)}}};
  });
}

BatchCommand parse_batch_command(const std::string& name) {
  if (name == "validate") return BatchCommand::validate;
  if (name == "classify") return BatchCommand::classify;
  if (name == "reduce") return BatchCommand::reduce;
  if (name == "trivialize") return BatchCommand::trivialize;
  throw ParseError("batch cannot run '" + name + "'");
}

BatchResult cmd_batch(const fs::path& dir, const BatchOptions& options) {
  BatchResult result;
  std::vector<fs::path> files;
  std::error_code ec;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec))
    if (it->is_regular_file() && it->path().extension() == ".json") files.push_back(it->path());
  if (ec) {
    result.exit_code = kExitInputError;
    result.summary = {{"error", "IOError"}, {"message", "cannot read directory " + dir.string()}};
    return result;
  }
  std::sort(files.begin(), files.end());

  auto run = [&](const fs::path& file) {
    switch (options.command) {
      case BatchCommand::validate: return cmd_validate(file);
      case BatchCommand::classify: return cmd_classify(file, options.oracle_maxlen);
      case BatchCommand::reduce: return cmd_reduce(file, options.float_fallback);
      case BatchCommand::trivialize: return cmd_trivialize(file, options.samples, options.seed);
    }
    return CommandResult{kExitInputError, Json{{"error", "unknown command"}}};
  };

  std::vector<CommandResult> outcomes(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < files.size();) outcomes[i] = run(files[i]);
  };
  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(files.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t ok = 0, input_errors = 0, invalid = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const int code = outcomes[i].exit_code;
    (code == kExitOk ? ok : code == kExitInvalid ? invalid : input_errors)++;
    result.exit_code = std::max(result.exit_code, code);
    result.files.push_back(
        Json{{"file", files[i].filename().string()}, {"exit_code", code}, {"report", std::move(outcomes[i].report)}});
  }
  result.summary = {{"summary", true}, {"files", files.size()}, {"ok", ok},
                    {"invalid", invalid}, {"input_errors", input_errors}, {"jobs", jobs}};
  return result;
}

}  // namespace adhm
