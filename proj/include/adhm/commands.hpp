#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "adhm/instance_io.hpp"

namespace adhm {

// Stable process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;  // I/O, malformed document, wrong kind
inline constexpr int kExitInvalid = 2;     // the data violate a mathematical condition

/// What a subcommand produced: the process exit code and a JSON report.
/// Commands never print, so batch mode can run them on worker threads.
struct CommandResult {
  int exit_code = kExitOk;
  Json report;
};

CommandResult cmd_validate(const std::filesystem::path& path);
/// Blowup documents only. With oracle_maxlen, also runs the word-by-word
/// oracle and reports whether it agrees.
CommandResult cmd_classify(const std::filesystem::path& path, std::optional<std::size_t> oracle_maxlen = {});
/// Writes the pushed-forward P^2 document to `out` when given; otherwise the
/// report is the document itself.
CommandResult cmd_pushforward(const std::filesystem::path& path, const std::optional<std::filesystem::path>& out = {});
/// Blowup documents are pushed forward first.
CommandResult cmd_reduce(const std::filesystem::path& path, bool float_fallback = false);
CommandResult cmd_trivialize(const std::filesystem::path& path, std::size_t samples = 10, std::uint64_t seed = 0);
CommandResult cmd_generate(const GenSpec& spec, const std::optional<std::filesystem::path>& out = {});

enum class BatchCommand { validate, classify, reduce, trivialize };
/// Throws ParseError for an unknown name.
BatchCommand parse_batch_command(const std::string& name);

struct BatchOptions {
  BatchCommand command = BatchCommand::validate;
  unsigned jobs = 0;  // 0: one per hardware thread
  std::optional<std::size_t> oracle_maxlen;
  bool float_fallback = false;
  std::size_t samples = 10;
  std::uint64_t seed = 0;
};

struct BatchResult {
  /// One {"file", "exit_code", "report"} object per *.json file, sorted by name.
  std::vector<Json> files;
  Json summary;
  /// Largest per-file exit code, or kExitInputError if the directory is unreadable.
  int exit_code = kExitOk;
};

BatchResult cmd_batch(const std::filesystem::path& dir, const BatchOptions& options);

}  // namespace adhm
