#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "ginv/document.hpp"
#include "ginv/matrix.hpp"

namespace ginv {

enum class Command { Compute, Verify, Decompose };

// Exit codes of the ginv tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomainFailure = 1,  // inverse does not exist, precondition or verification failed
  kExitInputError = 2,     // unreadable file, malformed document, bad shape
  kExitUsageError = 3,     // unknown kind, missing operand
};

struct CommandRequest {
  Command command = Command::Compute;
  std::string kind;  // CLI spelling; ignored by decompose
  std::filesystem::path a;
  std::optional<std::filesystem::path> b, c, candidate, t, s;
  std::optional<std::filesystem::path> out;
};

// Operands after loading; which ones are required depends on the kind.
struct CommandInputs {
  Matrix a;
  std::optional<Matrix> b, c, candidate, t, s;
};

// Reads every path named by the request. Throws ParseError, DimensionError,
// or InputError for unreadable files.
CommandInputs load_inputs(const CommandRequest& req);

// Runs one command. Domain failures are reported in the document (ok = false,
// reason set); malformed requests throw UsageError and bad operands throw
// ParseError/DimensionError.
ReportDocument run_command(Command command, const std::string& kind, const CommandInputs& inputs);

ReportDocument execute_command(const CommandRequest& req);

// 0 when ok, 1 otherwise.
int exit_code_for(const ReportDocument& doc);

}  // namespace ginv
