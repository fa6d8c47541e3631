#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "atomfact/generate.hpp"
#include "atomfact_cli/json_io.hpp"

namespace atomfact::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,     // unreadable file, malformed JSON, wrong shape
  kSingular = 2,       // det M == 0
  kUnit = 3,           // det M a nonzero constant
  kVerifyFailed = 4,   // verify found a failing clause
  kInternalError = 5,  // a runtime self-check failed
};

struct JobSpec {
  std::string command;
  std::vector<std::string> inputs;  // empty or "-" means stdin
  std::string output;               // empty or "-" means stdout
  std::uint64_t seed = 1;
  GenLimits limits;
  unsigned jobs = 1;
  std::string route = "auto";  // trivialize: auto | linear | general
};

struct CommandResult {
  int exit_code = kOk;
  json document;
  std::string diagnostic;
};

/// Maps a library exception to the exit code contract.
int exit_code_for(const std::exception& e);

CommandResult factor_document(const json& doc);
/// One document with "input" and "atoms", or a matrix document followed by
/// an atoms document.
CommandResult verify_documents(const std::vector<json>& docs);
CommandResult linearize_document(const json& doc);
CommandResult trivialize_documents(const json& c, const json& u, const std::string& route);
CommandResult factor_pencil_document(const json& doc);
CommandResult gen_document(std::uint64_t seed, const GenLimits& limits);

/// Reads inputs, dispatches, writes the result document and returns the exit code.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace atomfact::cli
