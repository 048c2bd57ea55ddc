#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mextremal/io.hpp"

namespace mextremal::cli {

enum class ExitCode : int { Success = 0, Error = 1, Negative = 2, Inconclusive = 3 };

struct Command {
  std::string verb;
  json input;
  std::uint64_t seed = 0;
  std::optional<long> samples;
  std::optional<double> tol;
};

struct Outcome {
  ExitCode code = ExitCode::Success;
  json report;
  std::string csv;  // filled by `profile`
};

// Verbs: pick, schur, certify, edigarian, ball3, sn, falsify, profile, family.
bool is_verb(const std::string& verb);

// Runs one command. Library errors propagate as mextremal::Error.
Outcome run(const Command& command);

}  // namespace mextremal::cli
