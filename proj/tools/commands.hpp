#pragma once

// Subcommands of the bianchi CLI as plain functions, so they can be driven
// in-process by tests.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bianchi/serialize.hpp"

namespace bianchi::cli {

enum class Status { ok, member_no, error };

struct CommandResult {
  Status status = Status::ok;
  Json payload;
  std::vector<std::string> diagnostics;

  int exit_code() const { return status == Status::error ? 1 : 0; }
};

CommandResult cmd_vd(std::int64_t m, std::int64_t d);
CommandResult cmd_index(std::int64_t m);
CommandResult cmd_table(std::int64_t m);
// Input: ExtendedMatrix JSON.
CommandResult cmd_classify(std::string_view input);
// Input: ExtendedMatrix JSON.
CommandResult cmd_phi(std::string_view input);
// Input: OrthoMap JSON.
CommandResult cmd_lift(std::string_view input);
CommandResult cmd_verify(const std::vector<std::int64_t>& ms, long height, std::uint64_t seed);

}  // namespace bianchi::cli
