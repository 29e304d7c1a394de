#pragma once

// The operations behind the command line, returning both a human report and
// a machine-readable one.

#include "leibxmod/fixture.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace leibxmod::io {

enum class Status { valid = 0, invalid = 1, unreadable = 2 };

struct CommandResult {
    Status status = Status::valid;
    std::string text;
    Json json;
    std::optional<Json> fixture;  // object emitted by stemcover, liezation and exterior
};

CommandResult run_check(const std::filesystem::path& path);
CommandResult run_multiplier(const std::filesystem::path& path);
CommandResult run_exterior(const std::filesystem::path& path);
CommandResult run_classify(const std::filesystem::path& path);
CommandResult run_verify(const std::filesystem::path& path);
CommandResult run_stemcover(const std::filesystem::path& path);
CommandResult run_liezation(const std::filesystem::path& path);
CommandResult run_hl(const std::filesystem::path& path, std::size_t degree);

/// Dispatch by command name; unknown names give Status::unreadable.
CommandResult run_command(const std::string& command, const std::filesystem::path& path, std::size_t degree = 2);

}  // namespace leibxmod::io
