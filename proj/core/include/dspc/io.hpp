#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dspc/graph.hpp"

namespace dspc {

/// Text instance format:
///   c <comment>                 any number, anywhere
///   c transformed               permits weight-0 arcs
///   c label <v> <text>          optional per-vertex label
///   p dsp <n> <m> <k> <c> <vertex|edge>
///   a <u> <v> <w>               m lines
///   d <s> <t>                   k lines
struct InstanceFile {
  Instance instance;
  std::vector<std::string> comments;  // free-form comments, without "c "
};

/// Throws ParseError (with line number), Error(kCycleDetected) or
/// Error(kInvariantViolation).
InstanceFile parse_instance(std::string_view text);

std::string format_instance(const Instance& inst, const std::vector<std::string>& comments = {});

/// Solution format: "s 1" followed by k lines "p <i> <len> <v1> ... <vL>",
/// or "s 0" alone.
std::string format_solution(const std::optional<Solution>& sol);

/// nullopt for an "s 0" file. Throws ParseError.
std::optional<Solution> parse_solution(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace dspc
