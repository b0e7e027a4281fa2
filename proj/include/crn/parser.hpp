#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "crn/network.hpp"

namespace crn {

// Parses the line-oriented reaction language:
//
//   R1: 2X5 + X1 -> X5 + X1   ; trailing comment
//   F: A <-> B                # expands to Ff: A -> B and Fb: B -> A
//   0 -> X1                   # unlabeled, addressed as R<index>
//
// Throws SyntaxError, SelfLoopError, DuplicateReactionError,
// DuplicateLabelError or EmptyNetworkError.
Network parse_network(std::string_view text);

// Reads and parses a file; std::runtime_error if it cannot be read.
Network parse_network_file(const std::filesystem::path& path);

// Inverse of parse_network: one irreversible reaction per line.
std::string to_dsl(const Network& net);

}  // namespace crn
