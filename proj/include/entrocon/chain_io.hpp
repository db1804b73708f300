#pragma once

#include <string>
#include <vector>

#include "entrocon/chain.hpp"

namespace entrocon {

/// On-disk chain description. "output_states" is present only for kernels
/// between distinct spaces; square stationary chains omit it.
struct ChainFile {
  std::vector<std::string> states;
  std::vector<std::string> output_states;  // empty for X -> X chains
  Vec pi;
  Mat P;
  bool cross_space() const { return !output_states.empty(); }
};

std::string to_json(const ChainFile& cf);
ChainFile chain_from_json(const std::string& text);

ChainFile chain_file(const Distribution& pi, const Kernel& P,
                     std::vector<std::string> states = {},
                     std::vector<std::string> output_states = {});

void write_chain_file(const std::string& path, const ChainFile& cf);
ChainFile read_chain_file(const std::string& path);

}  // namespace entrocon
