#include "entrocon/chain_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace entrocon {

using nlohmann::json;

std::string to_json(const ChainFile& cf) {
  json j;
  j["states"] = cf.states;
  if (cf.cross_space()) j["output_states"] = cf.output_states;
  j["pi"] = std::vector<double>(cf.pi.data(), cf.pi.data() + cf.pi.size());
  std::vector<std::vector<double>> rows(cf.P.rows());
  for (Index i = 0; i < cf.P.rows(); ++i)
    rows[i] = std::vector<double>(cf.P.row(i).begin(), cf.P.row(i).end());
  j["P"] = rows;
  return j.dump(2) + "\n";
}

ChainFile chain_from_json(const std::string& text) {
  json j = json::parse(text);
  ChainFile cf;
  cf.states = j.at("states").get<std::vector<std::string>>();
  if (j.contains("output_states"))
    cf.output_states = j.at("output_states").get<std::vector<std::string>>();
  auto pi = j.at("pi").get<std::vector<double>>();
  cf.pi = Eigen::Map<const Vec>(pi.data(), static_cast<Index>(pi.size()));
  auto rows = j.at("P").get<std::vector<std::vector<double>>>();
  if (rows.empty()) throw std::invalid_argument("chain file: empty P");
  const Index n = static_cast<Index>(rows.size());
  const Index m = static_cast<Index>(rows[0].size());
  cf.P.resize(n, m);
  for (Index i = 0; i < n; ++i) {
    if (static_cast<Index>(rows[i].size()) != m)
      throw std::invalid_argument("chain file: ragged P");
    for (Index k = 0; k < m; ++k) cf.P(i, k) = rows[i][k];
  }
  if (cf.pi.size() != n)
    throw std::invalid_argument("chain file: pi and P sizes disagree");
  const Index out = cf.cross_space() ? static_cast<Index>(cf.output_states.size()) : n;
  if (m != out) throw std::invalid_argument("chain file: column count disagrees with states");
  if (static_cast<Index>(cf.states.size()) != n)
    throw std::invalid_argument("chain file: state name count disagrees with pi");
  return cf;
}

ChainFile chain_file(const Distribution& pi, const Kernel& P,
                     std::vector<std::string> states,
                     std::vector<std::string> output_states) {
  ChainFile cf;
  if (states.empty())
    for (Index i = 0; i < pi.size(); ++i) states.push_back(std::to_string(i));
  cf.states = std::move(states);
  cf.output_states = std::move(output_states);
  cf.pi = pi.weights();
  cf.P = P.matrix();
  return cf;
}

void write_chain_file(const std::string& path, const ChainFile& cf) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << to_json(cf);
}

ChainFile read_chain_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return chain_from_json(ss.str());
}

}  // namespace entrocon
