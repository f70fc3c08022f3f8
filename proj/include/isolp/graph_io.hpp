#pragma once

#include "isolp/graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace isolp {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format: header "n m", then m lines "u v w" with 1-based vertex ids.
// Lines starting with '#' and blank lines are ignored. Throws ParseError.
WeightedGraph read_graph(std::istream& in);
WeightedGraph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const WeightedGraph& g);
void write_graph_file(const std::string& path, const WeightedGraph& g);

}  // namespace isolp
