#pragma once

#include <stdexcept>
#include <string>

#include "ctsp/graph.hpp"

namespace ctsp {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph file format: '#' comment lines, a header "p <n> <m>", then m lines
// "e <u> <v> <cost>" with 1-based vertex indices. Parallel edges and
// self-loops are permitted. Vertices are numbered 0..n-1 after loading and
// edges get ids 0..m-1 in file order.
//
// scale_digits > 0 accepts decimal costs with up to that many fractional
// digits and multiplies them by 10^scale_digits; anything with more digits
// is rejected. With scale_digits == 0 costs must be plain non-negative
// integers.
WeightedMultigraph load_graph(const std::string& text, int scale_digits = 0);
WeightedMultigraph load_graph_file(const std::string& path, int scale_digits = 0);

std::string save_graph(const WeightedMultigraph& g, const std::string& comment = "");
void save_graph_file(const WeightedMultigraph& g, const std::string& path,
                     const std::string& comment = "");

}  // namespace ctsp
