#pragma once

#include "arr/aomoto.hpp"
#include "arr/arrangement.hpp"
#include "arr/itint.hpp"

#include <string>

namespace arr {

std::string read_file(const std::string& path);

Arrangement load_arrangement_file(const std::string& path);

/// Weight matrix file: {"rows": [["0","r",...], ...]}.
WeightMatrix load_weight_matrix(const std::string& json_text);
WeightMatrix load_weight_matrix_file(const std::string& path);

/// Loop file: {"base": [[re,im],...], "vertices": [[[re,im],...],...],
///             "samples_per_segment": 64}.
Loop load_loop(const std::string& json_text);
Loop load_loop_file(const std::string& path);

/// Comma-separated scalar row, e.g. "0,r,r,0,-2*r".
std::vector<Scalar> parse_weight_row(const std::string& text);

}  // namespace arr
