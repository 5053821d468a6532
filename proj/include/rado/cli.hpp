// Batch command-line front end. Exit codes: 0 success, 1 domain error
// (with {"error": ...} on stdout), 2 usage error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rado/compact_family.hpp"

namespace rado::cli {

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Oracle specs: id | pairs:0-1,1-0 | fp:<bits>[:depth] | c0:<seed>[:depth]
// | sample:<seed>:<depth>[:cycles]. `seed` seeds fp builds.
AutomorphismOracle parse_oracle(const std::string& spec, std::uint64_t seed);
// Vertices separated by commas; brace notation may contain commas.
std::vector<Vertex> parse_vertex_list(const std::string& text);
// k:v pairs, e.g. 0:1,1:0,2:1.
TypeFunction parse_tau(const std::string& text);

}  // namespace rado::cli
