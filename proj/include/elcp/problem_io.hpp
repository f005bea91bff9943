// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "elcp/solver.hpp"

namespace elcp {

using Json = nlohmann::ordered_json;

// Problem documents are JSON objects:
//   name     string (optional)
//   p, q     positive integers
//   cone     tagged union: orthant | second_order | polyhedral (halfspaces
//            or generators) | hyperplane | product; dimension must equal q
//   map      tagged union: affine (matrix + offset over R^{p+q}) |
//            combination (terms of scalar function + weight) | builtin (id)
//   start    optional {x, u}, defaults to the origin
//   options  optional solver overrides (max_iter, tol_step, tol_residual,
//            monotone_check, trace)
// A builtin map expands to its full combination form at parse time, so
// serialize(parse(text)) always writes a self-contained document.
Problem parse_problem_text(const std::string& text);
Problem load_problem(const std::string& path);
std::string serialize_problem(const Problem& problem);

// 17 significant digits: any double re-parses to the identical bit pattern.
// Non-finite values render as null (JSON has no literal for them).
std::string format_double(double v);

// Render with 17-significant-digit numbers; scalar-only arrays stay on one
// line, everything else is indented by two spaces per level.
std::string dump_json(const Json& j);

// Columns: n, x_1..x_p, u_1..u_q, residual, step_norm.
std::string trace_to_csv(const std::vector<TraceRow>& trace, int p, int q);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace elcp
