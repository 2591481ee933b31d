#pragma once

// JSON exchange format.
//
// Problem:  {"tau1": .., "tau2": .., "c": ..,
//            "p1": {"breaks": [..], "values": [..]}, "p2": {..}, "f": {..}}
// Solution: {"breaks": [..], "values": [..]}   (node values)
//
// Numbers are written with 17 significant digits so files round-trip exactly.

#include <stdexcept>
#include <string>

#include "fde/equations.hpp"

namespace fde {

/// Malformed input; the message names the line/column or the offending field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_number(double v);

std::string to_json(const StepFunction& sf);
std::string to_json(const TwoPointProblem& prob);
std::string to_json(const PiecewiseLinear& x);

/// Problem fields plus null_vector, delta, residual and the null solution,
/// so the file can be fed back to the solver.
std::string to_json(const Counterexample& cx, double A, double B, double residual);

TwoPointProblem parse_problem(const std::string& text);
PiecewiseLinear parse_solution(const std::string& text);

}  // namespace fde
