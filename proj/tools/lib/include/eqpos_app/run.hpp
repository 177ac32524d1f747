#pragma once

#include <string>

#include "eqpos/bsdh.hpp"
#include "eqpos/errors.hpp"
#include "eqpos_app/problem.hpp"

namespace eqpos::app {

struct RunOptions {
  /// Adds a per-query "timing_ms" field. Off by default so output is reproducible.
  bool timing = false;
};

/// Executes every query of the problem and returns the result document.
OrderedJson run(const ProblemFile& problem, const RunOptions& options = {});

/// Plain-text rendering of a result document, one line per query.
std::string render_text(const OrderedJson& result);

/// Undirected GKM graph: vertices are gallery bit strings, one edge per model
/// curve labelled "j; weight; [deg L1,...,deg Lr]" with 1-based j.
std::string export_gkm_dot(const BsdhVariety& z);

/// Exit status for a failure class: 2 schema, 3 guard, 4 math-consistency,
/// 5 non-nef Seshadri request.
int exit_code(ErrorKind kind);
/// {"error":{"kind":..., "exit_code":..., "message":...}}
OrderedJson error_json(const std::string& kind, int code, const std::string& message);

/// Root-system summary for the describe command.
OrderedJson describe(const std::string& type);

/// Builds the variety of a bsdh-mode problem.
BsdhVariety variety_of(const ProblemFile& problem);

}  // namespace eqpos::app
