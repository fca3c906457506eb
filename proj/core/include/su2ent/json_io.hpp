#pragma once

#include <optional>
#include <string>

#include "su2ent/criteria.hpp"
#include "su2ent/partial_transpose.hpp"
#include "su2ent/state.hpp"

namespace su2ent {

// JSON literals used by the CLI. All spin quantum numbers appear doubled
// (keys "ts1"/"ts2", entries of "negative_Ks"). Floating-point values are
// emitted with 17 significant digits so documents round-trip exactly.

// {"ts1": int, "ts2": int, "A": [floats ascending J]}
SU2State state_from_json(const std::string& text);
std::string state_to_json(const SU2State& state);

// {"ts1": int, "ts2": int, "B": [floats ascending K]}
PTSpectrum spectrum_from_json(const std::string& text);
std::string spectrum_to_json(const PTSpectrum& spectrum);

// Flat report document: spins, A and B vectors, correlator moments, witness
// values, negative multiplets, and the verdict booleans. The invariance
// residual is included when the state came from a dense extraction.
std::string report_to_json(const SU2State& state, const PTSpectrum& spectrum,
                           const CriteriaReport& report,
                           std::optional<double> invariance_residual = std::nullopt);

// 17-significant-digit representation used in all JSON output.
std::string format_double(double v);

}  // namespace su2ent
