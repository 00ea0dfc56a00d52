#pragma once

// JSON forms of matrices, kets, circuits and outcome statistics.
//
// Matrix file:  {"d": int, "rows": int, "cols": int,
//                "re": [[...], ...], "im": [[...], ...]}   (row-major)
// Circuit file: {"n_qubits": int,
//                "gates": [{"kind": "H"|"R"|"CR"|"SWAP"|"U", "k": int?,
//                           "wires": [int...], "dagger": bool?,
//                           "re": [[...]]?, "im": [[...]]?}]}
//   Gates are listed in application order (first element acts first).
// Distributions and counts are d x d nested arrays indexed [j][k].

#include <filesystem>
#include <string>

#include "json.hpp"
#include "naimark/qubit_decomp.hpp"
#include "naimark/simulate.hpp"
#include "naimark/wh_core.hpp"

namespace naimark {

using Json = nlohmann::json;

/// `d` is the qudit dimension recorded alongside the shape (d for M, sqrt of
/// rows for U).
Json matrix_to_json(const ComplexMatrix& m, int d);
ComplexMatrix matrix_from_json(const Json& j);

void write_json_file(const std::filesystem::path& path, const Json& j);
Json read_json_file(const std::filesystem::path& path);

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m, int d);
ComplexMatrix read_matrix_file(const std::filesystem::path& path);

/// Accepts [x, ...] (real), [[re, im], ...], or {"re": [...], "im": [...]}.
Ket ket_from_json(const Json& j);
Json ket_to_json(const Ket& v);

Json circuit_to_json(const GateList& circuit);
GateList circuit_from_json(const Json& j);

Json distribution_to_json(const OutcomeDistribution& dist);
Json counts_to_json(const OutcomeCounts& counts);

}  // namespace naimark
