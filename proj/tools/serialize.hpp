#pragma once

#include <string>

#include "json.hpp"
#include "qchan/channels.hpp"
#include "qchan/frames.hpp"
#include "qchan/matrix.hpp"
#include "qchan/states.hpp"

namespace qchan::cli {

// All emitted JSON goes through these formatters: doubles are serialized
// with 17 significant digits, which round-trips IEEE doubles exactly and
// keeps reports byte-identical across runs.
std::string fmt_double(double value);
std::string json_escape(const std::string& s);

// Matrix wire format: array of rows, each entry a [re, im] pair.
std::string matrix_json(const ComplexMatrix& m);
// Compact human-readable rendering for the text tables.
std::string matrix_text(const ComplexMatrix& m);

// State documents: {"dim": d, "kind": "named"|"matrix", "name": ..} or
// {.., "matrix": [[[re,im],..],..]}. Exactly one of name/matrix, matching
// kind; matrix documents must satisfy the density-operator invariants.
DensityOperator state_from_document(const nlohmann::json& doc);

// Resolves a --state argument: one of the named states (zero, one, plus,
// minus, plus_i, minus_i, mixed) or a path to a state document.
DensityOperator resolve_state(const std::string& arg);

// Channel documents: {"dim": d, "terms": [{"unitary": M, "projector": M,
// "side": "UP"|"PU"}, ..]} for the structured form, or {"dim": d,
// "kraus": [M, ..]} for a raw operator list.
KrausChannel channel_from_document(const nlohmann::json& doc);
std::string structured_channel_json(const KrausChannel& channel);

}  // namespace qchan::cli
