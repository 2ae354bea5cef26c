#pragma once

#include <vector>

#include <json.hpp>

#include "betti/betti_table.hpp"
#include "betti/cancellation.hpp"
#include "betti/codim2.hpp"
#include "betti/hilbert.hpp"
#include "betti/local_artinian.hpp"
#include "betti/poly_matrix.hpp"
#include "betti/stable.hpp"

namespace betti {

using nlohmann::json;

/// {"values": [...], "tail": "zero" | "unspecified"}. A bare array reads as a
/// zero tail.
json to_json(const HilbertFunction& h);
HilbertFunction hilbert_from_json(const json& j);

/// {"n": 3, "generators": ["x^2", ...]}, plus "valid_through" when truncated.
json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const json& j);

/// {"kind": "quotient", "rows": [{"i": 0, "shifts": {"0": 1}}, ...]}
json to_json(const BettiTable& table);
BettiTable table_from_json(const json& j);

/// {"i": 3, "j": 5, "jp": 6, "class": "negative"}
json to_json(const Cancellation& c);
Cancellation cancellation_from_json(const json& j);
json to_json(const std::vector<Cancellation>& sequence);
std::vector<Cancellation> sequence_from_json(const json& j);

json to_json(const DegreeMatrix& m);

Mode mode_from_string(const std::string& text);
std::string to_string(Mode mode);

/// {"row": 3, "col": 1}; [3, 1] is accepted on input.
json to_json(const MatrixPosition& p);
std::vector<MatrixPosition> positions_from_json(const json& j);

/// Row-major array of polynomial strings.
json to_json(const PolyMatrix& m);

json to_json(const CodimTwoProfile& p);
json to_json(const VerificationReport& report);

/// {"n": 2, "generators": ["x^4-x^2*y^2", ...]}
LocalIdealPresentation local_ideal_from_json(const json& j);

}  // namespace betti
