#pragma once

#include <string>

#include <json.hpp>

#include "betti/hilbert.hpp"

namespace betti {

/// Outcome of checking one corollary two ways: a closed-form statement and
/// the cancellation engine. `consistent` is false exactly when they disagree.
struct CorollaryReport {
  std::string corollary;
  nlohmann::json inputs;
  std::string verdict;
  bool consistent = true;
  nlohmann::json data;
};

/// Generators in at most two consecutive degrees force every cancellation of
/// ek_betti(L) to be a zero cancellation.
CorollaryReport check_successive_degrees(const MonomialIdeal& ideal);

/// For a lex ideal L with mu(L) <= n generated in degrees >= 2: Hibi-Murai
/// shape, pd = mu(L), depth = n - mu(L), and a last Betti number of 1 that
/// no cancellation can remove.
CorollaryReport check_hibi_murai(const MonomialIdeal& ideal);

/// For h = (1, n, h_2, ..., h_t, 1, ..., 1): t >= n and h_t > n rule out a
/// Gorenstein quotient, which the engine must confirm with min beta_n > 1.
CorollaryReport check_gorenstein_tail(const HilbertFunction& h, int num_vars);

/// e_j <= 1 for all j exactly when the engine can bring beta_2 down to 1;
/// in that case a Gorenstein ideal is realized and verified.
CorollaryReport check_codim2_gorenstein(const HilbertFunction& h);

nlohmann::json to_json(const CorollaryReport& report);

}  // namespace betti
