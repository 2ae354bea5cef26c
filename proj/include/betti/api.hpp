#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace betti {

/// Runs one named operation on JSON arguments and returns its JSON result.
/// The CLI and the fixture corpus both go through this entry point.
///
/// Operation names: lex, hf, ek, degmat, cancel.list, cancel.apply,
/// cancel.reachable, cancel.min, cancel.test, codim2.profile, codim2.matrix,
/// codim2.positions, codim2.realize, local.hf, local.mu, local.member,
/// local.lex, check.successive, check.hibi-murai, check.gorenstein,
/// check.codim2-gorenstein.
nlohmann::json run_op(const std::string& op, const nlohmann::json& args);

const std::vector<std::string>& op_names();

}  // namespace betti
