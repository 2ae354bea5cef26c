#include "betti/api.hpp"

#include <functional>
#include <map>

#include "betti/corollaries.hpp"
#include "betti/errors.hpp"
#include "betti/json_io.hpp"

namespace betti {

namespace {

using Handler = std::function<json(const json&)>;

const json& arg(const json& args, const char* key) {
  if (!args.is_object() || !args.contains(key)) {
    throw DomainError("bad-input", std::string("missing argument \"") + key + "\"");
  }
  return args.at(key);
}

SearchOptions search_options(const json& args) {
  SearchOptions options;
  if (args.contains("mode")) options.mode = mode_from_string(args.at("mode").get<std::string>());
  if (args.contains("allow_row0")) options.allow_row0 = args.at("allow_row0").get<bool>();
  if (args.contains("size_guard")) options.size_guard = args.at("size_guard").get<long>();
  return options;
}

json totals_json(const std::set<Totals>& totals) {
  json out = json::array();
  for (const auto& t : totals) out.push_back(t);
  return out;
}

json op_lex(const json& args) {
  return to_json(lex_ideal(hilbert_from_json(arg(args, "hf")), arg(args, "n").get<int>()));
}

json op_hf(const json& args) {
  const auto ideal = ideal_from_json(arg(args, "ideal"));
  const int bound = args.contains("bound") ? args.at("bound").get<int>() : ideal.max_generator_degree() + 1;
  return to_json(hf_of_quotient(ideal, bound));
}

json op_ek(const json& args) { return to_json(ek_betti(ideal_from_json(arg(args, "ideal")))); }

json op_degmat(const json& args) {
  json out = json::array();
  for (const auto& m : degree_matrices(table_from_json(arg(args, "table")))) out.push_back(to_json(m));
  return out;
}

json op_cancel_list(const json& args) {
  const auto options = search_options(args);
  return to_json(list_cancellations(table_from_json(arg(args, "table")), options.mode, options.allow_row0));
}

json op_cancel_apply(const json& args) {
  const auto options = search_options(args);
  const auto sequence = args.contains("sequence") ? sequence_from_json(args.at("sequence")) : std::vector<Cancellation>{};
  const auto result = apply_sequence(table_from_json(arg(args, "table")), sequence, options.allow_row0);
  return {{"table", to_json(result)}, {"totals", result.totals()}};
}

json op_cancel_reachable(const json& args) {
  const auto table = table_from_json(arg(args, "table"));
  const auto options = search_options(args);
  if (args.contains("target")) {
    const auto target = args.at("target").get<Totals>();
    const auto r = is_reachable(table, target, options);
    return {{"target", target}, {"reachable", r.reachable}, {"witness", to_json(r.witness)}};
  }
  const auto totals = reachable_totals(table, options);
  return {{"mode", to_string(options.mode)}, {"count", totals.size()}, {"totals", totals_json(totals)}};
}

json op_cancel_min(const json& args) {
  const auto options = search_options(args);
  const int row = arg(args, "row").get<int>();
  return {{"row", row},
          {"mode", to_string(options.mode)},
          {"min", min_row_total(table_from_json(arg(args, "table")), row, options)}};
}

json op_cancel_test(const json& args) {
  const auto ideal = ideal_from_json(arg(args, "ideal"));
  json rows = json::object();
  if (args.contains("row")) {
    const int i = args.at("row").get<int>();
    rows[std::to_string(i)] = lex_cancellation_test(ideal, i);
  } else {
    for (int i = 2; i <= ideal.num_vars(); ++i) rows[std::to_string(i)] = lex_cancellation_test(ideal, i);
  }
  return {{"rows", rows}};
}

json op_codim2_profile(const json& args) { return to_json(profile_from_hf(hilbert_from_json(arg(args, "hf")))); }

json op_codim2_matrix(const json& args) {
  return {{"matrix", to_json(hb_matrix(profile_from_hf(hilbert_from_json(arg(args, "hf")))))}};
}

json op_codim2_positions(const json& args) {
  const auto profile = profile_from_hf(hilbert_from_json(arg(args, "hf")));
  json positions = json::array();
  for (const auto& a : admissible_positions(profile)) {
    positions.push_back({{"row", a.position.row},
                         {"col", a.position.col},
                         {"value", a.value},
                         {"class", a.is_zero() ? "zero" : "negative"}});
  }
  json maximum = json::array();
  for (const auto& p : maximum_position_set(profile)) maximum.push_back(to_json(p));
  return {{"positions", positions}, {"maximum", maximum}};
}

json op_codim2_realize(const json& args) {
  const auto profile = profile_from_hf(hilbert_from_json(arg(args, "hf")));
  const auto positions = args.contains("positions") ? positions_from_json(args.at("positions"))
                                                    : std::vector<MatrixPosition>{};
  const auto realization = realize(profile, positions);
  json gens = json::array();
  for (const auto& g : realization.generators) gens.push_back(to_string(g));
  json pos = json::array();
  for (const auto& p : positions) pos.push_back(to_json(p));
  const LocalIdealPresentation ideal(2, realization.generators);
  return {{"matrix", to_json(realization.matrix)},
          {"generators", gens},
          {"positions", pos},
          {"verification", to_json(verify_realization(ideal, profile, positions.size()))}};
}

LocalOptions local_options(const json& args) {
  LocalOptions options;
  if (args.contains("initial_bound")) options.initial_bound = args.at("initial_bound").get<int>();
  if (args.contains("ceiling")) options.ceiling = args.at("ceiling").get<int>();
  return options;
}

json op_local_hf(const json& args) {
  return to_json(local_hf(local_ideal_from_json(arg(args, "ideal")), local_options(args)));
}

json op_local_mu(const json& args) {
  return {{"mu", mu(local_ideal_from_json(arg(args, "ideal")), local_options(args))}};
}

json op_local_member(const json& args) {
  const auto ideal = local_ideal_from_json(arg(args, "ideal"));
  const auto options = local_options(args);
  const int bound = args.contains("bound") ? args.at("bound").get<int>() : membership_bound(ideal, options);
  const auto p = parse_polynomial(arg(args, "poly").get<std::string>(), ideal.num_vars());
  return {{"poly", to_string(p)}, {"bound", bound}, {"member", membership(p, ideal, bound, options)}};
}

json op_local_lex(const json& args) {
  return to_json(lex_of_local(local_ideal_from_json(arg(args, "ideal")), local_options(args)));
}

json op_check_successive(const json& args) {
  return to_json(check_successive_degrees(ideal_from_json(arg(args, "ideal"))));
}

json op_check_hibi_murai(const json& args) { return to_json(check_hibi_murai(ideal_from_json(arg(args, "ideal")))); }

json op_check_gorenstein(const json& args) {
  return to_json(check_gorenstein_tail(hilbert_from_json(arg(args, "hf")), arg(args, "n").get<int>()));
}

json op_check_codim2_gorenstein(const json& args) {
  return to_json(check_codim2_gorenstein(hilbert_from_json(arg(args, "hf"))));
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"lex", op_lex},
      {"hf", op_hf},
      {"ek", op_ek},
      {"degmat", op_degmat},
      {"cancel.list", op_cancel_list},
      {"cancel.apply", op_cancel_apply},
      {"cancel.reachable", op_cancel_reachable},
      {"cancel.min", op_cancel_min},
      {"cancel.test", op_cancel_test},
      {"codim2.profile", op_codim2_profile},
      {"codim2.matrix", op_codim2_matrix},
      {"codim2.positions", op_codim2_positions},
      {"codim2.realize", op_codim2_realize},
      {"local.hf", op_local_hf},
      {"local.mu", op_local_mu},
      {"local.member", op_local_member},
      {"local.lex", op_local_lex},
      {"check.successive", op_check_successive},
      {"check.hibi-murai", op_check_hibi_murai},
      {"check.gorenstein", op_check_gorenstein},
      {"check.codim2-gorenstein", op_check_codim2_gorenstein},
  };
  return table;
}

}  // namespace

json run_op(const std::string& op, const json& args) {
  const auto& table = handlers();
  const auto it = table.find(op);
  if (it == table.end()) throw DomainError("unknown-op", "unknown operation \"" + op + "\"");
  try {
    return it->second(args);
  } catch (const json::exception& e) {
    throw DomainError("bad-input", e.what());
  }
}

const std::vector<std::string>& op_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, handler] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

}  // namespace betti
