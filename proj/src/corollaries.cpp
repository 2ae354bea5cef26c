#include "betti/corollaries.hpp"

#include <set>

#include "betti/cancellation.hpp"
#include "betti/codim2.hpp"
#include "betti/errors.hpp"
#include "betti/json_io.hpp"
#include "betti/local_artinian.hpp"
#include "betti/stable.hpp"

namespace betti {

CorollaryReport check_successive_degrees(const MonomialIdeal& ideal) {
  CorollaryReport report{"successive-degrees", {{"ideal", to_json(ideal)}}, "", true, json::object()};
  std::set<int> degrees;
  for (const auto& g : ideal.generators()) degrees.insert(g.degree());
  const bool applies = degrees.size() <= 1 || (degrees.size() == 2 && *degrees.rbegin() == *degrees.begin() + 1);
  report.data["generator_degrees"] = degrees;
  report.verdict = applies ? "applies" : "does-not-apply";
  if (applies) {
    const auto negatives = list_cancellations(ek_betti(ideal), Mode::Negative);
    report.data["negative_cancellations"] = to_json(negatives);
    report.consistent = negatives.empty();
  }
  return report;
}

CorollaryReport check_hibi_murai(const MonomialIdeal& ideal) {
  const int n = ideal.num_vars();
  const long mu = static_cast<long>(ideal.size());
  CorollaryReport report{"hibi-murai", {{"ideal", to_json(ideal)}}, "", true, json::object()};
  report.data["mu"] = mu;
  bool hypotheses = is_lex_ideal(ideal) && mu <= n;
  for (const auto& g : ideal.generators()) hypotheses = hypotheses && g.degree() >= 2;
  if (!hypotheses) {
    report.verdict = "hypothesis-fails";
    return report;
  }
  const auto shape = hibi_murai_shape(ideal);
  const auto dims = pd_and_depth(ideal);
  const auto table = ek_betti(ideal);
  const int top = table.top_row();
  const long top_total = table.row_total(top);
  const long top_min = min_row_total(table, top);
  report.data["shape"] = shape ? json(*shape) : json(nullptr);
  report.data["projective_dimension"] = dims.projective_dimension;
  report.data["depth"] = dims.depth;
  report.data["top_row"] = top;
  report.data["top_total"] = top_total;
  report.data["top_min_after_cancellations"] = top_min;
  report.consistent = shape.has_value() && dims.projective_dimension == mu && dims.depth == n - mu &&
                      top_total == 1 && top_min == 1;
  report.verdict = report.consistent ? "holds" : "violated";
  if (shape) {
    const auto tail = resolution_tail(ideal);
    json last = json::object(), penultimate = json::object();
    for (auto [j, b] : tail.last) last[std::to_string(j)] = b;
    for (auto [j, b] : tail.penultimate) penultimate[std::to_string(j)] = b;
    report.data["tail"] = {{"last", last}, {"penultimate", penultimate}};
  }
  return report;
}

CorollaryReport check_gorenstein_tail(const HilbertFunction& input, int num_vars) {
  CorollaryReport report{"gorenstein-tail", {{"h", to_json(input)}, {"n", num_vars}}, "", true, json::object()};
  if (input.tail() != Tail::Zero) throw DomainError("gorenstein-shape", "the Hilbert function must have a zero tail");
  const HilbertFunction h = input.normalized();
  const int s = h.socle_degree();
  if (s < 1 || h(1) != num_vars || h(s) != 1) {
    throw DomainError("gorenstein-shape", "expected (1, n, h_2, ..., h_t, 1, ..., 1)");
  }
  int t = s;
  while (t > 0 && h(t) == 1) --t;
  const bool fires = t >= num_vars && h(t) > num_vars;
  const auto table = ek_betti(lex_ideal(h, num_vars));
  const long engine_min = min_row_total(table, num_vars);
  report.data["t"] = t;
  report.data["h_t"] = h(t);
  report.data["closed_form_fires"] = fires;
  report.data["engine_min_last_betti"] = engine_min;
  report.consistent = !fires || engine_min > 1;
  report.verdict = (fires || engine_min > 1) ? "not-gorenstein-admissible" : "no-obstruction";
  return report;
}

CorollaryReport check_codim2_gorenstein(const HilbertFunction& h) {
  CorollaryReport report{"codim2-gorenstein", {{"h", to_json(h)}}, "", true, json::object()};
  const auto profile = profile_from_hf(h);
  const bool admissible = gorenstein_admissible_codim2(h);
  const long engine_min = min_row_total(ek_betti(profile.lex), 2);
  report.data["e"] = to_json(profile)["e"];
  report.data["engine_min_beta2"] = engine_min;
  report.verdict = admissible ? "gorenstein-admissible" : "not-gorenstein-admissible";
  report.consistent = admissible == (engine_min == 1);
  if (admissible) {
    const auto positions = maximum_position_set(profile);
    const auto realization = realize(profile, positions);
    const LocalIdealPresentation ideal(2, realization.generators);
    const auto verification = verify_realization(ideal, profile, positions.size());
    json pos = json::array();
    for (const auto& p : positions) pos.push_back(to_json(p));
    json gens = json::array();
    for (const auto& g : realization.generators) gens.push_back(to_string(g));
    report.data["witness"] = {{"positions", pos},
                              {"matrix", to_json(realization.matrix)},
                              {"generators", gens},
                              {"verification", to_json(verification)}};
    report.consistent = report.consistent && static_cast<int>(positions.size()) == profile.d - 1 &&
                        verification.passed() && verification.mu == 2;
  }
  return report;
}

json to_json(const CorollaryReport& report) {
  return {{"corollary", report.corollary},
          {"inputs", report.inputs},
          {"verdict", report.verdict},
          {"consistent", report.consistent},
          {"data", report.data}};
}

}  // namespace betti
