#include "betti/json_io.hpp"

#include <string>

#include "betti/errors.hpp"

namespace betti {

namespace {

DomainError bad_json(const std::string& what) { return DomainError("bad-input", what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw bad_json(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json to_json(const HilbertFunction& h) {
  return {{"values", h.values()}, {"tail", h.tail() == Tail::Zero ? "zero" : "unspecified"}};
}

HilbertFunction hilbert_from_json(const json& j) {
  if (j.is_array()) return HilbertFunction(j.get<std::vector<long>>(), Tail::Zero);
  Tail tail = Tail::Zero;
  if (j.contains("tail")) {
    const auto text = j.at("tail").get<std::string>();
    if (text == "unspecified") {
      tail = Tail::Unspecified;
    } else if (text != "zero") {
      throw bad_json("tail must be \"zero\" or \"unspecified\"");
    }
  }
  return HilbertFunction(field(j, "values").get<std::vector<long>>(), tail);
}

json to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_string(g));
  json out{{"n", ideal.num_vars()}, {"generators", gens}};
  if (ideal.truncated()) out["valid_through"] = *ideal.valid_through();
  return out;
}

MonomialIdeal ideal_from_json(const json& j) {
  const int n = field(j, "n").get<int>();
  std::vector<Monomial> gens;
  for (const auto& g : field(j, "generators")) gens.push_back(parse_monomial(g.get<std::string>(), n));
  MonomialIdeal out(n, std::move(gens));
  if (j.contains("valid_through")) out.mark_truncated(j.at("valid_through").get<int>());
  return out;
}

json to_json(const BettiTable& table) {
  json rows = json::array();
  for (int i = 0; i < table.length(); ++i) {
    json shifts = json::object();
    for (auto [shift, mult] : table.row(i)) shifts[std::to_string(shift)] = mult;
    rows.push_back({{"i", i}, {"shifts", shifts}});
  }
  return {{"kind", table.kind() == TableKind::Quotient ? "quotient" : "module"}, {"rows", rows}};
}

BettiTable table_from_json(const json& j) {
  const auto kind_text = field(j, "kind").get<std::string>();
  TableKind kind;
  if (kind_text == "quotient") {
    kind = TableKind::Quotient;
  } else if (kind_text == "module") {
    kind = TableKind::Module;
  } else {
    throw bad_json("kind must be \"quotient\" or \"module\"");
  }
  std::vector<BettiRow> rows;
  for (const auto& r : field(j, "rows")) {
    const int i = field(r, "i").get<int>();
    if (i < 0) throw bad_json("negative homological degree");
    if (static_cast<int>(rows.size()) <= i) rows.resize(static_cast<std::size_t>(i) + 1);
    for (const auto& [shift, mult] : field(r, "shifts").items()) {
      const long m = mult.get<long>();
      if (m < 0) throw bad_json("negative Betti number");
      if (m > 0) rows[i][std::stoi(shift)] += m;
    }
  }
  return BettiTable(kind, std::move(rows));
}

json to_json(const Cancellation& c) {
  return {{"i", c.i}, {"j", c.j}, {"jp", c.jp}, {"class", cancellation_class(c)}};
}

Cancellation cancellation_from_json(const json& j) {
  if (j.is_array() && j.size() == 3) return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
  return {field(j, "i").get<int>(), field(j, "j").get<int>(), field(j, "jp").get<int>()};
}

json to_json(const std::vector<Cancellation>& sequence) {
  json out = json::array();
  for (const auto& c : sequence) out.push_back(to_json(c));
  return out;
}

std::vector<Cancellation> sequence_from_json(const json& j) {
  if (!j.is_array()) throw bad_json("a cancellation sequence must be an array");
  std::vector<Cancellation> out;
  for (const auto& c : j) out.push_back(cancellation_from_json(c));
  return out;
}

json to_json(const DegreeMatrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.row_shifts.size(); ++r) {
    json row = json::array();
    for (std::size_t s = 0; s < m.col_shifts.size(); ++s) row.push_back(m.entry(r, s));
    entries.push_back(row);
  }
  return {{"step", m.step},
          {"row_shifts", m.row_shifts},
          {"col_shifts", m.col_shifts},
          {"entries", entries},
          {"has_non_positive", m.has_non_positive()}};
}

Mode mode_from_string(const std::string& text) {
  if (text == "zero") return Mode::Zero;
  if (text == "negative") return Mode::Negative;
  if (text == "both") return Mode::Both;
  throw bad_json("mode must be zero, negative or both");
}

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Zero:
      return "zero";
    case Mode::Negative:
      return "negative";
    case Mode::Both:
      break;
  }
  return "both";
}

json to_json(const MatrixPosition& p) { return {{"row", p.row}, {"col", p.col}}; }

std::vector<MatrixPosition> positions_from_json(const json& j) {
  if (!j.is_array()) throw bad_json("positions must be an array");
  std::vector<MatrixPosition> out;
  for (const auto& p : j) {
    if (p.is_array() && p.size() == 2) {
      out.push_back({p[0].get<int>(), p[1].get<int>()});
    } else {
      out.push_back({field(p, "row").get<int>(), field(p, "col").get<int>()});
    }
  }
  return out;
}

json to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const CodimTwoProfile& p) {
  json e = json::object();
  for (int j = 1; j < static_cast<int>(p.e.size()); ++j) {
    if (p.e[j] != 0) e[std::to_string(j)] = p.e[j];
  }
  json degrees = json::array();
  for (int i = 0; i <= p.d; ++i) degrees.push_back(p.generator_degree(i));
  return {{"d", p.d},   {"socle", p.socle}, {"h", to_json(p.h)}, {"e", e},
          {"k", p.k},   {"lex", to_json(p.lex)}, {"generator_degrees", degrees}};
}

json to_json(const VerificationReport& report) {
  return {{"hf_ok", report.hf_ok},   {"lex_ok", report.lex_ok},
          {"mu_ok", report.mu_ok},   {"mu", report.mu},
          {"mu_expected", report.mu_expected}, {"betti", report.betti},
          {"failures", report.failures}, {"passed", report.passed()}};
}

LocalIdealPresentation local_ideal_from_json(const json& j) {
  const int n = field(j, "n").get<int>();
  std::vector<Polynomial> gens;
  for (const auto& g : field(j, "generators")) gens.push_back(parse_polynomial(g.get<std::string>(), n));
  return LocalIdealPresentation(n, std::move(gens));
}

}  // namespace betti
