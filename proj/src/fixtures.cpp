#include "betti/fixtures.hpp"

#include <fstream>

#include "betti/api.hpp"
#include "betti/errors.hpp"

namespace betti {

using nlohmann::json;

std::vector<Fixture> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("corpus", "cannot open fixture corpus " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError("corpus", std::string("malformed fixture corpus: ") + e.what());
  }
  std::vector<Fixture> out;
  for (const auto& f : doc.at("fixtures")) {
    const std::string match = f.value("match", "exact");
    if (match != "exact" && match != "subset") throw DomainError("corpus", "match must be exact or subset");
    out.push_back({f.at("id").get<std::string>(), f.value("description", ""), f.value("origin", ""),
                   f.at("op").get<std::string>(), match == "subset", f.value("args", json::object()),
                   f.at("expected")});
  }
  return out;
}

json project(const json& actual, const json& expected) {
  if (expected.is_object() && actual.is_object()) {
    json out = json::object();
    for (const auto& [key, value] : expected.items()) {
      if (actual.contains(key)) out[key] = project(actual.at(key), value);
    }
    return out;
  }
  if (expected.is_array() && actual.is_array() && expected.size() == actual.size()) {
    json out = json::array();
    for (std::size_t k = 0; k < actual.size(); ++k) out.push_back(project(actual[k], expected[k]));
    return out;
  }
  return actual;
}

FixtureResult run_fixture(const Fixture& fixture) {
  FixtureResult result{fixture.id, false, json::array(), ""};
  const bool wants_error =
      fixture.expected.is_object() && fixture.expected.size() == 1 && fixture.expected.contains("error");
  json observed;
  try {
    observed = run_op(fixture.op, fixture.args);
    if (fixture.subset) observed = project(observed, fixture.expected);
  } catch (const DomainError& e) {
    if (!wants_error) {
      result.error = e.what();
      return result;
    }
    observed = {{"error", e.reason()}};
  } catch (const std::exception& e) {
    result.error = e.what();
    return result;
  }
  result.diff = json::diff(fixture.expected, observed);
  result.passed = result.diff.empty();
  return result;
}

std::filesystem::path default_corpus_path() { return BETTI_FIXTURE_CORPUS; }

}  // namespace betti
