#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace betti {

/// One stored example: an operation, its arguments, and the expected output.
/// With `subset` set only the keys present in `expected` are compared, so a
/// fixture can pin the reference values without freezing every auxiliary
/// field. An expected payload of the form {"error": reason} asks for a
/// DomainError with that reason.
struct Fixture {
  std::string id;
  std::string description;
  std::string origin;
  std::string op;
  bool subset = false;
  nlohmann::json args;
  nlohmann::json expected;
};

struct FixtureResult {
  std::string id;
  bool passed = false;
  /// RFC 6902 patch turning the expected payload into the observed one.
  nlohmann::json diff;
  std::string error;
};

/// Reads {"fixtures": [...]} from a JSON file.
std::vector<Fixture> load_corpus(const std::filesystem::path& path);

/// Keeps the parts of `actual` that `expected` mentions (objects by key,
/// arrays element-wise when lengths agree).
nlohmann::json project(const nlohmann::json& actual, const nlohmann::json& expected);

FixtureResult run_fixture(const Fixture& fixture);

/// Location of the corpus installed with the source tree.
std::filesystem::path default_corpus_path();

}  // namespace betti
