#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "betti/api.hpp"
#include "betti/errors.hpp"
#include "betti/fixtures.hpp"

using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kMismatch = 1, kDomain = 2, kSizeGuard = 3, kInvariant = 4 };

// "-" reads stdin, "@file" reads a file, anything else is JSON text.
json read_payload(const std::string& text) {
  std::string body;
  if (text == "-") {
    body.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw betti::DomainError("bad-input", "cannot read " + text.substr(1));
    body.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    body = text;
  }
  try {
    return json::parse(body);
  } catch (const json::exception& e) {
    throw betti::DomainError("bad-input", std::string("payload is not valid JSON: ") + e.what());
  }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int report_error(const char* kind, const std::string& reason, const std::string& message, int code) {
  std::cerr << json{{"error", kind}, {"reason", reason}, {"message", message}}.dump() << '\n';
  return code;
}

struct Options {
  std::string payload;
  std::string extra;
  int n = 0;
  int row = -1;
  int bound = -1;
  std::string mode = "both";
  std::string target;
  std::string sequence;
  std::string poly;
  bool allow_row0 = false;
  long size_guard = -1;
  std::string corpus;
};

long size_guard_from_env() {
  if (const char* env = std::getenv("BETTI_SIZE_GUARD")) {
    try {
      return std::stol(env);
    } catch (const std::exception&) {
      throw betti::DomainError("bad-input", "BETTI_SIZE_GUARD must be an integer");
    }
  }
  return -1;
}

json search_args(const Options& o) {
  json args{{"mode", o.mode}, {"allow_row0", o.allow_row0}};
  long guard = o.size_guard >= 0 ? o.size_guard : size_guard_from_env();
  if (guard >= 0) args["size_guard"] = guard;
  return args;
}

int run_fixtures(const std::string& action, const Options& o) {
  const auto path = o.corpus.empty() ? betti::default_corpus_path() : std::filesystem::path(o.corpus);
  const auto corpus = betti::load_corpus(path);
  if (action == "list") {
    json ids = json::array();
    for (const auto& f : corpus) {
      ids.push_back({{"id", f.id}, {"op", f.op}, {"origin", f.origin}, {"description", f.description}});
    }
    emit({{"count", corpus.size()}, {"fixtures", ids}});
    return kOk;
  }
  json results = json::array();
  int failed = 0;
  for (const auto& f : corpus) {
    const auto r = betti::run_fixture(f);
    json entry{{"id", r.id}, {"passed", r.passed}};
    if (!r.passed) {
      ++failed;
      if (!r.error.empty()) entry["error"] = r.error;
      if (!r.diff.empty()) entry["diff"] = r.diff;
    }
    results.push_back(entry);
  }
  emit({{"total", corpus.size()}, {"failed", failed}, {"results", results}});
  return failed == 0 ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti tables of lex ideals, consecutive cancellations and Hilbert-Burch realizations"};
  app.require_subcommand(1);
  Options o;
  std::string op;
  std::string fixture_action;

  auto payload = [&](CLI::App* cmd, const std::string& what) {
    cmd->add_option("payload", o.payload, what + " as JSON text, @file, or - for stdin")->required();
  };

  auto* lex = app.add_subcommand("lex", "Lex ideal with a given Hilbert function");
  payload(lex, "Hilbert function");
  lex->add_option("--n", o.n, "number of variables")->required();
  lex->callback([&] { op = "lex"; });

  auto* hf = app.add_subcommand("hf", "Hilbert function of P/L for a monomial ideal");
  payload(hf, "monomial ideal");
  hf->add_option("--bound", o.bound, "last degree to compute");
  hf->callback([&] { op = "hf"; });

  auto* ek = app.add_subcommand("ek", "Eliahou-Kervaire Betti table of a stable ideal");
  payload(ek, "monomial ideal");
  ek->callback([&] { op = "ek"; });

  auto* degmat = app.add_subcommand("degmat", "Degree matrices of a Betti table");
  payload(degmat, "Betti table");
  degmat->callback([&] { op = "degmat"; });

  auto* cancel = app.add_subcommand("cancel", "Consecutive cancellations");
  cancel->require_subcommand(1);
  for (const char* name : {"list", "apply", "reachable", "min", "test"}) {
    auto* sub = cancel->add_subcommand(name);
    const std::string sub_name = name;
    payload(sub, sub_name == "test" ? "stable monomial ideal" : "Betti table");
    if (sub_name != "test" && sub_name != "apply") {
      sub->add_option("--mode", o.mode, "zero, negative or both")->check(CLI::IsMember({"zero", "negative", "both"}));
    }
    if (sub_name != "test") sub->add_flag("--allow-row0", o.allow_row0, "allow cancelling into row 0 of a module table");
    if (sub_name == "reachable" || sub_name == "min") {
      sub->add_option("--size-guard", o.size_guard, "override the exhaustive-search size limit");
    }
    if (sub_name == "reachable") sub->add_option("--target", o.target, "total Betti sequence to test, as a JSON array");
    if (sub_name == "apply") sub->add_option("--sequence", o.sequence, "JSON array of cancellations");
    if (sub_name == "min") sub->add_option("--row", o.row, "homological degree")->required();
    if (sub_name == "test") sub->add_option("--row", o.row, "homological degree (default: all)");
    sub->callback([&op, sub_name] { op = "cancel." + sub_name; });
  }

  auto* codim2 = app.add_subcommand("codim2", "Codimension-two Hilbert-Burch tools");
  codim2->require_subcommand(1);
  for (const char* name : {"profile", "matrix", "positions", "realize"}) {
    auto* sub = codim2->add_subcommand(name);
    const std::string sub_name = name;
    payload(sub, "Hilbert function");
    if (sub_name == "realize") sub->add_option("positions", o.extra, "JSON array of [row, col] positions");
    sub->callback([&op, sub_name] { op = "codim2." + sub_name; });
  }

  auto* local = app.add_subcommand("local", "Invariants of Artinian quotients of k[[x_1..x_n]]");
  local->require_subcommand(1);
  for (const char* name : {"hf", "mu", "member", "lex"}) {
    auto* sub = local->add_subcommand(name);
    const std::string sub_name = name;
    payload(sub, "local ideal {\"n\":..,\"generators\":[..]}");
    if (sub_name == "member") {
      sub->add_option("--poly", o.poly, "polynomial to test")->required();
      sub->add_option("--bound", o.bound, "truncation degree (default: socle + 2)");
    }
    sub->callback([&op, sub_name] { op = "local." + sub_name; });
  }

  auto* check = app.add_subcommand("check", "Corollary checks, closed form against the engine");
  check->require_subcommand(1);
  for (const char* name : {"successive", "hibi-murai", "gorenstein", "codim2-gorenstein"}) {
    auto* sub = check->add_subcommand(name);
    const std::string sub_name = name;
    payload(sub, sub_name == "successive" || sub_name == "hibi-murai" ? "monomial ideal" : "Hilbert function");
    if (sub_name == "gorenstein") sub->add_option("--n", o.n, "number of variables")->required();
    sub->callback([&op, sub_name] { op = "check." + sub_name; });
  }

  auto* fixtures = app.add_subcommand("fixtures", "Stored worked examples");
  fixtures->require_subcommand(1);
  for (const char* name : {"run", "list"}) {
    auto* sub = fixtures->add_subcommand(name);
    const std::string sub_name = name;
    sub->add_option("--corpus", o.corpus, "fixture corpus file");
    sub->callback([&fixture_action, sub_name] { fixture_action = sub_name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (!fixture_action.empty()) return run_fixtures(fixture_action, o);

    json args = json::object();
    const json input = read_payload(o.payload);
    if (op == "lex") {
      args = {{"hf", input}, {"n", o.n}};
    } else if (op == "hf") {
      args = {{"ideal", input}};
      if (o.bound >= 0) args["bound"] = o.bound;
    } else if (op == "ek" || op == "cancel.test" || op == "check.successive" || op == "check.hibi-murai" ||
               op.rfind("local.", 0) == 0) {
      args = {{"ideal", input}};
    } else if (op == "degmat" || op.rfind("cancel.", 0) == 0) {
      args = search_args(o);
      args["table"] = input;
    } else {
      args = {{"hf", input}};
    }
    if (op == "cancel.min" || (op == "cancel.test" && o.row >= 0)) args["row"] = o.row;
    if (op == "cancel.reachable" && !o.target.empty()) args["target"] = read_payload(o.target);
    if (op == "cancel.apply" && !o.sequence.empty()) args["sequence"] = read_payload(o.sequence);
    if (op == "codim2.realize") args["positions"] = o.extra.empty() ? json::array() : read_payload(o.extra);
    if (op == "local.member") {
      args["poly"] = o.poly;
      if (o.bound >= 0) args["bound"] = o.bound;
    }
    if (op == "check.gorenstein") args["n"] = o.n;

    emit(betti::run_op(op, args));
    return kOk;
  } catch (const betti::DomainError& e) {
    return report_error("domain", e.reason(), e.what(), kDomain);
  } catch (const betti::SizeGuardError& e) {
    return report_error("size-guard", "size-guard", e.what(), kSizeGuard);
  } catch (const betti::InvariantError& e) {
    return report_error("invariant", "invariant", e.what(), kInvariant);
  } catch (const std::exception& e) {
    return report_error("invariant", "unexpected", e.what(), kInvariant);
  }
}
