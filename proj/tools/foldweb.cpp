// Copyright 2026 The foldweb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// foldweb: generate surface-code Clifford circuits, find Pauli webs on their
// ZX diagrams and check them against a stabilizer tableau.
//
// Exit codes: 0 verdict PASS (or plain success), 1 verdict FAIL, 2 error.
// FOLDWEB_LOG sets stderr verbosity (trace, debug, info, warn, error, off).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "foldweb/circuit_json.hpp"
#include "foldweb/errors.hpp"
#include "foldweb/lattice.hpp"
#include "foldweb/render.hpp"
#include "foldweb/statevector.hpp"
#include "foldweb/tableau.hpp"
#include "foldweb/verify.hpp"
#include "foldweb/web_json.hpp"

namespace {

using namespace foldweb;
using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

void setup_logging() {
  auto logger = spdlog::stderr_color_st("foldweb");
  logger->set_pattern("foldweb: %l: %v");
  logger->set_level(spdlog::level::warn);
  spdlog::set_default_logger(logger);
  if (const char *env = std::getenv("FOLDWEB_LOG")) {
    std::string want = env;
    auto level = spdlog::level::from_str(want);
    if (level == spdlog::level::off && want != "off") {
      spdlog::warn("FOLDWEB_LOG={} not recognised, using warn", want);
    } else {
      logger->set_level(level);
    }
  }
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw std::runtime_error("cannot write " + path);
  }
}

std::string dump(const Json &doc) { return doc.dump(2) + "\n"; }

int emit_report(const VerificationReport &rep, const std::string &out) {
  write_output(out, dump(report_to_json(rep)));
  for (const auto &c : rep.checks) {
    spdlog::debug("{} {} {}", c.name, c.pass ? "PASS" : "FAIL", c.detail);
  }
  spdlog::info("{} {} in {:.1f} ms", rep.scheme, rep.pass() ? "PASS" : "FAIL", rep.elapsed_ms);
  return rep.pass() ? kExitPass : kExitFail;
}

WebFile load_web(const std::string &path, const ZxDiagram &zx) {
  return web_from_json(nlohmann::json::parse(read_file(path)), zx.edges().size());
}

struct Options {
  int d = 3;
  std::string scheme = "cclp-y";
  size_t trials = 32;
  uint64_t seed = 0;
  std::string out;
  std::string lower_format = "json";
  std::string render_format = "dot";
  std::string circuit;
  std::string web;
  std::vector<std::string> force;
};

std::map<std::string, bool> parse_forcing(const std::vector<std::string> &items) {
  std::map<std::string, bool> out;
  for (const auto &item : items) {
    auto eq = item.find('=');
    std::string bit = eq == std::string::npos ? "" : item.substr(eq + 1);
    if (eq == 0 || (bit != "0" && bit != "1")) {
      throw ValidationError("--force expects <outcome>=<0|1>, got '" + item + "'");
    }
    out[item.substr(0, eq)] = bit == "1";
  }
  return out;
}

int cmd_gen(const Options &o) {
  write_output(o.out, serialize_circuit(make_scheme_circuit(o.scheme, o.d)));
  return kExitPass;
}

int cmd_lower(const Options &o) {
  Lowered low = lower_to_zx(parse_circuit(read_file(o.circuit)));
  if (o.lower_format == "dot") {
    write_output(o.out, to_dot(low.diagram));
  } else {
    write_output(o.out, dump(diagram_to_json(low.diagram)));
  }
  return kExitPass;
}

int cmd_webs(const Options &o) {
  CliffordCircuit c = parse_circuit(read_file(o.circuit));
  Lowered low = lower_to_zx(c);
  Json webs = Json::array();
  for (const auto &w : web_basis(low.diagram)) {
    webs.push_back(web_to_json(low.diagram, low.legs, w));
  }
  spdlog::info("{} basis webs", webs.size());
  Json doc;
  doc["circuit_hash"] = circuit_hash(c);
  doc["diagram_hash"] = diagram_hash(low.diagram);
  doc["webs"] = std::move(webs);
  write_output(o.out, dump(doc));
  return kExitPass;
}

int cmd_crosscheck(const Options &o) {
  CliffordCircuit c = parse_circuit(read_file(o.circuit));
  std::optional<WebFile> web;
  if (!o.web.empty()) {
    web = load_web(o.web, lower_to_zx(c).diagram);
  }
  return emit_report(crosscheck(c, o.trials, o.seed, web, o.circuit), o.out);
}

int cmd_simulate(const Options &o) {
  CliffordCircuit c = parse_circuit(read_file(o.circuit));
  ClosedCircuit closed = close_open_inputs(c);
  RunOptions opts;
  opts.forcing = parse_forcing(o.force);
  opts.seed = o.seed;
  RunResult r = run(closed.circuit, opts);

  Json doc;
  doc["circuit_hash"] = circuit_hash(c);
  doc["seed"] = o.seed;
  Json refs = Json::object();
  for (const auto &[q, ref] : closed.reference_of) {
    refs[std::to_string(q)] = ref;
  }
  doc["references"] = std::move(refs);
  Json outcomes = Json::array();
  for (const auto &e : r.outcomes.entries) {
    outcomes.push_back({{"id", e.id}, {"bit", e.bit ? 1 : 0}, {"deterministic", e.deterministic}});
  }
  doc["outcomes"] = std::move(outcomes);
  Json gens = Json::array();
  for (const auto &g : r.final.generators) {
    gens.push_back(g.str());
  }
  doc["final"] = {{"qubits", r.final.qubits}, {"generators", std::move(gens)}};
  if (closed.circuit.qubits.size() <= kMaxStatevectorQubits) {
    StatevectorReport sv = statevector_check(closed.circuit, r.outcomes.bits(), o.seed);
    doc["statevector"] = {{"agree", sv.agree}, {"max_residual", sv.max_residual},
                          {"generators_checked", sv.generators_checked}};
  } else {
    doc["statevector"] = nullptr;
  }
  write_output(o.out, dump(doc));
  return kExitPass;
}

int cmd_render(const Options &o) {
  Lowered low = lower_to_zx(parse_circuit(read_file(o.circuit)));
  std::vector<Pauli> overlay;
  if (!o.web.empty()) {
    WebFile wf = load_web(o.web, low.diagram);
    std::string hash = diagram_hash(low.diagram);
    if (wf.diagram_hash != hash) {
      throw OverlayMismatch("web " + o.web + " was computed for diagram " + wf.diagram_hash +
                            ", circuit lowers to " + hash);
    }
    overlay = wf.web.labels();
  }
  write_output(o.out, o.render_format == "svg" ? to_svg(low.diagram, overlay) : to_dot(low.diagram, overlay));
  return kExitPass;
}

}  // namespace

int main(int argc, char **argv) {
  setup_logging();
  CLI::App app{"Pauli-web verification of surface-code Clifford circuits"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "foldweb 0.1.0");
  Options o;
  int rc = kExitPass;

  auto add_d = [&](CLI::App *sub) { sub->add_option("--d", o.d, "code distance (odd, >= 3)")->required(); };
  auto add_out = [&](CLI::App *sub) { sub->add_option("--out", o.out, "output path (default stdout)"); };
  auto add_trials = [&](CLI::App *sub) {
    sub->add_option("--trials", o.trials, "forced-outcome tableau runs (0 skips the oracle)")
        ->capture_default_str();
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
  };
  auto add_circuit = [&](CLI::App *sub) {
    sub->add_option("circuit", o.circuit, "circuit JSON file")->required()->check(CLI::ExistingFile);
  };
  auto schemes = CLI::IsMember(scheme_ids());

  auto *gen = app.add_subcommand("gen", "write a circuit JSON file");
  add_d(gen);
  gen->add_option("--scheme", o.scheme, "cclp-y, encoder, init0 or init+")->check(schemes)->capture_default_str();
  add_out(gen);
  gen->callback([&] { rc = cmd_gen(o); });

  auto *lower = app.add_subcommand("lower", "lower a circuit to a ZX diagram");
  add_circuit(lower);
  lower->add_option("--format", o.lower_format, "json or dot")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  add_out(lower);
  lower->callback([&] { rc = cmd_lower(o); });

  auto *webs = app.add_subcommand("webs", "write a basis of all Pauli webs");
  add_circuit(webs);
  add_out(webs);
  webs->callback([&] { rc = cmd_webs(o); });

  auto *vy = app.add_subcommand("verify-y", "check that logical X becomes logical Y");
  add_d(vy);
  add_trials(vy);
  add_out(vy);
  vy->callback([&] { rc = emit_report(verify_y(o.d, o.trials, o.seed), o.out); });

  auto *vs = app.add_subcommand("verify-stabilizers", "find and check a web for every plaquette");
  add_d(vs);
  vs->add_option("--scheme", o.scheme, "cclp-y, encoder, init0 or init+")->check(schemes)->capture_default_str();
  add_trials(vs);
  add_out(vs);
  vs->callback([&] { rc = emit_report(verify_stabilizers(o.d, o.scheme, o.trials, o.seed), o.out); });

  auto *cc = app.add_subcommand("crosscheck", "check web signatures against the tableau");
  add_circuit(cc);
  cc->add_option("--web", o.web, "check this web JSON file instead of the basis")->check(CLI::ExistingFile);
  add_trials(cc);
  add_out(cc);
  cc->callback([&] { rc = cmd_crosscheck(o); });

  auto *sim = app.add_subcommand("simulate", "run the stabilizer tableau");
  add_circuit(sim);
  sim->add_option("--seed", o.seed, "random seed")->capture_default_str();
  sim->add_option("--force", o.force, "force an outcome, e.g. m3=1 (repeatable)");
  add_out(sim);
  sim->callback([&] { rc = cmd_simulate(o); });

  auto *render = app.add_subcommand("render", "draw the ZX diagram");
  add_circuit(render);
  render->add_option("--format", o.render_format, "dot or svg")
      ->check(CLI::IsMember({"dot", "svg"}))
      ->capture_default_str();
  render->add_option("--web", o.web, "overlay this web JSON file")->check(CLI::ExistingFile);
  add_out(render);
  render->callback([&] { rc = cmd_render(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  } catch (const foldweb::Error &e) {
    spdlog::error("{}: {}", e.kind(), e.what());
    return kExitError;
  } catch (const std::exception &e) {
    spdlog::error("{}", e.what());
    return kExitError;
  }
  return rc;
}
