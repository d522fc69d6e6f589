// modlat: analysis reports, theorem verification and lattice export.
//
// Exit status: 0 ok, 1 verification failure, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "modlat/caps.hpp"
#include "modlat/error.hpp"
#include "modlat/harness/analyze.hpp"
#include "modlat/harness/corpus.hpp"
#include "modlat/harness/verify.hpp"
#include "modlat/lattice.hpp"

namespace {

using namespace modlat;
using namespace modlat::harness;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

struct AnalyzeArgs {
  std::string ring;
  std::string module;
  std::string format = "text";
};

struct VerifyArgs {
  std::string corpus = "builtin";
  std::string theorems = "all";
  std::size_t jobs = 1;
  std::string report;
  bool no_timings = false;
  bool quiet = false;
};

struct LatticeArgs {
  std::string ring;
  std::string module;
  std::string dot;
};

std::optional<ModuleSpec> module_arg(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return module_spec_from_json(read_json_file(path));
}

int run_analyze(const AnalyzeArgs& a) {
  const Json result = analyze(ring_spec_from_json(read_json_file(a.ring)), module_arg(a.module));
  if (a.format == "json")
    std::cout << result.dump(2) << "\n";
  else
    std::cout << render_text(result);
  return kOk;
}

int run_verify(const VerifyArgs& a) {
  const auto theorems = parse_theorem_filter(a.theorems);
  const auto corpus = a.corpus == "builtin" ? builtin_corpus() : load_corpus_dir(a.corpus);
  const VerificationReport report = run_verification(corpus, theorems, a.jobs, a.corpus);
  const Json out = a.no_timings ? report.body() : report.to_json();
  if (a.report.empty()) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::ofstream f(a.report, std::ios::binary);
    if (!f) throw InvalidInput(a.report + ": cannot write");
    f << out.dump(2) << "\n";
  }
  std::ostream& log = a.report.empty() ? std::cerr : std::cout;
  if (!a.quiet) {
    for (const auto& r : report.results)
      if (r.status == Status::fail) log << "FAIL " << r.theorem << " " << r.instance << ": " << r.detail << "\n";
    log << "total " << report.results.size() << "  pass " << report.count(Status::pass) << "  skip "
        << report.count(Status::skip) << "  fail " << report.count(Status::fail) << "\n";
  }
  return report.ok() ? kOk : kVerificationFailed;
}

int run_lattice(const LatticeArgs& a) {
  const RingPtr ring = ring_from_spec(ring_spec_from_json(read_json_file(a.ring)));
  const ModulePtr m = module_from_spec(ring, module_spec_from_json(read_json_file(a.module)));
  const auto lat = SubmoduleLattice::build(m);
  std::ofstream f(a.dot, std::ios::binary);
  if (!f) throw InvalidInput(a.dot + ": cannot write");
  write_dot(f, lat, "lattice");
  std::cout << lat.size() << " submodules written to " << a.dot << "\n";
  return kOk;
}

int run_info() {
  std::cout << "modlat " << MODLAT_VERSION << "\n";
  std::cout << "caps " << caps().to_string() << "\n";
  std::cout << "report schema modlat-report/1\n";
  std::cout << "theorems\n";
  for (const auto& t : theorem_catalog()) std::cout << "  " << t.id << "  " << t.summary << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ring and module engine: hollow dimension, weak supplements, dualities"};
  app.require_subcommand(1);
  std::string caps_text;
  app.add_option("--caps", caps_text, "Override size caps, e.g. elements=4096,lattice=100000,homs=65536");

  AnalyzeArgs aa;
  auto* analyze_cmd = app.add_subcommand("analyze", "Profile a ring and one of its modules");
  analyze_cmd->add_option("ring", aa.ring, "Ring description (JSON file)")->required();
  analyze_cmd->add_option("--module", aa.module, "Module description (JSON file); default: left regular module");
  analyze_cmd->add_option("--format", aa.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run theorem verifiers over a corpus");
  verify_cmd->add_option("--corpus", va.corpus, "\"builtin\" or a directory of corpus JSON files");
  verify_cmd->add_option("--theorems", va.theorems, "Comma-separated theorem ids, or \"all\"");
  verify_cmd->add_option("--jobs", va.jobs, "Worker threads")->check(CLI::Range(1, 256));
  verify_cmd->add_option("--report", va.report, "Write the JSON report here instead of stdout");
  verify_cmd->add_flag("--no-timings", va.no_timings, "Omit the timings section");
  verify_cmd->add_flag("--quiet", va.quiet, "No summary lines");

  LatticeArgs la;
  auto* lattice_cmd = app.add_subcommand("lattice", "Write the submodule lattice as Graphviz DOT");
  lattice_cmd->add_option("ring", la.ring, "Ring description (JSON file)")->required();
  lattice_cmd->add_option("--module", la.module, "Module description (JSON file)")->required();
  lattice_cmd->add_option("--dot", la.dot, "Output path")->required();

  auto* info_cmd = app.add_subcommand("info", "Print version, caps and theorem ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (!caps_text.empty()) set_caps(Caps::parse(caps_text, caps()));
    if (*analyze_cmd) return run_analyze(aa);
    if (*verify_cmd) return run_verify(va);
    if (*lattice_cmd) return run_lattice(la);
    if (*info_cmd) return run_info();
  } catch (const InvalidInput& e) {
    std::cerr << "modlat: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    std::cerr << "modlat: " << e.what() << "\n";
    return kInputError;
  } catch (const CapExceeded& e) {
    std::cerr << "modlat: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "modlat: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kOk;
}
