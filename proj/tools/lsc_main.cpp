// SPDX-License-Identifier: Apache-2.0
//
// lsc: window certificates for largeness of subsets of the positive integers.
// Exit status: 0 certified, 1 refuted, 2 unknown, 64 usage error, 65 engine
// error. Expression flags accept inline DSL text or a path to a DSL file.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "lsc/command.hpp"

namespace {

// Flag registry for one subcommand: every option lands in Command::flags
// only when the user actually passed it.
struct FlagBag {
  std::map<std::string, std::string> vals;
  std::map<std::string, CLI::Option*> opts;

  void option(CLI::App* sub, const std::string& name, const std::string& help) {
    opts[name] = sub->add_option("--" + name, vals[name], help);
  }
  void toggle(CLI::App* sub, const std::string& name, const std::string& help) {
    vals[name] = "1";
    opts[name] = sub->add_flag("--" + name, help);
  }
  void common(CLI::App* sub) {
    option(sub, "budget", "search budget in node expansions (default $LSC_SEARCH_BUDGET or 1e7)");
    toggle(sub, "parallel", "enable multi-threaded search");
    option(sub, "threads", "worker count for --parallel (default: hardware)");
  }
  void fill(lsc::Command& cmd) const {
    for (const auto& [name, opt] : opts)
      if (opt->count() > 0) cmd.flags[name] = vals.at(name);
  }
};

// Expression-valued flags may name a file holding the DSL text.
std::string inline_or_file(const std::string& value) {
  std::error_code ec;
  if (!value.empty() && std::filesystem::is_regular_file(value, ec)) {
    std::ifstream in(value);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certificate calculus for large subsets of the positive integers"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "text";
  app.add_option("--out", out_path, "write the result to this path instead of stdout");
  app.add_option("--format", format, "certificate rendering: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::map<std::string, FlagBag> bags;
  std::map<std::string, std::string> targets;

  auto* eval = app.add_subcommand("eval", "list the members of a set expression on a window");
  {
    FlagBag& b = bags["eval"];
    b.option(eval, "set", "set expression (DSL text or file)");
    b.option(eval, "window", "inspect 1..N (default 1000)");
    b.toggle(eval, "bits", "print a 0/1 membership string instead of members");
    b.common(eval);
  }

  auto* certify = app.add_subcommand(
      "certify", "run a largeness check and emit a replayable certificate document");
  certify->add_option("target", targets["certify"],
                      "syndetic | thick | ps | ip | ds | dcs | dt | pr | shiftcorr | brauer | "
                      "compact")
      ->required();
  {
    FlagBag& b = bags["certify"];
    b.option(certify, "set", "set expression (DSL text or file)");
    b.option(certify, "probe", "second expression for dt/pr probes");
    b.option(certify, "f", "comma-separated finite shift set for ds/dcs");
    b.option(certify, "poly", "semicolon-separated polynomials for brauer, e.g. \"y;y^2+y\"");
    b.option(certify, "window", "window 1..N for gap-style checks (default 1000)");
    b.option(certify, "level", "thickness level: one witness run per length up to N (default 3)");
    b.option(certify, "bound", "search ceiling for witnesses (default 100000)");
    b.option(certify, "depth", "finite-sums generator count for ip (default 2)");
    b.option(certify, "shift-bound", "max shift for piecewise-syndetic search (default 16)");
    b.option(certify, "f-bound", "max element of candidate F sets for dt/pr (default 8)");
    b.option(certify, "gap-threshold", "pr: gap that counts as an obstruction (default N/10)");
    b.option(certify, "n-bound", "shiftcorr: scan self-correlation shifts 1..N (default 8)");
    b.option(certify, "n", "compact: requested run length");
    b.option(certify, "m-bound", "compact: cap on the prefix end (default 1000000)");
    b.common(certify);
  }

  auto* build = app.add_subcommand("build", "assemble documented set constructions");
  build->add_option("target", targets["build"], "prop41 | prop41f | prop42 | sepfam | crt")
      ->required();
  {
    FlagBag& b = bags["build"];
    b.option(build, "k", "prop41: number of residue branches");
    b.option(build, "base", "prop41: geometric schedule base (default 4)");
    b.option(build, "ell", "prop41f: minimum interval length the witness must clear");
    b.option(build, "primes", "prop42/crt: comma-separated pairwise distinct primes");
    b.option(build, "c", "prop42: comma-separated residues c_i");
    b.option(build, "branches", "prop42: how many branches to keep (default: all)");
    b.option(build, "slope", "separation slope, sep(d) = slope*d (default 10)");
    b.option(build, "non-ip", "prop42: enforce the non-IP layout (default 1)");
    b.option(build, "rows", "sepfam: row count");
    b.option(build, "cols", "sepfam: column count");
    b.option(build, "a", "crt: comma-separated target residues a_i");
  }

  auto* split = app.add_subcommand("split", "split a large set into two large parts");
  split->add_option("target", targets["split"], "thick | filtration")->required();
  {
    FlagBag& b = bags["split"];
    b.option(split, "sched", "thick: schedule (DSL text or file)");
    b.option(split, "set", "filtration: set expression (DSL text or file)");
    b.option(split, "level", "thick: thickness level both parts must reach (default 4)");
    b.option(split, "bound", "thick: witness search ceiling (default 100000)");
    b.option(split, "window", "partition identity check window (default 10000)");
    b.option(split, "rounds", "filtration: number of carve rounds");
    b.option(split, "m-bound", "filtration: prefix cap for the interval extractor");
    b.common(split);
  }

  auto* decompose = app.add_subcommand(
      "decompose", "split a set into a structured part plus remainder along a probe");
  {
    FlagBag& b = bags["decompose"];
    b.option(decompose, "set", "set expression (DSL text or file)");
    b.option(decompose, "probe", "probe expression the structured part must track");
    b.option(decompose, "window", "analysis window 1..N");
    b.option(decompose, "lmax", "largest density constant to try (default 8)");
    b.option(decompose, "shift-bound", "piecewise-syndetic precheck shift bound (default 16)");
    b.option(decompose, "ps-level", "piecewise-syndetic precheck level (default 3)");
    b.common(decompose);
  }

  auto* word = app.add_subcommand("word", "inspect symbolic words and their return-time sets");
  word->add_option("target", targets["word"], "expand | profile | cover | joint")->required();
  {
    FlagBag& b = bags["word"];
    b.option(word, "word", "word spec, e.g. fib, tm, per(\"ab\"), sub(a->ab,b->a,seed=a)");
    b.option(word, "len", "prefix length to inspect");
    b.option(word, "nmax", "profile: largest factor length (default 5)");
    b.option(word, "patterns", "cover: comma-separated patterns");
    b.option(word, "n", "cover: factor length to cover");
    b.option(word, "moduli", "joint: comma-separated rotation moduli");
    b.option(word, "starts", "joint: comma-separated start points");
    b.option(word, "targets", "joint: per-system target residues, ; between systems, , within");
    b.option(word, "window", "joint: return-time window (default 1000)");
  }

  auto* report = app.add_subcommand("report", "static reference tables");
  report->add_option("target", targets["report"], "lattice (default)");

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();  // let --out/--format appear after the subcommand

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  lsc::Command cmd;
  for (const auto& [verb, bag] : bags) {
    if (app.got_subcommand(verb)) {
      cmd.verb = verb;
      bag.fill(cmd);
    }
  }
  if (app.got_subcommand("report")) cmd.verb = "report";
  auto target_it = targets.find(cmd.verb);
  if (target_it != targets.end()) cmd.target = target_it->second;
  for (const char* key : {"set", "probe", "sched", "word"}) {
    auto it = cmd.flags.find(key);
    if (it != cmd.flags.end()) it->second = inline_or_file(it->second);
  }
  if (format == "json") cmd.flags["format"] = "json";

  try {
    const lsc::Execution ex = lsc::execute(cmd);
    if (out_path.empty()) {
      std::cout << ex.output;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return 65;
      }
      out << ex.output;
    }
    return ex.exit_code;
  } catch (const lsc::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const lsc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 65;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 65;
  }
}
