// SPDX-License-Identifier: Apache-2.0
#include "lsc/command.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "lsc/constructions.hpp"
#include "lsc/dsl.hpp"
#include "lsc/symbolic.hpp"

namespace lsc {
namespace {

[[noreturn]] void usage(const std::string& msg) { throw UsageError(msg); }

const std::string* maybe_flag(const Command& cmd, const std::string& name) {
  auto it = cmd.flags.find(name);
  return it == cmd.flags.end() ? nullptr : &it->second;
}

std::string flag_str(const Command& cmd, const std::string& name) {
  const std::string* v = maybe_flag(cmd, name);
  if (!v || v->empty()) usage("missing required flag --" + name);
  return *v;
}

std::string flag_str_or(const Command& cmd, const std::string& name, const std::string& def) {
  const std::string* v = maybe_flag(cmd, name);
  return v ? *v : def;
}

Int to_int(const std::string& text, const std::string& name) {
  try {
    size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    usage("flag --" + name + " wants an integer, got \"" + text + "\"");
  }
}

Int flag_int(const Command& cmd, const std::string& name) {
  return to_int(flag_str(cmd, name), name);
}

Int flag_int_or(const Command& cmd, const std::string& name, Int def) {
  const std::string* v = maybe_flag(cmd, name);
  return v ? to_int(*v, name) : def;
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Int> flag_ints(const Command& cmd, const std::string& name) {
  std::vector<Int> out;
  for (const std::string& item : split_list(flag_str(cmd, name), ','))
    out.push_back(to_int(item, name));
  return out;
}

Limits limits_from(const Command& cmd) {
  Limits lim = Limits::defaults();
  if (const char* env = std::getenv("LSC_SEARCH_BUDGET")) lim.budget = to_int(env, "budget");
  if (maybe_flag(cmd, "budget")) lim.budget = flag_int(cmd, "budget");
  if (lim.budget <= 0) usage("search budget must be positive");
  lim.parallel = flag_int_or(cmd, "parallel", 0) != 0;
  lim.threads = static_cast<int>(flag_int_or(cmd, "threads", 0));
  return lim;
}

int outcome_exit(Outcome o) {
  switch (o) {
    case Outcome::Certified: return 0;
    case Outcome::Refuted: return 1;
    default: return 2;
  }
}

const char* outcome_text(Outcome o) {
  switch (o) {
    case Outcome::Certified: return "Certified";
    case Outcome::Refuted: return "Refuted";
    default: return "Unknown";
  }
}

bool wants_json(const Command& cmd) { return flag_str_or(cmd, "format", "text") == "json"; }

Execution finish_doc(const Command& cmd, CertificateDocument doc, int exit_code) {
  Execution ex;
  ex.exit_code = exit_code;
  ex.output = wants_json(cmd) ? render_json(doc) : render(doc);
  ex.document = std::move(doc);
  return ex;
}

using Extra = std::vector<std::pair<std::string, std::string>>;

Execution certify_doc(const Command& cmd, const std::string& expr_text, const Verdict& v,
                      Extra extra = {}) {
  CertificateDocument doc = document_skeleton(expr_text, canonical_command_text(cmd), v);
  for (auto& [k, val] : extra) doc.add(std::move(k), std::move(val));
  return finish_doc(cmd, std::move(doc), outcome_exit(v.outcome));
}

// Emission gate: a certificate that does not survive re-validation is an
// engine defect and must never be written out.
void require_valid(const SetExpr& s, const Verdict& v) {
  if (!revalidate(s, v))
    throw Error(Error::Code::Precondition, "certificate failed re-validation before emission");
}

Execution run_eval(const Command& cmd) {
  const SetExpr s = parse_set(flag_str(cmd, "set"));
  const Int n = flag_int_or(cmd, "window", 1000);
  if (n <= 0) usage("--window must be positive");
  const Window w = s.window(n);
  Execution ex;
  if (flag_int_or(cmd, "bits", 0) != 0) {
    std::string line(static_cast<size_t>(n), '0');
    for (Int i = 1; i <= n; ++i)
      if (w.test(i)) line[static_cast<size_t>(i - 1)] = '1';
    ex.output = line + "\n";
  } else {
    ex.output = join_ints(w.members()) + "\n";
  }
  return ex;
}

Execution run_certify(const Command& cmd) {
  const Limits lim = limits_from(cmd);
  const std::string& t = cmd.target;

  if (t == "syndetic") {
    const SetExpr s = parse_set(flag_str(cmd, "set"));
    const Verdict v = syndetic_gap(s, flag_int_or(cmd, "window", 1000), lim);
    require_valid(s, v);
    return certify_doc(cmd, print_set(s), v);
  }
  if (t == "thick") {
    const SetExpr s = parse_set(flag_str(cmd, "set"));
    const Verdict v = thick_to_level(s, flag_int_or(cmd, "level", 3),
                                     flag_int_or(cmd, "bound", 100000), lim);
    require_valid(s, v);
    return certify_doc(cmd, print_set(s), v);
  }
  if (t == "ps") {
    const SetExpr s = parse_set(flag_str(cmd, "set"));
    const Verdict v =
        piecewise_syndetic(s, flag_int_or(cmd, "shift-bound", 16), flag_int_or(cmd, "level", 3),
                           flag_int_or(cmd, "bound", 100000), lim);
    require_valid(s, v);
    return certify_doc(cmd, print_set(s), v);
  }
  if (t == "ip") {
    const SetExpr s = parse_set(flag_str(cmd, "set"));
    const Verdict v = ip_witness(s, static_cast<int>(flag_int_or(cmd, "depth", 2)),
                                 flag_int_or(cmd, "bound", 100000), lim);
    require_valid(s, v);
    return certify_doc(cmd, print_set(s), v);
  }
  if (t == "ds" || t == "dcs") {
    const SetExpr b = parse_set(flag_str(cmd, "set"));
    const std::vector<Int> f = flag_ints(cmd, "f");
    const Int window = flag_int_or(cmd, "window", 1000);
    const Verdict v = t == "ds" ? ds_certificate(b, f, window, lim)
                                : dcs_certificate(b, f, window, lim);
    return certify_doc(cmd, print_set(b), v, {{"f", join_ints(f)}});
  }
  if (t == "dt") {
    const SetExpr a = parse_set(flag_str(cmd, "set"));
    const SetExpr s = parse_set(flag_str(cmd, "probe"));
    // With --f the shift set is fixed and only validated; otherwise searched.
    const FSearchResult r =
        maybe_flag(cmd, "f")
            ? dt_check_with(a, s, flag_ints(cmd, "f"), flag_int_or(cmd, "level", 3),
                            flag_int_or(cmd, "bound", 100000), lim)
            : dt_check(a, s, flag_int_or(cmd, "f-bound", 8), flag_int_or(cmd, "level", 3),
                       flag_int_or(cmd, "bound", 100000), flag_int_or(cmd, "shift-bound", 16),
                       lim);
    Extra extra{{"probe", print_set(s)}};
    if (r.verdict.outcome == Outcome::Certified) extra.push_back({"f", join_ints(r.f)});
    return certify_doc(cmd, print_set(a), r.verdict, std::move(extra));
  }
  if (t == "pr") {
    const SetExpr a = parse_set(flag_str(cmd, "set"));
    const SetExpr s = parse_set(flag_str(cmd, "probe"));
    const PrResult r =
        pr_check(a, s, flag_int_or(cmd, "f-bound", 8), flag_int_or(cmd, "window", 1000),
                 flag_int_or(cmd, "gap-threshold", 0), lim);
    Extra extra{{"probe", print_set(s)}};
    if (r.verdict.outcome == Outcome::Certified) {
      extra.push_back({"f", join_ints(r.f)});
      extra.push_back({"realized-gap", std::to_string(r.realized_gap)});
    }
    return certify_doc(cmd, print_set(a), r.verdict, std::move(extra));
  }
  if (t == "shiftcorr") {
    const SetExpr b = parse_set(flag_str(cmd, "set"));
    const ShiftCorrelationResult r = shift_correlation(
        b, flag_int_or(cmd, "n-bound", 8), flag_int_or(cmd, "shift-bound", 16),
        flag_int_or(cmd, "level", 3), flag_int_or(cmd, "bound", 100000), lim);
    Extra extra;
    if (r.verdict.outcome == Outcome::Certified)
      extra.push_back({"correlation", std::to_string(r.shift)});
    return certify_doc(cmd, print_set(b), r.verdict, std::move(extra));
  }
  if (t == "brauer") {
    const SetExpr a = parse_set(flag_str(cmd, "set"));
    std::vector<Polynomial> polys;
    std::vector<std::string> canon;
    for (const std::string& p : split_list(flag_str(cmd, "poly"), ';')) {
      polys.push_back(Polynomial::parse(p));
      canon.push_back(polys.back().to_string());
    }
    if (polys.empty()) usage("--poly wants at least one polynomial");
    const BrauerResult r = brauer_search(a, polys, flag_int_or(cmd, "bound", 1000), lim);
    std::string poly_text;
    for (size_t i = 0; i < canon.size(); ++i) poly_text += (i ? ";" : "") + canon[i];
    Extra extra{{"poly", poly_text}};
    if (r.verdict.outcome == Outcome::Certified) {
      extra.push_back({"y", std::to_string(r.y)});
      extra.push_back({"x", std::to_string(r.x)});
      extra.push_back({"witness", join_ints(r.members)});
    }
    return certify_doc(cmd, print_set(a), r.verdict, std::move(extra));
  }
  if (t == "compact") {
    const SetExpr b = parse_set(flag_str(cmd, "set"));
    const CompactnessResult r = compactness_prefix(flag_int(cmd, "n"), b,
                                                   flag_int_or(cmd, "m-bound", 1000000), lim);
    Extra extra;
    if (r.verdict.outcome == Outcome::Certified) extra.push_back({"m", std::to_string(r.m)});
    return certify_doc(cmd, print_set(b), r.verdict, std::move(extra));
  }
  usage("unknown certify target \"" + t + "\"");
}

Execution run_build(const Command& cmd) {
  const std::string& t = cmd.target;
  Execution ex;

  if (t == "prop41" || t == "prop41f") {
    const Int k = flag_int(cmd, "k");
    const Int base = flag_int_or(cmd, "base", 4);
    std::vector<Schedule> scheds;
    for (Int i = 0; i < k; ++i) scheds.push_back(Schedule::geometric(base, i + 1));
    if (t == "prop41") {
      ex.output = print_set(residue_thick_union(k, scheds)) + "\n";
    } else {
      ex.output = join_ints(prop41_F_witness(k, scheds, flag_int(cmd, "ell"))) + "\n";
    }
    return ex;
  }
  if (t == "prop42") {
    PrimeResidueParams params;
    params.primes = flag_ints(cmd, "primes");
    params.residues = flag_ints(cmd, "c");
    params.non_ip = flag_int_or(cmd, "non-ip", 1) != 0;
    const Int rows = static_cast<Int>(params.primes.size());
    const Int slope = flag_int_or(cmd, "slope", 10);
    if (rows == 0) usage("--primes wants at least one prime");
    if (slope <= 0) usage("--slope must be positive");
    const SeparatedTable table =
        separated_thick_family(rows, 1, [slope](Int d) { return slope * d; });
    for (Int i = 1; i <= rows; ++i) params.schedules.push_back(table.block(i, 1));
    ex.output = print_set(prime_residue_union(params, flag_int_or(cmd, "branches", rows))) + "\n";
    return ex;
  }
  if (t == "sepfam") {
    const Int rows = flag_int(cmd, "rows");
    const Int cols = flag_int(cmd, "cols");
    const Int slope = flag_int(cmd, "slope");
    if (slope <= 0) usage("--slope must be positive");
    const SeparatedTable table =
        separated_thick_family(rows, cols, [slope](Int d) { return slope * d; });
    std::ostringstream out;
    for (Int r = 1; r <= rows; ++r)
      for (Int c = 1; c <= cols; ++c)
        out << r << " " << c << " " << print_schedule(table.block(r, c)) << "\n";
    ex.output = out.str();
    return ex;
  }
  if (t == "crt") {
    const Int n = crt_cover_witness(flag_ints(cmd, "primes"), flag_ints(cmd, "a"));
    ex.output = std::to_string(n) + "\n";
    return ex;
  }
  usage("unknown build target \"" + t + "\"");
}

Execution run_split(const Command& cmd) {
  const Limits lim = limits_from(cmd);

  if (cmd.target == "thick") {
    const Schedule sched = parse_schedule(flag_str(cmd, "sched"));
    const Int bound = flag_int_or(cmd, "bound", 100000);
    const SplitResult r = split_thick(sched, flag_int_or(cmd, "level", 4), bound,
                                      flag_int_or(cmd, "window", 10000), lim);
    bool all_certified = true;
    bool all_exact = true;
    bool any_refuted = false;
    for (const Verdict& v : r.part_certs) {
      all_certified = all_certified && v.outcome == Outcome::Certified;
      all_exact = all_exact && v.exact;
      any_refuted = any_refuted || v.outcome == Outcome::Refuted;
    }
    Verdict overall = all_certified ? Verdict::certified(std::monostate{}, all_exact)
                      : any_refuted ? Verdict::refuted(bound, false)
                                    : Verdict::unknown(bound);
    CertificateDocument doc =
        document_skeleton(print_set(SetExpr::thick(sched)), canonical_command_text(cmd), overall);
    doc.add("sched", print_schedule(sched));
    doc.add("checked-window", std::to_string(r.checked_window));
    const char* names[2] = {"part1", "part2"};
    const SetExpr* parts[2] = {&r.a1, &r.a2};
    for (size_t i = 0; i < 2 && i < r.part_certs.size(); ++i) {
      doc.add(names[i], print_set(*parts[i]));
      doc.add(std::string(names[i]) + "-verdict", outcome_text(r.part_certs[i].outcome));
      add_certificate_fields(doc, r.part_certs[i].cert, std::string(names[i]) + "-");
    }
    return finish_doc(cmd, std::move(doc), outcome_exit(overall.outcome));
  }
  if (cmd.target == "filtration") {
    const SetExpr a = parse_set(flag_str(cmd, "set"));
    const Int rounds = flag_int(cmd, "rounds");
    const Int window = flag_int_or(cmd, "window", 10000);
    const SplitResult r = split_by_filtration(
        a, interval_extractor(flag_int_or(cmd, "m-bound", 1000000), lim), rounds, window, lim);
    const Verdict overall = Verdict::certified(std::monostate{}, false);
    CertificateDocument doc =
        document_skeleton(print_set(a), canonical_command_text(cmd), overall);
    doc.add("rounds", std::to_string(rounds));
    doc.add("checked-window", std::to_string(r.checked_window));
    doc.add("part1", print_set(r.a1));
    doc.add("part2", print_set(r.a2));
    for (size_t i = 0; i < r.carved.size(); ++i)
      doc.add("round-" + std::to_string(i + 1), join_ints(r.carved[i]));
    return finish_doc(cmd, std::move(doc), 0);
  }
  usage("unknown split target \"" + cmd.target + "\"");
}

Execution run_decompose(const Command& cmd) {
  const Limits lim = limits_from(cmd);
  const SetExpr a = parse_set(flag_str(cmd, "set"));
  const SetExpr s = parse_set(flag_str(cmd, "probe"));
  const Decomposition d = structure_decompose(
      a, s, flag_int(cmd, "window"), flag_int_or(cmd, "lmax", 8),
      flag_int_or(cmd, "shift-bound", 16), flag_int_or(cmd, "ps-level", 3), lim);
  const Verdict v = Verdict::certified(d.cert, false);
  CertificateDocument doc = document_skeleton(print_set(a), canonical_command_text(cmd), v);
  doc.add("probe", print_set(s));
  doc.add("ell", std::to_string(d.ell));
  doc.add("intervals", join_intervals(d.intervals));
  doc.add("structured", print_set(d.b_s));
  return finish_doc(cmd, std::move(doc), 0);
}

Execution run_word(const Command& cmd) {
  const std::string& t = cmd.target;
  Execution ex;

  if (t == "expand") {
    const WordSpec w = parse_word(flag_str(cmd, "word"));
    ex.output = expand_word(w, flag_int_or(cmd, "len", 100)) + "\n";
    return ex;
  }
  if (t == "profile") {
    const WordSpec w = parse_word(flag_str(cmd, "word"));
    const Int n_max = flag_int_or(cmd, "nmax", 5);
    const Int len = flag_int_or(cmd, "len", std::max<Int>(200, 20 * n_max));
    const RecurrenceProfile p = uniform_recurrence_profile(w, n_max, len);
    std::ostringstream out;
    out << "prefix: " << p.prefix_len << "\n";
    for (size_t i = 0; i < p.w.size(); ++i)
      out << "W(" << i + 1 << "): " << p.w[i] << "\n";
    if (p.non_recurrent.empty()) {
      out << "non-recurrent: none\n";
    } else {
      out << "non-recurrent:";
      const size_t cap = 20;
      for (size_t i = 0; i < p.non_recurrent.size() && i < cap; ++i)
        out << (i ? "," : " ") << p.non_recurrent[i];
      if (p.non_recurrent.size() > cap) out << ",... (" << p.non_recurrent.size() << " total)";
      out << "\n";
    }
    ex.output = out.str();
    return ex;
  }
  if (t == "cover") {
    const WordSpec w = parse_word(flag_str(cmd, "word"));
    std::vector<std::string> patterns = split_list(flag_str(cmd, "patterns"), ',');
    const Int n = flag_int(cmd, "n");
    const CoverResult c = cylinder_cover_check(w, patterns, n, flag_int_or(cmd, "len", 1000));
    if (c.certified) {
      ex.output = "covered\n";
    } else {
      ex.output = "uncovered: " + c.violating_factor + "\n";
      ex.exit_code = 1;
    }
    return ex;
  }
  if (t == "joint") {
    const std::vector<Int> moduli = flag_ints(cmd, "moduli");
    const std::vector<Int> starts = flag_ints(cmd, "starts");
    const std::vector<std::string> target_lists = split_list(flag_str(cmd, "targets"), ';');
    if (starts.size() != moduli.size() || target_lists.size() != moduli.size())
      usage("--moduli, --starts and --targets must agree in length");
    std::vector<CyclicSystem> systems;
    for (size_t i = 0; i < moduli.size(); ++i) {
      CyclicSystem sys;
      sys.modulus = moduli[i];
      sys.start = starts[i];
      for (const std::string& item : split_list(target_lists[i], ','))
        sys.targets.push_back(to_int(item, "targets"));
      systems.push_back(std::move(sys));
    }
    const JointReturnResult r = joint_return(systems, flag_int_or(cmd, "window", 1000));
    std::ostringstream out;
    out << "systems: " << systems.size() << "\n";
    out << "empty: " << (r.empty ? "yes" : "no") << "\n";
    out << "realized-gap: " << r.realized_gap << "\n";
    if (r.residue_form) {
      out << "residue: " << print_set(*r.residue_form) << "\n";
      out << "asserted-gap: " << r.asserted_gap << "\n";
    }
    const std::vector<Int> members = r.window.members();
    out << "first-members:";
    for (size_t i = 0; i < members.size() && i < 20; ++i) out << (i ? "," : " ") << members[i];
    if (members.empty()) out << " none";
    out << "\n";
    ex.output = out.str();
    return ex;
  }
  usage("unknown word target \"" + t + "\"");
}

}  // namespace

std::string canonical_command_text(const Command& cmd) {
  std::ostringstream out;
  out << cmd.verb;
  if (!cmd.target.empty()) out << " " << cmd.target;
  for (const auto& [k, v] : cmd.flags) {
    // Expression text is carried in dedicated document fields; parallel and
    // threads are strategy knobs that never change the result.
    if (k == "set" || k == "probe" || k == "sched" || k == "format" || k == "parallel" ||
        k == "threads")
      continue;
    std::string clean;
    for (char c : v)
      if (!std::isspace(static_cast<unsigned char>(c))) clean += c;
    out << " " << k << "=" << clean;
  }
  return out.str();
}

Command parse_command_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw Error(Error::Code::Parse, "empty command line");
  Command cmd;
  cmd.verb = tokens[0];
  size_t i = 1;
  if (tokens.size() > 1 && tokens[1].find('=') == std::string::npos) {
    cmd.target = tokens[1];
    i = 2;
  }
  for (; i < tokens.size(); ++i) {
    const size_t eq = tokens[i].find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(Error::Code::Parse, "expected key=value, got \"" + tokens[i] + "\"");
    cmd.flags[tokens[i].substr(0, eq)] = tokens[i].substr(eq + 1);
  }
  return cmd;
}

Command command_from_document(const CertificateDocument& doc) {
  const std::string* command = doc.find("command");
  if (!command) throw Error(Error::Code::Parse, "document has no command field");
  Command cmd = parse_command_text(*command);
  if (const std::string* expr = doc.find("expr")) cmd.flags["set"] = *expr;
  if (const std::string* probe = doc.find("probe")) cmd.flags["probe"] = *probe;
  if (const std::string* sched = doc.find("sched")) cmd.flags["sched"] = *sched;
  return cmd;
}

Execution execute(const Command& cmd) {
  if (cmd.verb == "eval") return run_eval(cmd);
  if (cmd.verb == "certify") return run_certify(cmd);
  if (cmd.verb == "build") return run_build(cmd);
  if (cmd.verb == "split") return run_split(cmd);
  if (cmd.verb == "decompose") return run_decompose(cmd);
  if (cmd.verb == "word") return run_word(cmd);
  if (cmd.verb == "report") {
    if (!cmd.target.empty() && cmd.target != "lattice")
      usage("unknown report target \"" + cmd.target + "\"");
    Execution ex;
    ex.output = lattice_table();
    return ex;
  }
  usage("unknown verb \"" + cmd.verb + "\"");
}

std::string lattice_table() {
  struct Arrow {
    const char* from;
    const char* to;
  };
  // "X => Y" reads: every X set is a Y set. The starred family X* holds the
  // sets meeting every X set.
  static const Arrow arrows[] = {
      {"central", "dynamically central piecewise syndetic"},
      {"central", "finite-sums (IP)"},
      {"central*", "central"},
      {"central*", "pointwise recurrence"},
      {"central*", "syndetic"},
      {"dynamically central piecewise syndetic", "piecewise syndetic"},
      {"dynamically central piecewise syndetic*", "central*"},
      {"dynamically central piecewise syndetic*", "dynamically central syndetic"},
      {"dynamically central syndetic", "central"},
      {"dynamically central syndetic", "dynamically syndetic"},
      {"dynamically syndetic", "syndetic"},
      {"dynamically thick", "pointwise recurrence"},
      {"finite-sums (IP)*", "central*"},
      {"piecewise syndetic*", "dynamically central piecewise syndetic*"},
      {"piecewise syndetic*", "thick"},
      {"pointwise recurrence", "dynamically central piecewise syndetic"},
      {"syndetic", "piecewise syndetic"},
      {"thick", "central"},
      {"thick", "dynamically thick"},
  };
  size_t width = 0;
  for (const Arrow& a : arrows) width = std::max(width, std::string(a.from).size());
  std::ostringstream out;
  out << "inclusions between the largeness families\n";
  out << "(X => Y: every X set is a Y set; X* = sets meeting every X set)\n\n";
  for (const Arrow& a : arrows) {
    out << "  " << a.from << std::string(width - std::string(a.from).size(), ' ') << " => "
        << a.to << "\n";
  }
  return out.str();
}

}  // namespace lsc
