// epiconj: enumerate finite semigroup families, compute conjugacy class
// tables, audit the type/GL/unit-conjugacy criteria against the brute-force
// oracle, and analyze the orbit growth of partial Mealy machines.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "epiconj/errors.hpp"
#include "epiconj/linear.hpp"
#include "epiconj/mealy.hpp"
#include "epiconj/report.hpp"
#include "epiconj/semigroup.hpp"
#include "epiconj/transform.hpp"

namespace {

using epiconj::ElementIndex;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string family;
  std::size_t n = 2;
  std::uint32_t field = 2;
  std::string format = "json";
  std::string out_path;
  std::size_t max_elements = 20000;
  std::size_t max_word_length = 22;
  std::size_t max_k = 8;
  std::string machine_path;
};

void write_output(const Options& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) {
    throw epiconj::Error("cannot open output file " + opts.out_path);
  }
  out << text;
}

// A family table plus everything the commands need to describe elements.
struct FamilyRun {
  std::string family;
  std::variant<epiconj::EnumeratedSemigroup<epiconj::transform::PartialTransformation>,
               epiconj::EnumeratedSemigroup<epiconj::linear::PartialLinearMap>>
      data;

  const epiconj::FiniteSemigroup& semigroup() const {
    return std::visit([](const auto& es) -> const epiconj::FiniteSemigroup& {
      return es.semigroup;
    }, data);
  }

  bool is_linear() const { return data.index() == 1; }

  std::string notation(ElementIndex i) const {
    return std::visit([&](const auto& es) { return es.elements[i].to_notation(); }, data);
  }
};

FamilyRun build_family(const Options& opts) {
  epiconj::BuildOptions build{opts.max_elements};
  if (auto fam = epiconj::transform::family_from_name(opts.family)) {
    return FamilyRun{opts.family, epiconj::transform::enumerate(*fam, opts.n, build)};
  }
  if (auto fam = epiconj::linear::family_from_name(opts.family)) {
    return FamilyRun{opts.family, epiconj::linear::enumerate_linear(*fam, opts.n, opts.field, build)};
  }
  throw epiconj::Error("unknown family " + opts.family);
}

std::string type_list(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(v[i]);
  }
  return out + ")";
}

// Per-element conjugacy invariant: the cyclic type for transformation
// families, the lexicographically least GL-conjugate of the range-restricted
// regular part for linear families.
std::vector<std::string> type_signatures(const FamilyRun& run) {
  std::vector<std::string> sig(run.semigroup().size());
  if (const auto* tf = std::get_if<0>(&run.data)) {
    for (std::size_t i = 0; i < tf->elements.size(); ++i) {
      sig[i] = "cycles=" + type_list(epiconj::transform::cyclic_type(tf->elements[i]));
    }
    return sig;
  }
  const auto& lin = std::get<1>(run.data);
  const auto& first = lin.elements.front();
  const auto units = epiconj::linear::enumerate_gl(first.ambient(), first.modulus());
  for (std::size_t i = 0; i < lin.elements.size(); ++i) {
    const auto restricted =
        epiconj::linear::restrict_to_range(epiconj::linear::regular_part_linear(lin.elements[i]));
    auto best = restricted;
    for (const auto& u : units) {
      auto conj = epiconj::linear::conjugate_by_unit(restricted, u);
      if (conj.encode() < best.encode()) {
        best = conj;
      }
    }
    sig[i] = best.to_notation();
  }
  return sig;
}

struct Criterion {
  std::string name;
  // decidable per pair; signature-equality criteria close over sig
  std::function<bool(ElementIndex, ElementIndex)> same;
};

std::vector<Criterion> family_criteria(const FamilyRun& run,
                                       const std::vector<std::string>& sig) {
  const auto& s = run.semigroup();
  std::vector<Criterion> out;
  // the family's type/GL criterion is signature equality
  out.push_back({run.is_linear() ? "gl-regular-part" : "cyclic-type",
                 [&sig](ElementIndex a, ElementIndex b) { return sig[a] == sig[b]; }});
  if (run.family == "IS" || run.family == "PAut") {
    out.push_back({"unit-conjugacy",
                   [&s](ElementIndex a, ElementIndex b) {
                     return s.conjugate_by_g_criterion(a, b);
                   }});
  }
  if (s.size() <= 150) {
    // witness search is quadratic per pair; keep it to desk-size tables
    out.push_back({"regular-part-witness",
                   [&s](ElementIndex a, ElementIndex b) {
                     return s.conjugate_by_criterion(a, b);
                   }});
  }
  return out;
}

epiconj::AuditRecord run_audit(const FamilyRun& run, const Criterion& crit) {
  const auto& s = run.semigroup();
  epiconj::AuditRecord rec;
  rec.criterion = crit.name;
  rec.agreement = true;
  const std::size_t n = s.size();
  rec.pairs_checked = n * n;
  for (ElementIndex a = 0; a < n && rec.agreement; ++a) {
    for (ElementIndex b = 0; b < n; ++b) {
      if (s.oracle_conjugate(a, b) != crit.same(a, b)) {
        rec.agreement = false;
        rec.counterexample = {run.notation(a), run.notation(b)};
        break;
      }
    }
  }
  return rec;
}

epiconj::ConjugacyReport make_report(const Options& opts, const FamilyRun& run,
                                     bool with_audits) {
  const auto start = std::chrono::steady_clock::now();
  const auto& s = run.semigroup();
  epiconj::ConjugacyReport rep;
  rep.family = run.family;
  rep.params["n"] = static_cast<std::int64_t>(opts.n);
  if (run.is_linear()) {
    rep.params["field"] = opts.field;
  }
  rep.size = s.size();

  const auto& classes = s.conjugacy().classes;
  rep.class_count = classes.count();
  const auto sig = type_signatures(run);
  for (const auto& members : classes.classes) {
    epiconj::ClassEntry entry;
    entry.representative = run.notation(members.front());
    entry.size = members.size();
    entry.type_signature = sig[members.front()];
    rep.classes.push_back(std::move(entry));
  }
  if (with_audits) {
    for (const Criterion& crit : family_criteria(run, sig)) {
      rep.audits.push_back(run_audit(run, crit));
    }
  }
  rep.timing_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start).count();
  return rep;
}

int cmd_classes(const Options& opts) {
  const FamilyRun run = build_family(opts);
  const epiconj::ConjugacyReport rep = make_report(opts, run, /*with_audits=*/true);
  write_output(opts, opts.format == "csv" ? rep.to_csv_string() : rep.to_json_string());
  for (const auto& audit : rep.audits) {
    if (!audit.agreement) {
      std::cerr << "criterion " << audit.criterion << " disagrees with the oracle on "
                << audit.counterexample->first << " vs " << audit.counterexample->second << "\n";
      return kExitMismatch;
    }
  }
  return kExitOk;
}

int cmd_check(const Options& opts) {
  const FamilyRun run = build_family(opts);
  const auto sig = type_signatures(run);
  int status = kExitOk;
  if (run.semigroup().size() > 150) {
    std::cout << "check family=" << opts.family << " n=" << opts.n
              << (run.is_linear() ? " field=" + std::to_string(opts.field) : "")
              << " criterion=regular-part-witness skipped (|S| > 150)\n";
  }
  for (const Criterion& crit : family_criteria(run, sig)) {
    const epiconj::AuditRecord rec = run_audit(run, crit);
    std::cout << "check family=" << opts.family << " n=" << opts.n
              << (run.is_linear() ? " field=" + std::to_string(opts.field) : "")
              << " criterion=" << rec.criterion << " pairs=" << rec.pairs_checked
              << " agreement=" << (rec.agreement ? "yes" : "NO") << "\n";
    if (!rec.agreement) {
      std::cout << "  counterexample: " << rec.counterexample->first << " vs "
                << rec.counterexample->second << "\n";
      status = kExitMismatch;
    }
  }
  return status;
}

int cmd_green(const Options& opts) {
  const FamilyRun run = build_family(opts);
  const auto& s = run.semigroup();
  const auto& g = s.green();

  std::string out = "family " + opts.family + " n=" + std::to_string(opts.n);
  if (run.is_linear()) {
    out += " field=" + std::to_string(opts.field);
  }
  out += ": |S|=" + std::to_string(s.size()) + ", D-classes: " + std::to_string(g.d_count) + "\n";

  for (std::size_t d = 0; d < g.d_count; ++d) {
    std::vector<ElementIndex> r_ids, l_ids;
    std::size_t d_size = 0;
    for (std::size_t a = 0; a < s.size(); ++a) {
      if (g.d_class[a] != d) {
        continue;
      }
      ++d_size;
      if (std::find(r_ids.begin(), r_ids.end(), g.r_class[a]) == r_ids.end()) {
        r_ids.push_back(g.r_class[a]);
      }
      if (std::find(l_ids.begin(), l_ids.end(), g.l_class[a]) == l_ids.end()) {
        l_ids.push_back(g.l_class[a]);
      }
    }
    out += "D" + std::to_string(d) + " (size " + std::to_string(d_size) + "): " +
           std::to_string(r_ids.size()) + " R-class(es) x " + std::to_string(l_ids.size()) +
           " L-class(es)\n";
    for (ElementIndex r : r_ids) {
      out += "  [";
      for (std::size_t li = 0; li < l_ids.size(); ++li) {
        std::size_t cell = 0;
        bool has_idem = false;
        for (std::size_t a = 0; a < s.size(); ++a) {
          if (g.r_class[a] == r && g.l_class[a] == l_ids[li]) {
            ++cell;
            has_idem = has_idem || s.is_idempotent(static_cast<ElementIndex>(a));
          }
        }
        if (li > 0) {
          out += ' ';
        }
        out += std::to_string(cell);
        out += has_idem ? '*' : ' ';
      }
      out += "]\n";
    }
  }
  write_output(opts, out);
  return kExitOk;
}

int cmd_appendix_a(const Options& opts) {
  if (opts.max_k < 1 || opts.max_k > 10) {
    throw epiconj::Error("--max-k must be in 1..10");
  }
  if (2 * opts.max_k + 2 > opts.max_word_length) {
    throw epiconj::Error("--max-k needs words of length " + std::to_string(2 * opts.max_k + 2) +
                         " but --max-word-length is " + std::to_string(opts.max_word_length));
  }
  epiconj::mealy::MealyMachine machine = epiconj::mealy::appendix_a_machine();
  std::string source = "builtin";
  if (!opts.machine_path.empty()) {
    std::ifstream in(opts.machine_path, std::ios::binary);
    if (!in) {
      throw epiconj::Error("cannot read machine file " + opts.machine_path);
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    machine = epiconj::mealy::MealyMachine::parse(text);
    source = opts.machine_path;
  }
  const bool binary01 = machine.letter_index('1').has_value() &&
                        machine.letter_index('0').has_value();

  struct Row {
    std::size_t k, cycle_word_length;
    std::optional<std::size_t> ones_cycle;
    std::size_t chain_word_length, max_chain;
  };
  std::vector<Row> rows;
  for (std::size_t k = 1; k <= opts.max_k; ++k) {
    Row row{k, 2 * k, std::nullopt, 2 * k + 2, 0};
    const auto cyc_rep = epiconj::mealy::orbit_report(machine, 2 * k);
    if (binary01) {
      const auto info = cyc_rep.component_of(std::string(2 * k, '1'));
      if (info.on_cycle) {
        row.ones_cycle = info.length;
      }
    }
    row.max_chain = epiconj::mealy::orbit_report(machine, 2 * k + 2).max_chain();
    rows.push_back(row);
  }

  if (opts.format == "csv") {
    std::string out = "k,cycle_word_length,ones_cycle,chain_word_length,max_chain\n";
    for (const Row& r : rows) {
      out += std::to_string(r.k) + "," + std::to_string(r.cycle_word_length) + "," +
             (r.ones_cycle ? std::to_string(*r.ones_cycle) : "") + "," +
             std::to_string(r.chain_word_length) + "," + std::to_string(r.max_chain) + "\n";
    }
    write_output(opts, out);
  } else {
    ordered_json j;
    j["schema"] = 1;
    j["machine"] = source;
    j["rows"] = ordered_json::array();
    for (const Row& r : rows) {
      ordered_json e;
      e["k"] = r.k;
      e["cycle_word_length"] = r.cycle_word_length;
      if (r.ones_cycle) {
        e["ones_cycle"] = *r.ones_cycle;
      } else {
        e["ones_cycle"] = nullptr;
      }
      e["chain_word_length"] = r.chain_word_length;
      e["max_chain"] = r.max_chain;
      j["rows"].push_back(std::move(e));
    }
    write_output(opts, j.dump(2) + "\n");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{"conjugacy class tables, criterion-vs-oracle audits and orbit analysis\n"
               "for finite transformation, linear and automatic-permutation semigroups"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  const std::vector<std::string> families = {"IS", "T", "PT", "PAut", "End", "PEnd"};

  auto add_family_opts = [&](CLI::App* cmd) {
    cmd->add_option("--family", opts.family, "family: IS, T, PT, PAut, End, PEnd")
        ->required()
        ->check(CLI::IsMember(families));
    cmd->add_option("--n", opts.n, "ground set size / ambient dimension")->required();
    cmd->add_option("--field", opts.field, "prime field modulus for linear families (default 2)");
    cmd->add_option("--max-elements", opts.max_elements, "closure cap (default 20000)");
  };
  auto add_output_opts = [&](CLI::App* cmd) {
    cmd->add_option("--format", opts.format, "output format (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opts.out_path, "write the report to a file instead of stdout");
  };

  CLI::App* classes = app.add_subcommand("classes", "enumerate a family and list its conjugacy classes");
  add_family_opts(classes);
  add_output_opts(classes);

  CLI::App* check = app.add_subcommand("check", "audit the family criteria against the oracle, all pairs");
  add_family_opts(check);

  CLI::App* green = app.add_subcommand("green", "print the eggbox picture of a family");
  add_family_opts(green);
  add_output_opts(green);

  CLI::App* appendix = app.add_subcommand(
      "appendix-a", "orbit growth of the bundled non-group-bound machine (or --machine)");
  appendix->add_option("--max-k", opts.max_k, "rows k = 1..max_k (default 8, cap 10)");
  appendix->add_option("--machine", opts.machine_path, "machine file to analyze instead");
  appendix->add_option("--max-word-length", opts.max_word_length,
                       "refuse word lengths beyond this (default 22)");
  add_output_opts(appendix);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classes->parsed()) {
      return cmd_classes(opts);
    }
    if (check->parsed()) {
      return cmd_check(opts);
    }
    if (green->parsed()) {
      return cmd_green(opts);
    }
    if (appendix->parsed()) {
      return cmd_appendix_a(opts);
    }
  } catch (const epiconj::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
