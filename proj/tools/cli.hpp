#pragma once

// Command-line front end. run_cli is kept separate from main() so the test
// suite can drive every command in-process.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srlc/corpus_data.hpp"
#include "srlc/srlc.hpp"

namespace srlc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kDisagreement = 3,
};

inline std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& [name, text] : kBuiltinCorpus) out.push_back(parse_corpus_entry(std::string(name), text));
  return out;
}

inline CorpusEntry corpus_entry(const std::string& name) {
  for (const auto& [entry_name, text] : kBuiltinCorpus)
    if (entry_name == name) return parse_corpus_entry(name, text);
  std::string known;
  for (const auto& [entry_name, text] : kBuiltinCorpus) known += " " + std::string(entry_name);
  throw std::invalid_argument("unknown corpus entry '" + name + "' (known:" + known + ")");
}

struct LoadedInput {
  std::string descriptor;
  SimplicialComplex complex;
  std::string text;
};

inline LoadedInput load_input(const std::string& spec) {
  if (spec.starts_with("corpus:")) {
    auto entry = corpus_entry(spec.substr(7));
    return {spec, entry.complex, entry.text};
  }
  std::ifstream in(spec);
  if (!in) throw std::runtime_error("cannot open input file '" + spec + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return {spec, parse_facets(buf.str()), buf.str()};
}

struct Options {
  std::string command;
  std::string input;
  std::string field;
  std::optional<std::uint64_t> seed;
  std::optional<int> m;
  std::optional<int> l;
  int max_i = 3;
  std::string json_path;
  bool selftest = false;
};

inline VerdictReport base_report(const Options& opts, const LoadedInput& in, const FieldSpec& field) {
  VerdictReport r;
  r.command = opts.command;
  r.input = in.descriptor;
  r.n = in.complex.vertex_count();
  for (const auto& f : in.complex.facets()) r.facets.push_back(f.vertices());
  r.field = field.to_string();
  r.pure = in.complex.is_pure();
  r.dim = in.complex.dim();
  r.d = krull_dim(in.complex);
  return r;
}

inline void write_json(const VerdictReport& report, const std::string& path, std::ostream& out) {
  if (path.empty()) return;
  const std::string text = to_json(report).dump(2) + "\n";
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

inline std::vector<int> m_values(const Options& opts, int d) {
  if (opts.m) {
    if (*opts.m < 0 || *opts.m > d)
      throw std::invalid_argument("--m " + std::to_string(*opts.m) + " outside 0.." + std::to_string(d));
    return {*opts.m};
  }
  std::vector<int> all;
  for (int m = 0; m <= d; ++m) all.push_back(m);
  return all;
}

inline int cmd_analyze(const Options& opts, std::ostream& out) {
  auto in = load_input(opts.input);
  auto field = FieldSpec::parse(opts.field.empty() ? "q" : opts.field);
  auto report = base_report(opts, in, field);
  with_field(field, [&](const auto& f) {
    report.singularity = singularity_dimension(in.complex, f);
    return 0;
  });
  report.cohen_macaulay = report.singularity->dimension.is_neg_infinity();
  if (in.complex.is_pure()) report.buchsbaum = report.singularity->dimension.less_than(0);

  out << "input: " << in.descriptor << " (n=" << report.n << ", " << report.facets.size() << " facets)\n";
  out << "field: " << report.field << "\n";
  out << "dim: " << report.dim << " (d = " << report.d << "), pure: " << (report.pure ? "yes" : "no") << "\n";
  if (!report.pure) out << "warning: complex is not pure; analysis uses d = dim + 1\n";
  out << "singularity dimension: " << report.singularity->dimension.to_string() << "\n";
  for (const auto& w : report.singularity->witnesses)
    out << "  singular face " << w.face.to_string() << ": dim H~^" << w.degree << "(lk) = " << w.dim << "\n";
  out << "Cohen-Macaulay: " << (*report.cohen_macaulay ? "yes" : "no") << "\n";
  out << "Buchsbaum: " << (report.buchsbaum ? (*report.buchsbaum ? "yes" : "no") : "n/a (not pure)") << "\n";
  write_json(report, opts.json_path, out);
  return kOk;
}

inline int cmd_lc(const Options& opts, std::ostream& out) {
  auto in = load_input(opts.input);
  auto field = FieldSpec::parse(opts.field.empty() ? "q" : opts.field);
  auto report = base_report(opts, in, field);
  const int d = report.d;
  int l_min = 0, l_max = d;
  if (opts.l) {
    if (*opts.l < 0 || *opts.l > d)
      throw std::invalid_argument("--l " + std::to_string(*opts.l) + " outside 0.." + std::to_string(d));
    l_min = l_max = *opts.l;
  }
  with_field(field, [&](const auto& f) {
    using FieldT = std::decay_t<decltype(f)>;
    CohomologyCache<FieldT> cache(in.complex, f);
    report.lc_table = lc_table(cache, l_min, l_max, opts.max_i);
    return 0;
  });
  out << "graded dimensions of H^l_m(k[D]) over " << report.field << "\n";
  for (const auto& row : report.lc_table->rows) {
    out << "l=" << row.l << ":";
    for (auto it = row.by_degree.rbegin(); it != row.by_degree.rend(); ++it)
      out << "  [" << it->first << "] " << it->second;
    out << "\n     degree -(i+1), i >= 0: " << row.tail.polynomial_string() << "\n";
  }
  write_json(report, opts.json_path, out);
  return kOk;
}

inline int cmd_quotient_lc(const Options& opts, std::ostream& out) {
  auto in = load_input(opts.input);
  auto field = FieldSpec::parse(opts.field.empty() ? "q" : opts.field);
  auto report = base_report(opts, in, field);
  const int m = opts.m.value_or(1);
  if (m < 0 || m > report.d)
    throw std::invalid_argument("--m " + std::to_string(m) + " outside 0.." + std::to_string(report.d));
  with_field(field, [&](const auto& f) {
    using FieldT = std::decay_t<decltype(f)>;
    CohomologyCache<FieldT> cache(in.complex, f);
    report.quotient_lc = quotient_lc_table(cache, m, opts.max_i);
    return 0;
  });
  const auto& table = *report.quotient_lc;
  out << "H^l_m(k[D]/(theta_1..theta_" << m << ")) in degrees -i over " << report.field << "\n";
  for (const auto& row : table.rows) {
    out << "l=" << row.l << ":";
    for (const auto& [i, dim] : row.by_degree) out << "  [-" << i << "] " << dim;
    out << "\n     degree -i, i >= 1: " << row.series.polynomial_string() << "\n";
  }
  for (const auto& [l, v] : table.isolated)
    out << "l=" << l << " (isolated singularities, theta = x_1 + ... + x_n): degree <0: " << v.negative
        << ", degree 0: " << v.degree0 << " (coker " << v.coker_prev << " + ker " << v.ker_cur
        << "), degree 1: " << v.degree1 << ", degree >=2: " << v.degree_at_least_2 << " (derived)\n";
  out << "finite local cohomology: " << (table.flc ? "yes" : "no") << "\n";
  write_json(report, opts.json_path, out);
  return kOk;
}

inline int cmd_kernels(const Options& opts, std::ostream& out) {
  auto in = load_input(opts.input);
  auto field = FieldSpec::parse(opts.field.empty() ? "fp:32003" : opts.field);
  auto report = base_report(opts, in, field);
  report.seed = opts.seed.value_or(0);
  const int d = report.d;
  const int n = report.n;
  bool all_ok = true;
  with_kernel_field(field, [&](const auto& kfield, MatrixStrategy strategy) {
    using FieldT = std::decay_t<decltype(kfield)>;
    auto a = generic_matrix(n, std::max(std::min(d, n), 1), kfield, strategy, *report.seed);
    LocalCohomologyModule<FieldT> module(in.complex, kfield);
    for (int m : m_values(opts, d))
      for (int l = 1; l <= d; ++l)
        for (int i = m; i <= m + opts.max_i; ++i) {
          auto k = module.kernel_dims(l, m, i, a);
          all_ok = all_ok && k.consistent();
          report.kernels.push_back(std::move(k));
        }
  });
  out << "ker^l_{m,i} dimensions (brute force vs closed form)\n";
  for (const auto& k : report.kernels) {
    out << "l=" << k.l << " m=" << k.m << " i=" << k.i << ": " << k.brute_dim << " / " << k.closed_form_dim;
    if (k.surjective_onto_previous) out << "  onto: " << (*k.surjective_onto_previous ? "yes" : "NO");
    if (!k.consistent()) out << "  MISMATCH";
    out << "\n";
  }
  if (!report.kernels.empty())
    out << "field: " << report.kernels.front().field << ", matrix: " << report.kernels.front().matrix_provenance << "\n";
  write_json(report, opts.json_path, out);
  return all_ok ? kOk : kDisagreement;
}

inline void write_reproducer(const Options& opts, const LoadedInput& in, int m, const std::string& why,
                             std::ostream& err) {
  std::string path = opts.json_path.empty() || opts.json_path == "-"
                         ? "srlc-reproducer-m" + std::to_string(m) + ".json"
                         : opts.json_path + ".reproducer-m" + std::to_string(m) + ".json";
  Json j{{"command", "verify"}, {"input", opts.input}, {"facets", format_facets(in.complex)},
         {"field", opts.field.empty() ? "fp:32003" : opts.field}, {"seed", opts.seed.value_or(0)},
         {"m", m}, {"max_i", opts.max_i}, {"reason", why}};
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << j.dump(2) << "\n";
  err << "disagreement for m=" << m << "; reproducer written to " << path << "\n";
}

inline int cmd_verify(const Options& opts, std::ostream& out, std::ostream& err) {
  auto in = load_input(opts.input);
  auto field = FieldSpec::parse(opts.field.empty() ? "fp:32003" : opts.field);
  auto report = base_report(opts, in, field);
  if (!in.complex.is_pure()) throw std::invalid_argument("purity required: the complex is not pure");
  report.seed = opts.seed.value_or(0);
  BruteForceOptions brute{true, *report.seed, opts.max_i};
  bool all_agree = true;
  for (int m : m_values(opts, report.d)) {
    auto v = check_main_theorem(in.complex, m, field, brute);
    out << "m=" << m << ": singdim " << v.singularity_dimension.to_string() << " < " << m << " is "
        << (v.singularity_dimension.less_than(m) ? "true" : "false") << "; FLC by formula "
        << (v.flc_by_formula ? "yes" : "no");
    if (v.flc_by_bruteforce) out << ", by brute force " << (*v.flc_by_bruteforce ? "yes" : "no");
    out << " [" << v.kernel_reports.size() << " kernels over " << v.bruteforce_field << ", "
        << v.matrix_provenance << "]";
    out << " -> " << (v.agree ? "agree" : "DISAGREE") << "\n";
    if (!v.agree) {
      all_agree = false;
      write_reproducer(opts, in, m, v.bridge_consistent ? "flc mismatch" : "kernel dimension mismatch", err);
    }
    report.theorem.push_back(std::move(v));
  }
  write_json(report, opts.json_path, out);
  return all_agree ? kOk : kDisagreement;
}

inline int cmd_corpus(const Options& opts, std::ostream& out) {
  auto corpus = builtin_corpus();
  if (!opts.selftest) {
    for (const auto& e : corpus)
      out << e.name << "  n=" << e.complex.vertex_count() << " dim=" << e.complex.dim()
          << " facets=" << e.complex.facets().size() << (e.complex.is_pure() ? "" : " (not pure)") << "\n";
    return kOk;
  }
  bool ok = true;
  for (const auto& e : corpus)
    for (const auto& c : verify_corpus_entry(e)) {
      out << (c.ok() ? "ok   " : "FAIL ") << c.entry << " " << c.key << ": expected " << c.expected
          << ", got " << c.actual << "\n";
      ok = ok && c.ok();
    }
  out << (ok ? "corpus selftest passed\n" : "corpus selftest FAILED\n");
  return ok ? kOk : kDisagreement;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local cohomology of Stanley-Reisner rings"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* sub, bool kernel_flags) {
    sub->add_option("input,--input", opts.input, "corpus:<name> or a facet file");
    sub->add_option("--field", opts.field, "q | fp:<p>");
    sub->add_option("--json", opts.json_path, "write the JSON report here ('-' for stdout)");
    sub->add_option("--max-i", opts.max_i, "how many degrees to tabulate (default 3)")->check(CLI::NonNegativeNumber);
    sub->add_option("--m", opts.m, "number of linear forms");
    if (kernel_flags) sub->add_option("--seed", opts.seed, "seed for the linear forms");
  };

  auto* analyze = app.add_subcommand("analyze", "purity, singularity dimension, CM and Buchsbaum");
  add_common(analyze, false);
  auto* lc = app.add_subcommand("lc", "graded dimensions of H^l_m(k[D])");
  add_common(lc, false);
  lc->add_option("--l", opts.l, "single cohomological degree");
  auto* qlc = app.add_subcommand("quotient-lc", "local cohomology of k[D]/(theta_1..theta_m)");
  add_common(qlc, false);
  auto* kernels = app.add_subcommand("kernels", "brute-force ker^l_{m,i} against the closed form");
  add_common(kernels, true);
  auto* verify = app.add_subcommand("verify", "check singdim < m <=> finite local cohomology");
  add_common(verify, true);
  auto* corpus = app.add_subcommand("corpus", "list the built-in corpus");
  corpus->add_flag("--selftest", opts.selftest, "recompute every recorded corpus property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kUsage;
  }

  auto* sub = app.get_subcommands().front();
  opts.command = sub->get_name();
  try {
    if (opts.command == "corpus") return cmd_corpus(opts, out);
    if (opts.input.empty()) {
      err << "error: an input (corpus:<name> or a facet file) is required\n";
      return kUsage;
    }
    if (opts.command == "analyze") return cmd_analyze(opts, out);
    if (opts.command == "lc") return cmd_lc(opts, out);
    if (opts.command == "quotient-lc") return cmd_quotient_lc(opts, out);
    if (opts.command == "kernels") return cmd_kernels(opts, out);
    if (opts.command == "verify") return cmd_verify(opts, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace srlc::cli
