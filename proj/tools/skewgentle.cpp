#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewgentle/corpus.hpp"
#include "skewgentle/dsl.hpp"
#include "skewgentle/engine.hpp"
#include "skewgentle/gentle.hpp"
#include "skewgentle/morita.hpp"
#include "skewgentle/report.hpp"
#include "skewgentle/skew.hpp"

namespace fs = std::filesystem;
using namespace skewgentle;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerdict = 1, kInput = 2, kCap = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::vector<FieldSpec> parse_fields(const std::vector<std::string>& names) {
  std::vector<FieldSpec> out;
  for (const auto& n : names) {
    // accept comma-separated lists too
    std::stringstream ss(n);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) out.push_back(FieldSpec::parse(item));
  }
  if (out.empty()) out.push_back(FieldSpec::rationals());
  return out;
}

// Valid triple or an exit code after printing the violations.
std::optional<SkewGentleTriple> load_triple(const std::string& file, bool as_json, int& code) {
  const QuiverSpec spec = parse_quiver(read_text(file));
  const auto check = check_skew_gentle(spec);
  if (check.valid()) return check.triple;
  if (as_json) std::cout << to_json(check).dump(2) << '\n';
  for (const auto& v : check.verdict.violations) std::cerr << "axiom " << v.axiom << ": " << v.message << '\n';
  code = kVerdict;
  return std::nullopt;
}

int cmd_check(const std::string& file, bool as_json) {
  const QuiverSpec spec = parse_quiver(read_text(file));
  const auto check = check_skew_gentle(spec);
  if (as_json) {
    std::cout << to_json(check).dump(2) << '\n';
  } else if (check.valid()) {
    std::cout << "valid skew-gentle triple: " << spec.vertex_count() << " vertices, " << spec.arrow_count()
              << " arrows, " << spec.relations().size() << " relations, " << spec.special().size()
              << " special\n";
  } else {
    std::cout << "not a skew-gentle triple\n";
    for (const auto& v : check.verdict.violations) std::cout << "  axiom " << v.axiom << ": " << v.message << '\n';
  }
  return check.valid() ? kOk : kVerdict;
}

int cmd_split(const std::string& file, const std::string& out, bool as_json, const std::string& export_path,
              const std::vector<std::string>& field_names) {
  int code = kOk;
  auto triple = load_triple(file, as_json, code);
  if (!triple) return code;
  const SplitQuiver sq = split_triple(*triple);
  write_out(out, as_json ? to_json(sq).dump(2) + "\n" : serialize_quiver(sq.spec));
  if (!export_path.empty()) {
    const auto fields = parse_fields(field_names);
    const json alg = dispatch_field(fields.front(), [&](auto s) { return realize<decltype(s)>(sq.spec).to_json(); });
    write_out(export_path, alg.dump(2) + "\n");
  }
  return kOk;
}

int cmd_gamma(const std::string& file, const std::string& out, bool as_json) {
  int code = kOk;
  auto triple = load_triple(file, as_json, code);
  if (!triple) return code;
  const GammaPair g = build_gamma(*triple);
  write_out(out, as_json ? to_json(g).dump(2) + "\n" : serialize_quiver(g.spec));
  return kOk;
}

int cmd_corners(const std::string& file, const std::vector<std::string>& field_names, bool as_json) {
  int code = kOk;
  auto triple = load_triple(file, as_json, code);
  if (!triple) return code;
  const SplitQuiver sq = split_triple(*triple);
  const auto fields = parse_fields(field_names);
  return dispatch_field(fields.front(), [&](auto s) {
    using S = decltype(s);
    const auto alg = realize<S>(sq.spec);
    const auto pd = peirce(alg, sq);
    if (pd.degenerate()) {
      if (as_json) std::cout << json{{"degenerate", true}, {"reason", "no special vertices"}}.dump(2) << '\n';
      else std::cout << "no special vertices: e = 0, B = A\n";
      return static_cast<int>(kOk);
    }
    const auto c = present_C(pd);
    const auto b = present_B(pd, *triple);
    const auto proj = check_one_sided_projectivity(pd);
    const auto q = quotient_iso_check(pd, *triple);
    json rep = morita_report(pd, b, c, proj, q);
    rep["B_quiver"] = serialize_quiver(b.quiver);
    rep["C_quiver"] = serialize_quiver(c.quiver);
    bool ok = true;
    for (auto& [k, v] : rep["verdicts"].items()) ok = ok && static_cast<bool>(v);
    if (as_json) {
      std::cout << rep.dump(2) << '\n';
    } else {
      std::cout << "dim A = " << pd.dim_A() << ", B = " << pd.B.size() << ", M = " << pd.M.size()
                << ", N = " << pd.N.size() << ", C = " << pd.C.size() << '\n';
      std::cout << "C factors:";
      for (const auto& f : c.factors) std::cout << ' ' << f;
      std::cout << "\n# C\n" << serialize_quiver(c.quiver) << "# B\n" << serialize_quiver(b.quiver);
      for (auto& [k, v] : rep["verdicts"].items()) std::cout << k << ": " << (static_cast<bool>(v) ? "yes" : "NO") << '\n';
    }
    return static_cast<int>(ok ? kOk : kVerdict);
  });
}

std::vector<std::string> collect_inputs(const std::vector<std::string>& paths) {
  std::vector<std::string> files;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<std::string> here;
      for (const auto& e : fs::directory_iterator(p))
        if (e.path().extension() == ".sg") here.push_back(e.path().string());
      std::sort(here.begin(), here.end());
      files.insert(files.end(), here.begin(), here.end());
    } else {
      files.push_back(p);
    }
  }
  return files;
}

// Reports in input order; parse errors become InputError.
std::vector<json> run_many(const std::vector<std::string>& files, const VerifyOptions& options, int jobs) {
  std::vector<std::string> texts;
  for (const auto& f : files) texts.push_back(read_text(f));
  for (std::size_t i = 0; i < files.size(); ++i) {
    try {
      parse_quiver(texts[i]);
    } catch (const ParseError& e) {
      throw InputError(files[i] + ": " + e.what());
    }
  }
  std::vector<json> reports(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++)
      reports[i] = verify_cached(fs::path(files[i]).stem().string(), texts[i], options);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return reports;
}

int cmd_verify(const std::vector<std::string>& inputs, const VerifyOptions& options, int jobs, bool as_json,
               const std::string& out) {
  const auto files = collect_inputs(inputs);
  const auto reports = run_many(files, options, jobs);
  std::string text;
  int code = kOk;
  for (const auto& r : reports) {
    text += as_json ? r.dump(2) + "\n" : render_text(r);
    const int c = exit_code_of(r);
    if (c == kVerdict || (c == kCap && code == kOk)) code = c;
  }
  write_out(out, text);
  return code;
}

int cmd_report(const std::vector<std::string>& inputs, const VerifyOptions& options, int jobs, bool as_json,
               const std::string& out) {
  const auto files = collect_inputs(inputs);
  if (files.empty()) throw InputError("no .sg files found");
  const auto reports = run_many(files, options, jobs);
  json summary = summarize(reports);
  summary["options"] = options.to_json();
  write_out(out, as_json ? summary.dump(2) + "\n" : render_summary_text(summary));
  if (!summary["failing"].empty()) return kVerdict;
  return summary["cap_exceeded"].empty() ? kOk : kCap;
}

int cmd_corpus(GenConfig config, const std::string& rel, const std::string& sp, const std::string& dir) {
  config.relation_density = Rational::parse(rel);
  config.special_density = Rational::parse(sp);
  config.validate();
  const auto corpus = generate_corpus(config);
  write_corpus(corpus, config, dir);
  std::cout << "wrote " << corpus.size() << " instances to " << dir << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skew-gentle algebra toolkit"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string file, out, export_path;
  std::vector<std::string> field_names{"q"};
  std::vector<std::string> inputs;
  std::string level = "full";
  int jobs = 1;
  VerifyOptions vopt;

  auto* check = app.add_subcommand("check", "validate a skew-gentle triple");
  check->add_option("file", file, "DSL file")->required();
  check->add_flag("--json", as_json);

  auto* split = app.add_subcommand("split", "emit the quiver with relations of A(Q, I, Sp)");
  split->add_option("file", file, "DSL file")->required();
  split->add_option("-o,--output", out, "output file");
  split->add_flag("--json", as_json);
  split->add_option("--export-algebra", export_path, "write basis and structure constants as JSON");
  split->add_option("--field", field_names, "field for --export-algebra");

  auto* gamma = app.add_subcommand("gamma", "emit the gentle pair Gamma with its involution");
  gamma->add_option("file", file, "DSL file")->required();
  gamma->add_option("-o,--output", out, "output file");
  gamma->add_flag("--json", as_json);

  auto* corners = app.add_subcommand("corners", "present the corners B and C");
  corners->add_option("file", file, "DSL file")->required();
  corners->add_option("--field", field_names, "q, f2, f3, f5, f7");
  corners->add_flag("--json", as_json);

  auto add_verify_flags = [&](CLI::App* sub) {
    sub->add_option("inputs", inputs, "DSL files or directories")->required();
    sub->add_option("--field", field_names, "one or more of q, f2, f3, f5, f7");
    sub->add_option("--level", level, "structural, homological or full");
    sub->add_option("--jobs", jobs, "instances verified in parallel")->check(CLI::PositiveNumber);
    sub->add_option("--id-cap", vopt.id_cap, "cap for injective dimensions");
    sub->add_option("-o,--output", out, "output file");
    sub->add_flag("--json", as_json);
  };
  auto* verify = app.add_subcommand("verify", "run the verification pipeline");
  add_verify_flags(verify);
  auto* report = app.add_subcommand("report", "summarize the pipeline over a corpus");
  add_verify_flags(report);

  GenConfig gen;
  std::string rel_density = "1/2", sp_density = "1/2", corpus_dir = "corpus";
  auto* corpus = app.add_subcommand("corpus", "generate a deterministic corpus");
  corpus->add_option("--seed", gen.seed, "64-bit seed");
  corpus->add_option("--count", gen.count, "number of instances");
  corpus->add_option("--min-vertices", gen.min_vertices);
  corpus->add_option("--max-vertices", gen.max_vertices);
  corpus->add_option("--min-arrows", gen.min_arrows);
  corpus->add_option("--max-arrows", gen.max_arrows);
  corpus->add_option("--relation-density", rel_density, "rational in [0, 1]");
  corpus->add_option("--special-density", sp_density, "rational in [0, 1]");
  corpus->add_option("--retry-budget", gen.retry_budget);
  corpus->add_option("-o,--output", corpus_dir, "corpus directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*check) return cmd_check(file, as_json);
    if (*split) return cmd_split(file, out, as_json, export_path, field_names);
    if (*gamma) return cmd_gamma(file, out, as_json);
    if (*corners) return cmd_corners(file, field_names, as_json);
    if (*verify || *report) {
      vopt.level = parse_level(level);
      vopt.fields = parse_fields(field_names);
      return *verify ? cmd_verify(inputs, vopt, jobs, as_json, out) : cmd_report(inputs, vopt, jobs, as_json, out);
    }
    if (*corpus) return cmd_corpus(gen, rel_density, sp_density, corpus_dir);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const SpecError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kInput;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  }
  return kOk;
}
