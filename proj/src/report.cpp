#include "skewgentle/report.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "skewgentle/corpus.hpp"
#include "skewgentle/dsl.hpp"
#include "skewgentle/engine.hpp"
#include "skewgentle/gentle.hpp"
#include "skewgentle/homology.hpp"
#include "skewgentle/morita.hpp"
#include "skewgentle/skew.hpp"

namespace skewgentle {

Level parse_level(std::string_view text) {
  if (text == "structural") return Level::structural;
  if (text == "homological") return Level::homological;
  if (text == "full") return Level::full;
  throw std::invalid_argument("unknown level '" + std::string(text) + "' (structural, homological, full)");
}

std::string level_name(Level level) {
  switch (level) {
    case Level::structural: return "structural";
    case Level::homological: return "homological";
    case Level::full: return "full";
  }
  return "?";
}

nlohmann::json VerifyOptions::to_json() const {
  nlohmann::json f = nlohmann::json::array();
  for (const auto& x : fields) f.push_back(x.name());
  return {{"level", level_name(level)}, {"fields", f},          {"id_cap", id_cap},
          {"tor_max", tor_max},         {"bimodule_cap", bimodule_cap}, {"bimodule_max_dim", bimodule_max_dim}};
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

nlohmann::json block_json(const VerdictBlock& b) {
  nlohmann::json j{{"status", b.status}, {"ms", b.ms}};
  if (!b.reason.empty()) j["reason"] = b.reason;
  if (!b.detail.empty()) j["detail"] = b.detail;
  return j;
}

nlohmann::json opt_json(const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(">cap"); }

// Runs `body`, which sets the status; exceptions become statuses.
template <class Fn>
VerdictBlock run_block(const std::string& name, Fn&& body) {
  VerdictBlock b;
  b.name = name;
  const auto t0 = Clock::now();
  try {
    body(b);
  } catch (const CapExceeded& e) {
    b.status = "cap_exceeded";
    b.reason = e.what();
  } catch (const std::exception& e) {
    b.status = "fail";
    b.reason = std::string("error: ") + e.what();
  }
  b.ms = ms_since(t0);
  return b;
}

VerdictBlock skipped(const std::string& name, const std::string& reason) {
  VerdictBlock b;
  b.name = name;
  b.status = "skipped";
  b.reason = reason;
  return b;
}

template <class S>
FieldRun run_field(const SkewGentleTriple& triple, const SplitQuiver& sq, const VerifyOptions& o) {
  FieldRun run;
  run.field = field_traits<S>::name();
  std::optional<PresentedAlgebra<S>> alg;

  run.blocks.push_back(run_block("split", [&](VerdictBlock& b) {
    alg = realize<S>(sq.spec);
    const int oracle = oracle_dimension<S>(sq.spec);
    const ProbeReport probes = structure_probes(sq, *alg);
    b.detail = {{"vertices", sq.spec.vertex_count()},
                {"arrows", sq.spec.arrow_count()},
                {"relations", sq.spec.relations().size()},
                {"dim", alg->dimension()},
                {"oracle_dim", oracle},
                {"graded", alg->graded_dimensions()},
                {"probes", probes.to_json()}};
    b.signature = {{"dim", alg->dimension()}, {"graded", alg->graded_dimensions()}, {"probes", probes.passed}};
    b.status = alg->dimension() == oracle && probes.passed ? "pass" : "fail";
    if (alg->dimension() != oracle) b.reason = "engine and oracle dimensions differ";
    else if (!probes.passed) b.reason = "structure probe failed";
  }));
  if (!alg) {
    for (const char* n : {"peirce", "stratifying", "gorenstein", "selfinjective"}) {
      if (std::string(n) == "stratifying" && o.level == Level::structural) break;
      if (std::string(n) == "selfinjective" && o.level != Level::full) break;
      run.blocks.push_back(skipped(n, "algebra not realized"));
    }
    return run;
  }

  const bool vacuous = triple.special_vertices.empty();
  std::optional<PeirceData<S>> pd;
  run.blocks.push_back(run_block("peirce", [&](VerdictBlock& b) {
    if (vacuous) {
      b.status = "vacuous";
      b.reason = "no special vertices: e = 0";
      return;
    }
    pd = peirce(*alg, sq);
    const auto c = present_C(*pd);
    const auto bp = present_B(*pd, triple);
    const auto proj = check_one_sided_projectivity(*pd);
    const auto q = quotient_iso_check(*pd, triple);
    const auto ctx = morita_context_checks(*pd);
    const auto bim = decompose_bimodules(*pd, c);
    b.detail = morita_report(*pd, bp, c, proj, q);
    b.detail["context"] = {{"compatibility", ctx.compatibility},
                           {"g_in_radical", ctx.g_in_radical},
                           {"f_nilpotent", ctx.f_nilpotent},
                           {"checked", ctx.checked},
                           {"exhaustive", ctx.exhaustive}};
    b.detail["bimodules"] = {{"M_direct", bim.m_direct}, {"N_direct", bim.n_direct}};
    if (bp.gentle_or) b.detail["B_gentle"] = *bp.gentle_or;
    if (bp.matches_q_ior) b.detail["B_matches_Q_Ior"] = *bp.matches_q_ior;
    b.signature = {{"dims", b.detail["dims"]}, {"C_factors", c.factors}, {"verdicts", b.detail["verdicts"]}};
    std::vector<std::string> bad;
    for (auto& [k, v] : b.detail["verdicts"].items())
      if (!static_cast<bool>(v)) bad.push_back(k);
    if (!ctx.compatibility || !ctx.g_in_radical || !ctx.f_nilpotent) bad.push_back("context");
    if (!bim.m_direct || !bim.n_direct) bad.push_back("bimodule_decomposition");
    if (bp.gentle_or && !*bp.gentle_or) bad.push_back("B_gentle");
    if (bp.matches_q_ior && !*bp.matches_q_ior) bad.push_back("B_matches_Q_Ior");
    b.status = bad.empty() ? "pass" : "fail";
    for (const auto& x : bad) b.reason += (b.reason.empty() ? "" : ", ") + x;
  }));
  if (o.level == Level::structural) return run;

  run.blocks.push_back(run_block("stratifying", [&](VerdictBlock& b) {
    if (vacuous) {
      b.status = "vacuous";
      b.reason = "AeA = 0";
      return;
    }
    if (!pd) {
      b.status = "skipped";
      b.reason = "Peirce data unavailable";
      return;
    }
    const auto sv = stratifying_check(*pd, o.tor_max);
    const auto tor = tor_over_C(*pd, o.tor_max);
    b.detail = to_json(sv);
    b.detail["tor_MN"] = tor;
    bool tor_ok = true;
    for (std::size_t n = 1; n < tor.size(); ++n) tor_ok = tor_ok && tor[n] == 0;
    std::string reason;
    bool bim_ok = true;
    try {
      const auto pdb = bimodule_pd_bound(*pd, o.bimodule_cap, o.bimodule_max_dim);
      b.detail["bimodule_pd"] = opt_json(pdb);
      bim_ok = pdb && *pdb <= 1;
      if (!bim_ok) reason = "pd of AeA as a bimodule exceeds 1";
    } catch (const SizeGuardExceeded& e) {
      b.detail["bimodule_pd"] = std::string("skipped: ") + e.what();
    }
    b.signature = {{"stratifying", sv.stratifying()}, {"tensor_dim", sv.tensor_dim}, {"tor_MN", tor}};
    if (!sv.stratifying()) reason = "multiplication map is not a derived isomorphism";
    else if (!sv.tor0_agrees) reason = "explicit tensor and Tor_0 disagree";
    else if (!tor_ok) reason = "Tor^C_n(M, N) nonzero";
    b.status = reason.empty() ? "pass" : "fail";
    b.reason = reason;
  }));

  run.blocks.push_back(run_block("gorenstein", [&](VerdictBlock& b) {
    const auto g = gorenstein_check(alg->algebra(), o.id_cap);
    b.detail = to_json(g.dims);
    b.signature = {{"id_left", opt_json(g.dims.id_left)}, {"id_right", opt_json(g.dims.id_right)}};
    if (!g.gorenstein()) {
      b.status = "cap_exceeded";
      b.reason = "injective dimension above cap " + std::to_string(o.id_cap);
      return;
    }
    if (!g.dims.routes_agree()) {
      b.status = "fail";
      b.reason = "resolution and Ext routes disagree";
      return;
    }
    b.status = "pass";
    if (o.level == Level::full) {
      const auto f = findim_report(alg->algebra(), g, o.id_cap);
      b.detail["findim"] = to_json(f);
      if (!f.bound_holds) {
        b.status = "fail";
        b.reason = "probe module with finite pd above id_A(A)";
      }
    }
  }));
  if (o.level != Level::full) return run;

  run.blocks.push_back(run_block("selfinjective", [&](VerdictBlock& b) {
    const auto v = selfinjective_check(alg->algebra(), &triple);
    b.detail = to_json(v);
    b.signature = {{"selfinjective", v.direct}};
    b.status = v.agree() ? "pass" : "fail";
    if (!v.agree()) b.reason = "direct computation disagrees with the combinatorial criterion";
  }));
  return run;
}

}  // namespace

RunReport verify_instance(const std::string& instance, const QuiverSpec& spec, const VerifyOptions& options) {
  const auto t0 = Clock::now();
  RunReport r;
  r.instance = instance;
  r.level = options.level;
  r.hashes["input"] = hex64(fnv1a(serialize_quiver(spec)));

  std::optional<SkewGentleTriple> triple;
  r.gentle = run_block("gentle", [&](VerdictBlock& b) {
    const auto check = check_skew_gentle(spec);
    b.detail = to_json(check);
    b.status = check.valid() ? "pass" : "fail";
    if (!check.valid()) b.reason = "not a skew-gentle triple";
    triple = check.triple;
  });
  if (!triple) {
    r.total_ms = ms_since(t0);
    return r;
  }

  const SplitQuiver sq = split_triple(*triple);
  r.hashes["split"] = hex64(fnv1a(serialize_quiver(sq.spec)));
  r.hashes["gamma"] = hex64(fnv1a(serialize_quiver(build_gamma(*triple).spec)));

  for (const auto& f : options.fields)
    r.fields.push_back(dispatch_field(f, [&](auto s) { return run_field<decltype(s)>(*triple, sq, options); }));

  std::map<std::string, std::vector<const VerdictBlock*>> by_name;
  for (const auto& fr : r.fields)
    for (const auto& b : fr.blocks) by_name[b.name].push_back(&b);
  for (const auto& [name, blocks] : by_name) {
    bool same = true;
    for (const auto* b : blocks) same = same && b->signature == blocks.front()->signature;
    r.agreement[name] = same;
  }
  r.total_ms = ms_since(t0);
  return r;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["instance"] = instance;
  j["level"] = level_name(level);
  j["gentle"] = block_json(gentle);
  nlohmann::json fs = nlohmann::json::object();
  for (const auto& fr : fields) {
    nlohmann::json blocks = nlohmann::json::object();
    for (const auto& b : fr.blocks) blocks[b.name] = block_json(b);
    fs[fr.field] = blocks;
  }
  j["fields"] = fs;
  j["agreement"] = agreement;
  bool all = true;
  for (auto& [k, v] : agreement.items()) all = all && v.get<bool>();
  j["cross_field_agreement"] = all;
  j["hashes"] = hashes;
  j["total_ms"] = total_ms;
  return j;
}

int RunReport::exit_code() const { return exit_code_of(to_json()); }

int exit_code_of(const nlohmann::json& report) {
  bool cap = false;
  auto visit = [&](const nlohmann::json& b) {
    const auto s = b.at("status").get<std::string>();
    if (s == "fail") return true;
    if (s == "cap_exceeded") cap = true;
    return false;
  };
  if (visit(report.at("gentle"))) return 1;
  for (auto& [field, blocks] : report.at("fields").items())
    for (auto& [name, b] : blocks.items())
      if (visit(b)) return 1;
  if (!report.value("cross_field_agreement", true)) return 1;
  return cap ? 3 : 0;
}

nlohmann::json verify_cached(const std::string& instance, const std::string& dsl, const VerifyOptions& options) {
  const char* dir = std::getenv("SKEWGENTLE_CACHE_DIR");
  std::filesystem::path file;
  if (dir && *dir) {
    const std::string key = std::to_string(kReportSchemaVersion) + "\n" + options.to_json().dump() + "\n" + dsl;
    file = std::filesystem::path(dir) / (hex64(fnv1a(key)) + ".json");
    std::ifstream in(file);
    if (in) {
      try {
        auto j = nlohmann::json::parse(in);
        j["instance"] = instance;
        j["cached"] = true;
        return j;
      } catch (const nlohmann::json::exception&) {
        // unreadable entry: recompute and overwrite
      }
    }
  }
  auto j = verify_instance(instance, parse_quiver(dsl), options).to_json();
  if (!file.empty()) {
    std::filesystem::create_directories(file.parent_path());
    std::ofstream(file) << j.dump() << '\n';
  }
  return j;
}

std::string render_text(const nlohmann::json& report) {
  std::ostringstream os;
  auto line = [&](const std::string& label, const nlohmann::json& b) {
    os << "  " << label << ": " << b.at("status").get<std::string>();
    if (b.contains("reason")) os << " (" << b["reason"].get<std::string>() << ")";
    os << '\n';
  };
  os << report.at("instance").get<std::string>() << " [" << report.at("level").get<std::string>() << "]\n";
  line("gentle", report.at("gentle"));
  for (auto& [field, blocks] : report.at("fields").items()) {
    os << " " << field << '\n';
    for (auto& [name, b] : blocks.items()) line(name, b);
  }
  if (!report.at("fields").empty())
    os << " cross-field agreement: " << (report.value("cross_field_agreement", true) ? "yes" : "NO") << '\n';
  const int code = exit_code_of(report);
  os << " result: " << (code == 0 ? "ok" : code == 3 ? "cap exceeded" : "FAILED") << '\n';
  return os.str();
}

nlohmann::json summarize(const std::vector<nlohmann::json>& reports) {
  nlohmann::json counts = nlohmann::json::object();
  nlohmann::json failing = nlohmann::json::array();
  nlohmann::json capped = nlohmann::json::array();
  double ms = 0;
  auto bump = [&](const std::string& key, const nlohmann::json& b) {
    const auto s = b.at("status").get<std::string>();
    auto& c = counts[key];
    if (c.is_null()) c = nlohmann::json::object();
    c[s] = c.value(s, 0) + 1;
  };
  for (const auto& r : reports) {
    bump("gentle", r.at("gentle"));
    for (auto& [field, blocks] : r.at("fields").items())
      for (auto& [name, b] : blocks.items()) bump(field + "/" + name, b);
    const int code = exit_code_of(r);
    if (code == 1) failing.push_back(r.at("instance"));
    if (code == 3) capped.push_back(r.at("instance"));
    ms += r.value("total_ms", 0.0);
  }
  return {{"schema_version", kReportSchemaVersion},
          {"instances", reports.size()},
          {"failing", failing},
          {"cap_exceeded", capped},
          {"status_counts", counts},
          {"total_ms", ms}};
}

std::string render_summary_text(const nlohmann::json& summary) {
  std::ostringstream os;
  os << summary.at("instances").get<std::size_t>() << " instances, " << summary.at("failing").size()
     << " failing, " << summary.at("cap_exceeded").size() << " capped\n";
  for (auto& [key, c] : summary.at("status_counts").items()) {
    os << "  " << key << ":";
    for (auto& [s, n] : c.items()) os << ' ' << s << '=' << n.get<int>();
    os << '\n';
  }
  for (const auto& id : summary.at("failing")) os << "  FAILED " << id.get<std::string>() << '\n';
  return os.str();
}

}  // namespace skewgentle
