#include "skewgentle/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <optional>
#include <fstream>
#include <stdexcept>

#include "skewgentle/dsl.hpp"

namespace skewgentle {

void GenConfig::validate() const {
  auto bad = [](const std::string& what) { throw std::invalid_argument("corpus config: " + what); };
  if (min_vertices < 1 || max_vertices < min_vertices) bad("empty vertex range");
  if (min_arrows < 0 || max_arrows < min_arrows) bad("empty arrow range");
  for (const Rational* p : {&relation_density, &special_density})
    if (p->sign() < 0 || Rational(1) < *p) bad("density outside [0, 1]");
  if (count < 0) bad("negative count");
  if (retry_budget < 1) bad("retry budget must be positive");
}

nlohmann::json GenConfig::to_json() const {
  return {{"seed", seed},
          {"vertices", {min_vertices, max_vertices}},
          {"arrows", {min_arrows, max_arrows}},
          {"relation_density", relation_density.to_string()},
          {"special_density", special_density.to_string()},
          {"count", count},
          {"retry_budget", retry_budget},
          {"prng", "mt19937_64, seed_seq{lo32(seed), hi32(seed), index}, rejection sampling"}};
}

namespace {

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream & 0xffffffffu), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

std::string arrow_letter(int k) {
  if (k < 26) return std::string(1, static_cast<char>('a' + k));
  return "a" + std::to_string(k);
}

// One attempt; nullopt when the tree could not be placed under the budgets.
std::optional<QuiverSpec> attempt(const GenConfig& c, CorpusRng& rng) {
  const int n = rng.between(c.min_vertices, c.max_vertices);
  QuiverSpec q;
  for (int v = 0; v < n; ++v) q.add_vertex(std::to_string(v + 1));
  std::vector<int> in(n, 0), out(n, 0);
  int next_name = 0;
  auto place = [&](int s, int t) {
    if (out[s] >= 2 || in[t] >= 2) return false;
    q.add_arrow(arrow_letter(next_name++), s, t);
    ++out[s];
    ++in[t];
    return true;
  };

  for (int v = 1; v < n; ++v) {
    bool ok = false;
    for (int tries = 0; tries < 8 && !ok; ++tries) {
      const int u = rng.between(0, v - 1);
      ok = rng.bernoulli(Rational(1, 2)) ? (place(u, v) || place(v, u)) : (place(v, u) || place(u, v));
    }
    if (!ok) return std::nullopt;
  }
  const int wanted = std::clamp(rng.between(c.min_arrows, c.max_arrows), n - 1, 2 * n);
  for (int tries = 0; q.arrow_count() < wanted && tries < 20 * wanted; ++tries)
    place(rng.between(0, n - 1), rng.between(0, n - 1));

  // Gentle assignment at each vertex: with two arrows on one side, exactly
  // one composition per arrow on the other side is a relation.
  std::vector<std::pair<int, int>> rel;
  for (int x = 0; x < n; ++x) {
    auto ins = q.in_arrows(x), outs = q.out_arrows(x);
    if (ins.empty() || outs.empty()) continue;
    if (ins.size() == 2 && outs.size() == 2) {
      const bool cross = rng.bernoulli(Rational(1, 2));
      rel.push_back({ins[0], outs[cross ? 1 : 0]});
      rel.push_back({ins[1], outs[cross ? 0 : 1]});
    } else if (ins.size() == 2) {
      rel.push_back({ins[rng.below(2)], outs[0]});
    } else if (outs.size() == 2) {
      rel.push_back({ins[0], outs[rng.below(2)]});
    } else if (rng.bernoulli(c.relation_density)) {
      rel.push_back({ins[0], outs[0]});
    }
  }
  for (auto [a, b] : rel) q.add_relation(monomial_relation(q, q.arrow_name(a), q.arrow_name(b)));
  return q;
}

}  // namespace

CorpusRng::CorpusRng(std::uint64_t seed, std::uint64_t stream) : engine_(seeded(seed, stream)) {}

std::uint64_t CorpusRng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("CorpusRng::below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % n;
  }
}

bool CorpusRng::bernoulli(const Rational& p) {
  if (p.is_zero()) return false;
  if (!(p < Rational(1))) return true;
  const mpz_class den = p.denominator(), num = p.numerator();
  if (!den.fits_ulong_p()) throw std::invalid_argument("density denominator too large");
  return below(den.get_ui()) < num.get_ui();
}

QuiverSpec generate_gentle_one(const GenConfig& config, CorpusRng& rng) {
  for (int k = 0; k < config.retry_budget; ++k) {
    auto q = attempt(config, rng);
    if (q && check_gentle(*q).is_gentle) return *q;
  }
  throw RetryBudgetExhausted("no gentle pair within " + std::to_string(config.retry_budget) + " attempts");
}

std::vector<QuiverSpec> generate_gentle(const GenConfig& config) {
  config.validate();
  std::vector<QuiverSpec> out;
  for (int i = 0; i < config.count; ++i) {
    CorpusRng rng(config.seed, static_cast<std::uint64_t>(i));
    out.push_back(generate_gentle_one(config, rng));
  }
  return out;
}

std::vector<int> admissible_special_vertices(const QuiverSpec& spec) {
  std::vector<int> out;
  for (int v = 0; v < spec.vertex_count(); ++v) {
    QuiverSpec q = spec.underlying_quiver();
    for (const auto& r : spec.relations()) q.add_relation(r);
    q.mark_special(v);
    if (check_skew_gentle(q).valid()) out.push_back(v);
  }
  return out;
}

std::vector<SkewGentleTriple> attach_special(const QuiverSpec& spec, const GenConfig& config, CorpusRng& rng) {
  QuiverSpec base = spec.underlying_quiver();
  for (const auto& r : spec.relations()) base.add_relation(r);
  std::vector<SkewGentleTriple> out{require_skew_gentle(base)};
  QuiverSpec marked = base;
  bool any = false;
  for (int v : admissible_special_vertices(base))
    if (rng.bernoulli(config.special_density)) {
      marked.mark_special(v);
      any = true;
    }
  if (any) {
    auto check = check_skew_gentle(marked);
    if (check.valid()) out.push_back(*check.triple);
  }
  return out;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::vector<CorpusInstance> generate_corpus(const GenConfig& config) {
  config.validate();
  std::vector<CorpusInstance> out;
  out.reserve(static_cast<std::size_t>(config.count));
  for (int i = 0; i < config.count; ++i) {
    CorpusRng rng(config.seed, static_cast<std::uint64_t>(i));
    const QuiverSpec gentle = generate_gentle_one(config, rng);
    auto triples = attach_special(gentle, config, rng);
    CorpusInstance inst;
    char id[16];
    std::snprintf(id, sizeof id, "sg%04d", i);
    inst.id = id;
    inst.spec = triples.back().base;
    inst.dsl = serialize_quiver(inst.spec);
    inst.hash = fnv1a(inst.dsl);
    out.push_back(std::move(inst));
  }
  return out;
}

void write_corpus(const std::vector<CorpusInstance>& corpus, const GenConfig& config, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  nlohmann::json items = nlohmann::json::array();
  for (const auto& inst : corpus) {
    const std::string file = inst.id + ".sg";
    std::ofstream(dir / file) << inst.dsl;
    nlohmann::json special = nlohmann::json::array();
    for (int v : inst.spec.special()) special.push_back(inst.spec.vertex_name(v));
    items.push_back({{"id", inst.id},
                     {"file", file},
                     {"hash", hex64(inst.hash)},
                     {"vertices", inst.spec.vertex_count()},
                     {"arrows", inst.spec.arrow_count()},
                     {"relations", inst.spec.relations().size()},
                     {"special", special}});
  }
  nlohmann::json manifest{{"schema_version", 1}, {"config", config.to_json()}, {"instances", items}};
  std::ofstream(dir / "manifest.json") << manifest.dump(2) << '\n';
}

}  // namespace skewgentle
