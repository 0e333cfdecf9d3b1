#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewgentle/field.hpp"
#include "skewgentle/gentle.hpp"

namespace skewgentle {

/// Seed of the reference corpus used by the acceptance suite.
inline constexpr std::uint64_t kReferenceCorpusSeed = 0x5eed'6e47'1e00'0001ULL;
inline constexpr int kReferenceCorpusCount = 500;

struct GenConfig {
  std::uint64_t seed = kReferenceCorpusSeed;
  int min_vertices = 2, max_vertices = 6;
  int min_arrows = 1, max_arrows = 8;
  Rational relation_density{1, 2};  // chance that a free length-2 composition goes into I
  Rational special_density{1, 2};   // chance that an admissible vertex becomes special
  int count = kReferenceCorpusCount;
  int retry_budget = 200;

  /// Throws std::invalid_argument on empty ranges or densities outside [0, 1].
  void validate() const;
  nlohmann::json to_json() const;
};

/// mt19937_64 with a fixed stream split: instance i draws from the engine
/// seeded by seed_seq{lo32(seed), hi32(seed), i}. Bounded draws use
/// rejection on raw 64-bit outputs so streams do not depend on the standard
/// library's distributions.
class CorpusRng {
 public:
  CorpusRng(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool bernoulli(const Rational& p);

 private:
  std::mt19937_64 engine_;
};

class RetryBudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One connected gentle pair: a random spanning tree plus extra arrows under
/// in/out budget 2, then a gentle assignment of every length-2 composition.
/// Retries while the engine cannot certify finite dimension.
QuiverSpec generate_gentle_one(const GenConfig& config, CorpusRng& rng);

/// config.count gentle pairs, stream i for instance i.
std::vector<QuiverSpec> generate_gentle(const GenConfig& config);

/// Vertices v for which (Q, I, {v}) is a skew-gentle triple.
std::vector<int> admissible_special_vertices(const QuiverSpec& spec);

/// The Sp = {} triple followed, when different, by one triple whose special
/// set is sampled from the admissible vertices.
std::vector<SkewGentleTriple> attach_special(const QuiverSpec& spec, const GenConfig& config, CorpusRng& rng);

struct CorpusInstance {
  std::string id;
  QuiverSpec spec;  // with special marks
  std::string dsl;
  std::uint64_t hash = 0;
};

/// FNV-1a 64-bit.
std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t v);

/// Instance i: generate_gentle_one on stream i, then the sampled triple
/// from attach_special on the same stream.
std::vector<CorpusInstance> generate_corpus(const GenConfig& config);

/// Writes <id>.sg files and manifest.json into `dir`.
void write_corpus(const std::vector<CorpusInstance>& corpus, const GenConfig& config, const std::filesystem::path& dir);

}  // namespace skewgentle
