#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "common.hpp"
#include "skewgentle/corpus.hpp"

using namespace skewgentle;

TEST(Rng, StreamsAreReproducibleAndDistinct) {
  CorpusRng a(42, 0), b(42, 0), c(42, 1);
  std::vector<std::uint64_t> xa, xb, xc;
  for (int i = 0; i < 16; ++i) {
    xa.push_back(a.next());
    xb.push_back(b.next());
    xc.push_back(c.next());
  }
  EXPECT_EQ(xa, xb);
  EXPECT_NE(xa, xc);
}

TEST(Rng, BoundedDrawsStayInRange) {
  CorpusRng r(3, 3);
  std::vector<int> hits(5, 0);
  for (int i = 0; i < 5000; ++i) ++hits[static_cast<std::size_t>(r.below(5))];
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_FALSE(r.bernoulli(Rational(0)));
  EXPECT_TRUE(r.bernoulli(Rational(1)));
  EXPECT_THROW(r.below(0), std::invalid_argument);
}

TEST(Generator, TinyConfigGivesGentlePair) {
  GenConfig c;
  c.seed = 1;
  c.count = 1;
  c.min_vertices = c.max_vertices = 2;
  c.min_arrows = c.max_arrows = 1;
  const auto qs = generate_gentle(c);
  ASSERT_EQ(qs.size(), 1u);
  EXPECT_TRUE(check_gentle(qs[0]).is_gentle);
}

TEST(Generator, EveryEmittedPairIsGentleAndConnected) {
  GenConfig c;
  c.seed = 2024;
  c.count = 200;
  for (const auto& q : generate_gentle(c)) {
    EXPECT_TRUE(check_gentle(q).is_gentle) << serialize_quiver(q);
    EXPECT_GE(q.arrow_count(), q.vertex_count() - 1);
    EXPECT_GE(q.vertex_count(), c.min_vertices);
    EXPECT_LE(q.vertex_count(), c.max_vertices);
  }
}

TEST(Generator, SameSeedSameStream) {
  GenConfig c;
  c.count = 30;
  const auto x = generate_corpus(c), y = generate_corpus(c);
  ASSERT_EQ(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_EQ(x[i].dsl, y[i].dsl);
    EXPECT_EQ(x[i].hash, y[i].hash);
  }
  c.seed += 1;
  EXPECT_NE(generate_corpus(c)[0].dsl + generate_corpus(c)[1].dsl, x[0].dsl + x[1].dsl);
}

TEST(Generator, RejectsInvalidConfig) {
  GenConfig c;
  c.min_vertices = 5;
  c.max_vertices = 3;
  EXPECT_THROW(generate_gentle(c), std::invalid_argument);
  GenConfig d;
  d.special_density = Rational(3, 2);
  EXPECT_THROW(d.validate(), std::invalid_argument);
}

TEST(Generator, RetryBudgetExhaustion) {
  GenConfig c;
  c.count = 1;
  c.min_vertices = c.max_vertices = 6;
  c.min_arrows = c.max_arrows = 1;  // clamped up to a spanning tree
  EXPECT_NO_THROW(generate_gentle(c));
  // a single loop without x*x in I is never finite dimensional
  GenConfig loop;
  loop.count = 1;
  loop.min_vertices = loop.max_vertices = 1;
  loop.min_arrows = loop.max_arrows = 1;
  loop.relation_density = Rational(0);
  loop.retry_budget = 5;
  EXPECT_THROW(generate_gentle(loop), RetryBudgetExhausted);
  loop.relation_density = Rational(1);
  EXPECT_EQ(generate_gentle(loop)[0].relations().size(), 1u);
}

TEST(Special, ExampleAdmissibleVertices) {
  const auto q = sgtest::spec(sgtest::kChain);
  const auto adm = admissible_special_vertices(q);
  std::vector<std::string> names;
  for (int v : adm) names.push_back(q.vertex_name(v));
  EXPECT_EQ(names, (std::vector<std::string>{"1", "2", "4"}));
}

TEST(Special, FullDegreeQuiverAdmitsNothing) {
  // two in and two out everywhere: free continuations form a cycle, so the
  // pair is not even finite dimensional and no loop can be attached
  const auto q = sgtest::spec(
      "vertices 1 2; arrow a: 1->2; arrow b: 1->2; arrow c: 2->1; arrow d: 2->1;"
      " rel a*c; rel b*d; rel c*a; rel d*b;");
  EXPECT_FALSE(check_gentle(q).is_gentle);
  EXPECT_TRUE(admissible_special_vertices(q).empty());
}

TEST(Special, FullDegreeVertexIsNeverAdmissible) {
  const auto q = sgtest::spec(
      "vertices 1 2 3 4 5; arrow a: 1->3; arrow b: 2->3; arrow c: 3->4; arrow d: 3->5; rel a*c; rel b*d;");
  ASSERT_TRUE(check_gentle(q).is_gentle);
  EXPECT_EQ(admissible_special_vertices(q), (std::vector<int>{0, 1, 3, 4}));
}

TEST(Special, AttachAlwaysEmitsEmptyTripleFirst) {
  GenConfig c;
  c.count = 50;
  c.special_density = Rational(1);
  for (int i = 0; i < c.count; ++i) {
    CorpusRng rng(c.seed, static_cast<std::uint64_t>(i));
    const auto q = generate_gentle_one(c, rng);
    const auto ts = attach_special(q, c, rng);
    ASSERT_FALSE(ts.empty());
    EXPECT_TRUE(ts.front().special_vertices.empty());
    for (const auto& t : ts) EXPECT_TRUE(check_skew_gentle(t.base).valid());
    EXPECT_EQ(ts.size(), admissible_special_vertices(q).empty() ? 1u : 2u);
  }
}

TEST(Corpus, WritesFilesAndManifest) {
  GenConfig c;
  c.seed = 42;
  c.count = 10;
  const auto dir = std::filesystem::temp_directory_path() / "skewgentle_corpus_test";
  std::filesystem::remove_all(dir);
  const auto corpus = generate_corpus(c);
  write_corpus(corpus, c, dir);
  std::ifstream in(dir / "manifest.json");
  const auto manifest = nlohmann::json::parse(in);
  ASSERT_EQ(manifest["instances"].size(), 10u);
  for (const auto& item : manifest["instances"]) {
    const auto text = [&] {
      std::ifstream f(dir / item["file"].get<std::string>());
      return std::string(std::istreambuf_iterator<char>(f), {});
    }();
    EXPECT_EQ(hex64(fnv1a(text)), item["hash"].get<std::string>());
    EXPECT_TRUE(check_skew_gentle(parse_quiver(text)).valid());
  }
  std::filesystem::remove_all(dir);
}

TEST(Corpus, Fnv1aReferenceValues) {
  EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(hex64(fnv1a("a")), "af63dc4c8601ec8c");
}
