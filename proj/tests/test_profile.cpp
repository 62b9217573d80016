#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "pipeforge/core/hash.hpp"
#include "pipeforge/core/csv.hpp"
#include "pipeforge/profile/column_profile.hpp"
#include "pipeforge/profile/embedding_index.hpp"
#include "test_util.hpp"

using namespace pipeforge;
using namespace pipeforge::profile;

namespace {

using Sparse = std::vector<std::pair<std::size_t, double>>;

// Frozen from tests/oracles/profile_oracle.py.
const Sparse kCategoricalOracle = {
    {24, 0.4364357804719848},  {28, 0.4364357804719848},  {67, 0.2182178902359924},  {74, 0.2182178902359924},
    {96, 0.2182178902359924},  {100, 0.4364357804719848}, {111, 0.2182178902359924}, {154, 0.2182178902359924},
    {177, 0.2182178902359924}, {187, 0.2182178902359924}, {205, 0.2182178902359924}, {207, 0.2182178902359924}};

const Sparse kNumericOracle = {
    {0, 0.04894536588960874},   {34, 0.2807053189477332},   {43, 0.1307689055107503},   {63, 0.06479326719265385},
    {73, 0.05818268061607531},  {74, 0.2684390101668787},   {98, 0.11107742578651092},  {100, 0.2849166841275634},
    {103, 0.08156155372213834}, {106, 0.09497222804252123}, {110, 0.03106602994845112}, {120, 0.32509778909335113},
    {137, 0.14088391041968332}, {140, 0.22012341693490953}, {145, 0.11396667365102534}, {147, 0.2849166841275634},
    {150, 0.2267340035114881},  {152, 0.10201543949231592}, {161, 0.1579913570380073},  {166, 0.04754370390913561},
    {175, 0.17383925834105246}, {177, 0.18290124463524746}, {180, 0.20335513040542505}, {183, 0.18994445608504215},
    {187, 0.2538506541791123},  {191, 0.2373729802184278},  {213, 0.004211365179830157}, {214, 0.14403277370788006},
    {229, 0.23597131823795464}, {238, 0.1269253270895561},  {253, 0.016477673960684672}};

void expect_matches(const std::vector<double>& v, const Sparse& oracle) {
  std::vector<double> dense(v.size(), 0.0);
  for (const auto& [i, x] : oracle) dense.at(i) = x;
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_NEAR(v[i], dense[i], 1e-12) << "bucket " << i;
}

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s / (norm(a) * norm(b));
}

// Mixed-type table with `rows` rows drawn from fixed distributions.
Table synthetic_table(std::size_t rows, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Table t;
  t.name = "synthetic";
  t.column_names = {"age", "income", "city", "note", "flag"};
  t.columns.resize(5);
  static const char* kCities[] = {"paris", "lyon", "nice", "lille", "nantes", "rennes", "brest", "metz"};
  static const char* kWords[] = {"great", "service", "slow", "delivery", "friendly", "staff", "price", "quality"};
  for (std::size_t r = 0; r < rows; ++r) {
    t.columns[0].push_back(std::to_string(18 + rng.below(60)));
    t.columns[1].push_back(text::format_number(std::round(std::exp(rng.uniform(8.0, 12.0)) * 100) / 100));
    t.columns[2].push_back(kCities[rng.below(8)]);
    std::string note;
    for (int w = 0; w < 6; ++w) note += std::string(w ? " " : "") + kWords[rng.below(8)] + std::to_string(rng.below(50));
    t.columns[3].push_back(note);
    t.columns[4].push_back(rng.uniform() < 0.1 ? "" : (rng.uniform() < 0.5 ? "0" : "1"));
  }
  return t;
}

Table sample_rows(const Table& t, std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> idx(t.row_count());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < n; ++i) std::swap(idx[i], idx[i + rng.below(idx.size() - i)]);
  Table out;
  out.name = t.name;
  out.column_names = t.column_names;
  out.columns.resize(t.column_count());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < t.column_count(); ++c) out.columns[c].push_back(t.columns[c][idx[i]]);
  }
  return out;
}

}  // namespace

TEST(ProfileColumn, CategoricalMatchesOracle) {
  const auto p = profile_column("colour", {"red", "Green", "red", "blue"});
  EXPECT_NE(p.inferred_type, ColumnType::Numeric);
  expect_matches(p.vector, kCategoricalOracle);
}

TEST(ProfileColumn, NumericMatchesOracle) {
  const auto p = profile_column("x", {"1", "2.5", "", "10", "-3", "7"});
  EXPECT_EQ(p.inferred_type, ColumnType::Numeric);
  expect_matches(p.vector, kNumericOracle);
  EXPECT_NEAR(norm(p.vector), 1.0, 1e-9);
}

TEST(ProfileColumn, RepeatedValueIndependentOfRowCount) {
  const auto a = profile_column("c", std::vector<std::string>(3, "alpha"));
  const auto b = profile_column("c", std::vector<std::string>(1000, "alpha"));
  for (std::size_t i = 0; i < a.vector.size(); ++i) EXPECT_NEAR(a.vector[i], b.vector[i], 1e-15);
}

TEST(ProfileColumn, DisjointContentFarApart) {
  std::vector<std::string> a(5, "aaaa"), z(5, "zzzz");
  a.insert(a.end(), 3, "aaaaaa");
  z.insert(z.end(), 3, "zzzzzz");
  const double c = cosine(profile_column("a", a).vector, profile_column("z", z).vector);
  EXPECT_LT(c, 0.2);
  EXPECT_NEAR(c, 0.0, 1e-12);  // oracle value
}

TEST(ProfileColumn, DuplicatedColumnIdentical) {
  const std::vector<std::string> v = {"x1", "y2", "x1", "zz"};
  EXPECT_EQ(profile_column("a", v).vector, profile_column("b", v).vector);
}

TEST(ProfileColumn, AllMissingIsZeroWithFlag) {
  const auto p = profile_column("m", {"", "NA", "nan"});
  EXPECT_TRUE(p.all_missing);
  EXPECT_EQ(norm(p.vector), 0.0);
  EXPECT_FALSE(profile_column("n", {"1", ""}).all_missing);
}

TEST(ProfileColumn, EmptyColumnRejected) { EXPECT_THROW(profile_column("e", {}), InvalidArgument); }

TEST(ProfileColumn, UnitNormAcrossTypes) {
  const auto t = synthetic_table(500, 3);
  for (std::size_t c = 0; c < t.column_count(); ++c) {
    EXPECT_NEAR(norm(profile_column(t.column_names[c], t.columns[c]).vector), 1.0, 1e-9);
  }
  EXPECT_EQ(profile_column("note", t.columns[3]).inferred_type, ColumnType::Text);
}

TEST(ProfileColumn, DimensionAndSeedConfigurable) {
  ProfileConfig cfg;
  cfg.dimension = 64;
  EXPECT_EQ(profile_column("a", {"q", "r"}, cfg).vector.size(), 64u);
  ProfileConfig seeded;
  seeded.hash_seed = 7;
  EXPECT_NE(profile_column("a", {"q", "r"}, seeded).vector, profile_column("a", {"q", "r"}).vector);
}

TEST(EmbedTable, SingleColumnEqualsColumn) {
  const auto p = profile_column("c", {"a", "b", "c"});
  const auto t = embed_table({p}, "one");
  EXPECT_EQ(t.n_columns, 1u);
  for (std::size_t i = 0; i < p.vector.size(); ++i) EXPECT_FLOAT_EQ(t.vector[i], static_cast<float>(p.vector[i]));
}

TEST(EmbedTable, PermutationInvariantExactly) {
  const auto t = synthetic_table(300, 5);
  std::vector<ColumnProfile> cols;
  for (std::size_t c = 0; c < t.column_count(); ++c) cols.push_back(profile_column(t.column_names[c], t.columns[c]));
  const auto base = embed_table(cols, "t");
  std::vector<std::size_t> perm = {0, 1, 2, 3, 4};
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<ColumnProfile> shuffled;
    for (std::size_t i : perm) shuffled.push_back(cols[i]);
    EXPECT_EQ(embed_table(shuffled, "t").vector, base.vector);
  }
}

TEST(EmbedTable, ShuffledRenamedCopyAtDistanceZero) {
  auto t = synthetic_table(200, 9);
  const auto a = profile_table(t).embedding;
  std::swap(t.columns[0], t.columns[3]);
  t.column_names = {"p", "q", "r", "s", "u"};
  const auto b = profile_table(t).embedding;
  EXPECT_EQ(cosine_distance(a.vector, b.vector), 0.0);
}

TEST(EmbedTable, DimensionMismatch) {
  ColumnProfile a{"a", ColumnType::Numeric, std::vector<double>(4, 0.5), false};
  ColumnProfile b{"b", ColumnType::Numeric, std::vector<double>(8, 0.0), true};
  EXPECT_THROW(embed_table({a, b}, "x"), DimensionMismatch);
  EXPECT_THROW(embed_table({}, "x"), InvalidArgument);
}

TEST(EmbedTable, SubsampleStability) {
  const auto big = synthetic_table(10000, 11);
  const auto small = sample_rows(big, 1000, 12);
  const auto a = profile_table(big).embedding;
  const auto b = profile_table(small).embedding;
  EXPECT_GE(1.0 - cosine_distance(a.vector, b.vector), 0.95);
}

TEST(EmbedTable, RowCapSamplesLargeColumns) {
  ProfileConfig cfg;
  cfg.max_rows = 100;
  const auto t = synthetic_table(1000, 4);
  const auto capped = profile_column("city", t.columns[2], cfg);
  const auto again = profile_column("city", t.columns[2], cfg);
  EXPECT_EQ(capped.vector, again.vector);
  EXPECT_NE(capped.vector, profile_column("city", t.columns[2]).vector);
}

TEST(CosineDistance, SymmetricBoundedZeroOnSelf) {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<float> a(16), b(16);
    for (auto& x : a) x = static_cast<float>(rng.uniform(-1, 1));
    for (auto& x : b) x = static_cast<float>(rng.uniform(-1, 1));
    const double ab = cosine_distance(a, b);
    EXPECT_EQ(ab, cosine_distance(b, a));
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 2.0);
    EXPECT_EQ(cosine_distance(a, a), 0.0);
  }
}

TEST(EmbeddingIndexTest, SelfRetrievalForEveryEntry) {
  EmbeddingIndex index(256);
  std::vector<TableEmbedding> all;
  for (std::uint64_t s = 0; s < 12; ++s) {
    auto t = synthetic_table(50 + 10 * s, 100 + s);
    t.name = "t" + std::to_string(s);
    all.push_back(profile_table(t).embedding);
    index.add(all.back());
  }
  for (const auto& e : all) {
    const auto nn = index.nearest(e, 1);
    ASSERT_EQ(nn.size(), 1u);
    EXPECT_EQ(nn[0].dataset_name, e.dataset_name);
    EXPECT_EQ(nn[0].distance, 0.0);
  }
  EXPECT_EQ(index.nearest(all[0], 100).size(), 12u);
}

TEST(EmbeddingIndexTest, OrthogonalTiesOrderedByName) {
  EmbeddingIndex index(3);
  index.add({"gamma", {0, 0, 1}, 1});
  index.add({"alpha", {1, 0, 0}, 1});
  index.add({"beta", {0, 1, 0}, 1});
  const auto nn = index.nearest({"q", {0, 0, 1}, 1}, 3);
  ASSERT_EQ(nn.size(), 3u);
  EXPECT_EQ(nn[0].dataset_name, "gamma");
  EXPECT_EQ(nn[0].distance, 0.0);
  EXPECT_EQ(nn[1].dataset_name, "alpha");
  EXPECT_EQ(nn[2].dataset_name, "beta");
  EXPECT_EQ(nn[1].distance, 1.0);
  EXPECT_EQ(nn[2].distance, 1.0);
}

TEST(EmbeddingIndexTest, Errors) {
  EmbeddingIndex index(3);
  EXPECT_THROW(index.nearest({"q", {0, 0, 1}, 1}, 1), EmptyIndex);
  index.add({"a", {1, 0, 0}, 1});
  EXPECT_THROW(index.nearest({"q", {0, 1}, 1}, 1), DimensionMismatch);
  EXPECT_THROW(index.add({"b", {1, 0}, 1}), DimensionMismatch);
  EXPECT_THROW(index.add({"a", {0, 1, 0}, 1}), InvalidArgument);
}

TEST(EmbeddingIndexTest, BinaryRoundTripAndLayout) {
  EmbeddingIndex index(2);
  index.add({"ab", {0.5f, -1.0f}, 3});
  std::stringstream buf;
  index.save(buf);
  const std::string bytes = buf.str();
  ASSERT_EQ(bytes.size(), 4u + 12u + 4u + 2u + 4u + 8u);
  EXPECT_EQ(bytes.substr(0, 4), "PFIX");
  EXPECT_EQ(static_cast<unsigned char>(bytes[8]), 2u);    // d, little-endian
  EXPECT_EQ(static_cast<unsigned char>(bytes[12]), 1u);   // count
  EXPECT_EQ(static_cast<unsigned char>(bytes[16]), 2u);   // name length
  EXPECT_EQ(bytes.substr(20, 2), "ab");
  EXPECT_EQ(static_cast<unsigned char>(bytes[22]), 3u);   // n_columns
  EXPECT_EQ(static_cast<unsigned char>(bytes[29]), 0x3f); // 0.5f = 0x3f000000
  const auto loaded = EmbeddingIndex::load(buf);
  EXPECT_EQ(loaded.entries(), index.entries());
  std::stringstream bad("PFIX\x02\0\0\0");
  EXPECT_THROW(EmbeddingIndex::load(bad), FormatError);
}

TEST(EmbeddingIndexTest, DomainTablesRetrieveSameDomain) {
  const auto dir = testutil::data_path("fixtures/domains");
  const auto domains = testutil::read_json(dir + "/domains.json");
  EmbeddingIndex index;
  for (const auto& [name, domain] : domains.items()) {
    index.add(profile_table(csv::read_table(dir + "/" + name + ".csv", ',', name)).embedding);
  }
  ASSERT_EQ(index.size(), 38u);
  std::size_t same = 0;
  for (const auto& e : index.entries()) {
    const auto top = index.nearest(e, 2);
    ASSERT_EQ(top[0].dataset_name, e.dataset_name);
    if (domains.at(top[1].dataset_name) == domains.at(e.dataset_name)) ++same;
  }
  // Measured 38/38 on the committed fixtures.
  EXPECT_EQ(same, 38u);
}
