// Shipped witness tables: transcription checksums, grouping, kernel
// membership, balance, and the single-group repair search.

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <numeric>

#include "families.hpp"
#include "graver.hpp"
#include "witness.hpp"

using namespace gk;

namespace {

std::string data_path(const char* file) { return default_data_dir() + std::string("/") + file; }

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path = "gk_test_table_" + std::to_string(counter++) + ".txt";
    std::ofstream out(path, std::ios::binary);
    out << text;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("table inventory") {
  struct Row {
    const char* file;
    int rows;
    int width;
    std::size_t distinct;
  };
  const Row expect[] = {
      {"witness_3x3_t6.txt", 6, 9, 5},   {"witness_3x3_t7.txt", 7, 9, 4},
      {"witness_3x3_t8.txt", 8, 9, 5},   {"witness_3x3_t9.txt", 9, 9, 5},
      {"witness_3x4_t27.txt", 27, 12, 7},
  };
  for (const Row& r : expect) {
    CAPTURE(r.file);
    WitnessTable wt = load_witness_file(data_path(r.file));
    CHECK(wt.width == r.width);
    CHECK(wt.rows.size() == std::size_t(r.rows));
    CHECK(wt.distinct.size() == r.distinct);
    Int total = std::accumulate(wt.mults.begin(), wt.mults.end(), Int(0));
    CHECK(total == r.rows);
    CHECK(wt.checksum != 0);
    // name is the file stem
    CHECK(wt.name + ".txt" == std::string(r.file));
  }
}

TEST_CASE("layers live in the advertised kernels") {
  const IntMatrix a33 = transportation_matrix(3, 3);
  for (const char* f :
       {"witness_3x3_t6.txt", "witness_3x3_t7.txt", "witness_3x3_t8.txt", "witness_3x3_t9.txt"}) {
    CAPTURE(f);
    WitnessTable wt = load_witness_file(data_path(f));
    for (const Vec& v : wt.distinct) CHECK(is_zero(a33.apply(v)));
  }
  const IntMatrix a34 = transportation_matrix(4, 3);
  WitnessTable wt = load_witness_file(data_path("witness_3x4_t27.txt"));
  for (const Vec& v : wt.distinct) CHECK(is_zero(a34.apply(v)));
}

TEST_CASE("balance: three tables balance, one does not") {
  auto row_sum = [](const WitnessTable& wt) {
    Vec total(wt.width, Int(0));
    for (const Vec& r : wt.rows)
      for (int j = 0; j < wt.width; ++j) total[j] += r[j];
    return total;
  };
  CHECK(is_zero(row_sum(load_witness_file(data_path("witness_3x3_t6.txt")))));
  CHECK(is_zero(row_sum(load_witness_file(data_path("witness_3x3_t8.txt")))));
  CHECK(is_zero(row_sum(load_witness_file(data_path("witness_3x3_t9.txt")))));
  CHECK(is_zero(row_sum(load_witness_file(data_path("witness_3x4_t27.txt")))));
  Vec t7 = row_sum(load_witness_file(data_path("witness_3x3_t7.txt")));
  CHECK_FALSE(is_zero(t7));
}

TEST_CASE("the unbalanced table admits exactly one repair") {
  const IntMatrix a33 = transportation_matrix(3, 3);
  GraverBasis gb = graver(a33);
  WitnessTable wt = load_witness_file(data_path("witness_3x3_t7.txt"));
  ResolvedTable rt = resolve_table(wt, gb);
  CHECK_FALSE(rt.balanced_as_written);
  REQUIRE(rt.resolved);
  CHECK(rt.note.find("unique repair") != std::string::npos);

  // the repaired relation balances, is minimal, and keeps type 7
  CHECK(relation_sums_to_zero(rt.relation));
  CHECK(relation_minimal(rt.relation).minimal);
  Int type = std::accumulate(rt.relation.lambda.begin(), rt.relation.lambda.end(), Int(0));
  CHECK(type == 7);
  // the replacement row enters with multiplicity three
  CHECK(rt.relation.lambda.back() == 3);
  CHECK(rt.relation.generators.back() ==
        Vec{Int(-1), Int(0), Int(1), Int(0), Int(0), Int(0), Int(1), Int(0), Int(-1)});
}

TEST_CASE("balanced tables resolve to themselves") {
  const IntMatrix a33 = transportation_matrix(3, 3);
  GraverBasis gb = graver(a33);
  WitnessTable wt = load_witness_file(data_path("witness_3x3_t9.txt"));
  ResolvedTable rt = resolve_table(wt, gb);
  CHECK(rt.balanced_as_written);
  REQUIRE(rt.resolved);
  CHECK(rt.relation.generators == wt.distinct);
  CHECK(rt.relation.lambda == wt.mults);
}

TEST_CASE("checksums pin the raw bytes") {
  WitnessTable wt = load_witness_file(data_path("witness_3x3_t6.txt"));
  // recompute independently from the file contents
  std::ifstream in(data_path("witness_3x3_t6.txt"), std::ios::binary);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(wt.checksum == fnv1a64(text.data(), text.size()));

  // an edited byte changes the checksum
  std::string tweaked = text;
  tweaked[tweaked.find('1')] = '2';
  CHECK(fnv1a64(tweaked.data(), tweaked.size()) != wt.checksum);
}

TEST_CASE("grouping is by adjacency") {
  TempFile f("layers 4 width 2\n4 2\n1 -1\n1 -1\n-1 1\n1 -1\n");
  WitnessTable wt = load_witness_file(f.path);
  REQUIRE(wt.distinct.size() == 3);  // the final (1,-1) is its own group
  CHECK(wt.mults == std::vector<Int>{2, 1, 1});
  CHECK(wt.distinct[0] == wt.distinct[2]);
}

TEST_CASE("malformed tables are rejected with positions") {
  CHECK_THROWS_AS(load_witness_file("no_such_file.txt"), gk_error);

  TempFile bad_sidecar("rows 2 cols 2\n2 2\n1 0\n0 1\n");
  CHECK_THROWS_AS(load_witness_file(bad_sidecar.path), gk_error);

  TempFile mismatch("layers 3 width 2\n2 2\n1 0\n0 1\n");
  CHECK_THROWS_AS(load_witness_file(mismatch.path), gk_error);

  TempFile bad_entry("layers 1 width 2\n1 2\n1 x\n");
  try {
    load_witness_file(bad_entry.path);
    FAIL("expected parse error");
  } catch (const gk_error& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
}
