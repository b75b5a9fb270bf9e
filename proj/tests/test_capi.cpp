// The C interface: status codes, thread-local error text, text round trips,
// and the report entry points.

#include <doctest.h>

#include <graverkit.h>

#include <cstdint>
#include <cstring>
#include <string>

namespace {

struct Str {
  char* s = nullptr;
  ~Str() { gk_free_str(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

struct Mat {
  gk_matrix* m = nullptr;
  ~Mat() { gk_matrix_free(m); }
};

struct Set {
  gk_vecset* s = nullptr;
  ~Set() { gk_vecset_free(s); }
};

Mat twisted_cubic() {
  Mat m;
  const int64_t rows[] = {1, 1, 1, 1, 0, 1, 2, 3};
  REQUIRE(gk_matrix_from_int64(2, 4, rows, &m.m) == GK_OK);
  return m;
}

}  // namespace

TEST_CASE("parse failures set codes and messages") {
  gk_matrix* m = nullptr;
  CHECK(gk_matrix_parse("2 2\n1 2\n3\n", &m) == GK_EPARSE);
  CHECK(m == nullptr);
  CHECK(std::string(gk_error_message()).find("line") != std::string::npos);

  CHECK(gk_matrix_read_file("definitely_missing.mat", &m) != GK_OK);
  CHECK(std::strlen(gk_error_message()) > 0);
}

TEST_CASE("matrix round trip through text") {
  Mat m = twisted_cubic();
  CHECK(gk_matrix_rows(m.m) == 2);
  CHECK(gk_matrix_cols(m.m) == 4);
  Str text;
  REQUIRE(gk_matrix_to_text(m.m, &text.s) == GK_OK);
  Mat back;
  REQUIRE(gk_matrix_parse(text.s, &back.m) == GK_OK);
  Str again;
  REQUIRE(gk_matrix_to_text(back.m, &again.s) == GK_OK);
  CHECK(text.str() == again.str());
  CHECK(text.str().rfind("2 4", 0) == 0);
}

TEST_CASE("graver through the C surface") {
  Mat m = twisted_cubic();
  Set reps, full;
  REQUIRE(gk_graver(m.m, 0, nullptr, &reps.s) == GK_OK);
  REQUIRE(gk_graver(m.m, 1, nullptr, &full.s) == GK_OK);
  CHECK(gk_vecset_size(reps.s) == 5);
  CHECK(gk_vecset_size(full.s) == 10);
  Str norm;
  REQUIRE(gk_vecset_max_norm1(reps.s, &norm.s) == GK_OK);
  CHECK(norm.str() == "6");
  Str text;
  REQUIRE(gk_vecset_to_text(reps.s, &text.s) == GK_OK);
  CHECK(text.str().rfind("5 4", 0) == 0);  // vector-set header
}

TEST_CASE("caps propagate as GK_ECAP") {
  Mat m;
  REQUIRE(gk_matrix_parse("6 9\n"
                          "1 1 1 0 0 0 0 0 0\n"
                          "0 0 0 1 1 1 0 0 0\n"
                          "0 0 0 0 0 0 1 1 1\n"
                          "1 0 0 1 0 0 1 0 0\n"
                          "0 1 0 0 1 0 0 1 0\n"
                          "0 0 1 0 0 1 0 0 1\n",
                          &m.m) == GK_OK);
  gk_caps caps = {2, 0, 0, 0, 0};  // max two stored elements
  Set s;
  CHECK(gk_graver(m.m, 0, &caps, &s.s) == GK_ECAP);
  CHECK(s.s == nullptr);
}

TEST_CASE("groebner and normal form") {
  Mat m = twisted_cubic();
  Set gb;
  REQUIRE(gk_groebner(m.m, nullptr, 0, nullptr, nullptr, &gb.s) == GK_OK);
  CHECK(gk_vecset_size(gb.s) >= 2);

  Str nf;
  REQUIRE(gk_normal_form(m.m, nullptr, 0, nullptr, "1 4\n0 1 2 0\n", nullptr, &nf.s) == GK_OK);
  // some nonnegative point of the same fiber, as a "1 4" vector
  CHECK(nf.str().rfind("1 4", 0) == 0);

  // a weighted order via cost text
  Set gb2;
  REQUIRE(gk_groebner(m.m, "1 4\n1 1/2 0 3\n", 1, nullptr, nullptr, &gb2.s) == GK_OK);
  CHECK(gk_vecset_size(gb2.s) >= 2);

  // bad cost shape
  Set gb3;
  CHECK(gk_groebner(m.m, "1 3\n1 2 3\n", 0, nullptr, nullptr, &gb3.s) == GK_EINVAL);

  // permutations must have the right content
  const int bad_perm[] = {0, 0, 1, 2};
  CHECK(gk_groebner(m.m, nullptr, 0, bad_perm, nullptr, &gb3.s) == GK_EINVAL);
}

TEST_CASE("fiber and edge test") {
  Mat m;
  REQUIRE(gk_matrix_parse("1 3\n1 1 1\n", &m.m) == GK_OK);
  Set f;
  REQUIRE(gk_fiber(m.m, "1 1\n2\n", nullptr, &f.s) == GK_OK);
  CHECK(gk_vecset_size(f.s) == 6);

  Mat tc = twisted_cubic();
  int is_edge = -1;
  Str report;
  REQUIRE(gk_edge_test(tc.m, "1 4\n-2 3 0 -1\n", nullptr, &is_edge, &report.s) == GK_OK);
  CHECK(is_edge == 1);
  CHECK(report.str().find("edge") != std::string::npos);

  is_edge = -1;
  Str report2;
  REQUIRE(gk_edge_test(tc.m, "1 4\n2 -2 -2 2\n", nullptr, &is_edge, &report2.s) == GK_OK);
  CHECK(is_edge == 0);

  // a non-kernel vector is an input error
  CHECK(gk_edge_test(tc.m, "1 4\n1 1 1 1\n", nullptr, &is_edge, nullptr) == GK_EINVAL);
}

TEST_CASE("lift and unimodularity") {
  Mat tc = twisted_cubic();
  Mat lifted;
  REQUIRE(gk_matrix_lift(tc.m, 3, &lifted.m) == GK_OK);
  CHECK(gk_matrix_rows(lifted.m) == 4 + 2 * 3);
  CHECK(gk_matrix_cols(lifted.m) == 12);

  int uni = -1;
  REQUIRE(gk_matrix_is_unimodular(tc.m, &uni) == GK_OK);
  CHECK(uni == 0);

  Mat t33;
  REQUIRE(gk_matrix_parse("6 9\n"
                          "1 1 1 0 0 0 0 0 0\n"
                          "0 0 0 1 1 1 0 0 0\n"
                          "0 0 0 0 0 0 1 1 1\n"
                          "1 0 0 1 0 0 1 0 0\n"
                          "0 1 0 0 1 0 0 1 0\n"
                          "0 0 1 0 0 1 0 0 1\n",
                          &t33.m) == GK_OK);
  REQUIRE(gk_matrix_is_unimodular(t33.m, &uni) == GK_OK);
  CHECK(uni == 1);
}

TEST_CASE("family report") {
  int all_pass = -1;
  Str out;
  REQUIRE(gk_report_ab(1, 2, nullptr, &all_pass, &out.s) == GK_OK);
  CHECK(all_pass == 1);
  CHECK(out.str().find("PASS") != std::string::npos);
  CHECK(out.str().find("FAIL") == std::string::npos);

  Str bad;
  CHECK(gk_report_ab(0, 2, nullptr, &all_pass, &bad.s) == GK_EINVAL);
}

TEST_CASE("claim suite, porcelain") {
  int all_pass = -1;
  Str out;
  REQUIRE(gk_verify_claims("ab", "1,2", 0, nullptr, nullptr, 1, &all_pass, &out.s) == GK_OK);
  CHECK(all_pass == 1);
  CHECK(out.str().find("claim=ab.1-2.g pass=1") != std::string::npos);
  CHECK(out.str().find("all=1") != std::string::npos);

  Str bad;
  CHECK(gk_verify_claims("nonsense", nullptr, 0, nullptr, nullptr, 0, &all_pass, &bad.s) ==
        GK_EINVAL);
  CHECK(gk_verify_claims("ab", "1;2", 0, nullptr, nullptr, 0, &all_pass, &bad.s) == GK_EINVAL);
}

TEST_CASE("complexity and ppi reports") {
  Mat tc = twisted_cubic();
  Str out;
  REQUIRE(gk_report_complexity(tc.m, nullptr, &out.s) == GK_OK);
  CHECK(out.str().find("6") != std::string::npos);

  Str ppi;
  REQUIRE(gk_report_ppi(3, nullptr, &ppi.s) == GK_OK);
  CHECK(ppi.str().find("=") != std::string::npos);
  Str bad;
  CHECK(gk_report_ppi(1, nullptr, &bad.s) == GK_EINVAL);
}

TEST_CASE("stress scenario names are validated") {
  Str out;
  CHECK(gk_stress("no-such-scenario", nullptr, nullptr, &out.s) == GK_EINVAL);
  CHECK(std::string(gk_error_message()).find("gb-3x3-9") != std::string::npos);
}
