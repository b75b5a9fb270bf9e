// graverkit command-line front end.  Thin argv layer over the C API: every
// computation goes through graverkit.h, results go to stdout, summaries and
// diagnostics to stderr.
//
// Exit codes: 0 success, 1 a verification gave a negative answer (an
// edge-test miss, a failed claim), 2 usage or input-format errors and
// operational failures (caps, unsupported inputs).

#include "graverkit.h"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CapsFlags {
  std::uint64_t max_elements = 0;
  std::int64_t max_norm = 0;
  std::uint64_t max_fiber = 0;
  std::uint64_t max_queue = 0;
  int threads = 0;

  gk_caps to_caps() const { return gk_caps{max_elements, max_norm, max_fiber, max_queue, threads}; }
};

void add_caps_flags(CLI::App* cmd, CapsFlags& f) {
  cmd->add_option("--max-elements", f.max_elements, "Cap on stored basis elements");
  cmd->add_option("--max-norm", f.max_norm, "Cap on element 1-norms during completion");
  cmd->add_option("--max-fiber", f.max_fiber, "Cap on fiber points / search states");
  cmd->add_option("--max-queue", f.max_queue, "Cap on pending pair records");
  cmd->add_option("--threads", f.threads, "Parallelism bound (overrides GRAVERKIT_THREADS)");
}

int die(int code) {
  std::cerr << "graverkit: " << gk_error_message() << "\n";
  return 2;
  (void)code;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "graverkit: cannot open " << path << "\n";
    std::exit(2);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct MatrixHandle {
  gk_matrix* m = nullptr;
  ~MatrixHandle() { gk_matrix_free(m); }
};

struct VecsetHandle {
  gk_vecset* s = nullptr;
  ~VecsetHandle() { gk_vecset_free(s); }
};

struct StrHandle {
  char* s = nullptr;
  ~StrHandle() { gk_free_str(s); }
};

int read_matrix(const std::string& path, MatrixHandle& h) {
  return gk_matrix_read_file(path.c_str(), &h.m);
}

void print_vecset_with_summary(const gk_vecset* s, const char* what) {
  StrHandle text, norm;
  if (gk_vecset_to_text(s, &text.s) != GK_OK || gk_vecset_max_norm1(s, &norm.s) != GK_OK)
    std::exit(die(2));
  std::cout << text.s;
  std::cerr << what << ": " << gk_vecset_size(s) << " vectors, max 1-norm " << norm.s << "\n";
}

int env_threads_or_die() {
  const char* s = std::getenv("GRAVERKIT_THREADS");
  if (!s || !*s) return 0;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < 1 || v > 1024) {
    std::cerr << "graverkit: GRAVERKIT_THREADS must be a positive integer\n";
    std::exit(2);
  }
  return int(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graverkit: exact Graver bases, lattice Groebner bases, fiber geometry,\n"
               "higher liftings, and Graver complexity"};
  app.require_subcommand(1);
  const int env_threads = env_threads_or_die();

  // graver -----------------------------------------------------------------
  std::string g_matrix;
  bool g_full = false;
  CapsFlags g_caps;
  CLI::App* c_graver = app.add_subcommand("graver", "Graver basis of an integer matrix");
  c_graver->add_option("matrix", g_matrix, "Matrix file (\"rows cols\" header)")->required();
  c_graver->add_flag("--full", g_full, "Emit the full +- closure instead of representatives");
  add_caps_flags(c_graver, g_caps);

  // groebner ----------------------------------------------------------------
  std::string gb_matrix, gb_cost, gb_perm;
  bool gb_degrevlex = false;
  CapsFlags gb_caps;
  CLI::App* c_groebner =
      app.add_subcommand("groebner", "Reduced Groebner basis of the kernel lattice ideal");
  c_groebner->add_option("matrix", gb_matrix, "Matrix file")->required();
  c_groebner->add_option("--cost", gb_cost, "Rational cost row, a \"1 n\" matrix file");
  c_groebner->add_flag("--degrevlex", gb_degrevlex, "Break ties degrevlex (default lex)");
  c_groebner->add_option("--perm", gb_perm,
                         "Variable priority permutation, e.g. 2,0,1 (most significant first)");
  add_caps_flags(c_groebner, gb_caps);

  // fiber --------------------------------------------------------------------
  std::string f_matrix, f_rhs;
  CapsFlags f_caps;
  CLI::App* c_fiber =
      app.add_subcommand("fiber", "All nonnegative integer solutions of A x = b");
  c_fiber->add_option("matrix", f_matrix, "Matrix file")->required();
  c_fiber->add_option("rhs", f_rhs, "Right-hand side file (\"1 d\" header)")->required();
  add_caps_flags(c_fiber, f_caps);

  // edge-test ------------------------------------------------------------------
  std::string e_matrix, e_vec;
  CapsFlags e_caps;
  CLI::App* c_edge = app.add_subcommand(
      "edge-test", "Decide whether [z+, z-] is an edge of its fiber's convex hull");
  c_edge->add_option("matrix", e_matrix, "Matrix file")->required();
  c_edge->add_option("vector", e_vec, "Kernel vector file (\"1 n\" header)")->required();
  add_caps_flags(c_edge, e_caps);

  // lift ------------------------------------------------------------------------
  std::string l_matrix;
  int l_copies = 0;
  CLI::App* c_lift = app.add_subcommand("lift", "Higher lifting with N copies");
  c_lift->add_option("matrix", l_matrix, "Matrix file")->required();
  c_lift->add_option("copies", l_copies, "Number of copies (N >= 1)")->required();

  // ab -----------------------------------------------------------------------
  std::int64_t ab_a = 0, ab_b = 0;
  CapsFlags ab_caps;
  CLI::App* c_ab =
      app.add_subcommand("ab", "Claim suite for the family (1 1 1 1; 0 a b a+b)");
  c_ab->add_option("a", ab_a, "First parameter (>= 1)")->required();
  c_ab->add_option("b", ab_b, "Second parameter (>= 1)")->required();
  add_caps_flags(c_ab, ab_caps);

  // complexity -----------------------------------------------------------------
  std::string x_matrix;
  CapsFlags x_caps;
  bool x_unbounded = false;
  CLI::App* c_complexity =
      app.add_subcommand("complexity", "Graver complexity g(A) via the two-stage Graver run");
  c_complexity->add_option("matrix", x_matrix, "Matrix file")->required();
  c_complexity->add_flag("--unbounded", x_unbounded,
                         "Lift the default caps (the run may be very long)");
  add_caps_flags(c_complexity, x_caps);

  // ppi -----------------------------------------------------------------------
  int p_n = 0;
  CapsFlags p_caps;
  CLI::App* c_ppi =
      app.add_subcommand("ppi", "Partition-identity report for parts up to n");
  c_ppi->add_option("n", p_n, "Largest part (>= 2)")->required();
  add_caps_flags(c_ppi, p_caps);

  // verify-paper ------------------------------------------------------------------
  std::vector<std::string> v_sections;
  std::string v_ab_pairs, v_data;
  int v_max_n = 0;
  bool v_porcelain = false;
  CapsFlags v_caps;
  CLI::App* c_verify = app.add_subcommand(
      "verify-paper", "Run the bundled claim suite (sections: 3x3, 3x4, ab, ppi, complexity)");
  c_verify->add_option("--section", v_sections, "Section to run (repeatable; default all)");
  c_verify->add_option("--ab-pairs", v_ab_pairs, "Pairs for the ab section, e.g. \"1,2;2,3\"");
  c_verify->add_option("--max-n", v_max_n, "Largest n for the ppi section (default 7)");
  c_verify->add_option("--data", v_data, "Directory holding the witness tables");
  c_verify->add_flag("--porcelain", v_porcelain, "Machine-readable key=value output");
  add_caps_flags(c_verify, v_caps);

  // stress --------------------------------------------------------------------
  std::string s_name, s_data;
  CapsFlags s_caps;
  CLI::App* c_stress = app.add_subcommand(
      "stress", "Informational heavy runs (gb-3x3-9, g-3x4); caps are expected to bite");
  c_stress->add_option("name", s_name, "Scenario name")->required();
  c_stress->add_option("--data", s_data, "Directory holding the witness tables");
  add_caps_flags(c_stress, s_caps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "graverkit: " << e.what() << "\n";
    return 2;
  }

  auto with_env_threads = [&](CapsFlags f) {
    if (f.threads == 0) f.threads = env_threads;
    return f;
  };

  if (c_graver->parsed()) {
    MatrixHandle m;
    if (read_matrix(g_matrix, m) != GK_OK) return die(2);
    gk_caps caps = with_env_threads(g_caps).to_caps();
    VecsetHandle s;
    if (gk_graver(m.m, g_full ? 1 : 0, &caps, &s.s) != GK_OK) return die(2);
    print_vecset_with_summary(s.s, g_full ? "graver (full)" : "graver (representatives)");
    return 0;
  }

  if (c_groebner->parsed()) {
    MatrixHandle m;
    if (read_matrix(gb_matrix, m) != GK_OK) return die(2);
    std::string cost_text;
    if (!gb_cost.empty()) cost_text = slurp(gb_cost);
    std::vector<int> perm;
    if (!gb_perm.empty()) {
      std::istringstream in(gb_perm);
      std::string item;
      while (std::getline(in, item, ',')) {
        try {
          perm.push_back(std::stoi(item));
        } catch (...) {
          std::cerr << "graverkit: --perm wants a comma-separated integer list\n";
          return 2;
        }
      }
    }
    gk_caps caps = with_env_threads(gb_caps).to_caps();
    VecsetHandle s;
    if (gk_groebner(m.m, cost_text.empty() ? nullptr : cost_text.c_str(),
                    gb_degrevlex ? 1 : 0, perm.empty() ? nullptr : perm.data(), &caps,
                    &s.s) != GK_OK)
      return die(2);
    print_vecset_with_summary(s.s, "groebner");
    return 0;
  }

  if (c_fiber->parsed()) {
    MatrixHandle m;
    if (read_matrix(f_matrix, m) != GK_OK) return die(2);
    const std::string rhs = slurp(f_rhs);
    gk_caps caps = with_env_threads(f_caps).to_caps();
    VecsetHandle s;
    if (gk_fiber(m.m, rhs.c_str(), &caps, &s.s) != GK_OK) return die(2);
    print_vecset_with_summary(s.s, "fiber");
    return 0;
  }

  if (c_edge->parsed()) {
    MatrixHandle m;
    if (read_matrix(e_matrix, m) != GK_OK) return die(2);
    const std::string z = slurp(e_vec);
    gk_caps caps = with_env_threads(e_caps).to_caps();
    int is_edge = 0;
    StrHandle report;
    if (gk_edge_test(m.m, z.c_str(), &caps, &is_edge, &report.s) != GK_OK) return die(2);
    std::cout << report.s;
    return is_edge ? 0 : 1;
  }

  if (c_lift->parsed()) {
    MatrixHandle m, lifted;
    if (read_matrix(l_matrix, m) != GK_OK) return die(2);
    if (gk_matrix_lift(m.m, l_copies, &lifted.m) != GK_OK) return die(2);
    StrHandle text;
    if (gk_matrix_to_text(lifted.m, &text.s) != GK_OK) return die(2);
    std::cout << text.s;
    return 0;
  }

  if (c_ab->parsed()) {
    gk_caps caps = with_env_threads(ab_caps).to_caps();
    int all_pass = 0;
    StrHandle text;
    if (gk_report_ab(ab_a, ab_b, &caps, &all_pass, &text.s) != GK_OK) return die(2);
    std::cout << text.s;
    return all_pass ? 0 : 1;
  }

  if (c_complexity->parsed()) {
    MatrixHandle m;
    if (read_matrix(x_matrix, m) != GK_OK) return die(2);
    CapsFlags f = with_env_threads(x_caps);
    if (x_unbounded) {
      if (!f.max_elements) f.max_elements = ~0ull >> 1;
      if (!f.max_norm) f.max_norm = (std::int64_t(1) << 39) - 1;
      if (!f.max_queue) f.max_queue = ~0ull >> 1;
    }
    gk_caps caps = f.to_caps();
    StrHandle text;
    if (gk_report_complexity(m.m, &caps, &text.s) != GK_OK) return die(2);
    std::cout << text.s;
    return 0;
  }

  if (c_ppi->parsed()) {
    gk_caps caps = with_env_threads(p_caps).to_caps();
    StrHandle text;
    if (gk_report_ppi(p_n, &caps, &text.s) != GK_OK) return die(2);
    std::cout << text.s;
    return 0;
  }

  if (c_verify->parsed()) {
    std::string sections;
    for (const std::string& s : v_sections) {
      if (!sections.empty()) sections += ",";
      sections += s;
    }
    gk_caps caps = with_env_threads(v_caps).to_caps();
    int all_pass = 0;
    StrHandle text;
    if (gk_verify_claims(sections.empty() ? nullptr : sections.c_str(),
                         v_ab_pairs.empty() ? nullptr : v_ab_pairs.c_str(), v_max_n,
                         v_data.empty() ? nullptr : v_data.c_str(), &caps,
                         v_porcelain ? 1 : 0, &all_pass, &text.s) != GK_OK)
      return die(2);
    std::cout << text.s;
    return all_pass ? 0 : 1;
  }

  if (c_stress->parsed()) {
    gk_caps caps = with_env_threads(s_caps).to_caps();
    StrHandle text;
    if (gk_stress(s_name.c_str(), s_data.empty() ? nullptr : s_data.c_str(), &caps, &text.s) !=
        GK_OK)
      return die(2);
    std::cout << text.s;
    return 0;
  }

  std::cerr << "graverkit: no subcommand\n";
  return 2;
}
