#include "graverkit.h"

#include "abfamily.hpp"
#include "complexity.hpp"
#include "families.hpp"
#include "fiber.hpp"
#include "graver.hpp"
#include "groebner.hpp"
#include "hnf.hpp"
#include "lawrence.hpp"
#include "matrix.hpp"
#include "order.hpp"
#include "util.hpp"
#include "verify.hpp"
#include "witness.hpp"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <vector>

struct gk_matrix {
  gk::IntMatrix m;
};

struct gk_vecset {
  std::vector<gk::Vec> v;
  int width = 0;
};

namespace {

thread_local std::string g_error;

int code_of(gk::errc c) {
  switch (c) {
    case gk::errc::invalid_argument: return GK_EINVAL;
    case gk::errc::parse_error: return GK_EPARSE;
    case gk::errc::cap_exceeded: return GK_ECAP;
    case gk::errc::unsupported: return GK_EUNSUPPORTED;
    case gk::errc::internal: return GK_EINTERNAL;
  }
  return GK_EINTERNAL;
}

template <typename F>
int guard(F&& f) {
  try {
    f();
    return GK_OK;
  } catch (const gk::gk_error& e) {
    g_error = e.what();
    return code_of(e.code());
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return GK_EINTERNAL;
  } catch (const std::exception& e) {
    g_error = e.what();
    return GK_EINTERNAL;
  }
}

gk::Caps caps_of(const gk_caps* c) {
  gk::Caps out;
  if (!c) return out;
  if (c->max_elements) out.max_elements = c->max_elements;
  if (c->max_norm) out.max_norm = gk::Int(static_cast<long>(c->max_norm));
  if (c->max_fiber) out.max_fiber = c->max_fiber;
  if (c->max_queue) out.max_queue = c->max_queue;
  if (c->threads) out.threads = c->threads;
  return out;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(bool cond, const char* what) {
  if (!cond) gk::fail(gk::errc::invalid_argument, what);
}

gk::Vec parse_vector(const char* text, const char* what) {
  require(text != nullptr, what);
  gk::IntMatrix m = gk::IntMatrix::parse(text, what);
  if (m.rows() != 1)
    gk::fail(gk::errc::parse_error, std::string(what) + ": want a single-row matrix (header \"1 n\")");
  return m.row(0);
}

// a cost row is "1 n" followed by n integers or fractions such as "1/2"
std::vector<gk::Rat> parse_rat_row(const char* text, const char* what) {
  require(text != nullptr, what);
  std::istringstream in(text);
  auto bad = [&](const std::string& msg) {
    gk::fail(gk::errc::parse_error, std::string(what) + ": " + msg);
  };
  long rows = 0, n = 0;
  if (!(in >> rows >> n) || rows != 1 || n < 0 || n > 1'000'000)
    bad("want a single-row matrix (header \"1 n\")");
  std::vector<gk::Rat> out;
  out.reserve(std::size_t(n));
  std::string tok;
  for (long k = 0; k < n; ++k) {
    if (!(in >> tok)) bad("unexpected end of input, expected entry");
    auto ok_int = [](const std::string& s) {
      std::size_t i = (s.size() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
      return true;
    };
    std::size_t slash = tok.find('/');
    std::string num = tok.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : tok.substr(slash + 1);
    if (!ok_int(num) || !ok_int(den)) bad("bad entry \"" + tok + "\"");
    gk::Int d(den);
    if (d == 0) bad("zero denominator in \"" + tok + "\"");
    gk::Rat r(gk::Int(num), d);
    r.canonicalize();
    out.push_back(r);
  }
  if (in >> tok) bad("trailing content after entries");
  return out;
}

gk::TermOrder build_order(int n, const char* cost_text, int degrevlex_tie, const int* perm) {
  gk::TermOrder ord;
  ord.n = n;
  ord.tie = degrevlex_tie ? gk::TieBreak::degrevlex : gk::TieBreak::lex;
  if (cost_text) {
    ord.cost = parse_rat_row(cost_text, "cost row");
    if (int(ord.cost.size()) != n)
      gk::fail(gk::errc::invalid_argument, "cost row length mismatch");
  }
  if (perm) ord.perm.assign(perm, perm + n);
  ord.validate();
  return ord;
}

std::string rat_str(const gk::Rat& r) { return r.get_str(); }

std::string vec_str(const gk::Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace

extern "C" {

const char* gk_error_message(void) { return g_error.c_str(); }

void gk_free_str(char* s) { std::free(s); }

int gk_matrix_parse(const char* text, gk_matrix** out) {
  return guard([&] {
    require(text && out, "gk_matrix_parse: null argument");
    *out = new gk_matrix{gk::IntMatrix::parse(text)};
  });
}

int gk_matrix_read_file(const char* path, gk_matrix** out) {
  return guard([&] {
    require(path && out, "gk_matrix_read_file: null argument");
    *out = new gk_matrix{gk::IntMatrix::read_file(path)};
  });
}

int gk_matrix_from_int64(int rows, int cols, const int64_t* row_major, gk_matrix** out) {
  return guard([&] {
    require(row_major && out, "gk_matrix_from_int64: null argument");
    require(rows >= 0 && cols >= 0, "gk_matrix_from_int64: negative dimension");
    gk::IntMatrix m{rows, cols};
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        m.at(i, j) = gk::Int(static_cast<long>(row_major[std::size_t(i) * cols + j]));
    *out = new gk_matrix{std::move(m)};
  });
}

int gk_matrix_rows(const gk_matrix* m) { return m ? m->m.rows() : -1; }
int gk_matrix_cols(const gk_matrix* m) { return m ? m->m.cols() : -1; }

int gk_matrix_to_text(const gk_matrix* m, char** out) {
  return guard([&] {
    require(m && out, "gk_matrix_to_text: null argument");
    *out = dup_string(m->m.to_text());
  });
}

int gk_matrix_lift(const gk_matrix* m, int copies, gk_matrix** out) {
  return guard([&] {
    require(m && out, "gk_matrix_lift: null argument");
    *out = new gk_matrix{gk::lawrence_lift(m->m, copies).matrix};
  });
}

int gk_matrix_is_unimodular(const gk_matrix* m, int* out) {
  return guard([&] {
    require(m && out, "gk_matrix_is_unimodular: null argument");
    *out = gk::is_unimodular(m->m) ? 1 : 0;
  });
}

void gk_matrix_free(gk_matrix* m) { delete m; }

uint64_t gk_vecset_size(const gk_vecset* s) { return s ? s->v.size() : 0; }

int gk_vecset_to_text(const gk_vecset* s, char** out) {
  return guard([&] {
    require(s && out, "gk_vecset_to_text: null argument");
    *out = dup_string(gk::IntMatrix::from_rows(s->v, s->width).to_text());
  });
}

int gk_vecset_max_norm1(const gk_vecset* s, char** out) {
  return guard([&] {
    require(s && out, "gk_vecset_max_norm1: null argument");
    gk::Int best = 0;
    for (const gk::Vec& v : s->v) best = std::max(best, gk::norm1(v));
    *out = dup_string(best.get_str());
  });
}

void gk_vecset_free(gk_vecset* s) { delete s; }

int gk_graver(const gk_matrix* m, int full_symmetric, const gk_caps* caps, gk_vecset** out) {
  return guard([&] {
    require(m && out, "gk_graver: null argument");
    gk::GraverBasis gb = gk::graver(m->m, caps_of(caps));
    auto* s = new gk_vecset;
    s->width = m->m.cols();
    s->v = full_symmetric ? gb.symmetric() : std::move(gb.elements);
    *out = s;
  });
}

int gk_groebner(const gk_matrix* m, const char* cost_text, int degrevlex_tie, const int* perm,
                const gk_caps* caps, gk_vecset** out) {
  return guard([&] {
    require(m && out, "gk_groebner: null argument");
    gk::TermOrder ord = build_order(m->m.cols(), cost_text, degrevlex_tie, perm);
    gk::GroebnerBasis gb = gk::groebner(m->m, ord, caps_of(caps));
    auto* s = new gk_vecset;
    s->width = m->m.cols();
    s->v = std::move(gb.elements);
    *out = s;
  });
}

int gk_fiber(const gk_matrix* m, const char* rhs_text, const gk_caps* caps, gk_vecset** out) {
  return guard([&] {
    require(m && out, "gk_fiber: null argument");
    gk::Vec rhs = parse_vector(rhs_text, "right-hand side");
    if (int(rhs.size()) != m->m.rows())
      gk::fail(gk::errc::invalid_argument, "right-hand side length mismatch");
    auto* s = new gk_vecset;
    s->width = m->m.cols();
    s->v = gk::fiber_enumerate(m->m, rhs, caps_of(caps));
    *out = s;
  });
}

int gk_normal_form(const gk_matrix* m, const char* cost_text, int degrevlex_tie, const int* perm,
                   const char* point_text, const gk_caps* caps, char** out) {
  return guard([&] {
    require(m && out, "gk_normal_form: null argument");
    gk::Vec x = parse_vector(point_text, "point");
    if (int(x.size()) != m->m.cols())
      gk::fail(gk::errc::invalid_argument, "point length mismatch");
    for (const gk::Int& e : x)
      if (e < 0) gk::fail(gk::errc::invalid_argument, "point must be nonnegative");
    gk::TermOrder ord = build_order(m->m.cols(), cost_text, degrevlex_tie, perm);
    gk::GroebnerBasis gb = gk::groebner(m->m, ord, caps_of(caps));
    *out = dup_string(gk::vector_to_text(gk::normal_form(gb, x)));
  });
}

int gk_edge_test(const gk_matrix* m, const char* z_text, const gk_caps* caps, int* is_edge,
                 char** report) {
  return guard([&] {
    require(m && is_edge, "gk_edge_test: null argument");
    gk::Vec z = parse_vector(z_text, "kernel vector");
    gk::EdgeDecision dec = gk::edge_test(m->m, z, caps_of(caps));
    *is_edge = dec.is_edge ? 1 : 0;
    if (!report) return;
    std::ostringstream os;
    os << "edge: " << (dec.is_edge ? "yes" : "no") << "\n";
    os << "fiber size: " << dec.fiber_size << "\n";
    if (dec.is_edge) {
      os << "functional: (";
      for (std::size_t i = 0; i < dec.certificate.functional.size(); ++i)
        os << (i ? "," : "") << rat_str(dec.certificate.functional[i]);
      os << ")\nvalue: " << rat_str(dec.certificate.value) << "\n";
      os << "tight: " << vec_str(dec.certificate.tight[0]) << " "
         << vec_str(dec.certificate.tight[1]) << "\n";
    }
    *report = dup_string(os.str());
  });
}

int gk_report_ab(int64_t a, int64_t b, const gk_caps* caps, int* all_pass, char** out) {
  return guard([&] {
    require(out != nullptr, "gk_report_ab: null argument");
    gk::VerifyOptions opt;
    opt.sections = {"ab"};
    opt.ab_pairs = {{static_cast<long>(a), static_cast<long>(b)}};
    opt.caps = caps_of(caps);
    gk::VerifyReport rep = gk::verify_claims(opt);
    if (all_pass) *all_pass = rep.all_pass() ? 1 : 0;
    *out = dup_string(gk::render_claims(rep));
  });
}

int gk_report_complexity(const gk_matrix* m, const gk_caps* caps, char** out) {
  return guard([&] {
    require(m && out, "gk_report_complexity: null argument");
    gk::ComplexityReport rep = gk::graver_complexity(m->m, caps_of(caps));
    std::ostringstream os;
    os << "matrix: " << rep.matrix.rows() << " x " << rep.matrix.cols() << "\n";
    os << "graver pairs: " << rep.graver_pairs << "\n";
    os << "derived matrix: " << rep.derived.rows() << " x " << rep.derived.cols() << "\n";
    os << "derived pairs: " << rep.derived_pairs << "\n";
    os << "g: " << rep.g_value.get_str() << "\n";
    if (!rep.witness.empty()) os << "witness: " << vec_str(rep.witness) << "\n";
    *out = dup_string(os.str());
  });
}

int gk_report_ppi(int n, const gk_caps* caps, char** out) {
  return guard([&] {
    require(out != nullptr, "gk_report_ppi: null argument");
    gk::PpiBoundReport rep = gk::ppi_verify_bound(n, caps_of(caps));
    std::ostringstream os;
    os << "n: " << rep.n << "\n";
    os << "pairs: " << rep.pairs << "\n";
    os << "max norm: " << rep.max_norm.get_str() << " (expect " << 2 * (n - 1) << ": "
       << (rep.norm_matches ? "match" : "MISMATCH") << ")\n";
    os << "tight witness: " << (rep.witness_present ? "present" : "absent") << "\n";
    os << "gap bound: " << (rep.delta_bound_holds ? "holds" : "VIOLATED") << " (checked "
       << rep.delta_checked << ", skipped " << rep.delta_skipped << ")\n";
    os << "identities:\n";
    for (const gk::PartitionIdentity& id : rep.identities) {
      os << "  ";
      for (std::size_t i = 0; i < id.a_parts.size(); ++i)
        os << (i ? "+" : "") << id.a_parts[i].get_str();
      if (id.ones > 0) os << (id.a_parts.empty() ? "" : "+") << "1*" << id.ones.get_str();
      os << " = ";
      for (std::size_t i = 0; i < id.b_parts.size(); ++i)
        os << (i ? "+" : "") << id.b_parts[i].get_str();
      os << (id.primitive ? "" : "  [not primitive]") << "\n";
    }
    *out = dup_string(os.str());
  });
}

int gk_verify_claims(const char* sections_csv, const char* ab_pairs, int ppi_max_n,
                     const char* data_dir, const gk_caps* caps, int porcelain, int* all_pass,
                     char** out) {
  return guard([&] {
    require(out != nullptr, "gk_verify_claims: null argument");
    gk::VerifyOptions opt;
    if (sections_csv && *sections_csv) {
      std::string s = sections_csv, item;
      std::istringstream in(s);
      while (std::getline(in, item, ','))
        if (!item.empty()) opt.sections.push_back(item);
    }
    if (ab_pairs && *ab_pairs) {
      std::string s = ab_pairs, item;
      std::istringstream in(s);
      while (std::getline(in, item, ';')) {
        if (item.empty()) continue;
        long a = 0, b = 0;
        char comma = 0;
        std::istringstream pin(item);
        if (!(pin >> a >> comma >> b) || comma != ',' || !(pin >> std::ws).eof())
          gk::fail(gk::errc::invalid_argument, "ab pairs: want \"a,b\" items separated by ';'");
        opt.ab_pairs.emplace_back(a, b);
      }
    }
    if (ppi_max_n) {
      if (ppi_max_n < 2) gk::fail(gk::errc::invalid_argument, "ppi: max n must be >= 2");
      opt.ppi_max_n = ppi_max_n;
    }
    if (data_dir && *data_dir) opt.data_dir = data_dir;
    opt.caps = caps_of(caps);
    gk::VerifyReport rep = gk::verify_claims(opt);
    if (all_pass) *all_pass = rep.all_pass() ? 1 : 0;
    *out = dup_string(porcelain ? gk::render_porcelain(rep) : gk::render_claims(rep));
  });
}

int gk_stress(const char* name, const char* data_dir, const gk_caps* caps, char** out) {
  return guard([&] {
    require(name && out, "gk_stress: null argument");
    gk::Caps c = caps_of(caps);
    // Informational runs default to tighter caps so they finish in a
    // sitting; explicit caps override.
    if (!caps || !caps->max_elements) c.max_elements = 200'000;
    if (!caps || !caps->max_queue) c.max_queue = 50'000'000;

    std::ostringstream os;
    const std::string which = name;
    if (which == "gb-3x3-9") {
      const gk::IntMatrix a = gk::transportation_matrix(3, 3);
      std::string dir = (data_dir && *data_dir) ? data_dir : gk::default_data_dir();
      gk::WitnessTable wt = gk::load_witness_file(dir + "/witness_3x3_t9.txt");
      gk::Relation rel = wt.relation();
      std::vector<std::vector<gk::Rat>> certs;
      for (const gk::Vec& v : rel.generators) {
        std::vector<gk::Rat> ci(v.size(), gk::Rat(0));
        for (std::size_t i = 0; i < v.size(); ++i)
          if (v[i] == 0) ci[i] = 1;
        certs.push_back(std::move(ci));
      }
      gk::TermOrder ord;
      ord.n = 81;
      ord.cost = gk::lemma_certificate(rel, certs);
      ord.tie = gk::TieBreak::degrevlex;
      os << "scenario: reduced Groebner basis of the 9-fold lifting of the 3x3\n"
            "transportation matrix under the type-9 witness functional (degrevlex ties).\n"
            "reference element count: 218785\n";
      try {
        gk::GroebnerBasis gb =
            gk::groebner(gk::lawrence_lift(a, 9).matrix, ord, c);
        os << "outcome: complete, " << gb.elements.size() << " elements, max 1-norm "
           << gb.max_norm1().get_str() << "\n";
      } catch (const gk::gk_error& e) {
        if (e.code() != gk::errc::cap_exceeded) throw;
        os << "outcome: cap exceeded (" << e.what() << ")\n";
      }
    } else if (which == "g-3x4") {
      const gk::IntMatrix a = gk::transportation_matrix(4, 3);
      os << "scenario: Graver complexity of the 3x4 transportation matrix\n"
            "(second-stage basis is far beyond desk scale; expected to hit a cap).\n";
      gk::GraverBasis g1 = gk::graver(a, c);
      os << "first stage: " << g1.pair_count() << " pairs, max 1-norm "
         << g1.max_norm1().get_str() << "\n";
      try {
        gk::GraverBasis g2 =
            gk::graver(gk::IntMatrix::from_cols(g1.elements, a.cols()), c);
        os << "second stage: " << g2.pair_count() << " pairs, max 1-norm "
           << g2.max_norm1().get_str() << "\n";
        os << "outcome: complete, g = " << g2.max_norm1().get_str() << "\n";
      } catch (const gk::gk_error& e) {
        if (e.code() != gk::errc::cap_exceeded) throw;
        os << "outcome: cap exceeded (" << e.what() << ")\n";
      }
    } else {
      gk::fail(gk::errc::invalid_argument,
               "unknown stress scenario \"" + which + "\" (have: gb-3x3-9, g-3x4)");
    }
    *out = dup_string(os.str());
  });
}

}  // extern "C"
