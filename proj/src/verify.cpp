#include "verify.hpp"

#include "abfamily.hpp"
#include "complexity.hpp"
#include "families.hpp"
#include "fiber.hpp"
#include "graver.hpp"
#include "hnf.hpp"
#include "lawrence.hpp"
#include "witness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

namespace gk {

bool VerifyReport::all_pass() const {
  for (const Claim& c : claims)
    if (!c.pass) return false;
  return true;
}

namespace {

std::string compact(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string compact_rat(const std::vector<Rat>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

// Runs one claim body, timing it and converting exceptions into failures.
// The body returns (pass, computed-rendering).
struct Runner {
  VerifyReport& rep;
  const Caps& caps;

  void claim(const std::string& id, const std::string& detail, const std::string& expected,
             const std::function<std::pair<bool, std::string>()>& body) {
    Claim c;
    c.id = id;
    c.detail = detail;
    c.expected = expected;
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto [pass, computed] = body();
      c.pass = pass;
      c.computed = computed;
    } catch (const gk_error& e) {
      c.pass = false;
      c.computed = std::string("error: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.claims.push_back(std::move(c));
  }
};

// ---- shipped witness tables -------------------------------------------------

struct TableSpec {
  const char* file;
  std::uint64_t checksum;
  int type;
};

constexpr TableSpec k3x3_tables[] = {
    {"witness_3x3_t6.txt", 0x9d15fbcab38a3b26ull, 6},
    {"witness_3x3_t7.txt", 0x6673e71b5fb44656ull, 7},
    {"witness_3x3_t8.txt", 0x32b5df71c3ccf39eull, 8},
    {"witness_3x3_t9.txt", 0x673c9f14d1ff0463ull, 9},
};
constexpr TableSpec k3x4_table = {"witness_3x4_t27.txt", 0x34289242df931d7aull, 27};

// Shared per-table claim block, for both transportation sections.
void table_claims(Runner& run, const std::string& prefix, const IntMatrix& a,
                  const GraverBasis& gb, const WitnessTable& wt, const TableSpec& spec,
                  bool run_face_dp) {
  run.claim(prefix + ".checksum", "transcription checksum of " + std::string(spec.file),
            [&] {
              char buf[24];
              std::snprintf(buf, sizeof buf, "%016llx",
                            static_cast<unsigned long long>(spec.checksum));
              return std::string(buf);
            }(),
            [&]() -> std::pair<bool, std::string> {
              char buf[24];
              std::snprintf(buf, sizeof buf, "%016llx",
                            static_cast<unsigned long long>(wt.checksum));
              return {wt.checksum == spec.checksum, std::string(buf)};
            });

  run.claim(prefix + ".layer-count", "arrangement rows equal the type", std::to_string(spec.type),
            [&]() -> std::pair<bool, std::string> {
              return {int(wt.rows.size()) == spec.type, std::to_string(wt.rows.size())};
            });

  run.claim(prefix + ".layers-in-kernel", "every distinct layer lies in ker(A)", "yes",
            [&]() -> std::pair<bool, std::string> {
              for (const Vec& v : wt.distinct)
                if (!is_zero(a.apply(v))) return {false, "no: " + compact(v)};
              return {true, "yes"};
            });

  ResolvedTable rt = resolve_table(wt, gb);
  run.claim(prefix + ".balance", "rows sum to zero, or admit a unique single-group repair",
            "balanced or uniquely repaired", [&]() -> std::pair<bool, std::string> {
              return {rt.resolved, rt.note};
            });
  if (!rt.resolved) return;
  const Relation& rel = rt.relation;

  run.claim(prefix + ".layers-graver", "every effective layer is a Graver element", "yes",
            [&]() -> std::pair<bool, std::string> {
              std::vector<Vec> sym = gb.symmetric();
              for (const Vec& v : rel.generators)
                if (std::find(sym.begin(), sym.end(), v) == sym.end())
                  return {false, "no: " + compact(v)};
              return {true, "yes"};
            });

  run.claim(prefix + ".layers-edges", "every effective layer passes the edge test", "yes",
            [&]() -> std::pair<bool, std::string> {
              for (const Vec& v : rel.generators)
                if (!ugb_member(a, v, nullptr, run.caps)) return {false, "no: " + compact(v)};
              return {true, "yes"};
            });

  run.claim(prefix + ".layer-certs",
            "the complement-support functional certifies each layer's edge", "yes",
            [&]() -> std::pair<bool, std::string> {
              for (const Vec& v : rel.generators)
                if (!verify_edge_certificate(a, v, complement_support_functional(v), run.caps))
                  return {false, "no: " + compact(v)};
              return {true, "yes"};
            });

  run.claim(prefix + ".relation-minimal", "no proper subrelation sums to zero", "minimal",
            [&]() -> std::pair<bool, std::string> {
              Int cands = 1;
              for (const Int& l : rel.lambda) cands *= l + 1;
              RelationCheck chk = relation_minimal(rel);
              if (!chk.minimal) {
                Vec mu(chk.mu.begin(), chk.mu.end());
                return {false, "violated by mu=" + compact(mu)};
              }
              return {true, "minimal (" + cands.get_str() + " candidates)"};
            });

  run.claim(prefix + ".type", "multiplicities sum to the type", std::to_string(spec.type),
            [&]() -> std::pair<bool, std::string> {
              Int s = 0;
              for (const Int& l : rel.lambda) s += l;
              bool ok = (s == spec.type) && (build_witness(rel).type() == spec.type);
              return {ok, s.get_str()};
            });

  if (!run_face_dp) return;
  run.claim(prefix + ".face-minimizers",
            "the concatenated functional is minimized exactly at the witness pair", "2",
            [&]() -> std::pair<bool, std::string> {
              std::vector<std::vector<Rat>> certs;
              for (const Vec& v : rel.generators) certs.push_back(complement_support_functional(v));
              std::vector<Rat> c = lemma_certificate(rel, certs);
              LayeredVector witness = build_witness(rel);
              Vec x = witness.flat();
              LawrenceLift lift = lawrence_lift(a, int(witness.layers.size()));
              Vec b = lift.matrix.apply(pos_part(x));
              FaceMinimizers fm =
                  lifted_face_minimizers(a, int(witness.layers.size()), b, c, 4, run.caps);
              if (!fm.feasible) return {false, "infeasible"};
              if (fm.min_value != 0)
                return {false, "min " + fm.min_value.get_str() + ", count " + fm.count.get_str()};
              std::vector<Vec> want = {pos_part(x), neg_part(x)};
              std::sort(want.begin(), want.end(), norm_lex_less);
              std::vector<Vec> got = fm.minimizers;
              std::sort(got.begin(), got.end(), norm_lex_less);
              bool ok = fm.count == 2 && got == want;
              return {ok, fm.count.get_str()};
            });
}

// ---- sections ----------------------------------------------------------------

void section_3x3(Runner& run, const VerifyOptions& opt) {
  const IntMatrix a = transportation_matrix(3, 3);
  GraverBasis gb = graver(a, run.caps);

  run.claim("3x3.graver-pairs", "Graver basis size of the 3x3 transportation matrix", "15",
            [&]() -> std::pair<bool, std::string> {
              return {gb.pair_count() == 15, std::to_string(gb.pair_count())};
            });

  run.claim("3x3.unimodular", "the 3x3 transportation matrix is unimodular", "yes",
            [&]() -> std::pair<bool, std::string> {
              bool u = is_unimodular(a);
              return {u, u ? "yes" : "no"};
            });

  run.claim("3x3.graver-edges", "every Graver element passes the edge test", "yes",
            [&]() -> std::pair<bool, std::string> {
              for (const Vec& v : gb.elements)
                if (!ugb_member(a, v, nullptr, run.caps)) return {false, "no: " + compact(v)};
              return {true, "yes"};
            });

  run.claim("3x3.g", "Graver complexity of the 3x3 transportation matrix", "9",
            [&]() -> std::pair<bool, std::string> {
              ComplexityReport rep = graver_complexity(a, run.caps);
              std::ostringstream os;
              os << rep.g_value.get_str() << " (derived pairs " << rep.derived_pairs
                 << ", witness " << compact(rep.witness) << ")";
              return {rep.g_value == 9, os.str()};
            });

  std::string dir = opt.data_dir.empty() ? default_data_dir() : opt.data_dir;
  for (const TableSpec& spec : k3x3_tables) {
    WitnessTable wt = load_witness_file(dir + "/" + spec.file);
    table_claims(run, "3x3.t" + std::to_string(spec.type), a, gb, wt, spec, true);
  }
}

void section_3x4(Runner& run, const VerifyOptions& opt) {
  const IntMatrix a = transportation_matrix(4, 3);
  GraverBasis gb = graver(a, run.caps);

  std::string dir = opt.data_dir.empty() ? default_data_dir() : opt.data_dir;
  WitnessTable wt = load_witness_file(dir + "/" + k3x4_table.file);
  table_claims(run, "3x4.t27", a, gb, wt, k3x4_table, false);

  run.claim("3x4.lower-bound", "the type-27 relation bounds the Groebner complexity", ">=27",
            [&]() -> std::pair<bool, std::string> {
              ResolvedTable rt = resolve_table(wt, gb);
              if (!rt.resolved) return {false, "table unresolved"};
              LowerBoundReport rep =
                  groebner_complexity_lower_bound(a, {rt.relation}, run.caps);
              return {rep.bound == 27, "bound " + rep.bound.get_str()};
            });
}

void section_ab(Runner& run, const VerifyOptions& opt) {
  std::vector<std::pair<long, long>> pairs = opt.ab_pairs;
  if (pairs.empty()) pairs = {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {2, 4}};

  for (auto [pa, pb] : pairs) {
    ABInstance inst = make_ab(pa, pb);
    std::string tag = "ab." + std::to_string(pa) + "-" + std::to_string(pb);
    Int s = inst.a + inst.b;

    run.claim(tag + ".graver-closed-form", "computed Graver basis equals the closed form",
              "equal (" + Int(s + 2).get_str() + " pairs)",
              [&]() -> std::pair<bool, std::string> {
                GraverBasis got = graver(inst.matrix, run.caps);
                GraverBasis want = ab_graver_closed_form(inst);
                bool ok = got.elements == want.elements;
                return {ok, ok ? "equal (" + std::to_string(got.pair_count()) + " pairs)"
                               : "differ"};
              });

    run.claim(tag + ".g", "Graver complexity equals 2(a+b) after normalization",
              Int(2 * s).get_str(), [&]() -> std::pair<bool, std::string> {
                ComplexityReport rep = graver_complexity(inst.matrix, run.caps);
                return {rep.g_value == 2 * s, rep.g_value.get_str()};
              });

    run.claim(tag + ".triple-edges", "u1, u2, u3 pass the edge test", "yes",
              [&]() -> std::pair<bool, std::string> {
                ABTriple t = ab_ugb_triple(inst);
                for (const Vec& u : t.u)
                  if (!ugb_member(inst.normalized, u, nullptr, run.caps))
                    return {false, "no: " + compact(u)};
                return {true, "yes"};
              });

    run.claim(tag + ".triple-certs", "the bundled functionals certify the three edges", "yes",
              [&]() -> std::pair<bool, std::string> {
                ABTriple t = ab_ugb_triple(inst);
                for (std::size_t i = 0; i < t.u.size(); ++i)
                  if (!verify_edge_certificate(inst.normalized, t.u[i], t.cert[i], run.caps))
                    return {false, "no: " + compact_rat(t.cert[i])};
                return {true, "yes"};
              });

    run.claim(tag + ".relation-minimal", "(a+b) u1 + (a+b-1) u2 + u3 = 0 is minimal", "minimal",
              [&]() -> std::pair<bool, std::string> {
                Relation rel = ab_relation(inst);
                if (!relation_sums_to_zero(rel)) return {false, "does not sum to zero"};
                RelationCheck chk = relation_minimal(rel);
                if (!chk.minimal) {
                  Vec mu(chk.mu.begin(), chk.mu.end());
                  return {false, "violated by mu=" + compact(mu)};
                }
                return {true, "minimal"};
              });

    run.claim(tag + ".witness-type", "the relation's witness has type 2(a+b)",
              Int(2 * s).get_str(), [&]() -> std::pair<bool, std::string> {
                LayeredVector w = build_witness(ab_relation(inst));
                return {Int(w.type()) == 2 * s, std::to_string(w.type())};
              });

    run.claim(tag + ".face-chain", "the chain lies in the u1 fiber with values a(a-1-s)", "yes",
              [&]() -> std::pair<bool, std::string> {
                ABTriple t = ab_ugb_triple(inst);
                Vec u1p = pos_part(t.u[0]);
                Vec rhs = inst.normalized.apply(u1p);
                std::vector<Vec> chain = ab_face_chain(inst);
                if (chain.empty() || chain.back() != u1p)
                  return {false, "chain does not end at u1+"};
                for (std::size_t i = 0; i < chain.size(); ++i) {
                  for (const Int& e : chain[i])
                    if (e < 0) return {false, "negative entry: " + compact(chain[i])};
                  if (inst.normalized.apply(chain[i]) != rhs)
                    return {false, "off fiber: " + compact(chain[i])};
                  Rat want(inst.a * (inst.a - 1 - Int(long(i))));
                  if (dot(t.cert[0], chain[i]) != want)
                    return {false, "value mismatch at " + compact(chain[i])};
                }
                return {true, "yes (" + std::to_string(chain.size()) + " points)"};
              });

    run.claim(tag + ".kernel-factorization",
              "the closed-form matrix factors through the shift matrix with equal kernels",
              "yes", [&]() -> std::pair<bool, std::string> {
                ABKernelReport rep = ab_kernel_report(inst);
                if (!rep.factorization_ok) return {false, "factorization differs"};
                if (!rep.kernels_equal) return {false, "kernels differ"};
                return {true, "yes"};
              });
  }
}

void section_ppi(Runner& run, const VerifyOptions& opt) {
  for (int n = 2; n <= opt.ppi_max_n; ++n) {
    std::string tag = "ppi.n" + std::to_string(n);
    PpiBoundReport rep = ppi_verify_bound(n, run.caps);

    run.claim(tag + ".max-norm", "largest 1-norm in the Graver basis of A_n",
              Int(2 * (n - 1)).get_str(), [&]() -> std::pair<bool, std::string> {
                return {rep.norm_matches,
                        rep.max_norm.get_str() + " (" + std::to_string(rep.pairs) + " pairs)"};
              });

    run.claim(tag + ".tight-witness", "e1 - (n-1) e_{n-1} + (n-2) e_n attains the bound", "present",
              [&]() -> std::pair<bool, std::string> {
                return {rep.witness_present, rep.witness_present ? "present" : "absent"};
              });

    run.claim(tag + ".delta-bound", "k + l <= D+ + D- <= n-1 on two-signed gap lists", "holds",
              [&]() -> std::pair<bool, std::string> {
                std::ostringstream os;
                os << (rep.delta_bound_holds ? "holds" : "violated") << " (checked "
                   << rep.delta_checked << ", skipped " << rep.delta_skipped << ")";
                return {rep.delta_bound_holds, os.str()};
              });

    run.claim(tag + ".round-trip", "identity translation inverts and flags primitivity", "yes",
              [&]() -> std::pair<bool, std::string> {
                GraverBasis gb = graver(a_n_matrix(n), run.caps);
                for (const Vec& z : gb.elements) {
                  Vec x = z[n] >= 0 ? z : neg(z);
                  PartitionIdentity id = ppi_from_kernel(x, n);
                  if (!id.primitive) return {false, "non-primitive: " + compact(x)};
                  if (ppi_to_kernel(id, n) != x) return {false, "round trip broke: " + compact(x)};
                }
                return {true, "yes"};
              });
  }

  for (int c = 2; c <= opt.ppi_max_n - 1; ++c) {
    run.claim("ppi.s" + std::to_string(c),
              "the shift matrix S_c shares A_{c+1}'s kernel; max norm 2c",
              "kernel equal, norm " + Int(2 * c).get_str(),
              [&, c]() -> std::pair<bool, std::string> {
                ShiftKernelReport rep = verify_2c(c, run.caps);
                std::string got = std::string(rep.kernels_equal ? "kernel equal" : "kernel differs") +
                                  ", norm " + rep.max_norm.get_str();
                return {rep.kernels_equal && rep.norm_matches, got};
              });
  }
}

void section_complexity(Runner& run, const VerifyOptions& opt) {
  run.claim("complexity.twisted-cubic", "Graver complexity of (1 1 1 1; 0 1 2 3)", "6",
            [&]() -> std::pair<bool, std::string> {
              ComplexityReport rep = graver_complexity(ab_matrix(1, 2), run.caps);
              return {rep.g_value == 6, rep.g_value.get_str()};
            });

  const IntMatrix a33 = transportation_matrix(3, 3);
  ComplexityReport rep33 = graver_complexity(a33, run.caps);
  run.claim("complexity.3x3", "Graver complexity of the 3x3 transportation matrix", "9",
            [&]() -> std::pair<bool, std::string> {
              return {rep33.g_value == 9, rep33.g_value.get_str()};
            });

  run.claim("complexity.3x3.lower-bound",
            "the four shipped relations give types 6, 7, 8, 9 and bound 9", "6,7,8,9 -> 9",
            [&]() -> std::pair<bool, std::string> {
              GraverBasis gb = graver(a33, run.caps);
              std::string dir = opt.data_dir.empty() ? default_data_dir() : opt.data_dir;
              std::vector<Relation> rels;
              for (const TableSpec& spec : k3x3_tables) {
                ResolvedTable rt = resolve_table(load_witness_file(dir + "/" + spec.file), gb);
                if (!rt.resolved) return {false, std::string("unresolved: ") + spec.file};
                rels.push_back(rt.relation);
              }
              LowerBoundReport rep = groebner_complexity_lower_bound(a33, rels, run.caps);
              std::string types;
              for (std::size_t i = 0; i < rep.types.size(); ++i)
                types += (i ? "," : "") + rep.types[i].get_str();
              bool ok = rep.types == std::vector<Int>{6, 7, 8, 9} && rep.bound == 9;
              return {ok, types + " -> " + rep.bound.get_str()};
            });

  run.claim("complexity.3x3.bounds-meet",
            "the relation lower bound meets the Graver complexity", "9 == 9",
            [&]() -> std::pair<bool, std::string> {
              std::string got = "9 == " + rep33.g_value.get_str();
              return {rep33.g_value == 9, got};
            });
}

}  // namespace

VerifyReport verify_claims(const VerifyOptions& opt) {
  VerifyReport rep;
  Runner run{rep, opt.caps};

  auto wants = [&](const char* name) {
    if (opt.sections.empty()) return true;
    return std::find(opt.sections.begin(), opt.sections.end(), name) != opt.sections.end();
  };
  for (const std::string& s : opt.sections)
    if (s != "3x3" && s != "3x4" && s != "ab" && s != "ppi" && s != "complexity")
      fail(errc::invalid_argument, "unknown section: " + s);

  if (wants("3x3")) section_3x3(run, opt);
  if (wants("3x4")) section_3x4(run, opt);
  if (wants("ab")) section_ab(run, opt);
  if (wants("ppi")) section_ppi(run, opt);
  if (wants("complexity")) section_complexity(run, opt);
  return rep;
}

std::string render_claims(const VerifyReport& rep) {
  std::size_t idw = 4, exw = 8;
  for (const Claim& c : rep.claims) {
    idw = std::max(idw, c.id.size());
    exw = std::max(exw, c.expected.size());
  }
  std::ostringstream os;
  std::size_t failures = 0;
  for (const Claim& c : rep.claims) {
    if (!c.pass) ++failures;
    char sec[32];
    std::snprintf(sec, sizeof sec, "%8.2fs", c.seconds);
    os << (c.pass ? "PASS " : "FAIL ") << c.id << std::string(idw - c.id.size() + 2, ' ')
       << "expect " << c.expected << std::string(exw - c.expected.size() + 2, ' ') << "got "
       << c.computed << "  [" << sec << "]  " << c.detail << "\n";
  }
  os << rep.claims.size() << " claims, " << failures << " failure" << (failures == 1 ? "" : "s")
     << "\n";
  return os.str();
}

namespace {

std::string porcelain_escape(const std::string& s) {
  std::string out;
  for (char ch : s) out += (ch == ' ' ? '_' : ch);
  return out;
}

}  // namespace

std::string render_porcelain(const VerifyReport& rep) {
  std::ostringstream os;
  std::size_t failures = 0;
  for (const Claim& c : rep.claims) {
    if (!c.pass) ++failures;
    char sec[32];
    std::snprintf(sec, sizeof sec, "%.3f", c.seconds);
    os << "claim=" << c.id << " pass=" << (c.pass ? 1 : 0)
       << " expected=" << porcelain_escape(c.expected) << " computed="
       << porcelain_escape(c.computed) << " seconds=" << sec << "\n";
  }
  os << "claims=" << rep.claims.size() << " failures=" << failures
     << " all=" << (failures == 0 ? 1 : 0) << "\n";
  return os.str();
}

}  // namespace gk
