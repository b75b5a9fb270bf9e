#include "witness.hpp"

#include "util.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gk {

Relation WitnessTable::relation() const {
  Relation rel;
  rel.generators = distinct;
  rel.lambda = mults;
  return rel;
}

LayeredVector WitnessTable::layered() const {
  LayeredVector lv;
  lv.width = width;
  lv.layers = rows;
  return lv;
}

WitnessTable load_witness_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "witness table: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  WitnessTable wt;
  wt.checksum = fnv1a64(text.data(), text.size());
  auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  wt.name = dot == std::string::npos ? base : base.substr(0, dot);

  auto eol = text.find('\n');
  if (eol == std::string::npos) fail(errc::parse_error, "witness table: missing sidecar line in " + path);
  std::istringstream head(text.substr(0, eol));
  std::string kw_layers, kw_width;
  long n_layers = 0, width = 0;
  if (!(head >> kw_layers >> n_layers >> kw_width >> width) || kw_layers != "layers" ||
      kw_width != "width" || n_layers < 1 || width < 1)
    fail(errc::parse_error, "witness table: bad sidecar line in " + path +
                                " (want \"layers N width n\")");

  IntMatrix m = IntMatrix::parse(text.substr(eol + 1), path);
  if (m.rows() != n_layers || m.cols() != width)
    fail(errc::parse_error, "witness table: sidecar disagrees with matrix header in " + path);

  wt.width = int(width);
  for (int r = 0; r < m.rows(); ++r) wt.rows.push_back(m.row(r));
  for (const Vec& row : wt.rows) {
    if (!wt.distinct.empty() && row == wt.distinct.back())
      wt.mults.back() += 1;
    else {
      wt.distinct.push_back(row);
      wt.mults.push_back(1);
    }
  }
  return wt;
}

std::string default_data_dir() {
#ifdef GRAVERKIT_DATA_DIR
  return GRAVERKIT_DATA_DIR;
#else
  return "data";
#endif
}

std::vector<Rat> complement_support_functional(const Vec& v) {
  std::vector<Rat> c(v.size(), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == 0) c[i] = 1;
  return c;
}

ResolvedTable resolve_table(const WitnessTable& wt, const GraverBasis& gb) {
  ResolvedTable rt;
  Vec total(wt.width, Int(0));
  for (const Vec& r : wt.rows)
    for (int j = 0; j < wt.width; ++j) total[j] += r[j];

  if (is_zero(total)) {
    rt.balanced_as_written = true;
    rt.resolved = true;
    rt.relation = wt.relation();
    rt.note = "balanced as written";
    return rt;
  }

  std::vector<Vec> sym = gb.symmetric();
  struct Repair {
    std::size_t group;
    Int copies;
    Vec replacement;
  };
  std::vector<Repair> repairs;
  for (std::size_t j = 0; j < wt.distinct.size(); ++j) {
    for (Int s = 1; s <= wt.mults[j]; ++s) {
      // Replacing s copies of row group j by s copies of w rebalances iff
      // s*w = s*v_j - total, which needs s | total coordinatewise.
      bool divides = true;
      Vec w(wt.width);
      for (int t = 0; t < wt.width && divides; ++t) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), total[t].get_mpz_t(), s.get_mpz_t());
        if (r != 0) divides = false;
        w[t] = wt.distinct[j][t] - q;
      }
      if (!divides || is_zero(w)) continue;
      if (std::find(sym.begin(), sym.end(), w) == sym.end()) continue;
      repairs.push_back({j, s, std::move(w)});
    }
  }
  if (repairs.size() != 1) {
    rt.note = repairs.empty() ? "unbalanced, no single-group repair"
                              : "unbalanced, repair not unique";
    return rt;
  }

  const Repair& fix = repairs.front();
  rt.resolved = true;
  rt.note = "unbalanced as written (row sums " + to_string(total) + "); unique repair: replace " +
            fix.copies.get_str() + " of " + to_string(wt.distinct[fix.group]) + " by " +
            to_string(fix.replacement);
  Relation rel;
  for (std::size_t j = 0; j < wt.distinct.size(); ++j) {
    Int keep = wt.mults[j] - (j == fix.group ? fix.copies : Int(0));
    if (keep > 0) {
      rel.generators.push_back(wt.distinct[j]);
      rel.lambda.push_back(keep);
    }
  }
  rel.generators.push_back(fix.replacement);
  rel.lambda.push_back(fix.copies);
  rt.relation = rel;
  return rt;
}

}  // namespace gk
