#include "lawrence.hpp"

#include "fiber.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

namespace gk {

LawrenceLift lawrence_lift(const IntMatrix& a, int copies) {
  if (copies < 1) fail(errc::invalid_argument, "lift: copy count must be >= 1");
  const int d = a.rows(), n = a.cols();
  LawrenceLift lift;
  lift.base = a;
  lift.copies = copies;
  IntMatrix m{n + d * copies, n * copies};
  for (int k = 0; k < copies; ++k) {
    for (int j = 0; j < n; ++j) m.at(j, k * n + j) = 1;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < n; ++j) m.at(n + k * d + i, k * n + j) = a.at(i, j);
  }
  lift.matrix = std::move(m);
  return lift;
}

int LayeredVector::type() const {
  int t = 0;
  for (const Vec& v : layers)
    if (!is_zero(v)) ++t;
  return t;
}

Vec LayeredVector::flat() const {
  Vec x;
  x.reserve(std::size_t(width) * layers.size());
  for (const Vec& v : layers) {
    if (int(v.size()) != width) fail(errc::invalid_argument, "layered vector: ragged layer");
    x.insert(x.end(), v.begin(), v.end());
  }
  return x;
}

LayeredVector LayeredVector::from_flat(const Vec& x, int width) {
  if (width < 1 || x.size() % std::size_t(width) != 0)
    fail(errc::invalid_argument, "layered vector: length is not a multiple of the width");
  LayeredVector lv;
  lv.width = width;
  for (std::size_t k = 0; k < x.size(); k += std::size_t(width))
    lv.layers.emplace_back(x.begin() + long(k), x.begin() + long(k) + width);
  return lv;
}

namespace {

void validate_relation(const Relation& rel) {
  if (rel.generators.empty()) fail(errc::invalid_argument, "relation: no generators");
  if (rel.generators.size() != rel.lambda.size())
    fail(errc::invalid_argument, "relation: multiplicity count mismatch");
  const std::size_t n = rel.generators.front().size();
  for (const Vec& g : rel.generators) {
    if (g.size() != n) fail(errc::invalid_argument, "relation: ragged generators");
    if (is_zero(g)) fail(errc::invalid_argument, "relation: zero generator");
  }
  for (const Int& l : rel.lambda)
    if (l < 1) fail(errc::invalid_argument, "relation: multiplicities must be >= 1");
}

}  // namespace

Vec relation_sum(const Relation& rel) {
  validate_relation(rel);
  Vec s(rel.generators.front().size(), Int(0));
  for (std::size_t i = 0; i < rel.generators.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) s[j] += rel.lambda[i] * rel.generators[i][j];
  return s;
}

bool relation_sums_to_zero(const Relation& rel) { return is_zero(relation_sum(rel)); }

RelationCheck relation_minimal(const Relation& rel) {
  if (!relation_sums_to_zero(rel))
    fail(errc::invalid_argument, "relation: does not sum to zero");
  const std::size_t m = rel.generators.size();
  const std::size_t n = rel.generators.front().size();

  RelationCheck out;
  out.minimal = true;
  std::vector<Int> mu(m, Int(0));
  Vec acc(n, Int(0));
  // Enumerate 0 <= mu <= lambda depth-first, keeping the running sum.
  auto dfs = [&](auto&& self, std::size_t i) -> bool {
    if (i == m) {
      if (!is_zero(acc)) return false;
      bool zero = true, full = true;
      for (std::size_t t = 0; t < m; ++t) {
        if (mu[t] != 0) zero = false;
        if (mu[t] != rel.lambda[t]) full = false;
      }
      if (zero || full) return false;
      out.minimal = false;
      out.mu = mu;
      return true;
    }
    for (Int v = 0; v <= rel.lambda[i]; ++v) {
      mu[i] = v;
      if (v > 0)
        for (std::size_t j = 0; j < n; ++j) acc[j] += rel.generators[i][j];
      if (self(self, i + 1)) return true;
    }
    for (std::size_t j = 0; j < n; ++j) acc[j] -= rel.lambda[i] * rel.generators[i][j];
    mu[i] = 0;
    return false;
  };
  dfs(dfs, 0);
  return out;
}

LayeredVector build_witness(const Relation& rel) {
  RelationCheck chk = relation_minimal(rel);
  if (!chk.minimal) fail(errc::invalid_argument, "witness: relation is not minimal");
  LayeredVector lv;
  lv.width = int(rel.generators.front().size());
  for (std::size_t i = 0; i < rel.generators.size(); ++i)
    for (Int k = 0; k < rel.lambda[i]; ++k) lv.layers.push_back(rel.generators[i]);
  return lv;
}

std::vector<Rat> lemma_certificate(const Relation& rel,
                                   const std::vector<std::vector<Rat>>& per_generator) {
  validate_relation(rel);
  if (per_generator.size() != rel.generators.size())
    fail(errc::invalid_argument, "certificate: one functional per generator required");
  const std::size_t n = rel.generators.front().size();
  std::vector<Rat> c;
  for (std::size_t i = 0; i < rel.generators.size(); ++i) {
    if (per_generator[i].size() != n)
      fail(errc::invalid_argument, "certificate: functional length mismatch");
    for (Int k = 0; k < rel.lambda[i]; ++k)
      c.insert(c.end(), per_generator[i].begin(), per_generator[i].end());
  }
  return canonical_row(std::move(c));
}

namespace {

using State = std::vector<std::int32_t>;

State to_state(const Vec& v) {
  State s(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].fits_sint_p()) fail(errc::cap_exceeded, "face search: layer sums too large");
    s[i] = std::int32_t(v[i].get_si());
  }
  return s;
}

struct Cell {
  Rat min;
  Int count;
};

}  // namespace

FaceMinimizers lifted_face_minimizers(const IntMatrix& base, int copies, const Vec& b,
                                      const std::vector<Rat>& c_in, std::uint64_t list_cap,
                                      const Caps& caps) {
  const int d = base.rows(), n = base.cols();
  if (copies < 1) fail(errc::invalid_argument, "face search: copy count must be >= 1");
  if (int(b.size()) != n + d * copies)
    fail(errc::invalid_argument, "face search: right-hand side length mismatch");
  std::vector<Rat> c = canonical_row(c_in);  // tie detection needs canonical mpq
  if (int(c.size()) != n * copies)
    fail(errc::invalid_argument, "face search: functional length mismatch");

  FaceMinimizers out;
  out.count = 0;

  // Split b into the layer-sum target t and the per-layer right-hand sides.
  Vec t(b.begin(), b.begin() + n);
  for (const Int& ti : t) {
    if (ti < 0) return out;  // layer sums are nonnegative
    if (!ti.fits_sint_p()) fail(errc::cap_exceeded, "face search: layer sums too large");
  }

  // Per-layer fibers, restricted to points <= t.
  std::vector<std::vector<Vec>> fibers(copies);
  for (int k = 0; k < copies; ++k) {
    Vec bk(b.begin() + n + std::size_t(k) * d, b.begin() + n + std::size_t(k + 1) * d);
    for (Vec& y : fiber_enumerate(base, bk, caps)) {
      bool inside = true;
      for (int j = 0; j < n; ++j)
        if (y[j] > t[j]) {
          inside = false;
          break;
        }
      if (inside) fibers[k].push_back(std::move(y));
    }
    if (fibers[k].empty()) return out;
  }

  // Forward pass: per level, minimum cost and minimizer count keyed by the
  // running layer sum.
  std::vector<std::map<State, Cell>> level(copies + 1);
  level[0].emplace(State(std::size_t(n), 0), Cell{Rat(0), Int(1)});
  std::uint64_t touched = 1;
  for (int k = 0; k < copies; ++k) {
    for (const auto& [st, cell] : level[k]) {
      for (const Vec& y : fibers[k]) {
        State nx = st;
        bool inside = true;
        for (int j = 0; j < n; ++j) {
          Int sum = Int(nx[j]) + y[j];
          if (sum > t[j]) {
            inside = false;
            break;
          }
          nx[j] = std::int32_t(sum.get_si());
        }
        if (!inside) continue;
        Rat cost = cell.min;
        for (int j = 0; j < n; ++j)
          if (y[j] != 0) cost += Rat(y[j]) * c[std::size_t(k) * n + j];
        auto [it, fresh] = level[k + 1].emplace(std::move(nx), Cell{cost, cell.count});
        if (fresh) {
          if (++touched > caps.max_fiber)
            fail(errc::cap_exceeded, "face search: state cap exceeded (--max-fiber)");
        } else if (cost < it->second.min) {
          it->second.min = cost;
          it->second.count = cell.count;
        } else if (cost == it->second.min) {
          it->second.count += cell.count;
        }
      }
    }
  }

  auto final_it = level[copies].find(to_state(t));
  if (final_it == level[copies].end()) return out;
  out.feasible = true;
  out.min_value = final_it->second.min;
  out.count = final_it->second.count;

  // Backward pass: rebuild up to list_cap minimizers, last layer outermost,
  // per-layer points in lexicographic order.
  std::vector<Vec> chosen(copies);
  auto rebuild = [&](auto&& self, int k, const State& st, const Rat& need) -> void {
    if (std::uint64_t(out.minimizers.size()) >= list_cap) return;
    if (k == 0) {
      Vec flatv;
      flatv.reserve(std::size_t(n) * copies);
      for (const Vec& y : chosen) flatv.insert(flatv.end(), y.begin(), y.end());
      out.minimizers.push_back(std::move(flatv));
      return;
    }
    for (const Vec& y : fibers[k - 1]) {
      State prev = st;
      bool inside = true;
      for (int j = 0; j < n; ++j) {
        Int rem = Int(prev[j]) - y[j];
        if (rem < 0) {
          inside = false;
          break;
        }
        prev[j] = std::int32_t(rem.get_si());
      }
      if (!inside) continue;
      auto it = level[k - 1].find(prev);
      if (it == level[k - 1].end()) continue;
      Rat cost(0);
      for (int j = 0; j < n; ++j)
        if (y[j] != 0) cost += Rat(y[j]) * c[std::size_t(k - 1) * n + j];
      if (it->second.min + cost != need) continue;
      chosen[k - 1] = y;
      self(self, k - 1, prev, it->second.min);
      if (std::uint64_t(out.minimizers.size()) >= list_cap) return;
    }
  };
  if (list_cap > 0) rebuild(rebuild, copies, final_it->first, out.min_value);
  return out;
}

}  // namespace gk
