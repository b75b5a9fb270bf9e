#include "graver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <type_traits>

namespace gk {

std::vector<Vec> GraverBasis::symmetric() const {
  std::vector<Vec> s;
  s.reserve(elements.size() * 2);
  for (const Vec& v : elements) {
    s.push_back(v);
    s.push_back(neg(v));
  }
  std::sort(s.begin(), s.end(), norm_lex_less);
  return s;
}

Int GraverBasis::max_norm1() const {
  Int m = 0;
  for (const Vec& v : elements) {
    Int n = norm1(v);
    if (n > m) m = n;
  }
  return m;
}

namespace {

/////////////////////////////////////////////////////////////////////////////
// Completion engine.
//
// Elements are stored once, canonically signed, with cached sign-support
// bitmasks and 1-norms.  Pending sums live in a bucket queue keyed by the
// exact 1-norm of the sum, consumed in FIFO order inside a bucket, so the
// whole run is deterministic.  Two coordinate lanes share the code: int64
// when the input and the norm cap make overflow impossible a priori, mpz
// otherwise.
/////////////////////////////////////////////////////////////////////////////

constexpr int kMaskWords = 2;
constexpr int kMaxCols = 64 * kMaskWords;

struct Mask {
  std::uint64_t w[kMaskWords] = {0, 0};

  void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
  bool subset_of(const Mask& o) const {
    return (w[0] & ~o.w[0]) == 0 && (w[1] & ~o.w[1]) == 0;
  }
  bool intersects(const Mask& o) const { return ((w[0] & o.w[0]) | (w[1] & o.w[1])) != 0; }
};

template <class C>
struct Lane;

template <>
struct Lane<long long> {
  using Coord = long long;
  using Norm = long long;
  static Coord from_int(const Int& v) { return v.get_si(); }
  static Int to_int(Coord v) {
    return Int(static_cast<long>(v));
  }
  static Norm nabs(Coord v) { return v < 0 ? -v : v; }
};

template <>
struct Lane<Int> {
  using Coord = Int;
  using Norm = Int;
  static Coord from_int(const Int& v) { return v; }
  static Int to_int(const Coord& v) { return v; }
  static Norm nabs(const Coord& v) { return abs(v); }
};

template <class C>
class Engine {
 public:
  using Norm = typename Lane<C>::Norm;

  Engine(int n, const Caps& caps) : n_(n), caps_(caps) {
    if (n > kMaxCols)
      fail(errc::unsupported,
           "completion engine supports at most " + std::to_string(kMaxCols) + " columns");
    max_norm_ = Lane<C>::from_int(caps.max_norm);
    tmp_.resize(n);
  }

  // Reduce each seed to normal form and insert the survivors, then run the
  // pair queue to fixpoint.
  void run(const std::vector<Vec>& seeds) {
    for (const Vec& s : seeds) {
      load(s);
      if (reduce_tmp()) insert_tmp_and_saturate();
    }
    while (!queue_.empty()) {
      auto it = queue_.begin();
      auto& bucket = it->second;
      if (bucket.consumed == bucket.recs.size()) {
        queue_.erase(it);
        continue;
      }
      PairRec pr = bucket.recs[bucket.consumed++];
      --queue_count_;
      std::uint32_t i = pr.i, j = pr.j_sub >> 1;
      bool sub = pr.j_sub & 1;
      if (!alive_[i] || !alive_[j]) continue;
      combine(i, j, sub);
      if (reduce_tmp()) insert_tmp_and_saturate();
    }
  }

  std::vector<Vec> harvest() const {
    std::vector<Vec> out;
    for (std::uint32_t k = 0; k < count_; ++k) {
      if (!alive_[k]) continue;
      Vec v(n_);
      const C* e = elem(k);
      for (int t = 0; t < n_; ++t) v[t] = Lane<C>::to_int(e[t]);
      out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), norm_lex_less);
    return out;
  }

 private:
  struct PairRec {
    std::uint32_t i;
    std::uint32_t j_sub;  // (j << 1) | subtract
  };
  struct Bucket {
    std::vector<PairRec> recs;
    std::size_t consumed = 0;
  };

  const C* elem(std::uint32_t k) const { return &arena_[std::size_t(k) * n_]; }

  void load(const Vec& v) {
    for (int t = 0; t < n_; ++t) tmp_[t] = Lane<C>::from_int(v[t]);
    refresh_tmp_meta();
  }

  void combine(std::uint32_t i, std::uint32_t j, bool sub) {
    const C* f = elem(i);
    const C* g = elem(j);
    if (sub)
      for (int t = 0; t < n_; ++t) tmp_[t] = f[t] - g[t];
    else
      for (int t = 0; t < n_; ++t) tmp_[t] = f[t] + g[t];
    refresh_tmp_meta();
  }

  void refresh_tmp_meta() {
    tpos_ = Mask{};
    tneg_ = Mask{};
    tnorm_ = 0;
    for (int t = 0; t < n_; ++t) {
      if (tmp_[t] > 0) {
        tpos_.set(t);
        tnorm_ += tmp_[t];
      } else if (tmp_[t] < 0) {
        tneg_.set(t);
        tnorm_ -= tmp_[t];
      }
    }
  }

  // Normal form of tmp_ against the live set: repeatedly subtract the
  // largest conformal multiple of any element that conf-divides tmp_,
  // smallest norms first.  Returns false when reduced to zero.
  bool reduce_tmp() {
    while (tnorm_ != 0) {
      bool reduced = false;
      for (std::size_t s = 0; s < by_norm_.size(); ++s) {
        std::uint32_t k = by_norm_[s];
        if (!alive_[k]) continue;
        if (norm_[k] > tnorm_) break;
        bool plus = pos_[k].subset_of(tpos_) && neg_[k].subset_of(tneg_);
        bool minus = !plus && pos_[k].subset_of(tneg_) && neg_[k].subset_of(tpos_);
        if (!plus && !minus) continue;
        const C* h = elem(k);
        // Magnitude test on supp(h), then the maximal conformal multiple.
        bool fits = true;
        for (int t = 0; t < n_; ++t) {
          if (h[t] == 0) continue;
          if (Lane<C>::nabs(h[t]) > Lane<C>::nabs(tmp_[t])) {
            fits = false;
            break;
          }
        }
        if (!fits) continue;
        Norm q = 0;
        for (int t = 0; t < n_; ++t) {
          if (h[t] == 0) continue;
          Norm qt = Lane<C>::nabs(tmp_[t]) / Lane<C>::nabs(h[t]);
          if (q == 0 || qt < q) q = qt;
        }
        if (plus)
          for (int t = 0; t < n_; ++t) tmp_[t] -= C(q) * h[t];
        else
          for (int t = 0; t < n_; ++t) tmp_[t] += C(q) * h[t];
        refresh_tmp_meta();
        reduced = true;
        break;
      }
      if (!reduced) return true;
    }
    return false;
  }

  void canonicalize_tmp() {
    for (int t = 0; t < n_; ++t) {
      if (tmp_[t] > 0) return;
      if (tmp_[t] < 0) {
        for (int u = 0; u < n_; ++u) tmp_[u] = -tmp_[u];
        std::swap(tpos_, tneg_);
        return;
      }
    }
  }

  std::uint32_t insert_tmp() {
    canonicalize_tmp();
    if (tnorm_ > max_norm_)
      fail(errc::cap_exceeded, "completion: element 1-norm cap exceeded (--max-norm)");
    if (alive_count_ + 1 > caps_.max_elements)
      fail(errc::cap_exceeded, "completion: element count cap exceeded (--max-elements)");
    std::uint32_t idx = count_++;
    arena_.insert(arena_.end(), tmp_.begin(), tmp_.end());
    pos_.push_back(tpos_);
    neg_.push_back(tneg_);
    norm_.push_back(tnorm_);
    alive_.push_back(1);
    ++alive_count_;
    // by_norm_ stays sorted by (norm, idx); idx is maximal, so the slot is
    // the upper bound by norm alone.
    auto it = std::upper_bound(by_norm_.begin(), by_norm_.end(), tnorm_,
                               [&](const Norm& v, std::uint32_t k) { return v < norm_[k]; });
    by_norm_.insert(it, idx);
    return idx;
  }

  void enqueue_pairs_of(std::uint32_t j) {
    for (std::uint32_t i = 0; i < count_; ++i) {
      if (i == j || !alive_[i]) continue;
      // A sum with no cancellation reduces to zero through its two terms;
      // only enqueue combinations that cancel somewhere.
      if (pos_[i].intersects(neg_[j]) || neg_[i].intersects(pos_[j])) push_pair(i, j, false);
      if (pos_[i].intersects(pos_[j]) || neg_[i].intersects(neg_[j])) push_pair(i, j, true);
    }
  }

  void push_pair(std::uint32_t i, std::uint32_t j, bool sub) {
    const C* f = elem(i);
    const C* g = elem(j);
    Norm m = 0;
    if (sub)
      for (int t = 0; t < n_; ++t) m += Lane<C>::nabs(f[t] - g[t]);
    else
      for (int t = 0; t < n_; ++t) m += Lane<C>::nabs(f[t] + g[t]);
    if (m == 0) return;
    if (queue_count_ + 1 > caps_.max_queue)
      fail(errc::cap_exceeded, "completion: pending pair cap exceeded (--max-queue)");
    queue_[m].recs.push_back(PairRec{i, (j << 1) | std::uint32_t(sub)});
    ++queue_count_;
  }

  // Insert the reduced tmp_, then restore interreducedness: any live element
  // that the newcomer conf-divides is removed, re-reduced, and reinserted if
  // it survives.  A worklist avoids recursion.
  void insert_tmp_and_saturate() {
    std::vector<std::vector<C>> work;
    std::uint32_t idx = insert_tmp();
    enqueue_pairs_of(idx);
    collect_now_reducible(idx, work);
    while (!work.empty()) {
      std::vector<C> v = std::move(work.back());
      work.pop_back();
      tmp_ = std::move(v);
      refresh_tmp_meta();
      if (!reduce_tmp()) continue;
      std::uint32_t k = insert_tmp();
      enqueue_pairs_of(k);
      collect_now_reducible(k, work);
    }
  }

  void collect_now_reducible(std::uint32_t r, std::vector<std::vector<C>>& work) {
    const C* h = elem(r);
    for (std::uint32_t i = 0; i < count_; ++i) {
      if (i == r || !alive_[i]) continue;
      if (norm_[i] <= norm_[r]) continue;  // strict divide needs strictly larger norm
      bool plus = pos_[r].subset_of(pos_[i]) && neg_[r].subset_of(neg_[i]);
      bool minus = !plus && pos_[r].subset_of(neg_[i]) && neg_[r].subset_of(pos_[i]);
      if (!plus && !minus) continue;
      const C* s = elem(i);
      bool fits = true;
      for (int t = 0; t < n_; ++t) {
        if (h[t] == 0) continue;
        if (Lane<C>::nabs(h[t]) > Lane<C>::nabs(s[t])) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      alive_[i] = 0;
      --alive_count_;
      work.emplace_back(s, s + n_);
    }
  }

  int n_;
  Caps caps_;
  Norm max_norm_;

  std::vector<C> arena_;
  std::vector<Mask> pos_, neg_;
  std::vector<Norm> norm_;
  std::vector<char> alive_;
  std::uint32_t count_ = 0;
  std::size_t alive_count_ = 0;
  std::vector<std::uint32_t> by_norm_;

  std::map<Norm, Bucket> queue_;
  std::uint64_t queue_count_ = 0;

  std::vector<C> tmp_;
  Mask tpos_, tneg_;
  Norm tnorm_ = 0;
};

bool int64_lane_ok(const std::vector<Vec>& seeds, const Caps& caps) {
  const Int bound = Int(1) << 40;
  if (caps.max_norm >= bound) return false;
  for (const Vec& v : seeds)
    for (const Int& x : v)
      if (abs(x) >= bound) return false;
  return true;
}

std::vector<Vec> run_completion(int n, const std::vector<Vec>& seeds, const Caps& caps) {
  if (int64_lane_ok(seeds, caps)) {
    Engine<long long> e(n, caps);
    e.run(seeds);
    return e.harvest();
  }
  Engine<Int> e(n, caps);
  e.run(seeds);
  return e.harvest();
}

std::vector<Vec> kernel_rows(const IntMatrix& a) {
  IntMatrix k = kernel_lattice_basis(a);
  std::vector<Vec> rows;
  for (int r = 0; r < k.rows(); ++r) rows.push_back(k.row(r));
  return rows;
}

}  // namespace

GraverBasis graver(const IntMatrix& a, const Caps& caps) {
  GraverBasis g;
  g.matrix = a;
  g.elements = run_completion(a.cols(), kernel_rows(a), caps);
  return g;
}

GraverBasis graver_from_generators(const IntMatrix& a, const std::vector<Vec>& gens,
                                   const Caps& caps) {
  for (const Vec& v : gens) {
    if (int(v.size()) != a.cols()) fail(errc::invalid_argument, "generator length mismatch");
    if (!is_zero(a.apply(v))) fail(errc::invalid_argument, "generator is not in ker(A)");
  }
  GraverBasis g;
  g.matrix = a;
  g.elements = run_completion(a.cols(), gens, caps);
  return g;
}

std::vector<Vec> orthant_hilbert_oracle(const IntMatrix& a, const Int& box, const Caps& caps) {
  if (box < 0) fail(errc::invalid_argument, "box bound must be nonnegative");
  const int n = a.cols();
  const int d = a.rows();

  // Row-wise pruning bound: with coordinates t..n-1 still free, row i can
  // change by at most slack[i][t] = box * sum_{j>=t} |a_ij| in either
  // direction.
  std::vector<std::vector<Int>> slack(d, std::vector<Int>(n + 1));
  for (int i = 0; i < d; ++i)
    for (int t = n - 1; t >= 0; --t) slack[i][t] = slack[i][t + 1] + abs(a.at(i, t)) * box;

  std::vector<Vec> kernel_points;
  Vec z(n);
  std::vector<Int> partial(d);

  std::uint64_t visited = 0;
  auto dfs = [&](auto&& self, int t) -> void {
    if (t == n) {
      for (int i = 0; i < d; ++i)
        if (partial[i] != 0) return;
      if (!is_zero(z)) {
        if (++visited > caps.max_fiber)
          fail(errc::cap_exceeded, "orthant oracle: point cap exceeded (--max-fiber)");
        kernel_points.push_back(z);
      }
      return;
    }
    for (Int v = -box; v <= box; ++v) {
      z[t] = v;
      bool ok = true;
      for (int i = 0; i < d; ++i) {
        partial[i] += a.at(i, t) * v;
        if (abs(partial[i]) > slack[i][t + 1]) ok = false;
      }
      if (ok) self(self, t + 1);
      for (int i = 0; i < d; ++i) partial[i] -= a.at(i, t) * v;
    }
    z[t] = 0;
  };
  dfs(dfs, 0);

  // Keep the conf-minimal points; minimal inside the box implies minimal in
  // the full kernel, so this is exactly G(A) clipped to the box.
  std::vector<Vec> minimal;
  for (const Vec& v : kernel_points) {
    bool dominated = false;
    for (const Vec& w : kernel_points) {
      if (&w == &v) continue;
      if (conf_divides(w, v) && w != v) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(v);
  }
  std::sort(minimal.begin(), minimal.end(), norm_lex_less);
  return minimal;
}

namespace {

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return lex_cmp(a, b) < 0; }
};

// Exhaustive decision: is v a sign-compatible nonnegative integer combination
// of candidates?  Each subtraction of a conformal divisor strictly decreases
// the 1-norm, so the recursion is bounded; memoization keeps it cheap.
bool representable(const Vec& v, const std::vector<Vec>& cand, std::set<Vec, VecLess>& yes,
                   std::set<Vec, VecLess>& no) {
  if (is_zero(v)) return true;
  if (yes.count(v)) return true;
  if (no.count(v)) return false;
  for (const Vec& h : cand) {
    if (is_zero(h) || !conf_divides(h, v)) continue;
    if (representable(sub(v, h), cand, yes, no)) {
      yes.insert(v);
      return true;
    }
  }
  no.insert(v);
  return false;
}

}  // namespace

bool graver_certificate_check(const IntMatrix& a, const std::vector<Vec>& candidate,
                              CertificateFailure* why) {
  auto failure = [&](const std::string& reason, const Vec& wa, const Vec& wb) {
    if (why) *why = CertificateFailure{reason, wa, wb};
    return false;
  };
  std::set<Vec, VecLess> all(candidate.begin(), candidate.end());
  const Vec none;

  for (const Vec& v : candidate) {
    if (int(v.size()) != a.cols()) return failure("element of wrong length", v, none);
    if (is_zero(v)) return failure("zero vector in candidate set", v, none);
    if (!is_zero(a.apply(v))) return failure("candidate element is not in ker(A)", v, none);
    if (!all.count(neg(v))) return failure("candidate set is not symmetric", v, none);
  }

  std::vector<Vec> rows(candidate.begin(), candidate.end());
  if (rows.empty()) {
    // Empty candidate is a Graver basis iff the kernel is trivial.
    return kernel_lattice_basis(a).rows() == 0
               ? true
               : failure("candidate does not generate ker(A)", none, none);
  }
  if (!lattice_equal(IntMatrix::from_rows(rows, a.cols()), kernel_lattice_basis(a)))
    return failure("candidate does not generate ker(A) as a lattice", none, none);

  for (const Vec& v : candidate)
    for (const Vec& w : candidate)
      if (v != w && conf_divides(v, w))
        return failure("candidate contains a conf-divisible pair (not minimal)", v, w);

  std::set<Vec, VecLess> yes, no;
  for (const Vec& g1 : candidate)
    for (const Vec& g2 : candidate) {
      Vec s = add(g1, g2);
      if (!representable(s, candidate, yes, no))
        return failure("pairwise sum has no sign-compatible representation", g1, g2);
    }
  return true;
}

}  // namespace gk
