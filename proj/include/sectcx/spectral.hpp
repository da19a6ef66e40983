#pragma once

// Normalized double complex of the section complex and the spectral
// sequence of its column filtration.

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "sectcx/chain_complex.hpp"
#include "sectcx/errors.hpp"
#include "sectcx/field.hpp"
#include "sectcx/sections.hpp"

namespace sectcx {

class DoubleComplex {
 public:
  DoubleComplex(const SectionComplex& sc, const SectionTruncation& tr, const PrimeField& f)
      : field_(f), max_total_(tr.window().max_total) {
    const auto& w = tr.window();
    for (int p = 0; p <= max_total_; ++p)
      for (int q = 0; p + q <= max_total_; ++q) {
        if (!w.contains(p, q)) continue;
        Block b;
        const BidegreeCell& cell = tr.at(p, q);
        for (const auto& s : cell.sections) b.labels.push_back(sc.describe(s));
        const int sz = cell.size();
        b.dh = Matrix(tr.size(p - 1, q), sz);
        b.dv = Matrix(tr.size(p, q - 1), sz);
        for (int k = 0; k < sz; ++k) {
          if (p > 0)
            for (std::size_t i = 0; i < cell.h_faces[static_cast<std::size_t>(k)].size(); ++i) {
              int t = cell.h_faces[static_cast<std::size_t>(k)][i];
              if (t >= 0) b.dh(t, k) = f.add(b.dh(t, k), i % 2 ? f.neg(1) : 1);
            }
          if (q > 0)
            for (std::size_t i = 0; i < cell.v_faces[static_cast<std::size_t>(k)].size(); ++i) {
              int t = cell.v_faces[static_cast<std::size_t>(k)][i];
              if (t >= 0) b.dv(t, k) = f.add(b.dv(t, k), i % 2 ? f.neg(1) : 1);
            }
        }
        blocks_[{p, q}] = std::move(b);
      }
  }

  const PrimeField& field() const { return field_; }
  /// Bidegrees with p + q <= max_total() are stored.
  int max_total() const { return max_total_; }
  /// Total degrees whose homology and pages are exact.
  int certified_degree() const { return max_total_ - 1; }

  bool has(int p, int q) const { return blocks_.count({p, q}) > 0; }
  int size(int p, int q) const { return has(p, q) ? static_cast<int>(blocks_.at({p, q}).labels.size()) : 0; }
  const std::vector<std::string>& labels(int p, int q) const { return blocks_.at({p, q}).labels; }
  /// (p,q) -> (p-1,q), alternating sum of horizontal faces.
  const Matrix& dh(int p, int q) const { return blocks_.at({p, q}).dh; }
  /// (p,q) -> (p,q-1), alternating sum of vertical faces.
  const Matrix& dv(int p, int q) const { return blocks_.at({p, q}).dv; }

  /// Throws DomainError if dh^2, dv^2 or dv dh - dh dv is nonzero somewhere.
  void check() const {
    for (const auto& [pq, b] : blocks_) {
      auto [p, q] = pq;
      if (p >= 2 && !multiply(field_, dh(p - 1, q), b.dh).is_zero())
        throw DomainError("dh o dh != 0 at " + bideg(p, q));
      if (q >= 2 && !multiply(field_, dv(p, q - 1), b.dv).is_zero())
        throw DomainError("dv o dv != 0 at " + bideg(p, q));
      if (p >= 1 && q >= 1 && !(multiply(field_, dv(p - 1, q), b.dh) == multiply(field_, dh(p, q - 1), b.dv)))
        throw DomainError("dh and dv do not commute at " + bideg(p, q));
    }
  }

  // Tot_n is the concatenation of the blocks (0,n), (1,n-1), ..., (n,0).
  int tot_size(int n) const {
    int s = 0;
    for (int p = 0; p <= n; ++p) s += size(p, n - p);
    return s;
  }
  int offset(int n, int p) const {
    int s = 0;
    for (int t = 0; t < p && t <= n; ++t) s += size(t, n - t);
    return s;
  }

  /// D = dh + (-1)^p dv on column p, as a map Tot_n -> Tot_{n-1}.
  Matrix total_differential(int n) const {
    if (n > max_total_) throw WindowError("total degree " + std::to_string(n) + " is outside the window", n - 1);
    Matrix d(n > 0 ? tot_size(n - 1) : 0, tot_size(n));
    if (n == 0) return d;
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      if (!has(p, q)) continue;
      const int col0 = offset(n, p);
      if (p > 0) place(d, dh(p, q), offset(n - 1, p - 1), col0, false);
      if (q > 0) place(d, dv(p, q), offset(n - 1, p), col0, p % 2 == 1);
    }
    return d;
  }

  std::vector<std::string> tot_labels(int n) const {
    std::vector<std::string> out;
    for (int p = 0; p <= n; ++p)
      if (has(p, n - p))
        for (const auto& l : labels(p, n - p)) out.push_back("(" + std::to_string(p) + "," + std::to_string(n - p) + ") " + l);
    return out;
  }

  /// Tot through degree max_total().
  ChainComplex total_complex() const {
    ChainComplex c(field_);
    for (int n = 0; n <= max_total_; ++n) c.push_degree(tot_labels(n), total_differential(n));
    return c;
  }

 private:
  struct Block {
    std::vector<std::string> labels;
    Matrix dh, dv;
  };
  static std::string bideg(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
  void place(Matrix& d, const Matrix& m, int row0, int col0, bool negate) const {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (m(i, j)) d(row0 + i, col0 + j) = field_.add(d(row0 + i, col0 + j), negate ? field_.neg(m(i, j)) : m(i, j));
  }

  PrimeField field_;
  int max_total_;
  std::map<std::pair<int, int>, Block> blocks_;
};

/// dim H_n Tot; requires n <= certified_degree().
inline int total_homology(const DoubleComplex& dc, int n) {
  if (n < 0) return 0;
  if (n > dc.certified_degree())
    throw WindowError("total degree " + std::to_string(n) + " needs max degree " + std::to_string(n), n);
  const PrimeField& f = dc.field();
  return nullity(f, dc.total_differential(n)) - rank(f, dc.total_differential(n + 1));
}

/// One entry of a page. Vectors live in Tot_{p+q} coordinates.
struct PageEntry {
  int r = 0, p = 0, q = 0;
  int dim = 0;
  Matrix representatives;  // tot_size(n) x dim
  Matrix projection;       // dim x tot_size(n); exact on Z^r_p
  Matrix denominator;      // basis of the subspace killed in E^r_{p,q}
  Matrix differential;     // to E^r_{p-r,q+r-1}: target dim x dim
  int incoming_rank = 0;   // rank of d^r arriving from E^r_{p+r,q-r+1}
};

/// Pages of the column filtration F_p Tot = blocks with p' <= p:
///   Z^r_p = {x in F_p : Dx in F_{p-r}},
///   E^r_p = Z^r_p / (Z^{r-1}_{p-1} + D Z^{r-1}_{p+r-1}),
///   d^r[x] = [Dx].
/// Dx for x in Z^r_p is the end of the zig-zag dh c = dv b_1, dh b_1 = dv b_2, ...
class SpectralSequence {
 public:
  explicit SpectralSequence(const DoubleComplex& dc) : dc_(&dc) {}

  const DoubleComplex& complex() const { return *dc_; }
  /// Beyond this page every entry in the certified window is stable.
  int infinity_page() const { return dc_->certified_degree() + 2; }

  const PageEntry& entry(int r, int p, int q) const {
    if (r < 0) throw DomainError("page index must be non-negative");
    if (p < 0 || q < 0) return empty_entry(r, p, q);
    if (p + q > dc_->certified_degree())
      throw WindowError("E^" + std::to_string(r) + "_{" + std::to_string(p) + "," + std::to_string(q) +
                            "} needs max degree " + std::to_string(p + q),
                        p + q);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find({r, p, q});
      if (it != cache_.end()) return it->second;
    }
    PageEntry e = compute(r, p, q);
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(std::tuple{r, p, q}, std::move(e)).first->second;
  }

  int dim(int r, int p, int q) const { return entry(r, p, q).dim; }

  /// dims[p][q] for p + q <= certified degree.
  std::vector<std::vector<int>> dims(int r) const {
    const int n = dc_->certified_degree();
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n + 1));
    for (int p = 0; p <= n; ++p)
      for (int q = 0; p + q <= n; ++q) out[static_cast<std::size_t>(p)].push_back(dim(r, p, q));
    return out;
  }

  /// d^r applied to a cycle representative x in Z^r_p of total degree n.
  std::vector<PrimeField::Elem> apply_differential(int r, int p, int q, const std::vector<PrimeField::Elem>& x) const {
    const PrimeField& f = dc_->field();
    const int n = p + q;
    const PageEntry& target = entry(r, p - r, q + r - 1);
    if (target.dim == 0) return {};
    auto y = apply(f, dc_->total_differential(n), x);
    return apply(f, target.projection, y);
  }

  /// Z^r_p in Tot_n as columns; r <= 0 gives F_p.
  Matrix cycles(int r, int p, int n) const {
    const PrimeField& f = dc_->field();
    const int tn = dc_->tot_size(n);
    if (p < 0) return Matrix(tn, 0);
    const int fp = p >= n ? tn : dc_->offset(n, p + 1);
    if (r <= 0 || n == 0 || p - r >= n - 1) return embed_prefix(Matrix::identity(fp), tn);
    Matrix d = dc_->total_differential(n);
    const int keep_from = p - r < 0 ? 0 : dc_->offset(n - 1, p - r + 1);
    std::vector<int> rows, cols;
    for (int i = keep_from; i < d.rows(); ++i) rows.push_back(i);
    for (int j = 0; j < fp; ++j) cols.push_back(j);
    Matrix restricted = d.rows_subset(rows).columns(cols);
    return embed_prefix(kernel(f, restricted), tn);
  }

 private:
  static Matrix embed_prefix(const Matrix& m, int rows) {
    Matrix out(rows, m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
  }

  const PageEntry& empty_entry(int r, int p, int q) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto& e = cache_[{r, p, q}];
    e.r = r;
    e.p = p;
    e.q = q;
    return e;
  }

  PageEntry compute(int r, int p, int q) const {
    const PrimeField& f = dc_->field();
    const int n = p + q;
    const int tn = dc_->tot_size(n);
    PageEntry e;
    e.r = r;
    e.p = p;
    e.q = q;
    Matrix z = cycles(r, p, n);
    Matrix den = cycles(r - 1, p - 1, n);
    Matrix dnext = dc_->total_differential(n + 1);
    Matrix boundaries = multiply(f, dnext, cycles(r - 1, p + r - 1, n + 1));
    den = image(f, Matrix::hcat(den, boundaries));
    if (den.rows() != tn) den = Matrix(tn, 0);
    e.denominator = den;
    Matrix span = den;
    int span_rank = den.cols();
    std::vector<int> chosen;
    for (int k = 0; k < z.cols(); ++k) {
      Matrix trial = Matrix::hcat(span, z.columns({k}));
      if (rank(f, trial) > span_rank) {
        span = std::move(trial);
        ++span_rank;
        chosen.push_back(k);
      }
    }
    e.dim = static_cast<int>(chosen.size());
    e.representatives = z.columns(chosen);
    if (e.representatives.rows() != tn) e.representatives = Matrix(tn, 0);
    if (e.dim > 0) {
      Matrix l = left_inverse(f, span);
      std::vector<int> rep_rows;
      for (int k = 0; k < e.dim; ++k) rep_rows.push_back(den.cols() + k);
      e.projection = l.rows_subset(rep_rows);
    } else {
      e.projection = Matrix(0, tn);
    }

    // Outgoing differential.
    const PageEntry& target = (p - r >= 0 && n >= 1) ? entry(r, p - r, q + r - 1) : empty_entry(r, p - r, q + r - 1);
    e.differential = Matrix(target.dim, e.dim);
    if (target.dim > 0 && e.dim > 0) {
      Matrix dx = multiply(f, dc_->total_differential(n), e.representatives);
      e.differential = multiply(f, target.projection, dx);
    }

    // Incoming image: classes of D Z^r_{p+r} inside E^r_p.
    if (e.dim > 0 && q - r + 1 >= 0) {
      Matrix incoming = multiply(f, dnext, cycles(r, p + r, n + 1));
      e.incoming_rank = rank(f, multiply(f, e.projection, incoming));
    }
    return e;
  }

  const DoubleComplex* dc_;
  mutable std::mutex mu_;
  mutable std::map<std::tuple<int, int, int>, PageEntry> cache_;
};

struct ConvergenceReport {
  std::vector<int> betti_x;
  std::vector<int> betti_tot;
  std::vector<int> betti_diag;
  std::vector<int> betti_infinity;  // sum over p + q = n of dim E^inf
  int subdivision = 0;
  bool collapse_ok = true;          // E^{s+1} = E^{s+2} on the window
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

}  // namespace sectcx
