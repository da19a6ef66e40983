#pragma once

// Based chain complexes over GF(p), homology with representatives, induced
// maps.

#include <string>
#include <vector>

#include "sectcx/errors.hpp"
#include "sectcx/field.hpp"
#include "sectcx/simplicial_set.hpp"

namespace sectcx {

/// Degrees 0..top(). differential(n) maps degree n to n-1 and has shape
/// size(n-1) x size(n); differential(0) is 0 x size(0). Degrees outside
/// the stored range are zero.
class ChainComplex {
 public:
  ChainComplex() = default;
  explicit ChainComplex(PrimeField field) : field_(field) {}

  const PrimeField& field() const { return field_; }
  int top() const { return static_cast<int>(labels_.size()) - 1; }
  int size(int n) const { return n < 0 || n > top() ? 0 : static_cast<int>(labels_[static_cast<std::size_t>(n)].size()); }
  const std::vector<std::string>& labels(int n) const { return labels_.at(static_cast<std::size_t>(n)); }

  /// Appends degree top()+1 with its basis labels and differential.
  void push_degree(std::vector<std::string> labels, Matrix d) {
    const int n = top() + 1;
    if (d.rows() != size(n - 1) || d.cols() != static_cast<int>(labels.size())) {
      if (d.rows() == 0 && d.cols() == 0) {
        d = Matrix(size(n - 1), static_cast<int>(labels.size()));
      } else {
        throw DomainError("differential shape does not match the bases in degree " + std::to_string(n));
      }
    }
    labels_.push_back(std::move(labels));
    diffs_.push_back(std::move(d));
  }

  Matrix differential(int n) const {
    if (n < 0) return Matrix(0, 0);
    if (n > top()) return Matrix(size(n - 1), 0);
    return diffs_[static_cast<std::size_t>(n)];
  }

  /// Throws DomainError naming the first degree where d o d != 0.
  void check() const {
    for (int n = 1; n <= top(); ++n) {
      Matrix dd = multiply(field_, differential(n - 1), differential(n));
      if (n >= 1 && !dd.is_zero()) throw DomainError("d o d != 0 in degree " + std::to_string(n));
    }
  }

 private:
  PrimeField field_{2};
  std::vector<std::vector<std::string>> labels_;
  std::vector<Matrix> diffs_;
};

/// Homology in one degree: representatives (columns) and a projection
/// sending any cycle to coordinates in the representative basis.
struct HomologyDegree {
  int degree = 0;
  int dim = 0;
  Matrix representatives;  // size(n) x dim
  Matrix projection;       // dim x size(n); exact on cycles
};

inline int nullity(const PrimeField& f, const Matrix& m) { return m.cols() - rank(f, m); }

/// Representatives are picked greedily from the kernel basis in order, so
/// in degree 0 they are the first vertex of each component.
inline HomologyDegree homology(const ChainComplex& c, int n) {
  const PrimeField& f = c.field();
  HomologyDegree h;
  h.degree = n;
  const int sz = c.size(n);
  Matrix z = kernel(f, c.differential(n));
  Matrix b = image(f, c.differential(n + 1));
  if (b.rows() != sz) b = Matrix(sz, 0);
  Matrix span = b;
  int span_rank = b.cols();
  std::vector<int> chosen;
  for (int k = 0; k < z.cols(); ++k) {
    Matrix trial = Matrix::hcat(span, z.columns({k}));
    if (rank(f, trial) > span_rank) {
      span = std::move(trial);
      ++span_rank;
      chosen.push_back(k);
    }
  }
  h.dim = static_cast<int>(chosen.size());
  h.representatives = z.columns(chosen);
  if (h.representatives.rows() != sz) h.representatives = Matrix(sz, 0);
  if (sz == 0) {
    h.projection = Matrix(0, 0);
    return h;
  }
  Matrix l = left_inverse(f, span);
  std::vector<int> rep_rows;
  for (int k = 0; k < h.dim; ++k) rep_rows.push_back(b.cols() + k);
  h.projection = l.rows_subset(rep_rows);
  return h;
}

inline std::vector<int> betti_numbers(const ChainComplex& c, int max_degree) {
  std::vector<int> out;
  for (int n = 0; n <= max_degree; ++n) {
    const PrimeField& f = c.field();
    out.push_back(nullity(f, c.differential(n)) - rank(f, c.differential(n + 1)));
  }
  return out;
}

/// Degreewise matrices source(n) -> target(n).
struct ChainMap {
  std::vector<Matrix> components;
  const Matrix& at(int n) const { return components.at(static_cast<std::size_t>(n)); }
};

/// Throws DomainError if f d != d f in some degree up to the shorter range.
inline void check_chain_map(const ChainComplex& source, const ChainComplex& target, const ChainMap& f) {
  const PrimeField& k = source.field();
  for (int n = 1; n < static_cast<int>(f.components.size()); ++n) {
    Matrix lhs = multiply(k, target.differential(n), f.at(n));
    Matrix rhs = multiply(k, f.at(n - 1), source.differential(n));
    if (!(lhs == rhs)) throw DomainError("not a chain map in degree " + std::to_string(n));
  }
}

/// Matrix of H_n f between the given homology bases.
inline Matrix induced_map(const PrimeField& k, const Matrix& fn, const HomologyDegree& source,
                          const HomologyDegree& target) {
  if (source.dim == 0 || target.dim == 0) return Matrix(target.dim, source.dim);
  Matrix image_reps = multiply(k, fn, source.representatives);
  return multiply(k, target.projection, image_reps);
}

/// Cells per degree with their face lists; a face index of -1 marks a
/// degenerate face, dropped in the normalized complex.
struct SimplicialChainData {
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<std::vector<int>>> faces;  // faces[n][cell][i]
};

inline ChainComplex normalized_chains(const PrimeField& f, const SimplicialChainData& data) {
  ChainComplex c(f);
  for (std::size_t n = 0; n < data.labels.size(); ++n) {
    const int cols = static_cast<int>(data.labels[n].size());
    const int rows = n == 0 ? 0 : static_cast<int>(data.labels[n - 1].size());
    Matrix d(rows, cols);
    if (n > 0) {
      for (int cell = 0; cell < cols; ++cell) {
        const auto& fl = data.faces[n][static_cast<std::size_t>(cell)];
        for (std::size_t i = 0; i < fl.size(); ++i) {
          if (fl[i] < 0) continue;
          auto sign = i % 2 == 0 ? PrimeField::Elem{1} : f.neg(1);
          d(fl[i], cell) = f.add(d(fl[i], cell), sign);
        }
      }
    }
    c.push_degree(data.labels[n], std::move(d));
  }
  return c;
}

/// Chain data of a simplicial set up to degree `max_degree` (nondegenerate
/// generators only).
inline SimplicialChainData chain_data(const SimplicialSet& x, int max_degree) {
  SimplicialChainData data;
  for (int n = 0; n <= max_degree; ++n) {
    data.labels.emplace_back();
    data.faces.emplace_back();
    for (int g = x.dim_begin(n); g < x.dim_end(n); ++g) {
      data.labels.back().push_back(x.name(g));
      std::vector<int> fl;
      for (const auto& face : x.generator(g).faces)
        fl.push_back(face.degenerate() ? -1 : face.generator - x.dim_begin(n - 1));
      data.faces.back().push_back(std::move(fl));
    }
  }
  return data;
}

inline ChainComplex normalized_chains(const PrimeField& f, const SimplicialSet& x, int max_degree) {
  return normalized_chains(f, chain_data(x, max_degree));
}

}  // namespace sectcx
