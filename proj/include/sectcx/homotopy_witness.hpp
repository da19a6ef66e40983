#pragma once

// Vertex formulas for the grid self-maps phi_{n,s}, psi_{n,s} of
// Delta^n x Delta^n and exhaustive checks of their face/degeneracy squares.

#include <sstream>
#include <string>
#include <vector>

#include "sectcx/errors.hpp"
#include "sectcx/sections.hpp"

namespace sectcx {

enum class Family { phi, psi };

inline const char* family_name(Family f) { return f == Family::phi ? "phi" : "psi"; }

struct GridEndo {
  Family family = Family::phi;
  int n = 0;
  int s = 0;  // 0 <= s <= n + 1
};

inline GridPoint eval(const GridEndo& m, GridPoint v) {
  auto [i, j] = v;
  if (m.n < 0 || m.s < 0 || m.s > m.n + 1) throw DomainError("grid map parameters out of range");
  if (i < 0 || i > m.n || j < 0 || j > m.n) throw DomainError("grid point out of range");
  if (m.family == Family::phi) {
    if (i > m.n - m.s && j <= i) return {i, i};
    return {i, j};
  }
  if (j <= i) return {i, i};
  if (i < m.s && j >= i) return {i, i};
  return {i, j};
}

inline bool preserves_order(const GridEndo& m) {
  for (int i = 0; i <= m.n; ++i)
    for (int j = 0; j <= m.n; ++j)
      for (int k = i; k <= m.n; ++k)
        for (int l = j; l <= m.n; ++l) {
          auto a = eval(m, {i, j});
          auto b = eval(m, {k, l});
          if (a.first > b.first || a.second > b.second) return false;
        }
  return true;
}

enum class Square { coface, codegeneracy };

/// Which s' the lower-dimensional map should carry in a square.
enum class IndexRule {
  literal,  // s' = s for l <= n - s, s - 1 otherwise, for both families
  horn      // s' forced by the action of faces/degeneracies on Lambda^2_2 simplices
};

/// s' for the (n-1)-dimensional side, or -1 when the square never arises.
inline int partner_index(IndexRule rule, Family f, Square sq, int n, int s, int l) {
  if (rule == IndexRule::literal) return l <= n - s ? s : s - 1;
  if (f == Family::phi) {
    // t = 0^{n-s+1} 2^s
    if (sq == Square::coface) return l <= n - s ? s : s - 1;
    if (l < n - s) return s;
    if (l > n - s) return s - 1;
    return -1;
  }
  // t = 1^s 2^{n-s+1}
  if (sq == Square::coface) return l >= s ? s : s - 1;
  if (l >= s) return s;
  if (l < s - 1) return s - 1;
  return -1;
}

/// Compares both composites on every vertex.
///   coface:       (d^l x d^l) o m_{n-1,s'}  vs  m_{n,s} o (d^l x d^l)
///   codegeneracy: (s^l x s^l) o m_{n,s}     vs  m_{n-1,s'} o (s^l x s^l)
inline bool square_commutes(Family f, Square sq, int n, int s, int l, int s_prime) {
  if (s_prime < 0 || s_prime > n) return false;
  GridEndo big{f, n, s}, small{f, n - 1, s_prime};
  if (sq == Square::coface) {
    auto d = ops::coface(n, l);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto a = eval(small, {i, j});
        GridPoint lhs{d[static_cast<std::size_t>(a.first)], d[static_cast<std::size_t>(a.second)]};
        GridPoint rhs = eval(big, {d[static_cast<std::size_t>(i)], d[static_cast<std::size_t>(j)]});
        if (lhs != rhs) return false;
      }
    return true;
  }
  auto sg = ops::codegeneracy(n - 1, l);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      auto a = eval(big, {i, j});
      GridPoint lhs{sg[static_cast<std::size_t>(a.first)], sg[static_cast<std::size_t>(a.second)]};
      GridPoint rhs = eval(small, {sg[static_cast<std::size_t>(i)], sg[static_cast<std::size_t>(j)]});
      if (lhs != rhs) return false;
    }
  return true;
}

struct SquareCase {
  Family family;
  Square square;
  int n, s, l, s_prime;
  std::string describe() const {
    std::ostringstream o;
    o << family_name(family) << (square == Square::coface ? " coface" : " codegeneracy") << " square n=" << n
      << " s=" << s << " l=" << l << " s'=" << s_prime;
    return o.str();
  }
};

struct SquareReport {
  int squares_checked = 0;
  std::vector<SquareCase> failures;          // under the horn rule (asserted)
  std::vector<SquareCase> literal_failures;  // under the literal rule (reported)
  bool monotone = true;
  bool phi_start_identity = true;    // phi_{n,0} = id
  bool psi_end_projection = true;    // psi_{n,n} = psi_{n,n+1} = (i,j) -> (i,i)
  bool phi11_equals_psi10 = true;
  std::vector<bool> phi_top_equals_psi0;  // per n: phi_{n,n+1} = psi_{n,0}, reported only

  bool ok() const {
    return failures.empty() && monotone && phi_start_identity && psi_end_projection && phi11_equals_psi10;
  }
};

inline bool same_map(const GridEndo& a, const GridEndo& b) {
  for (int i = 0; i <= a.n; ++i)
    for (int j = 0; j <= a.n; ++j)
      if (eval(a, {i, j}) != eval(b, {i, j})) return false;
  return true;
}

inline SquareReport square_check(int n_max) {
  if (n_max < 1) throw DomainError("square check needs n_max >= 1");
  SquareReport r;
  for (int n = 0; n <= n_max; ++n) {
    for (int s = 0; s <= n + 1; ++s)
      for (Family f : {Family::phi, Family::psi})
        if (!preserves_order({f, n, s})) r.monotone = false;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        if (eval({Family::phi, n, 0}, {i, j}) != GridPoint{i, j}) r.phi_start_identity = false;
        if (eval({Family::psi, n, n}, {i, j}) != GridPoint{i, i}) r.psi_end_projection = false;
        if (eval({Family::psi, n, n + 1}, {i, j}) != GridPoint{i, i}) r.psi_end_projection = false;
      }
    r.phi_top_equals_psi0.push_back(same_map({Family::phi, n, n + 1}, {Family::psi, n, 0}));
  }
  r.phi11_equals_psi10 = same_map({Family::phi, 1, 1}, {Family::psi, 1, 0}) &&
                         same_map({Family::phi, 1, 2}, {Family::psi, 1, 0});
  for (int n = 1; n <= n_max; ++n)
    for (int s = 0; s <= n + 1; ++s)
      for (Family f : {Family::phi, Family::psi}) {
        for (Square sq : {Square::coface, Square::codegeneracy}) {
          const int l_max = sq == Square::coface ? n : n - 1;
          for (int l = 0; l <= l_max; ++l) {
            int sp = partner_index(IndexRule::horn, f, sq, n, s, l);
            if (sp >= 0) {
              ++r.squares_checked;
              if (!square_commutes(f, sq, n, s, l, sp)) r.failures.push_back({f, sq, n, s, l, sp});
            }
            int lp = partner_index(IndexRule::literal, f, sq, n, s, l);
            if (!square_commutes(f, sq, n, s, l, lp)) r.literal_failures.push_back({f, sq, n, s, l, lp});
          }
        }
      }
  return r;
}

}  // namespace sectcx
