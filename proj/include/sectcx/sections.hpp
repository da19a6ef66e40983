#pragma once

// Sections Delta^p x Delta^q -> X over a height word, stored as the images
// of the (p,q)-shuffles, and the bisimplicial structure on them.

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "sectcx/chain_complex.hpp"
#include "sectcx/errors.hpp"
#include "sectcx/height.hpp"
#include "sectcx/parallel.hpp"
#include "sectcx/simplicial_set.hpp"

namespace sectcx {

using GridPoint = std::pair<int, int>;  // (row i in [p], column j in [q])

/// A maximal chain of [p] x [q]: steps are 0 (row + 1) or 1 (column + 1).
struct Shuffle {
  std::vector<int> steps;
  std::vector<GridPoint> points;
};

/// Shuffles in lexicographic order of their step sequences, plus the flip
/// relation: shuffles s' < s that differ from s by swapping steps t, t+1
/// share the face obtained by deleting path point t+1.
struct ShuffleTable {
  int p = 0, q = 0;
  std::vector<Shuffle> shuffles;
  std::map<std::vector<int>, int> index_of;
  std::vector<std::vector<std::pair<int, int>>> earlier_flips;  // (s', face index)

  int index(const std::vector<int>& steps) const { return index_of.at(steps); }
  int count() const { return static_cast<int>(shuffles.size()); }
};

inline std::shared_ptr<const ShuffleTable> shuffle_table(int p, int q) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const ShuffleTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, q}];
  if (slot) return slot;
  auto t = std::make_shared<ShuffleTable>();
  t->p = p;
  t->q = q;
  std::vector<int> steps;
  std::function<void(int, int)> rec = [&](int rows, int cols) {
    if (rows == p && cols == q) {
      Shuffle s;
      s.steps = steps;
      GridPoint cur{0, 0};
      s.points.push_back(cur);
      for (int st : steps) {
        (st == 0 ? cur.first : cur.second)++;
        s.points.push_back(cur);
      }
      t->index_of[steps] = static_cast<int>(t->shuffles.size());
      t->shuffles.push_back(std::move(s));
      return;
    }
    if (rows < p) {
      steps.push_back(0);
      rec(rows + 1, cols);
      steps.pop_back();
    }
    if (cols < q) {
      steps.push_back(1);
      rec(rows, cols + 1);
      steps.pop_back();
    }
  };
  rec(0, 0);
  t->earlier_flips.resize(t->shuffles.size());
  for (std::size_t s = 0; s < t->shuffles.size(); ++s) {
    const auto& st = t->shuffles[s].steps;
    for (std::size_t k = 0; k + 1 < st.size(); ++k) {
      if (st[k] == st[k + 1]) continue;
      std::vector<int> flipped = st;
      std::swap(flipped[k], flipped[k + 1]);
      int other = t->index_of.at(flipped);
      if (other < static_cast<int>(s)) t->earlier_flips[s].emplace_back(other, static_cast<int>(k) + 1);
    }
  }
  slot = t;
  return slot;
}

struct Section {
  int p = 0;
  int q = 0;
  std::vector<int> heights;       // level indices a_0 <= ... <= a_p
  std::vector<SimplexRef> images; // one per shuffle, in table order

  friend auto operator<=>(const Section&, const Section&) = default;
  friend bool operator==(const Section&, const Section&) = default;
};

/// Non-decreasing (or strictly increasing) words of length `len` over
/// levels 0..levels-1, in lexicographic order.
inline std::vector<std::vector<int>> height_words(int levels, int len, bool increasing_only) {
  std::vector<std::vector<int>> out;
  std::vector<int> w;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(w.size()) == len) {
      out.push_back(w);
      return;
    }
    for (int a = from; a < levels; ++a) {
      w.push_back(a);
      rec(increasing_only ? a + 1 : a);
      w.pop_back();
    }
  };
  if (len > 0) rec(0);
  return out;
}

enum class Direction { horizontal, vertical };

class SectionComplex {
 public:
  SectionComplex(const SimplicialSet& x, LevelIndex levels, std::int64_t cap = 1000000)
      : x_(&x), levels_(std::move(levels)), cap_(cap) {}

  const SimplicialSet& space() const { return *x_; }
  const LevelIndex& levels() const { return levels_; }
  std::int64_t cap() const { return cap_; }

  /// Every section over `heights` with vertical dimension q, degenerate ones
  /// included, in lexicographic order of image tuples.
  std::vector<Section> enumerate(const std::vector<int>& heights, int q) const {
    if (heights.empty() || q < 0) throw DomainError("enumerate: need p >= 0 and q >= 0");
    for (std::size_t k = 1; k < heights.size(); ++k)
      if (heights[k] < heights[k - 1]) throw DomainError("enumerate: height word must be non-decreasing");
    const int p = static_cast<int>(heights.size()) - 1;
    const int n = p + q;
    auto table = shuffle_table(p, q);
    const int ns = table->count();

    // Candidate lists per row pattern; shuffles with equal patterns share one.
    std::map<std::vector<int>, int> pattern_slot;
    std::vector<Candidates> pools;
    std::vector<int> pool_of(static_cast<std::size_t>(ns));
    for (int s = 0; s < ns; ++s) {
      std::vector<int> pattern;
      for (const auto& pt : table->shuffles[static_cast<std::size_t>(s)].points)
        pattern.push_back(heights[static_cast<std::size_t>(pt.first)]);
      auto [it, fresh] = pattern_slot.emplace(pattern, static_cast<int>(pools.size()));
      if (fresh) pools.push_back(candidates(pattern, n));
      pool_of[static_cast<std::size_t>(s)] = it->second;
    }

    std::vector<Section> out;
    std::vector<int> choice(static_cast<std::size_t>(ns), -1);
    std::function<void(int)> rec = [&](int s) {
      if (s == ns) {
        Section sec{p, q, heights, {}};
        for (int t = 0; t < ns; ++t)
          sec.images.push_back(pools[static_cast<std::size_t>(pool_of[static_cast<std::size_t>(t)])]
                                   .simplices[static_cast<std::size_t>(choice[static_cast<std::size_t>(t)])]);
        out.push_back(std::move(sec));
        if (static_cast<std::int64_t>(out.size()) > cap_)
          throw ResourceLimitError("section enumeration exceeded the cap of " + std::to_string(cap_));
        return;
      }
      const Candidates& pool = pools[static_cast<std::size_t>(pool_of[static_cast<std::size_t>(s)])];
      for (int c = 0; c < static_cast<int>(pool.simplices.size()); ++c) {
        bool ok = true;
        for (auto [other, face] : table->earlier_flips[static_cast<std::size_t>(s)]) {
          const Candidates& op = pools[static_cast<std::size_t>(pool_of[static_cast<std::size_t>(other)])];
          const auto& mine = pool.faces[static_cast<std::size_t>(c)][static_cast<std::size_t>(face)];
          const auto& theirs = op.faces[static_cast<std::size_t>(choice[static_cast<std::size_t>(other)])][static_cast<std::size_t>(face)];
          if (!(mine == theirs)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        choice[static_cast<std::size_t>(s)] = c;
        rec(s + 1);
      }
      choice[static_cast<std::size_t>(s)] = -1;
    };
    rec(0);
    return out;
  }

  /// rho restricted to a chain of grid points (repeats allowed).
  SimplexRef evaluate(const Section& rho, const std::vector<GridPoint>& points) const {
    auto table = shuffle_table(rho.p, rho.q);
    std::vector<int> steps;
    std::vector<GridPoint> distinct;
    std::vector<int> position;
    GridPoint cur{0, 0};
    int pos = 0;
    auto walk_to = [&](GridPoint target) {
      if (target.first < cur.first || target.second < cur.second)
        throw DomainError("evaluate: points do not form a chain");
      for (; cur.first < target.first; ++cur.first, ++pos) steps.push_back(0);
      for (; cur.second < target.second; ++cur.second, ++pos) steps.push_back(1);
    };
    std::vector<int> theta;
    for (const auto& pt : points) {
      if (pt.first < 0 || pt.first > rho.p || pt.second < 0 || pt.second > rho.q)
        throw DomainError("evaluate: point outside the grid");
      walk_to(pt);
      theta.push_back(pos);
    }
    walk_to({rho.p, rho.q});
    const SimplexRef& top = rho.images[static_cast<std::size_t>(table->index(steps))];
    return x_->pullback(top, theta);
  }

  SimplexRef vertex(const Section& rho, int i, int j) const { return evaluate(rho, {{i, j}}); }

  /// Precompose with row_map x col_map : [np] x [nq] -> [p] x [q].
  Section reindex(const Section& rho, int np, int nq, std::vector<int> heights, const std::vector<int>& row_map,
                  const std::vector<int>& col_map) const {
    auto table = shuffle_table(np, nq);
    Section out{np, nq, std::move(heights), {}};
    out.images.reserve(static_cast<std::size_t>(table->count()));
    for (const auto& sh : table->shuffles) {
      std::vector<GridPoint> pts;
      for (const auto& [i, j] : sh.points)
        pts.emplace_back(row_map[static_cast<std::size_t>(i)], col_map[static_cast<std::size_t>(j)]);
      out.images.push_back(evaluate(rho, pts));
    }
    return out;
  }

  Section face(const Section& rho, Direction dir, int i) const {
    if (dir == Direction::horizontal) {
      if (rho.p < 1 || i < 0 || i > rho.p) throw DomainError("horizontal face index out of range");
      std::vector<int> h = rho.heights;
      h.erase(h.begin() + i);
      return reindex(rho, rho.p - 1, rho.q, std::move(h), ops::coface(rho.p, i), identity_map(rho.q));
    }
    if (rho.q < 1 || i < 0 || i > rho.q) throw DomainError("vertical face index out of range");
    return reindex(rho, rho.p, rho.q - 1, rho.heights, identity_map(rho.p), ops::coface(rho.q, i));
  }

  Section degeneracy(const Section& rho, Direction dir, int j) const {
    if (dir == Direction::horizontal) {
      if (j < 0 || j > rho.p) throw DomainError("horizontal degeneracy index out of range");
      std::vector<int> h = rho.heights;
      h.insert(h.begin() + j, rho.heights[static_cast<std::size_t>(j)]);
      return reindex(rho, rho.p + 1, rho.q, std::move(h), ops::codegeneracy(rho.p, j), identity_map(rho.q));
    }
    if (j < 0 || j > rho.q) throw DomainError("vertical degeneracy index out of range");
    return reindex(rho, rho.p, rho.q + 1, rho.heights, identity_map(rho.p), ops::codegeneracy(rho.q, j));
  }

  bool is_degenerate(const Section& rho, Direction dir) const {
    const int top = dir == Direction::horizontal ? rho.p : rho.q;
    for (int j = 0; j < top; ++j) {
      if (dir == Direction::horizontal && rho.heights[static_cast<std::size_t>(j)] != rho.heights[static_cast<std::size_t>(j) + 1])
        continue;
      if (degeneracy(face(rho, dir, j), dir, j) == rho) return true;
    }
    return false;
  }

  bool is_doubly_nondegenerate(const Section& rho) const {
    return !is_degenerate(rho, Direction::horizontal) && !is_degenerate(rho, Direction::vertical);
  }

  // Diagonal simplicial structure on (n,n)-sections.
  Section diag_face(const Section& rho, int i) const {
    return face(face(rho, Direction::vertical, i), Direction::horizontal, i);
  }
  Section diag_degeneracy(const Section& rho, int j) const {
    return degeneracy(degeneracy(rho, Direction::vertical, j), Direction::horizontal, j);
  }
  bool is_diag_degenerate(const Section& rho) const {
    for (int j = 0; j < rho.p; ++j) {
      if (rho.heights[static_cast<std::size_t>(j)] != rho.heights[static_cast<std::size_t>(j) + 1]) continue;
      if (diag_degeneracy(diag_face(rho, j), j) == rho) return true;
    }
    return false;
  }

  /// Height constraint at every grid vertex and face agreement across flips.
  bool is_valid(const Section& rho) const {
    auto table = shuffle_table(rho.p, rho.q);
    if (static_cast<int>(rho.images.size()) != table->count()) return false;
    for (int s = 0; s < table->count(); ++s) {
      const auto& img = rho.images[static_cast<std::size_t>(s)];
      if (x_->dimension(img) != rho.p + rho.q) return false;
      const auto& pts = table->shuffles[static_cast<std::size_t>(s)].points;
      auto vs = x_->vertices(img);
      for (std::size_t k = 0; k < pts.size(); ++k)
        if (levels_.level_of(vs[k]) != rho.heights[static_cast<std::size_t>(pts[k].first)]) return false;
      for (auto [other, f] : table->earlier_flips[static_cast<std::size_t>(s)])
        if (!(x_->face(img, f) == x_->face(rho.images[static_cast<std::size_t>(other)], f))) return false;
    }
    return true;
  }

  std::string describe(const Section& rho) const {
    std::string s = "[";
    for (std::size_t k = 0; k < rho.heights.size(); ++k)
      s += (k ? "," : "") + format_rational(levels_.value(rho.heights[k]));
    s += "](";
    for (std::size_t k = 0; k < rho.images.size(); ++k) s += (k ? "," : "") + x_->describe(rho.images[k]);
    return s + ")";
  }

 private:
  struct Candidates {
    std::vector<SimplexRef> simplices;
    std::vector<std::vector<SimplexRef>> faces;
  };

  static std::vector<int> identity_map(int n) {
    std::vector<int> m(static_cast<std::size_t>(n + 1));
    for (int v = 0; v <= n; ++v) m[static_cast<std::size_t>(v)] = v;
    return m;
  }

  // n-simplices of X whose k-th vertex has level pattern[k], sorted.
  Candidates candidates(const std::vector<int>& pattern, int n) const {
    Candidates c;
    for (int g = 0; g < x_->size(); ++g) {
      const int m = x_->dim(g);
      if (m > n) break;
      const auto& gv = x_->generator_vertices(g);
      std::vector<int> surj(static_cast<std::size_t>(n + 1));
      std::function<void(int, int)> rec = [&](int k, int val) {
        if (levels_.level_of(gv[static_cast<std::size_t>(val)]) != pattern[static_cast<std::size_t>(k)]) return;
        surj[static_cast<std::size_t>(k)] = val;
        if (k == n) {
          if (val == m) c.simplices.push_back(SimplexRef{g, word_of(surj)});
          return;
        }
        if (m - val > n - k) return;
        rec(k + 1, val);
        if (val < m) rec(k + 1, val + 1);
      };
      rec(0, 0);
    }
    std::sort(c.simplices.begin(), c.simplices.end());
    for (const auto& s : c.simplices) {
      std::vector<SimplexRef> fs;
      if (n >= 1)
        for (int i = 0; i <= n; ++i) fs.push_back(x_->face(s, i));
      c.faces.push_back(std::move(fs));
    }
    return c;
  }

  const SimplicialSet* x_;
  LevelIndex levels_;
  std::int64_t cap_;
};

/// Nondegenerate sections of one bidegree with face incidence into the
/// neighbouring bidegrees; -1 marks a degenerate face.
struct BidegreeCell {
  std::vector<Section> sections;
  std::vector<std::vector<int>> h_faces;
  std::vector<std::vector<int>> v_faces;
  std::map<Section, int> lookup;

  int find(const Section& s) const {
    auto it = lookup.find(s);
    return it == lookup.end() ? -1 : it->second;
  }
  int size() const { return static_cast<int>(sections.size()); }
};

struct TruncationWindow {
  int max_total = 3;          // p + q <= max_total
  int max_p = 3;
  int max_q = 3;
  bool increasing_only = false;  // restrict to strictly increasing height words

  bool contains(int p, int q) const { return p + q <= max_total && p <= max_p && q <= max_q && p >= 0 && q >= 0; }
};

/// Doubly nondegenerate sections over the window, with face incidence.
class SectionTruncation {
 public:
  SectionTruncation(const SectionComplex& sc, TruncationWindow window, int threads = 1)
      : window_(window) {
    const int pmax = std::min(window.max_p, window.max_total);
    cells_.resize(static_cast<std::size_t>(pmax + 1));
    std::atomic<std::int64_t> stored{0};
    for (int p = 0; p <= pmax; ++p) {
      const int qmax = std::min(window.max_q, window.max_total - p);
      cells_[static_cast<std::size_t>(p)].resize(static_cast<std::size_t>(qmax + 1));
      auto words = height_words(sc.levels().level_count(), p + 1, window.increasing_only);
      for (int q = 0; q <= qmax; ++q) {
        std::vector<std::vector<Section>> per_word(words.size());
        parallel_for(static_cast<int>(words.size()), threads, [&](int w) {
          for (auto& s : sc.enumerate(words[static_cast<std::size_t>(w)], q)) {
            if (!sc.is_doubly_nondegenerate(s)) continue;
            per_word[static_cast<std::size_t>(w)].push_back(std::move(s));
            if (++stored > sc.cap())
              throw ResourceLimitError("stored sections exceeded the cap of " + std::to_string(sc.cap()));
          }
        });
        auto& cell = cells_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
        for (auto& chunk : per_word)
          for (auto& s : chunk) {
            cell.lookup.emplace(s, cell.size());
            cell.sections.push_back(std::move(s));
          }
      }
    }
    for (int p = 0; p <= pmax; ++p) {
      for (int q = 0; q < static_cast<int>(cells_[static_cast<std::size_t>(p)].size()); ++q) {
        auto& cell = cells_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
        const BidegreeCell* left = p > 0 ? &at(p - 1, q) : nullptr;
        const BidegreeCell* down = q > 0 ? &at(p, q - 1) : nullptr;
        cell.h_faces.resize(cell.sections.size());
        cell.v_faces.resize(cell.sections.size());
        parallel_for(cell.size(), threads, [&](int k) {
          const Section& s = cell.sections[static_cast<std::size_t>(k)];
          if (left)
            for (int i = 0; i <= p; ++i) {
              Section f = sc.face(s, Direction::horizontal, i);
              int idx = left->find(f);
              if (idx < 0 && !window.increasing_only && sc.is_doubly_nondegenerate(f))
                throw DomainError("truncation is not closed under horizontal faces");
              cell.h_faces[static_cast<std::size_t>(k)].push_back(idx);
            }
          if (down)
            for (int i = 0; i <= q; ++i) {
              Section f = sc.face(s, Direction::vertical, i);
              int idx = down->find(f);
              if (idx < 0 && sc.is_doubly_nondegenerate(f))
                throw DomainError("truncation is not closed under vertical faces");
              cell.v_faces[static_cast<std::size_t>(k)].push_back(idx);
            }
        });
      }
    }
  }

  const TruncationWindow& window() const { return window_; }
  bool has(int p, int q) const {
    return p >= 0 && q >= 0 && p < static_cast<int>(cells_.size()) &&
           q < static_cast<int>(cells_[static_cast<std::size_t>(p)].size());
  }
  const BidegreeCell& at(int p, int q) const {
    if (!has(p, q)) throw WindowError("bidegree (" + std::to_string(p) + "," + std::to_string(q) + ") is outside the truncation", p + q);
    return cells_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
  }
  int size(int p, int q) const { return has(p, q) ? at(p, q).size() : 0; }

 private:
  TruncationWindow window_;
  std::vector<std::vector<BidegreeCell>> cells_;
};

/// Truncation used for total degrees through N: every bidegree with
/// p + q <= N + 1.
inline SectionTruncation build_truncation(const SectionComplex& sc, int max_degree, int threads = 1) {
  if (max_degree < 0) throw DomainError("max degree must be non-negative");
  TruncationWindow w{max_degree + 1, max_degree + 1, max_degree + 1, false};
  return SectionTruncation(sc, w, threads);
}

/// Chain data of diag S_h through dimension N + 1.
inline SimplicialChainData diag_truncation(const SectionComplex& sc, int max_degree, int threads = 1) {
  SimplicialChainData data;
  std::vector<std::map<Section, int>> lookup;
  for (int n = 0; n <= max_degree + 1; ++n) {
    auto words = height_words(sc.levels().level_count(), n + 1, false);
    std::vector<std::vector<Section>> per_word(words.size());
    parallel_for(static_cast<int>(words.size()), threads, [&](int w) {
      for (auto& s : sc.enumerate(words[static_cast<std::size_t>(w)], n))
        if (!sc.is_diag_degenerate(s)) per_word[static_cast<std::size_t>(w)].push_back(std::move(s));
    });
    std::vector<Section> cells;
    for (auto& chunk : per_word)
      for (auto& s : chunk) cells.push_back(std::move(s));
    lookup.emplace_back();
    data.labels.emplace_back();
    data.faces.emplace_back(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) {
      lookup.back().emplace(cells[k], static_cast<int>(k));
      data.labels.back().push_back(sc.describe(cells[k]));
    }
    if (n == 0) continue;
    parallel_for(static_cast<int>(cells.size()), threads, [&](int k) {
      auto& fl = data.faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
      for (int i = 0; i <= n; ++i) {
        Section f = sc.diag_face(cells[static_cast<std::size_t>(k)], i);
        auto it = lookup[static_cast<std::size_t>(n - 1)].find(f);
        fl.push_back(it == lookup[static_cast<std::size_t>(n - 1)].end() ? -1 : it->second);
      }
    });
  }
  return data;
}

}  // namespace sectcx
