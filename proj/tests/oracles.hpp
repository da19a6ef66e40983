#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "sectcx/chain_complex.hpp"
#include "sectcx/sections.hpp"

namespace oracle {

using namespace sectcx;

/// Rewrites a degeneracy word with s_i s_j = s_{j+1} s_i (i <= j) until it is
/// strictly decreasing.
inline DegeneracyWord normalize_by_identities(DegeneracyWord w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] <= w[k + 1]) {
        int i = w[k], j = w[k + 1];
        w[k] = j + 1;
        w[k + 1] = i;
        changed = true;
      }
    }
  }
  return w;
}

/// Unnormalized chains: every simplex, degenerate or not, is a basis element.
inline ChainComplex moore_complex(const SimplicialSet& x, const PrimeField& f, int top) {
  ChainComplex c(f);
  std::vector<std::vector<SimplexRef>> cells;
  for (int n = 0; n <= top; ++n) {
    cells.push_back(x.simplices(n));
    std::vector<std::string> labels;
    for (const auto& s : cells.back()) labels.push_back(x.describe(s));
    Matrix d(n > 0 ? static_cast<int>(cells[n - 1].size()) : 0, static_cast<int>(cells.back().size()));
    if (n > 0)
      for (std::size_t k = 0; k < cells.back().size(); ++k)
        for (int i = 0; i <= n; ++i) {
          auto face = x.face(cells.back()[k], i);
          int row = static_cast<int>(std::lower_bound(cells[n - 1].begin(), cells[n - 1].end(), face) - cells[n - 1].begin());
          d(row, static_cast<int>(k)) = f.add(d(row, static_cast<int>(k)), i % 2 ? f.neg(1) : 1);
        }
    c.push_degree(std::move(labels), std::move(d));
  }
  return c;
}

/// Strictly increasing chains in [p] x [q] of length k + 1.
inline std::vector<std::vector<GridPoint>> grid_chains(int p, int q, int k) {
  std::vector<std::vector<GridPoint>> out;
  std::vector<GridPoint> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == k + 1) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i <= p; ++i)
      for (int j = 0; j <= q; ++j) {
        if (!cur.empty()) {
          auto [a, b] = cur.back();
          if (i < a || j < b || (i == a && j == b)) continue;
        }
        cur.push_back({i, j});
        rec();
        cur.pop_back();
      }
  };
  rec();
  return out;
}

/// All sections over `heights` with vertical dimension q, found by assigning
/// a simplex of X to every nondegenerate simplex of Delta^p x Delta^q,
/// dimension by dimension, subject to the face relations.
inline std::vector<Section> naive_sections(const SimplicialSet& x, const LevelIndex& levels,
                                           const std::vector<int>& heights, int q) {
  const int p = static_cast<int>(heights.size()) - 1;
  std::vector<std::vector<GridPoint>> chains;
  std::vector<int> dim_of;
  for (int k = 0; k <= p + q; ++k)
    for (auto& c : grid_chains(p, q, k)) {
      chains.push_back(std::move(c));
      dim_of.push_back(k);
    }
  std::map<std::vector<GridPoint>, int> index;
  for (std::size_t c = 0; c < chains.size(); ++c) index[chains[c]] = static_cast<int>(c);
  std::vector<std::vector<SimplexRef>> all;
  for (int k = 0; k <= p + q; ++k) all.push_back(x.simplices(k));

  std::vector<SimplexRef> assign(chains.size());
  std::vector<Section> out;
  auto table = shuffle_table(p, q);
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == chains.size()) {
      Section s{p, q, heights, {}};
      for (const auto& sh : table->shuffles) s.images.push_back(assign[static_cast<std::size_t>(index.at(sh.points))]);
      out.push_back(std::move(s));
      return;
    }
    const int k = dim_of[c];
    for (const auto& cand : all[static_cast<std::size_t>(k)]) {
      bool ok = true;
      if (k == 0) {
        ok = levels.level_of(cand.generator) == heights[static_cast<std::size_t>(chains[c][0].first)];
      } else {
        for (int i = 0; i <= k && ok; ++i) {
          auto sub = chains[c];
          sub.erase(sub.begin() + i);
          ok = x.face(cand, i) == assign[static_cast<std::size_t>(index.at(sub))];
        }
      }
      if (!ok) continue;
      assign[c] = cand;
      rec(c + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
