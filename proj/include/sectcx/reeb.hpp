#pragma once

// Reeb complexes G_q, the Reeb graph of a subdivided height function, and
// the barcode-like diagram.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "sectcx/chain_complex.hpp"
#include "sectcx/errors.hpp"
#include "sectcx/field.hpp"
#include "sectcx/height.hpp"
#include "sectcx/parallel.hpp"
#include "sectcx/sections.hpp"

namespace sectcx {

/// Vertical chain complex of S_h[a] for one increasing word, with homology.
struct WordHomology {
  std::vector<int> word;
  std::vector<int> start;  // per vertical degree, first index inside the truncation cell
  ChainComplex chains;
  std::vector<HomologyDegree> homology;  // degrees 0..max_q
};

/// Section spaces over strictly increasing height words, vertical degrees
/// through max_q + 1, and their homology through max_q.
class ReebData {
 public:
  ReebData(const SectionComplex& sc, const PrimeField& f, int max_q, int threads = 1)
      : sc_(&sc), field_(f), max_q_(max_q) {
    if (max_q < 0) throw DomainError("homology degree must be non-negative");
    subdivision_ = subdivision_number(sc.space(), sc.levels());
    TruncationWindow w{subdivision_ + max_q + 1, subdivision_, max_q + 1, true};
    tr_ = std::make_unique<SectionTruncation>(sc, w, threads);
    for (int p = 0; p <= subdivision_; ++p) {
      for (const auto& word : height_words(sc.levels().level_count(), p + 1, true)) {
        WordHomology wh;
        wh.word = word;
        words_.push_back(std::move(wh));
      }
    }
    parallel_for(static_cast<int>(words_.size()), threads, [&](int k) { fill(words_[static_cast<std::size_t>(k)]); });
    for (std::size_t k = 0; k < words_.size(); ++k) index_[words_[k].word] = static_cast<int>(k);
  }

  const SectionComplex& sections() const { return *sc_; }
  const PrimeField& field() const { return field_; }
  int max_q() const { return max_q_; }
  int subdivision() const { return subdivision_; }
  const std::vector<WordHomology>& words() const { return words_; }

  const WordHomology& word(const std::vector<int>& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw DomainError("height word is not strictly increasing or outside the window");
    return words_[static_cast<std::size_t>(it->second)];
  }

  /// Chain map d_i^h : C S_h[a] -> C S_h[a minus a_i] in vertical degree j.
  Matrix face_chain_map(const WordHomology& src, int i, int j) const {
    const int p = static_cast<int>(src.word.size()) - 1;
    std::vector<int> tw = src.word;
    tw.erase(tw.begin() + i);
    const WordHomology& tgt = word(tw);
    const BidegreeCell& cell = tr_->at(p, j);
    Matrix m(tgt.chains.size(j), src.chains.size(j));
    for (int k = 0; k < src.chains.size(j); ++k) {
      int t = cell.h_faces[static_cast<std::size_t>(src.start[static_cast<std::size_t>(j)] + k)][static_cast<std::size_t>(i)];
      if (t >= 0) m(t - tgt.start[static_cast<std::size_t>(j)], k) = field_.add(m(t - tgt.start[static_cast<std::size_t>(j)], k), 1);
    }
    return m;
  }

  /// H_q d_i^h in the chosen homology bases.
  Matrix face_homology_map(const WordHomology& src, int i, int q) const {
    std::vector<int> tw = src.word;
    tw.erase(tw.begin() + i);
    const WordHomology& tgt = word(tw);
    return induced_map(field_, face_chain_map(src, i, q), src.homology[static_cast<std::size_t>(q)],
                       tgt.homology[static_cast<std::size_t>(q)]);
  }

  std::string word_label(const std::vector<int>& w) const {
    std::string s = "[";
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + format_rational(sc_->levels().value(w[k]));
    return s + "]";
  }

 private:
  void fill(WordHomology& wh) const {
    const int p = static_cast<int>(wh.word.size()) - 1;
    wh.chains = ChainComplex(field_);
    for (int j = 0; j <= max_q_ + 1; ++j) {
      const BidegreeCell& cell = tr_->at(p, j);
      auto lo = std::lower_bound(cell.sections.begin(), cell.sections.end(), wh.word,
                                 [](const Section& s, const std::vector<int>& w) { return s.heights < w; });
      auto hi = std::upper_bound(cell.sections.begin(), cell.sections.end(), wh.word,
                                 [](const std::vector<int>& w, const Section& s) { return w < s.heights; });
      const int begin = static_cast<int>(lo - cell.sections.begin());
      const int count = static_cast<int>(hi - lo);
      wh.start.push_back(begin);
      std::vector<std::string> labels;
      for (int k = 0; k < count; ++k) labels.push_back(sc_->describe(cell.sections[static_cast<std::size_t>(begin + k)]));
      Matrix d(j > 0 ? wh.chains.size(j - 1) : 0, count);
      if (j > 0)
        for (int k = 0; k < count; ++k) {
          const auto& vf = cell.v_faces[static_cast<std::size_t>(begin + k)];
          for (std::size_t i = 0; i < vf.size(); ++i)
            if (vf[i] >= 0) {
              int row = vf[i] - wh.start[static_cast<std::size_t>(j - 1)];
              d(row, k) = field_.add(d(row, k), i % 2 ? field_.neg(1) : 1);
            }
        }
      wh.chains.push_degree(std::move(labels), std::move(d));
    }
    for (int q = 0; q <= max_q_; ++q) wh.homology.push_back(sectcx::homology(wh.chains, q));
  }

  const SectionComplex* sc_;
  PrimeField field_;
  int max_q_;
  int subdivision_ = 0;
  std::unique_ptr<SectionTruncation> tr_;
  std::vector<WordHomology> words_;
  std::map<std::vector<int>, int> index_;
};

/// G_q: degree p spanned by (increasing word of length p+1, generator of
/// H_q S_h[word]), differential sum (-1)^i H_q d_i^h.
struct ReebComplex {
  int q = 0;
  ChainComplex complex;
  std::vector<std::vector<std::pair<std::vector<int>, int>>> basis;  // per p
};

inline ReebComplex reeb_complex(const ReebData& data, int q) {
  if (q < 0 || q > data.max_q())
    throw WindowError("homology degree " + std::to_string(q) + " needs max degree " + std::to_string(q), q);
  const PrimeField& f = data.field();
  ReebComplex rc;
  rc.q = q;
  rc.complex = ChainComplex(f);
  std::vector<std::map<std::vector<int>, int>> offset;
  for (int p = 0; p <= data.subdivision(); ++p) {
    rc.basis.emplace_back();
    offset.emplace_back();
    std::vector<std::string> labels;
    for (const auto& wh : data.words()) {
      if (static_cast<int>(wh.word.size()) != p + 1) continue;
      const int dim = wh.homology[static_cast<std::size_t>(q)].dim;
      if (dim == 0) continue;
      offset.back()[wh.word] = static_cast<int>(rc.basis.back().size());
      for (int k = 0; k < dim; ++k) {
        rc.basis.back().emplace_back(wh.word, k);
        labels.push_back(data.word_label(wh.word) + "#" + std::to_string(k));
      }
    }
    Matrix d(p > 0 ? rc.complex.size(p - 1) : 0, static_cast<int>(labels.size()));
    if (p > 0)
      for (const auto& [word, col0] : offset.back()) {
        const WordHomology& wh = data.word(word);
        for (int i = 0; i <= p; ++i) {
          std::vector<int> tw = word;
          tw.erase(tw.begin() + i);
          auto it = offset[static_cast<std::size_t>(p - 1)].find(tw);
          if (it == offset[static_cast<std::size_t>(p - 1)].end()) continue;
          Matrix m = data.face_homology_map(wh, i, q);
          for (int a = 0; a < m.rows(); ++a)
            for (int b = 0; b < m.cols(); ++b)
              if (m(a, b)) {
                auto v = i % 2 ? f.neg(m(a, b)) : m(a, b);
                d(it->second + a, col0 + b) = f.add(d(it->second + a, col0 + b), v);
              }
        }
      }
    rc.complex.push_degree(std::move(labels), std::move(d));
  }
  return rc;
}

/// Betti numbers of G_q in degrees 0..top.
inline std::vector<int> reeb_homology(const ReebComplex& rc) {
  return betti_numbers(rc.complex, rc.complex.top());
}

struct ReebGraph {
  struct Vertex {
    int level;
    int component;  // index of the H_0 generator of the fiber
  };
  struct Edge {
    int lower_level;
    int component;  // index of the H_0 generator of S_h[a,b]
    int source;     // vertex index at the lower level
    int target;     // vertex index at the upper level
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  int components() const {
    std::vector<int> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int a) {
      return parent[static_cast<std::size_t>(a)] == a ? a : parent[static_cast<std::size_t>(a)] = root(parent[static_cast<std::size_t>(a)]);
    };
    int count = static_cast<int>(vertices.size());
    for (const auto& e : edges) {
      int a = root(e.source), b = root(e.target);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --count;
      }
    }
    return count;
  }
  int first_betti() const {
    return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + components();
  }
};

namespace detail {
// Index of the single nonzero entry of a column of an H_0 map, or -1.
inline int component_image(const Matrix& m, int col) {
  int hit = -1;
  for (int i = 0; i < m.rows(); ++i)
    if (m(i, col)) {
      if (hit >= 0) return -2;
      hit = i;
    }
  return hit;
}
}  // namespace detail

/// Requires is_subdivided. Vertices are fiber components, edges are
/// components of S_h[a, a+1] attached through H_0 d_1^h and H_0 d_0^h.
inline ReebGraph reeb_graph(const ReebData& data) {
  const SectionComplex& sc = data.sections();
  if (auto e = level_skipping_edge(sc.space(), sc.levels())) {
    const auto& vs = sc.space().generator_vertices(*e);
    throw DomainError("the height function is not subdivided: edge '" + sc.space().name(*e) + "' runs from level " +
                      format_rational(sc.levels().value(sc.levels().level_of(vs[0]))) + " to " +
                      format_rational(sc.levels().value(sc.levels().level_of(vs[1]))));
  }
  ReebGraph g;
  std::map<std::pair<int, int>, int> vertex_of;
  const int levels = sc.levels().level_count();
  for (int a = 0; a < levels; ++a) {
    const auto& wh = data.word({a});
    for (int k = 0; k < wh.homology[0].dim; ++k) {
      vertex_of[{a, k}] = static_cast<int>(g.vertices.size());
      g.vertices.push_back({a, k});
    }
  }
  for (int a = 0; a + 1 < levels; ++a) {
    const auto& wh = data.word({a, a + 1});
    Matrix lower = data.face_homology_map(wh, 1, 0);
    Matrix upper = data.face_homology_map(wh, 0, 0);
    for (int k = 0; k < wh.homology[0].dim; ++k) {
      int s = detail::component_image(lower, k);
      int t = detail::component_image(upper, k);
      if (s < 0 || t < 0) throw DomainError("edge component does not map to a single fiber component");
      g.edges.push_back({a, k, vertex_of.at({a, s}), vertex_of.at({a + 1, t})});
    }
  }
  return g;
}

inline nlohmann::json reeb_graph_json(const ReebData& data, const ReebGraph& g) {
  const auto& lv = data.sections().levels();
  nlohmann::json doc;
  doc["vertices"] = nlohmann::json::array();
  for (std::size_t k = 0; k < g.vertices.size(); ++k)
    doc["vertices"].push_back({{"id", k}, {"level", format_rational(lv.value(g.vertices[k].level))}, {"component", g.vertices[k].component}});
  doc["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges)
    doc["edges"].push_back({{"levels", {format_rational(lv.value(e.lower_level)), format_rational(lv.value(e.lower_level + 1))}},
                            {"component", e.component}, {"source", e.source}, {"target", e.target}});
  doc["betti"] = {g.components(), g.first_betti()};
  return doc;
}

/// Barcode-like diagram: per q, filled nodes for the H_q generators of each
/// fiber and one segment per H_q generator of each S_h[a,b]; an endpoint
/// whose induced map vanishes is an open node.
struct Barcode {
  struct Node {
    int level;
    int index;
  };
  struct Endpoint {
    int level;
    bool open;
    std::vector<std::int64_t> coefficients;  // image in H_q of the fiber
  };
  struct Segment {
    std::vector<int> word;
    int index;
    Endpoint lower, upper;
  };
  struct Track {
    int q;
    std::vector<Node> nodes;
    std::vector<Segment> segments;
  };
  std::vector<std::string> levels;
  std::vector<Track> tracks;
};

inline Barcode barcode(const ReebData& data) {
  Barcode bc;
  const auto& lv = data.sections().levels();
  if (data.sections().space().empty()) return bc;
  const PrimeField& f = data.field();
  for (const auto& r : lv.levels()) bc.levels.push_back(format_rational(r));
  for (int q = 0; q <= data.max_q(); ++q) {
    Barcode::Track t;
    t.q = q;
    for (int a = 0; a < lv.level_count(); ++a)
      for (int k = 0; k < data.word({a}).homology[static_cast<std::size_t>(q)].dim; ++k) t.nodes.push_back({a, k});
    if (data.subdivision() >= 1) {
      for (const auto& wh : data.words()) {
        if (wh.word.size() != 2) continue;
        const int dim = wh.homology[static_cast<std::size_t>(q)].dim;
        if (dim == 0) continue;
        Matrix lower = data.face_homology_map(wh, 1, q);
        Matrix upper = data.face_homology_map(wh, 0, q);
        auto endpoint = [&](const Matrix& m, int level, int col) {
          Barcode::Endpoint e{level, true, {}};
          for (int i = 0; i < m.rows(); ++i) {
            e.coefficients.push_back(f.signed_value(m(i, col)));
            if (m(i, col)) e.open = false;
          }
          return e;
        };
        for (int k = 0; k < dim; ++k)
          t.segments.push_back({wh.word, k, endpoint(lower, wh.word[0], k), endpoint(upper, wh.word[1], k)});
      }
    }
    bc.tracks.push_back(std::move(t));
  }
  return bc;
}

inline nlohmann::json barcode_json(const Barcode& bc) {
  nlohmann::json doc;
  doc["levels"] = bc.levels;
  doc["tracks"] = nlohmann::json::array();
  for (const auto& t : bc.tracks) {
    nlohmann::json jt;
    jt["q"] = t.q;
    jt["nodes"] = nlohmann::json::array();
    for (const auto& n : t.nodes) jt["nodes"].push_back({{"level", bc.levels[static_cast<std::size_t>(n.level)]}, {"index", n.index}});
    jt["segments"] = nlohmann::json::array();
    for (const auto& s : t.segments) {
      auto ep = [&](const Barcode::Endpoint& e) {
        return nlohmann::json{{"level", bc.levels[static_cast<std::size_t>(e.level)]}, {"open", e.open}, {"image", e.coefficients}};
      };
      jt["segments"].push_back({{"from", bc.levels[static_cast<std::size_t>(s.word[0])]},
                                {"to", bc.levels[static_cast<std::size_t>(s.word[1])]},
                                {"index", s.index},
                                {"lower", ep(s.lower)},
                                {"upper", ep(s.upper)}});
    }
    doc["tracks"].push_back(std::move(jt));
  }
  return doc;
}

inline std::string barcode_dot(const Barcode& bc) {
  std::ostringstream out;
  out << "graph barcode {\n  rankdir=LR;\n  node [shape=circle, label=\"\", width=0.2];\n";
  for (const auto& t : bc.tracks) {
    out << "  subgraph cluster_H" << t.q << " {\n    label=\"H" << t.q << "\";\n";
    for (const auto& n : t.nodes)
      out << "    q" << t.q << "_l" << n.level << "_g" << n.index << " [style=filled, fillcolor=black, xlabel=\""
          << bc.levels[static_cast<std::size_t>(n.level)] << "\"];\n";
    int open = 0;
    for (const auto& s : t.segments) {
      auto end_name = [&](const Barcode::Endpoint& e) {
        if (e.open) {
          std::string name = "q" + std::to_string(t.q) + "_open" + std::to_string(open++);
          out << "    " << name << " [style=solid, xlabel=\"" << bc.levels[static_cast<std::size_t>(e.level)] << "\"];\n";
          return std::vector<std::string>{name};
        }
        std::vector<std::string> names;
        for (std::size_t i = 0; i < e.coefficients.size(); ++i)
          if (e.coefficients[i])
            names.push_back("q" + std::to_string(t.q) + "_l" + std::to_string(e.level) + "_g" + std::to_string(i));
        return names;
      };
      auto lo = end_name(s.lower);
      auto hi = end_name(s.upper);
      for (const auto& a : lo)
        for (const auto& b : hi) out << "    " << a << " -- " << b << ";\n";
    }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sectcx
