#pragma once

// Builders for the worked examples and for random test inputs.

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sectcx/height.hpp"
#include "sectcx/simplicial_set.hpp"

namespace sectcx::examples {

struct Example {
  std::string name;
  SimplicialSet space;
  HeightFunction heights;
};

inline HeightFunction heights_of(std::vector<std::pair<std::string, Rational>> values) {
  HeightFunction h;
  for (auto& [k, v] : values) h.values[k] = v;
  return h;
}

/// Delta^2 with heights 0,1,2: vertices 0,1,2, edges 01,02,12, face 012.
inline Example triangle() {
  return {"triangle", standard_simplex(2), heights_of({{"0", 0}, {"1", 1}, {"2", 2}})};
}

/// Delta^2 with vertex 0 at height 0 and vertices 1, 2 at height 1.
inline Example triangle_flat_top() {
  return {"triangle_flat_top", standard_simplex(2), heights_of({{"0", 0}, {"1", 1}, {"2", 1}})};
}

/// One vertex and one 2-simplex whose faces are all degenerate.
inline Example point_sphere() {
  SimplicialSetBuilder b;
  b.add("v", 0).add("f", 2, {{{0}, "v"}, {{0}, "v"}, {{0}, "v"}});
  return {"point_sphere", b.build(), heights_of({{"v", 0}})};
}

/// Two vertices, two edges from the first to the second.
inline Example circle() {
  SimplicialSetBuilder b;
  b.add("u", 0).add("v", 0).add("e", 1, {{{}, "v"}, {{}, "u"}}).add("f", 1, {{{}, "v"}, {{}, "u"}});
  return {"circle", b.build(), heights_of({{"u", 0}, {"v", 1}})};
}

/// Two triangles a, b on vertices 0,1,2 glued along their boundary.
inline Example sphere() {
  SimplicialSetBuilder b;
  b.add("0", 0).add("1", 0).add("2", 0);
  b.add("01", 1, {{{}, "1"}, {{}, "0"}}).add("02", 1, {{{}, "2"}, {{}, "0"}}).add("12", 1, {{{}, "2"}, {{}, "1"}});
  b.add("a", 2, {{{}, "12"}, {{}, "02"}, {{}, "01"}}).add("b", 2, {{{}, "12"}, {{}, "02"}, {{}, "01"}});
  return {"sphere", b.build(), heights_of({{"0", 0}, {"1", 1}, {"2", 2}})};
}

/// The sphere subdivided at height 1: vertices 0, 1, 1' (x), 2; each
/// hemisphere is split into [0,1',1] and [1',1,2], the edge 1'1 is not shared.
inline Example sphere_subdivided() {
  SimplicialSetBuilder b;
  b.add("0", 0).add("x", 0).add("1", 0).add("2", 0);
  b.add("0x", 1, {{{}, "x"}, {{}, "0"}}).add("01", 1, {{{}, "1"}, {{}, "0"}});
  b.add("x2", 1, {{{}, "2"}, {{}, "x"}}).add("12", 1, {{{}, "2"}, {{}, "1"}});
  b.add("x1a", 1, {{{}, "1"}, {{}, "x"}}).add("x1b", 1, {{{}, "1"}, {{}, "x"}});
  b.add("La", 2, {{{}, "x1a"}, {{}, "01"}, {{}, "0x"}}).add("Ua", 2, {{{}, "12"}, {{}, "x2"}, {{}, "x1a"}});
  b.add("Lb", 2, {{{}, "x1b"}, {{}, "01"}, {{}, "0x"}}).add("Ub", 2, {{{}, "12"}, {{}, "x2"}, {{}, "x1b"}});
  return {"sphere_subdivided", b.build(), heights_of({{"0", 0}, {"x", 1}, {"1", 1}, {"2", 2}})};
}

/// A cylinder whose boundary circles are the fibers at 0 and 2 and whose
/// fiber at 1 is a single edge; the two triangles spanning all three levels
/// are B2-M0-T0 and B2-M1-T1.
inline Example cylinder() {
  auto x = ordered_complex({{"B0", "B2", "M0"}, {"B2", "M0", "T0"}, {"B2", "T0", "T2"},
                            {"B1", "B2", "M1"}, {"B2", "M1", "T1"}, {"B2", "T1", "T2"},
                            {"B0", "B1", "M0"}, {"B1", "M0", "M1"}, {"M0", "M1", "T0"},
                            {"M1", "T0", "T1"}});
  return {"cylinder", std::move(x),
          heights_of({{"B0", 0}, {"B1", 0}, {"B2", 0}, {"M0", 1}, {"M1", 1}, {"T0", 2}, {"T1", 2}, {"T2", 2}})};
}

/// Random glued complex: up to `max_triangles` copies of Delta^2 glued
/// along shared vertices and edges of a random vertex order, with random
/// monotone heights. Sometimes a triangle is doubled along its boundary or a
/// triangle with a collapsed face d_2 = s_0 v is attached along an edge.
inline Example random_gluing(std::mt19937& rng, int max_triangles) {
  std::uniform_int_distribution<int> tri_count(1, max_triangles);
  const int t = tri_count(rng);
  const int pool = std::uniform_int_distribution<int>(3, 3 + t)(rng);
  // Vertex pool 0..pool-1 in a fixed total order; a triangle picks 3 vertices
  // in increasing order.
  std::vector<std::vector<std::string>> facets;
  std::vector<int> all(static_cast<std::size_t>(pool));
  for (int v = 0; v < pool; ++v) all[static_cast<std::size_t>(v)] = v;
  for (int k = 0; k < t; ++k) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> pick(all.begin(), all.begin() + 3);
    std::sort(pick.begin(), pick.end());
    std::vector<std::string> f;
    for (int v : pick) f.push_back("v" + std::to_string(v));
    facets.push_back(std::move(f));
  }
  SimplicialSet base = ordered_complex(facets);
  std::vector<int> level(static_cast<std::size_t>(pool));
  int current = 0;
  std::uniform_int_distribution<int> step(0, 2);
  for (int v = 0; v < pool; ++v) {
    current += v == 0 ? 0 : (step(rng) == 0 ? 0 : 1);
    level[static_cast<std::size_t>(v)] = current;
  }
  HeightFunction h;
  for (int g = base.dim_begin(0); g < base.dim_end(0); ++g) {
    int v = std::stoi(base.name(g).substr(1));
    h.values[base.name(g)] = Rational(level[static_cast<std::size_t>(v)]);
  }
  // Duplicate one triangle as a second copy glued along its boundary, so
  // that sets which are not simplicial complexes are covered too.
  const int extra = std::uniform_int_distribution<int>(0, 2)(rng);
  if (extra > 0) {
    SimplicialSetBuilder b;
    for (int g = 0; g < base.size(); ++g) {
      std::vector<SimplicialSetBuilder::FaceSpec> faces;
      for (const auto& f : base.generator(g).faces) faces.push_back({f.word, base.name(f.generator)});
      b.add(base.name(g), base.dim(g), faces);
    }
    if (extra == 1) {
      int tri = base.dim_begin(2);
      std::vector<SimplicialSetBuilder::FaceSpec> faces;
      for (const auto& f : base.generator(tri).faces) faces.push_back({f.word, base.name(f.generator)});
      b.add(base.name(tri) + "'", 2, faces);
    } else {
      int e = std::uniform_int_distribution<int>(base.dim_begin(1), base.dim_end(1) - 1)(rng);
      const std::string& v = base.name(base.generator_vertices(e)[0]);
      b.add("c" + base.name(e), 2, {{{}, base.name(e)}, {{}, base.name(e)}, {{0}, v}});
    }
    base = b.build();
  }
  return {"random", std::move(base), std::move(h)};
}

}  // namespace sectcx::examples
