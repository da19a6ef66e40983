#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sectcx/chain_complex.hpp"
#include "sectcx/examples.hpp"
#include "sectcx/sections.hpp"

using namespace sectcx;

namespace {

struct Fixture {
  examples::Example ex;
  SectionComplex sc;
  explicit Fixture(examples::Example e)
      : ex(std::move(e)), sc(ex.space, validate_height(ex.space, ex.heights)) {}
  SimplexRef gen(const std::string& name) const { return SimplexRef{ex.space.id(name), {}}; }
  std::vector<Section> nondegenerate(const std::vector<int>& word, int q) const {
    std::vector<Section> out;
    for (auto& s : sc.enumerate(word, q))
      if (sc.is_doubly_nondegenerate(s)) out.push_back(s);
    return out;
  }
};

int binomial(int n, int k) {
  int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Delta^1 x Delta^1 with height = first coordinate.
examples::Example square() {
  auto x = ordered_complex({{"00", "10", "11"}, {"00", "01", "11"}});
  return {"square", std::move(x), examples::heights_of({{"00", 0}, {"01", 0}, {"10", 1}, {"11", 1}})};
}

}  // namespace

TEST(ShuffleTable, CountsAndOrder) {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q) EXPECT_EQ(shuffle_table(p, q)->count(), binomial(p + q, p));
  auto t = shuffle_table(1, 1);
  EXPECT_EQ(t->shuffles[0].steps, (std::vector<int>{0, 1}));
  EXPECT_EQ(t->shuffles[1].steps, (std::vector<int>{1, 0}));
  ASSERT_EQ(t->earlier_flips[1].size(), 1u);
  EXPECT_EQ(t->earlier_flips[1][0], (std::pair<int, int>{0, 1}));
}

TEST(Enumerate, TriangleEdgeOverIncreasingPair) {
  Fixture f(examples::triangle());
  auto secs = f.sc.enumerate({0, 1}, 0);
  ASSERT_EQ(secs.size(), 1u);
  EXPECT_EQ(secs[0].images, std::vector<SimplexRef>{f.gen("01")});
  EXPECT_EQ(f.sc.enumerate({0, 2}, 0)[0].images, std::vector<SimplexRef>{f.gen("02")});
}

TEST(Enumerate, FlatTopTriangleHasOneHomotopy) {
  Fixture f(examples::triangle_flat_top());
  auto secs = f.nondegenerate({0, 1}, 1);
  ASSERT_EQ(secs.size(), 1u);
  EXPECT_EQ(f.sc.face(secs[0], Direction::vertical, 0).images, std::vector<SimplexRef>{f.gen("02")});
  EXPECT_EQ(f.sc.face(secs[0], Direction::vertical, 1).images, std::vector<SimplexRef>{f.gen("01")});
}

TEST(Enumerate, SquareContainsIdentitySection) {
  Fixture f(square());
  auto secs = f.sc.enumerate({0, 1}, 1);
  Section id{1, 1, {0, 1}, {f.gen("00.10.11"), f.gen("00.01.11")}};
  ASSERT_NE(std::find(secs.begin(), secs.end(), id), secs.end());
  EXPECT_EQ(f.sc.face(id, Direction::horizontal, 0).images, std::vector<SimplexRef>{f.gen("10.11")});
  EXPECT_EQ(f.sc.face(id, Direction::horizontal, 1).images, std::vector<SimplexRef>{f.gen("00.01")});
  EXPECT_EQ(f.sc.face(id, Direction::vertical, 0).images, std::vector<SimplexRef>{f.gen("01.11")});
  EXPECT_EQ(f.sc.face(id, Direction::vertical, 1).images, std::vector<SimplexRef>{f.gen("00.10")});
}

TEST(Enumerate, HorizontalFacesOfTriangle) {
  Fixture f(examples::triangle());
  auto secs = f.sc.enumerate({0, 1, 2}, 0);
  ASSERT_EQ(secs.size(), 1u);
  EXPECT_EQ(f.sc.face(secs[0], Direction::horizontal, 0).images, std::vector<SimplexRef>{f.gen("12")});
  EXPECT_EQ(f.sc.face(secs[0], Direction::horizontal, 1).images, std::vector<SimplexRef>{f.gen("02")});
  EXPECT_EQ(f.sc.face(secs[0], Direction::horizontal, 2).images, std::vector<SimplexRef>{f.gen("01")});
  EXPECT_FALSE(f.sc.is_degenerate(secs[0], Direction::horizontal));
}

TEST(Enumerate, RejectsDecreasingWord) {
  Fixture f(examples::triangle());
  EXPECT_THROW(f.sc.enumerate({1, 0}, 0), DomainError);
}

TEST(Enumerate, IncreasingWordsBeyondSubdivisionAreEmpty) {
  Fixture f(examples::sphere_subdivided());
  EXPECT_TRUE(f.sc.enumerate({0, 1, 2}, 0).empty());
  EXPECT_TRUE(f.sc.enumerate({0, 1, 2}, 1).empty());
  EXPECT_TRUE(f.sc.enumerate({0, 2}, 0).empty());
}

TEST(Degeneracy, ConstantSectionIsHorizontallyDegenerate) {
  Fixture f(examples::cylinder());
  auto v = f.sc.enumerate({0}, 0)[0];
  Section c = f.sc.degeneracy(v, Direction::horizontal, 0);
  EXPECT_EQ(c.heights, (std::vector<int>{0, 0}));
  EXPECT_TRUE(f.sc.is_degenerate(c, Direction::horizontal));
  EXPECT_EQ(f.sc.face(c, Direction::horizontal, 0), v);
  EXPECT_EQ(f.sc.face(c, Direction::horizontal, 1), v);
}

TEST(Degeneracy, FiberEdgeIsNotHorizontallyDegenerate) {
  Fixture f(examples::cylinder());
  Section edge{1, 0, {0, 0}, {f.gen("B0.B2")}};
  ASSERT_TRUE(f.sc.is_valid(edge));
  EXPECT_FALSE(f.sc.is_degenerate(edge, Direction::horizontal));
  for (const auto& tau : f.sc.enumerate({0}, 0)) EXPECT_NE(f.sc.degeneracy(tau, Direction::horizontal, 0), edge);
}

TEST(Degeneracy, VerticalFacesOfVerticalDegeneracy) {
  Fixture f(examples::sphere());
  for (const auto& tau : f.sc.enumerate({0, 1}, 1))
    for (int j = 0; j <= 1; ++j) {
      Section s = f.sc.degeneracy(tau, Direction::vertical, j);
      EXPECT_EQ(f.sc.face(s, Direction::vertical, j), tau);
      EXPECT_EQ(f.sc.face(s, Direction::vertical, j + 1), tau);
      EXPECT_TRUE(f.sc.is_degenerate(s, Direction::vertical));
    }
}

TEST(Degeneracy, ProjectionFromVerticalDegeneracy) {
  Fixture f(examples::triangle());
  auto e = f.sc.enumerate({0, 1}, 0)[0];
  Section pr = f.sc.degeneracy(e, Direction::vertical, 0);
  // Delta^1 x Delta^1 -> Delta^1 -> X: both shuffles map to s_1 e or s_0 e.
  EXPECT_EQ(pr.images[0], f.ex.space.degeneracy(e.images[0], 1));
  EXPECT_EQ(pr.images[1], f.ex.space.degeneracy(e.images[0], 0));
}

namespace {

void check_bisimplicial(const Fixture& f, int max_total) {
  const SectionComplex& sc = f.sc;
  const int levels = sc.levels().level_count();
  for (int p = 0; p <= max_total; ++p)
    for (int q = 0; p + q <= max_total; ++q)
      for (const auto& w : height_words(levels, p + 1, false))
        for (const auto& s : sc.enumerate(w, q)) {
          ASSERT_TRUE(sc.is_valid(s));
          ASSERT_EQ(static_cast<int>(s.images.size()), binomial(p + q, p));
          for (Direction d : {Direction::horizontal, Direction::vertical}) {
            const int n = d == Direction::horizontal ? p : q;
            for (int j = 0; j <= n; ++j) {
              Section sj = sc.degeneracy(s, d, j);
              EXPECT_EQ(sc.face(sj, d, j), s);
              EXPECT_EQ(sc.face(sj, d, j + 1), s);
              for (int i = 0; i <= j; ++i)
                EXPECT_EQ(sc.degeneracy(sc.degeneracy(s, d, j), d, i), sc.degeneracy(sc.degeneracy(s, d, i), d, j + 1));
            }
            if (n >= 2)
              for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                  EXPECT_EQ(sc.face(sc.face(s, d, j), d, i), sc.face(sc.face(s, d, i), d, j - 1));
          }
          for (int i = 0; i <= p; ++i)
            for (int j = 0; j <= q; ++j) {
              if (p >= 1 && q >= 1)
                EXPECT_EQ(sc.face(sc.face(s, Direction::vertical, j), Direction::horizontal, i),
                          sc.face(sc.face(s, Direction::horizontal, i), Direction::vertical, j));
              if (p >= 1)
                EXPECT_EQ(sc.degeneracy(sc.face(s, Direction::horizontal, i), Direction::vertical, j),
                          sc.face(sc.degeneracy(s, Direction::vertical, j), Direction::horizontal, i));
              EXPECT_EQ(sc.degeneracy(sc.degeneracy(s, Direction::horizontal, i), Direction::vertical, j),
                        sc.degeneracy(sc.degeneracy(s, Direction::vertical, j), Direction::horizontal, i));
            }
        }
}

}  // namespace

TEST(Bisimplicial, IdentitiesOnExamples) {
  check_bisimplicial(Fixture(examples::sphere()), 3);
  check_bisimplicial(Fixture(examples::sphere_subdivided()), 3);
  check_bisimplicial(Fixture(examples::triangle_flat_top()), 3);
  check_bisimplicial(Fixture(examples::cylinder()), 2);
}

TEST(Enumerate, AgreesWithNaiveOracle) {
  for (auto ex : {examples::triangle_flat_top(), examples::sphere(), examples::point_sphere()}) {
    Fixture f(ex);
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; p + q <= 3; ++q)
        for (const auto& w : height_words(f.sc.levels().level_count(), p + 1, false))
          EXPECT_EQ(f.sc.enumerate(w, q), oracle::naive_sections(f.ex.space, f.sc.levels(), w, q))
              << ex.name << " p=" << p << " q=" << q;
  }
}

TEST(Truncation, SphereTopBidegree) {
  Fixture f(examples::sphere());
  auto tr = build_truncation(f.sc, 2);
  EXPECT_EQ(tr.size(2, 0), 2);
  EXPECT_EQ(tr.size(0, 0), 3);
  EXPECT_EQ(tr.size(1, 0), 3);
  EXPECT_THROW(tr.at(4, 0), WindowError);
}

TEST(Truncation, CylinderIncreasingTopBidegree) {
  Fixture f(examples::cylinder());
  EXPECT_EQ(f.nondegenerate({0, 1, 2}, 0).size(), 2u);
}

TEST(Truncation, DegreeZeroIsVerticesByLevel) {
  Fixture f(examples::cylinder());
  auto tr = build_truncation(f.sc, 0);
  const auto& cell = tr.at(0, 0);
  ASSERT_EQ(cell.size(), f.ex.space.count(0));
  for (std::size_t k = 1; k < cell.sections.size(); ++k)
    EXPECT_LE(cell.sections[k - 1].heights[0], cell.sections[k].heights[0]);
}

TEST(Truncation, IndependentOfThreadCount) {
  Fixture f(examples::cylinder());
  auto a = build_truncation(f.sc, 2, 1);
  auto b = build_truncation(f.sc, 2, 4);
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; p + q <= 3; ++q) {
      EXPECT_EQ(a.at(p, q).sections, b.at(p, q).sections);
      EXPECT_EQ(a.at(p, q).h_faces, b.at(p, q).h_faces);
      EXPECT_EQ(a.at(p, q).v_faces, b.at(p, q).v_faces);
    }
}

TEST(Truncation, CapIsEnforced) {
  auto ex = examples::cylinder();
  SectionComplex sc(ex.space, validate_height(ex.space, ex.heights), 5);
  EXPECT_THROW(build_truncation(sc, 2), ResourceLimitError);
}

TEST(Diag, TriangleIsContractible) {
  Fixture f(examples::triangle());
  PrimeField k(2);
  EXPECT_EQ(betti_numbers(normalized_chains(k, diag_truncation(f.sc, 2)), 2), (std::vector<int>{1, 0, 0}));
}

TEST(Diag, PointHasOneVertex) {
  Fixture f({"point", standard_simplex(0), examples::heights_of({{"0", 0}})});
  auto data = diag_truncation(f.sc, 2);
  EXPECT_EQ(data.labels[0].size(), 1u);
  for (std::size_t n = 1; n < data.labels.size(); ++n) EXPECT_TRUE(data.labels[n].empty());
}

TEST(Diag, SphereHomology) {
  Fixture f(examples::sphere());
  PrimeField k(3);
  EXPECT_EQ(betti_numbers(normalized_chains(k, diag_truncation(f.sc, 2)), 2), (std::vector<int>{1, 0, 1}));
}
