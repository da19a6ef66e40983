#include <gtest/gtest.h>

#include <random>

#include "sectcx/examples.hpp"
#include "sectcx/pipeline.hpp"
#include "sectcx/spectral.hpp"

using namespace sectcx;

namespace {

struct Pages {
  examples::Example ex;
  SectionComplex sc;
  SectionTruncation tr;
  DoubleComplex dc;
  SpectralSequence ss;
  Pages(examples::Example e, std::int64_t p, int n)
      : ex(std::move(e)),
        sc(ex.space, validate_height(ex.space, ex.heights)),
        tr(build_truncation(sc, n)),
        dc(sc, tr, PrimeField(p)),
        ss(dc) {}
};

}  // namespace

TEST(DoubleComplex, IdentitiesAndSizes) {
  for (auto ex : {examples::sphere(), examples::sphere_subdivided(), examples::cylinder()}) {
    Pages pg(ex, 3, 2);
    EXPECT_NO_THROW(pg.dc.check());
    ChainComplex tot = pg.dc.total_complex();
    EXPECT_NO_THROW(tot.check());
  }
  Pages sphere(examples::sphere(), 2, 2);
  EXPECT_EQ(sphere.dc.size(0, 0), 3);
  EXPECT_EQ(sphere.dc.size(1, 0), 3);
  EXPECT_EQ(sphere.dc.size(2, 0), 2);
}

TEST(DoubleComplex, PointIsSingleCell) {
  Pages pg({"point", standard_simplex(0), examples::heights_of({{"0", 0}})}, 2, 2);
  EXPECT_EQ(pg.dc.size(0, 0), 1);
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(pg.dc.tot_size(n), 0);
  EXPECT_EQ(total_homology(pg.dc, 0), 1);
}

TEST(Spectral, CylinderPages) {
  Pages pg(examples::cylinder(), 2, 2);
  const PrimeField& f = pg.dc.field();
  EXPECT_EQ(pg.ss.dim(1, 0, 0), 3);
  EXPECT_EQ(pg.ss.dim(1, 1, 0), 3);
  EXPECT_EQ(pg.ss.dim(1, 2, 0), 2);
  EXPECT_EQ(pg.ss.dim(1, 0, 1), 2);
  EXPECT_EQ(rank(f, pg.ss.entry(1, 1, 0).differential), 2);
  EXPECT_EQ(rank(f, pg.ss.entry(1, 2, 0).differential), 1);
  EXPECT_EQ(pg.ss.dims(2), (std::vector<std::vector<int>>{{1, 2, 0}, {0, 0}, {1}}));
  EXPECT_EQ(rank(f, pg.ss.entry(2, 2, 0).differential), 1);
  EXPECT_EQ(pg.ss.dims(3), (std::vector<std::vector<int>>{{1, 1, 0}, {0, 0}, {0}}));
  EXPECT_EQ(pg.ss.dims(pg.ss.infinity_page()), pg.ss.dims(3));
  EXPECT_EQ(total_homology(pg.dc, 0), 1);
  EXPECT_EQ(total_homology(pg.dc, 1), 1);
  EXPECT_EQ(total_homology(pg.dc, 2), 0);
}

TEST(Spectral, SubdividedSphereSecondPage) {
  Pages pg(examples::sphere_subdivided(), 2, 2);
  EXPECT_EQ(pg.ss.dims(2), (std::vector<std::vector<int>>{{1, 0, 0}, {0, 1}, {0}}));
}

TEST(Spectral, WindowIsEnforced) {
  Pages pg(examples::sphere(), 2, 2);
  EXPECT_THROW(pg.ss.entry(2, 2, 1), WindowError);
  EXPECT_THROW(total_homology(pg.dc, 3), WindowError);
}

TEST(Spectral, SquareOfDifferentialVanishes) {
  for (auto ex : {examples::cylinder(), examples::sphere()}) {
    Pages pg(ex, 3, 3);
    const PrimeField& f = pg.dc.field();
    for (int r = 1; r <= 4; ++r)
      for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 3; ++q) {
          if (p - r < 0 || q + r - 1 < 0 || p + q - 1 > 3) continue;
          const auto& src = pg.ss.entry(r, p, q);
          const auto& mid = pg.ss.entry(r, p - r, q + r - 1);
          if (p - 2 * r < 0) continue;
          EXPECT_TRUE(multiply(f, mid.differential, src.differential).is_zero());
        }
  }
}

TEST(Spectral, RecurrenceKernelMinusIncoming) {
  std::mt19937 rng(21);
  std::vector<examples::Example> cases = {examples::cylinder(), examples::sphere_subdivided()};
  for (int k = 0; k < 6; ++k) cases.push_back(examples::random_gluing(rng, 4));
  for (const auto& ex : cases) {
    Pages pg(ex, 2, 2);
    const PrimeField& f = pg.dc.field();
    for (int r = 1; r <= 4; ++r)
      for (int p = 0; p <= 2; ++p)
        for (int q = 0; p + q <= 2; ++q) {
          const auto& e = pg.ss.entry(r, p, q);
          int ker = e.dim - rank(f, e.differential);
          EXPECT_EQ(pg.ss.dim(r + 1, p, q), ker - e.incoming_rank) << ex.name << " r=" << r << " (" << p << "," << q << ")";
        }
  }
}

TEST(Spectral, DifferentialIndependentOfLift) {
  Pages pg(examples::cylinder(), 3, 2);
  const PrimeField& f = pg.dc.field();
  for (int r = 1; r <= 3; ++r)
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; p + q <= 2; ++q) {
        const auto& e = pg.ss.entry(r, p, q);
        if (e.dim == 0 || e.differential.rows() == 0 || e.denominator.cols() == 0) continue;
        for (int k = 0; k < e.dim; ++k) {
          auto x = e.representatives.column(k);
          auto base = pg.ss.apply_differential(r, p, q, x);
          for (int b = 0; b < e.denominator.cols(); ++b) {
            auto y = x;
            auto d = e.denominator.column(b);
            for (std::size_t i = 0; i < y.size(); ++i) y[i] = f.add(y[i], d[i]);
            EXPECT_EQ(pg.ss.apply_differential(r, p, q, y), base);
          }
        }
      }
}

TEST(Convergence, ReferenceExamples) {
  for (auto ex : {examples::sphere(), examples::sphere_subdivided(), examples::cylinder()}) {
    SectionComplex sc(ex.space, validate_height(ex.space, ex.heights));
    auto r = convergence_check(sc, PrimeField(2), 2);
    EXPECT_TRUE(r.ok()) << ex.name << ": " << (r.failures.empty() ? "" : r.failures.front());
  }
}

TEST(Convergence, SimplexIsContractible) {
  for (int n = 1; n <= 3; ++n) {
    auto x = standard_simplex(n);
    HeightFunction h;
    for (int v = 0; v <= n; ++v) h.values[std::to_string(v)] = Rational(v / 2);
    SectionComplex sc(x, validate_height(x, h));
    auto r = convergence_check(sc, PrimeField(3), 2);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.betti_tot, (std::vector<int>{1, 0, 0}));
  }
}
