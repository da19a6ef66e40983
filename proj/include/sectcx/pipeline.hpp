#pragma once

// End-to-end checks tying X, the diagonal, Tot, the pages and the Reeb
// complexes together.

#include <sstream>
#include <string>
#include <vector>

#include "sectcx/chain_complex.hpp"
#include "sectcx/reeb.hpp"
#include "sectcx/sections.hpp"
#include "sectcx/spectral.hpp"

namespace sectcx {

/// dim H_n X for n <= max_degree from the normalized chains of X.
inline std::vector<int> space_homology(const SimplicialSet& x, const PrimeField& f, int max_degree) {
  return betti_numbers(normalized_chains(f, x, max_degree + 1), max_degree);
}

inline std::vector<int> diag_homology(const SectionComplex& sc, const PrimeField& f, int max_degree, int threads = 1) {
  return betti_numbers(normalized_chains(f, diag_truncation(sc, max_degree, threads)), max_degree);
}

/// Compares H_n X, H_n Tot, H_n diag and the E^infinity diagonals for
/// n <= N, and checks E^{s+1} = E^{s+2} on the window.
inline ConvergenceReport convergence_check(const SectionComplex& sc, const PrimeField& f, int max_degree,
                                           int threads = 1) {
  ConvergenceReport r;
  SectionTruncation tr = build_truncation(sc, max_degree, threads);
  DoubleComplex dc(sc, tr, f);
  SpectralSequence ss(dc);
  r.subdivision = subdivision_number(sc.space(), sc.levels());
  r.betti_x = space_homology(sc.space(), f, max_degree);
  r.betti_diag = diag_homology(sc, f, max_degree, threads);
  for (int n = 0; n <= max_degree; ++n) {
    r.betti_tot.push_back(total_homology(dc, n));
    int inf = 0;
    for (int p = 0; p <= n; ++p) inf += ss.dim(ss.infinity_page(), p, n - p);
    r.betti_infinity.push_back(inf);
  }
  for (int n = 0; n <= max_degree; ++n) {
    auto at = [&](const std::vector<int>& v) { return v[static_cast<std::size_t>(n)]; };
    if (at(r.betti_x) != at(r.betti_tot) || at(r.betti_x) != at(r.betti_diag) || at(r.betti_x) != at(r.betti_infinity)) {
      std::ostringstream msg;
      msg << "degree " << n << ": X=" << at(r.betti_x) << " Tot=" << at(r.betti_tot) << " diag=" << at(r.betti_diag)
          << " Einf=" << at(r.betti_infinity);
      r.failures.push_back(msg.str());
    }
  }
  const int s = r.subdivision;
  for (int p = 0; p <= max_degree; ++p)
    for (int q = 0; p + q <= max_degree; ++q)
      if (ss.dim(s + 1, p, q) != ss.dim(s + 2, p, q)) {
        r.collapse_ok = false;
        r.failures.push_back("E^" + std::to_string(s + 1) + " != E^" + std::to_string(s + 2) + " at (" +
                             std::to_string(p) + "," + std::to_string(q) + ")");
      }
  return r;
}

struct ConsistencyReport {
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// dim E^2_{p,q} = dim H_p G_q over the certified window.
inline ConsistencyReport e1_reeb_consistency(const SpectralSequence& ss, const ReebData& reeb) {
  ConsistencyReport r;
  const int n = ss.complex().certified_degree();
  for (int q = 0; q <= std::min(n, reeb.max_q()); ++q) {
    auto h = reeb_homology(reeb_complex(reeb, q));
    for (int p = 0; p + q <= n; ++p) {
      int g = p < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(p)] : 0;
      int e = ss.dim(2, p, q);
      if (g != e)
        r.mismatches.push_back("(" + std::to_string(p) + "," + std::to_string(q) + "): E2=" + std::to_string(e) +
                               " HG=" + std::to_string(g));
    }
  }
  return r;
}

}  // namespace sectcx
