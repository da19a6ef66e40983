#pragma once

// Finite simplicial sets presented by nondegenerate generators and face
// tables. Every simplex is held in Eilenberg-Zilber normal form: a
// nondegenerate generator together with a strictly decreasing degeneracy
// word s_{j_k} ... s_{j_1}.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sectcx/errors.hpp"

namespace sectcx {

/// Monotone map [n] -> [m], stored as the images of 0..n.
using MonotoneMap = std::vector<int>;

/// Degeneracy word [j_k, ..., j_1] meaning s_{j_k} ... s_{j_1}; canonical
/// words are strictly decreasing.
using DegeneracyWord = std::vector<int>;

namespace ops {

/// delta^i : [n-1] -> [n], the coface skipping i.
inline MonotoneMap coface(int n, int i) {
  MonotoneMap m(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) m[v] = v < i ? v : v + 1;
  return m;
}

/// sigma^j : [n+1] -> [n], the codegeneracy hitting j twice.
inline MonotoneMap codegeneracy(int n, int j) {
  MonotoneMap m(static_cast<std::size_t>(n + 2));
  for (int v = 0; v <= n + 1; ++v) m[v] = v <= j ? v : v - 1;
  return m;
}

/// outer o inner
inline MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner) {
  MonotoneMap out(inner.size());
  for (std::size_t v = 0; v < inner.size(); ++v) out[v] = outer[inner[v]];
  return out;
}

inline bool is_monotone(std::span<const int> m) {
  return std::is_sorted(m.begin(), m.end());
}

}  // namespace ops

/// Surjection [n] -> [n - |word|] collapsing j, j+1 for every j in the word.
inline MonotoneMap surjection_of(const DegeneracyWord& word, int n) {
  MonotoneMap s(static_cast<std::size_t>(n + 1), 0);
  for (int v = 0; v < n; ++v) {
    bool collapsed = std::find(word.begin(), word.end(), v) != word.end();
    s[v + 1] = s[v] + (collapsed ? 0 : 1);
  }
  return s;
}

/// Canonical word of a monotone surjection.
inline DegeneracyWord word_of(const MonotoneMap& surjection) {
  DegeneracyWord w;
  for (int v = static_cast<int>(surjection.size()) - 2; v >= 0; --v)
    if (surjection[v] == surjection[v + 1]) w.push_back(v);
  return w;
}

/// Rewrites an arbitrary degeneracy word acting on a simplex of dimension
/// `base_dim` into canonical strictly decreasing form. The last letter acts
/// first. Throws DomainError when a letter is out of range for the
/// dimension it acts on.
inline DegeneracyWord normalize_word(std::span<const int> word, int base_dim) {
  if (base_dim < 0) throw DomainError("normalize_word: negative base dimension");
  const int k = static_cast<int>(word.size());
  for (int t = 0; t < k; ++t) {
    int letter = word[k - 1 - t];
    if (letter < 0 || letter > base_dim + t) {
      std::ostringstream msg;
      msg << "degeneracy index " << letter << " out of range for dimension " << base_dim + t;
      throw DomainError(msg.str());
    }
  }
  // The composite operator is x o sigma^{w_last} o ... o sigma^{w_0}: a vertex
  // of the top simplex passes through sigma^{w_0} first.
  const int n = base_dim + k;
  MonotoneMap theta(static_cast<std::size_t>(n + 1));
  std::iota(theta.begin(), theta.end(), 0);
  for (int t = 0; t < k; ++t) {
    int dim_before = n - t;  // domain of sigma^{word[t]} is [dim_before]
    theta = ops::compose(ops::codegeneracy(dim_before - 1, word[t]), theta);
  }
  return word_of(theta);
}

struct SimplexRef {
  int generator = -1;
  DegeneracyWord word;

  bool degenerate() const { return !word.empty(); }
  friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
};

struct SimplexRefHash {
  std::size_t operator()(const SimplexRef& r) const noexcept {
    std::size_t h = std::hash<int>{}(r.generator);
    for (int j : r.word) h = h * 1000003u ^ std::hash<int>{}(j + 17);
    return h;
  }
};

class SimplicialSetBuilder;

class SimplicialSet {
 public:
  struct Generator {
    std::string name;
    int dim = 0;
    std::vector<SimplexRef> faces;  // entry i is d_i, empty for vertices
  };

  int size() const { return static_cast<int>(gens_.size()); }
  bool empty() const { return gens_.empty(); }
  int top_dim() const { return gens_.empty() ? -1 : gens_.back().dim; }

  const Generator& generator(int id) const { return gens_.at(static_cast<std::size_t>(id)); }
  const std::string& name(int id) const { return generator(id).name; }
  int dim(int id) const { return generator(id).dim; }

  /// Generators of dimension d occupy the id range [dim_begin(d), dim_end(d)).
  int dim_begin(int d) const {
    if (d < 0) return 0;
    if (d > top_dim()) return size();
    return offsets_[static_cast<std::size_t>(d)];
  }
  int dim_end(int d) const { return dim_begin(d + 1); }
  int count(int d) const { return dim_end(d) - dim_begin(d); }

  std::optional<int> find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }
  int id(std::string_view name) const {
    auto found = find(name);
    if (!found) throw DomainError("unknown generator '" + std::string(name) + "'");
    return *found;
  }

  int dimension(const SimplexRef& x) const {
    return dim(x.generator) + static_cast<int>(x.word.size());
  }

  /// theta^* x for a monotone theta : [n] -> [dim x].
  SimplexRef pullback(const SimplexRef& x, const MonotoneMap& theta) const {
    const int nx = dimension(x);
    for (int v : theta)
      if (v < 0 || v > nx) throw DomainError("pullback: map leaves the simplex");
    if (!ops::is_monotone(theta)) throw DomainError("pullback: map is not monotone");
    MonotoneMap comp = ops::compose(surjection_of(x.word, nx), theta);
    std::vector<int> image = comp;
    image.erase(std::unique(image.begin(), image.end()), image.end());
    MonotoneMap tau(comp.size());
    for (std::size_t v = 0; v < comp.size(); ++v)
      tau[v] = static_cast<int>(std::lower_bound(image.begin(), image.end(), comp[v]) - image.begin());
    SimplexRef base = restrict_generator(x.generator, std::move(image));
    MonotoneMap base_surj = surjection_of(base.word, dimension(base));
    return SimplexRef{base.generator, word_of(ops::compose(base_surj, tau))};
  }

  SimplexRef face(const SimplexRef& x, int i) const {
    const int n = dimension(x);
    if (n < 1 || i < 0 || i > n) {
      std::ostringstream msg;
      msg << "face index " << i << " out of range for a " << n << "-simplex";
      throw DomainError(msg.str());
    }
    return pullback(x, ops::coface(n, i));
  }

  SimplexRef degeneracy(const SimplexRef& x, int j) const {
    const int n = dimension(x);
    if (j < 0 || j > n) {
      std::ostringstream msg;
      msg << "degeneracy index " << j << " out of range for a " << n << "-simplex";
      throw DomainError(msg.str());
    }
    return pullback(x, ops::codegeneracy(n, j));
  }

  /// Vertex k of the result is the image of vertex k of Delta^n under x.
  std::vector<int> vertices(const SimplexRef& x) const {
    const auto& gv = vertices_.at(static_cast<std::size_t>(x.generator));
    MonotoneMap s = surjection_of(x.word, dimension(x));
    std::vector<int> out(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) out[k] = gv[static_cast<std::size_t>(s[k])];
    return out;
  }
  const std::vector<int>& generator_vertices(int g) const {
    return vertices_.at(static_cast<std::size_t>(g));
  }

  /// All n-simplices, degenerate ones included, sorted by (generator, word).
  std::vector<SimplexRef> simplices(int n) const {
    std::vector<SimplexRef> out;
    for (int g = 0; g < size(); ++g) {
      const int m = dim(g);
      if (m > n) break;
      // choose the n - m collapsed positions among 0..n-1
      std::vector<int> pick(static_cast<std::size_t>(n - m));
      std::function<void(int, int)> rec = [&](int slot, int from) {
        if (slot == n - m) {
          DegeneracyWord w(pick.rbegin(), pick.rend());
          out.push_back(SimplexRef{g, std::move(w)});
          return;
        }
        for (int v = from; v < n; ++v) {
          pick[static_cast<std::size_t>(slot)] = v;
          rec(slot + 1, v + 1);
        }
      };
      rec(0, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// "s1s0(v)" style rendering.
  std::string describe(const SimplexRef& x) const {
    if (x.word.empty()) return name(x.generator);
    std::string s;
    for (int j : x.word) s += "s" + std::to_string(j);
    return s + "(" + name(x.generator) + ")";
  }

 private:
  friend class SimplicialSetBuilder;

  // iota^* g where iota : [t] -> [dim g] is the increasing map onto `image`.
  SimplexRef restrict_generator(int g, std::vector<int> image) const {
    const int m = dim(g);
    if (static_cast<int>(image.size()) == m + 1) return SimplexRef{g, {}};
    int missing = m;
    for (int v = m, pos = static_cast<int>(image.size()) - 1; v >= 0; --v) {
      if (pos >= 0 && image[static_cast<std::size_t>(pos)] == v) {
        --pos;
      } else {
        missing = v;
        break;
      }
    }
    const SimplexRef& f = gens_[static_cast<std::size_t>(g)].faces[static_cast<std::size_t>(missing)];
    for (int& v : image)
      if (v > missing) --v;
    return pullback(f, image);
  }

  std::vector<Generator> gens_;
  std::vector<int> offsets_;
  std::unordered_map<std::string, int> by_name_;
  std::vector<std::vector<int>> vertices_;
};

/// Collects generators by name; build() assigns dense ids ordered by
/// (dimension, insertion order) and resolves face references.
class SimplicialSetBuilder {
 public:
  struct FaceSpec {
    DegeneracyWord word;
    std::string target;
  };

  SimplicialSetBuilder& add(std::string name, int dim, std::vector<FaceSpec> faces = {}) {
    pending_.push_back(Pending{std::move(name), dim, std::move(faces)});
    return *this;
  }

  SimplicialSet build() const {
    SimplicialSet x;
    std::vector<std::size_t> order(pending_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return pending_[a].dim < pending_[b].dim; });
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      const Pending& p = pending_[order[pos]];
      if (p.dim < 0) throw DomainError("generator '" + p.name + "' has negative dimension");
      if (!x.by_name_.emplace(p.name, static_cast<int>(pos)).second)
        throw DomainError("duplicate generator '" + p.name + "'");
      x.gens_.push_back(SimplicialSet::Generator{p.name, p.dim, {}});
    }
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      const Pending& p = pending_[order[pos]];
      auto& g = x.gens_[pos];
      const int expected = p.dim == 0 ? 0 : p.dim + 1;
      if (static_cast<int>(p.faces.size()) != expected) {
        std::ostringstream msg;
        msg << "generator '" << p.name << "' of dimension " << p.dim << " needs " << expected
            << " faces, got " << p.faces.size();
        throw DomainError(msg.str());
      }
      for (std::size_t i = 0; i < p.faces.size(); ++i) {
        const FaceSpec& f = p.faces[i];
        auto target = x.find(f.target);
        if (!target) throw DomainError("face " + std::to_string(i) + " of '" + p.name +
                                       "' refers to unknown generator '" + f.target + "'");
        const int face_dim = p.dim - 1;
        const int base_dim = x.dim(*target);
        const int k = static_cast<int>(f.word.size());
        bool canonical = std::is_sorted(f.word.rbegin(), f.word.rend()) &&
                         std::adjacent_find(f.word.begin(), f.word.end()) == f.word.end();
        bool in_range = std::all_of(f.word.begin(), f.word.end(),
                                    [&](int j) { return j >= 0 && j < face_dim; });
        if (base_dim + k != face_dim || !canonical || (k > 0 && !in_range)) {
          std::ostringstream msg;
          msg << "face " << i << " of '" << p.name << "' is not a canonical " << face_dim
              << "-simplex";
          throw DomainError(msg.str());
        }
        g.faces.push_back(SimplexRef{*target, f.word});
      }
    }
    const int top = x.gens_.empty() ? -1 : x.gens_.back().dim;
    x.offsets_.assign(static_cast<std::size_t>(top + 2), 0);
    for (int d = 0; d <= top + 1; ++d) {
      auto it = std::lower_bound(x.gens_.begin(), x.gens_.end(), d,
                                 [](const SimplicialSet::Generator& g, int dd) { return g.dim < dd; });
      x.offsets_[static_cast<std::size_t>(d)] = static_cast<int>(it - x.gens_.begin());
    }
    x.vertices_.resize(x.gens_.size());
    for (int g = 0; g < x.size(); ++g) {
      const int m = x.dim(g);
      auto& vs = x.vertices_[static_cast<std::size_t>(g)];
      vs.resize(static_cast<std::size_t>(m + 1));
      for (int k = 0; k <= m; ++k) vs[static_cast<std::size_t>(k)] = x.restrict_generator(g, {k}).generator;
    }
    return x;
  }

 private:
  struct Pending {
    std::string name;
    int dim;
    std::vector<FaceSpec> faces;
  };
  std::vector<Pending> pending_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks d_i d_j = d_{j-1} d_i (i < j) on every generator. Structural
/// checks (face counts, dimensions, canonical words) happen in the builder.
inline ValidationReport validate(const SimplicialSet& x) {
  ValidationReport report;
  for (int g = 0; g < x.size(); ++g) {
    const auto& gen = x.generator(g);
    if (gen.dim < 2) continue;
    for (int j = 1; j <= gen.dim; ++j) {
      for (int i = 0; i < j; ++i) {
        SimplexRef lhs = x.face(gen.faces[static_cast<std::size_t>(j)], i);
        SimplexRef rhs = x.face(gen.faces[static_cast<std::size_t>(i)], j - 1);
        if (lhs != rhs) {
          std::ostringstream msg;
          msg << "generator '" << gen.name << "': d" << i << " d" << j << " = " << x.describe(lhs)
              << " but d" << j - 1 << " d" << i << " = " << x.describe(rhs);
          report.violations.push_back(msg.str());
        }
      }
    }
  }
  return report;
}

namespace detail {
inline std::string join_vertex_names(const std::vector<std::string>& names) {
  bool short_names = std::all_of(names.begin(), names.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (k > 0 && !short_names) out += '.';
    out += names[k];
  }
  return out;
}
}  // namespace detail

/// Ordered simplicial complex generated by `facets`; each facet lists its
/// vertices in simplex order and every subsequence becomes a generator.
inline SimplicialSet ordered_complex(const std::vector<std::vector<std::string>>& facets) {
  std::vector<std::vector<std::string>> simplices;
  auto seen = [&](const std::vector<std::string>& s) {
    return std::find(simplices.begin(), simplices.end(), s) != simplices.end();
  };
  for (const auto& f : facets) {
    const int n = static_cast<int>(f.size());
    if (n == 0) throw DomainError("ordered_complex: empty facet");
    for (int size = 1; size <= n; ++size) {
      std::vector<int> idx(static_cast<std::size_t>(size));
      std::function<void(int, int)> rec = [&](int slot, int from) {
        if (slot == size) {
          std::vector<std::string> s;
          for (int i : idx) s.push_back(f[static_cast<std::size_t>(i)]);
          if (!seen(s)) simplices.push_back(std::move(s));
          return;
        }
        for (int v = from; v < n; ++v) {
          idx[static_cast<std::size_t>(slot)] = v;
          rec(slot + 1, v + 1);
        }
      };
      rec(0, 0);
    }
  }
  SimplicialSetBuilder b;
  for (const auto& s : simplices) {
    std::vector<SimplicialSetBuilder::FaceSpec> faces;
    if (s.size() > 1) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<std::string> f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        faces.push_back({{}, detail::join_vertex_names(f)});
      }
    }
    b.add(detail::join_vertex_names(s), static_cast<int>(s.size()) - 1, std::move(faces));
  }
  return b.build();
}

/// Delta^n with generators named by their vertex lists ("0", "01", "012").
inline SimplicialSet standard_simplex(int n) {
  if (n < 0) throw DomainError("standard_simplex: negative dimension");
  std::vector<std::string> top;
  for (int v = 0; v <= n; ++v) top.push_back(std::to_string(v));
  return ordered_complex({top});
}

/// The boundary of Delta^n: every proper face of the top simplex.
inline SimplicialSet boundary(int n) {
  if (n < 0) throw DomainError("boundary: negative dimension");
  if (n == 0) return SimplicialSet{};
  std::vector<std::vector<std::string>> facets;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<std::string> f;
    for (int v = 0; v <= n; ++v)
      if (v != skip) f.push_back(std::to_string(v));
    facets.push_back(std::move(f));
  }
  return ordered_complex(facets);
}

/// X + Y with generator names prefixed to keep them apart.
inline SimplicialSet disjoint_union(const SimplicialSet& x, const SimplicialSet& y,
                                    const std::string& prefix_x, const std::string& prefix_y) {
  SimplicialSetBuilder b;
  auto copy = [&](const SimplicialSet& s, const std::string& prefix) {
    for (int g = 0; g < s.size(); ++g) {
      const auto& gen = s.generator(g);
      std::vector<SimplicialSetBuilder::FaceSpec> faces;
      for (const auto& f : gen.faces) faces.push_back({f.word, prefix + s.name(f.generator)});
      b.add(prefix + gen.name, gen.dim, std::move(faces));
    }
  };
  copy(x, prefix_x);
  copy(y, prefix_y);
  return b.build();
}

struct GlueResult {
  SimplicialSet quotient;
  std::vector<int> class_of;  // old generator id -> quotient generator id
};

/// Quotient of X by identifying generators pairwise, closed under faces.
/// Throws DomainError when the closure identifies generators of different
/// dimensions or a face of one side is degenerate in a different way than
/// the corresponding face of the other.
inline GlueResult glue(const SimplicialSet& x, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<int> parent(static_cast<std::size_t>(x.size()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    return a;
  };
  std::vector<std::pair<int, int>> work;
  for (const auto& [a, b] : pairs) work.emplace_back(x.id(a), x.id(b));
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    if (x.dim(a) != x.dim(b))
      throw DomainError("glue: cannot identify '" + x.name(a) + "' and '" + x.name(b) +
                        "' of different dimensions");
    int ra = root(a), rb = root(b);
    if (ra == rb) continue;
    parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
    const auto& fa = x.generator(a).faces;
    const auto& fb = x.generator(b).faces;
    for (std::size_t i = 0; i < fa.size(); ++i) {
      if (fa[i].word != fb[i].word)
        throw DomainError("glue: identifying '" + x.name(a) + "' and '" + x.name(b) + "' forces " +
                          x.describe(fa[i]) + " = " + x.describe(fb[i]));
      work.emplace_back(fa[i].generator, fb[i].generator);
    }
  }
  // A class representative is its smallest id, so quotient ids stay ordered
  // by (dimension, input order).
  GlueResult result;
  result.class_of.assign(static_cast<std::size_t>(x.size()), -1);
  std::vector<int> reps;
  for (int g = 0; g < x.size(); ++g) {
    if (root(g) == g) {
      result.class_of[static_cast<std::size_t>(g)] = static_cast<int>(reps.size());
      reps.push_back(g);
    }
  }
  for (int g = 0; g < x.size(); ++g)
    result.class_of[static_cast<std::size_t>(g)] = result.class_of[static_cast<std::size_t>(root(g))];
  SimplicialSetBuilder b;
  for (int r : reps) {
    std::vector<SimplicialSetBuilder::FaceSpec> faces;
    for (const auto& f : x.generator(r).faces) faces.push_back({f.word, x.name(reps[static_cast<std::size_t>(result.class_of[static_cast<std::size_t>(f.generator)])])});
    b.add(x.name(r), x.dim(r), std::move(faces));
  }
  result.quotient = b.build();
  return result;
}

}  // namespace sectcx
