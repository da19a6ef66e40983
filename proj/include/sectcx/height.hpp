#pragma once

// Height functions X -> Delta^0-poset with exact rational values.

#include <boost/rational.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sectcx/errors.hpp"
#include "sectcx/simplicial_set.hpp"

namespace sectcx {

using Rational = boost::rational<std::int64_t>;

/// Parses "2", "-1", "0.25", "3/2". Throws ParseError otherwise.
inline Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational { throw ParseError("not a rational number: '" + text + "'"); };
  if (text.empty()) return fail();
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k)
      if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
    return true;
  };
  auto to_int = [&](std::size_t from, std::size_t to) -> std::int64_t {
    if (to - from > 17) throw ParseError("number too long: '" + text + "'");
    return std::stoll(text.substr(from, to - from));
  };
  std::size_t slash = text.find('/');
  std::size_t dot = text.find('.');
  Rational value;
  if (slash != std::string::npos) {
    if (!digits(pos, slash) || !digits(slash + 1, text.size())) return fail();
    std::int64_t den = to_int(slash + 1, text.size());
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    value = Rational(to_int(pos, slash), den);
  } else if (dot != std::string::npos) {
    bool int_ok = dot == pos || digits(pos, dot);
    if (!int_ok || !digits(dot + 1, text.size())) return fail();
    std::size_t frac_len = text.size() - dot - 1;
    if (frac_len > 17) throw ParseError("number too long: '" + text + "'");
    std::int64_t scale = 1;
    for (std::size_t k = 0; k < frac_len; ++k) scale *= 10;
    std::int64_t whole = dot == pos ? 0 : to_int(pos, dot);
    if (whole > std::numeric_limits<std::int64_t>::max() / scale) throw ParseError("number too large: '" + text + "'");
    value = Rational(whole * scale + to_int(dot + 1, text.size()), scale);
  } else {
    if (!digits(pos, text.size())) return fail();
    value = Rational(to_int(pos, text.size()));
  }
  return negative ? -value : value;
}

/// Canonical text: "3", "-1/2".
inline std::string format_rational(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

/// Values on the 0-simplices of a fixed simplicial set, by vertex name.
struct HeightFunction {
  std::map<std::string, Rational> values;
};

/// Height data resolved against X: each vertex gets the index of its level
/// in the sorted list of distinct values.
class LevelIndex {
 public:
  LevelIndex() = default;
  LevelIndex(std::vector<Rational> levels, std::vector<int> level_of_vertex)
      : levels_(std::move(levels)), level_of_(std::move(level_of_vertex)) {}

  const std::vector<Rational>& levels() const { return levels_; }
  int level_count() const { return static_cast<int>(levels_.size()); }
  /// Level index of vertex generator `g` (ids of vertices are 0..#X_0-1).
  int level_of(int g) const { return level_of_.at(static_cast<std::size_t>(g)); }
  const Rational& value(int level) const { return levels_.at(static_cast<std::size_t>(level)); }

  /// -1 when `a` is not a level.
  int find_level(const Rational& a) const {
    auto it = std::lower_bound(levels_.begin(), levels_.end(), a);
    if (it == levels_.end() || *it != a) return -1;
    return static_cast<int>(it - levels_.begin());
  }

  /// Level indices of the vertices of a simplex.
  std::vector<int> pattern(const SimplicialSet& x, const SimplexRef& s) const {
    std::vector<int> out;
    for (int v : x.vertices(s)) out.push_back(level_of(v));
    return out;
  }

 private:
  std::vector<Rational> levels_;
  std::vector<int> level_of_;
};

/// Checks totality and monotonicity; returns the resolved level data.
inline LevelIndex validate_height(const SimplicialSet& x, const HeightFunction& h) {
  const int nv = x.count(0);
  std::vector<Rational> value(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    auto it = h.values.find(x.name(v));
    if (it == h.values.end()) throw DomainError("vertex '" + x.name(v) + "' has no height");
    value[static_cast<std::size_t>(v)] = it->second;
  }
  for (const auto& [name, _] : h.values) {
    auto id = x.find(name);
    if (!id || x.dim(*id) != 0) throw DomainError("height given for '" + name + "', which is not a vertex");
  }
  for (int e = x.dim_begin(1); e < x.dim_end(1); ++e) {
    const auto& vs = x.generator_vertices(e);
    if (value[static_cast<std::size_t>(vs[0])] > value[static_cast<std::size_t>(vs[1])])
      throw DomainError("edge '" + x.name(e) + "' runs from height " +
                        format_rational(value[static_cast<std::size_t>(vs[0])]) + " down to " +
                        format_rational(value[static_cast<std::size_t>(vs[1])]));
  }
  std::vector<Rational> levels = value;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<int> level_of(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v)
    level_of[static_cast<std::size_t>(v)] = static_cast<int>(
        std::lower_bound(levels.begin(), levels.end(), value[static_cast<std::size_t>(v)]) - levels.begin());
  return LevelIndex(std::move(levels), std::move(level_of));
}

/// Full simplicial subset on the generators accepted by `keep`; `keep` must
/// be closed under faces.
template <class Pred>
SimplicialSet subset(const SimplicialSet& x, Pred keep) {
  SimplicialSetBuilder b;
  for (int g = 0; g < x.size(); ++g) {
    if (!keep(g)) continue;
    std::vector<SimplicialSetBuilder::FaceSpec> faces;
    for (const auto& f : x.generator(g).faces) {
      if (!keep(f.generator)) throw DomainError("subset is not closed under faces at '" + x.name(g) + "'");
      faces.push_back({f.word, x.name(f.generator)});
    }
    b.add(x.name(g), x.dim(g), std::move(faces));
  }
  return b.build();
}

/// h^{-1}(a): generators all of whose vertices lie at height a.
inline SimplicialSet fiber(const SimplicialSet& x, const LevelIndex& levels, const Rational& a) {
  const int lvl = levels.find_level(a);
  if (lvl < 0) return SimplicialSet{};
  return subset(x, [&](int g) {
    const auto& vs = x.generator_vertices(g);
    return std::all_of(vs.begin(), vs.end(), [&](int v) { return levels.level_of(v) == lvl; });
  });
}

/// Largest (number of distinct vertex levels - 1) over generators; 0 for empty X.
inline int subdivision_number(const SimplicialSet& x, const LevelIndex& levels) {
  int s = 0;
  for (int g = 0; g < x.size(); ++g) {
    std::set<int> distinct;
    for (int v : x.generator_vertices(g)) distinct.insert(levels.level_of(v));
    s = std::max(s, static_cast<int>(distinct.size()) - 1);
  }
  return s;
}

/// First nondegenerate edge that skips a level, if any.
inline std::optional<int> level_skipping_edge(const SimplicialSet& x, const LevelIndex& levels) {
  for (int e = x.dim_begin(1); e < x.dim_end(1); ++e) {
    const auto& vs = x.generator_vertices(e);
    if (levels.level_of(vs[1]) - levels.level_of(vs[0]) > 1) return e;
  }
  return std::nullopt;
}

/// Every nondegenerate edge stays in one level or climbs to the next one.
inline bool is_subdivided(const SimplicialSet& x, const LevelIndex& levels) {
  return !level_skipping_edge(x, levels).has_value();
}

}  // namespace sectcx
