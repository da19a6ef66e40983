#pragma once

// "sset-v1" JSON documents:
//   {
//     "format": "sset-v1",
//     "generators": [ ["v0", "v1"],                                  // dimension 0
//                     [ {"id": "e", "faces": [[[], "v1"], [[], "v0"]]} ],  // dimension 1
//                     ... ],
//     "heights": {"v0": "0", "v1": "1/2"},
//     "field": 2,           // optional
//     "max_degree": 3       // optional
//   }
// Face i of a generator is [[j_k, ..., j_1], "id"]: the degeneracy word
// s_{j_k} ... s_{j_1} applied to generator "id".

#include <nlohmann/json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "sectcx/errors.hpp"
#include "sectcx/height.hpp"
#include "sectcx/simplicial_set.hpp"

namespace sectcx {

struct InputDocument {
  SimplicialSet space;
  HeightFunction heights;
  std::optional<std::int64_t> field;
  std::optional<int> max_degree;
};

namespace detail {

inline const nlohmann::json& member(const nlohmann::json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(path + ": missing field '" + key + "'");
  return obj.at(key);
}

inline std::string as_string(const nlohmann::json& v, const std::string& path) {
  if (!v.is_string()) throw ParseError(path + ": expected a string");
  return v.get<std::string>();
}

inline std::int64_t as_int(const nlohmann::json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError(path + ": expected an integer");
  return v.get<std::int64_t>();
}

}  // namespace detail

/// Parses the document; structural problems raise ParseError, violated
/// simplicial identities or heights raise DomainError.
inline InputDocument parse_document(const nlohmann::json& doc) {
  using detail::as_int;
  using detail::as_string;
  using detail::member;
  InputDocument in;
  if (!doc.is_object()) throw ParseError("$: expected an object");
  std::string format = as_string(member(doc, "format", "$"), "$.format");
  if (format != "sset-v1") throw ParseError("$.format: unsupported format '" + format + "'");

  const auto& gens = member(doc, "generators", "$");
  if (!gens.is_array()) throw ParseError("$.generators: expected an array of dimensions");
  SimplicialSetBuilder b;
  for (std::size_t d = 0; d < gens.size(); ++d) {
    const std::string dpath = "$.generators[" + std::to_string(d) + "]";
    if (!gens[d].is_array()) throw ParseError(dpath + ": expected an array");
    for (std::size_t k = 0; k < gens[d].size(); ++k) {
      const std::string gpath = dpath + "[" + std::to_string(k) + "]";
      const auto& g = gens[d][k];
      if (d == 0 && g.is_string()) {
        b.add(g.get<std::string>(), 0);
        continue;
      }
      std::string id = as_string(member(g, "id", gpath), gpath + ".id");
      std::vector<SimplicialSetBuilder::FaceSpec> faces;
      if (d > 0) {
        const auto& fs = member(g, "faces", gpath);
        if (!fs.is_array()) throw ParseError(gpath + ".faces: expected an array");
        for (std::size_t i = 0; i < fs.size(); ++i) {
          const std::string fpath = gpath + ".faces[" + std::to_string(i) + "]";
          const auto& f = fs[i];
          if (!f.is_array() || f.size() != 2 || !f[0].is_array())
            throw ParseError(fpath + ": expected [[degeneracy word], \"id\"]");
          DegeneracyWord w;
          for (std::size_t t = 0; t < f[0].size(); ++t)
            w.push_back(static_cast<int>(as_int(f[0][t], fpath + "[0][" + std::to_string(t) + "]")));
          faces.push_back({std::move(w), as_string(f[1], fpath + "[1]")});
        }
      }
      b.add(std::move(id), static_cast<int>(d), std::move(faces));
    }
  }
  in.space = b.build();
  auto report = validate(in.space);
  if (!report.ok()) throw DomainError("simplicial identity violated: " + report.violations.front());

  const auto& hs = member(doc, "heights", "$");
  if (!hs.is_object()) throw ParseError("$.heights: expected an object");
  for (const auto& [name, value] : hs.items()) {
    const std::string hpath = "$.heights." + name;
    std::string text = value.is_string() ? value.get<std::string>()
                       : value.is_number_integer() ? std::to_string(value.get<std::int64_t>())
                                                   : throw ParseError(hpath + ": expected a string");
    try {
      in.heights.values[name] = parse_rational(text);
    } catch (const ParseError& e) {
      throw ParseError(hpath + ": " + e.what());
    }
  }
  if (doc.contains("field")) in.field = as_int(doc["field"], "$.field");
  if (doc.contains("max_degree")) {
    auto n = as_int(doc["max_degree"], "$.max_degree");
    if (n < 0) throw ParseError("$.max_degree: must be non-negative");
    in.max_degree = static_cast<int>(n);
  }
  return in;
}

inline InputDocument read_document(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(file);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_document(doc);
}

inline nlohmann::json to_json(const SimplicialSet& x, const HeightFunction& h) {
  nlohmann::json doc;
  doc["format"] = "sset-v1";
  doc["generators"] = nlohmann::json::array();
  for (int d = 0; d <= x.top_dim(); ++d) {
    nlohmann::json dim = nlohmann::json::array();
    for (int g = x.dim_begin(d); g < x.dim_end(d); ++g) {
      if (d == 0) {
        dim.push_back(x.name(g));
        continue;
      }
      nlohmann::json faces = nlohmann::json::array();
      for (const auto& f : x.generator(g).faces) faces.push_back({f.word, x.name(f.generator)});
      dim.push_back({{"id", x.name(g)}, {"faces", faces}});
    }
    doc["generators"].push_back(std::move(dim));
  }
  doc["heights"] = nlohmann::json::object();
  for (const auto& [name, value] : h.values) doc["heights"][name] = format_rational(value);
  return doc;
}

}  // namespace sectcx
