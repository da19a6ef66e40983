// sectcx: section complexes, Reeb complexes and the section spectral
// sequence of a simplicial height function.
//
// Exit codes: 0 success, 1 domain error, 2 usage or parse error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sectcx/io.hpp"
#include "sectcx/pipeline.hpp"
#include "sectcx/reeb.hpp"
#include "sectcx/spectral.hpp"

using namespace sectcx;

namespace {

struct Globals {
  std::int64_t field = 2;
  int max_degree = 3;
  int threads = 0;
  std::int64_t cap = 1000000;
  CLI::Option* field_opt = nullptr;
  CLI::Option* degree_opt = nullptr;
};

struct Loaded {
  InputDocument doc;
  PrimeField field{2};
  int max_degree = 3;
  int threads = 1;
  LevelIndex levels;
};

Loaded load(const std::string& path, const Globals& g) {
  Loaded l{read_document(path), PrimeField(2), g.max_degree, g.threads, {}};
  std::int64_t p = g.field;
  if (!g.field_opt->count() && l.doc.field) p = *l.doc.field;
  if (!g.degree_opt->count() && l.doc.max_degree) l.max_degree = *l.doc.max_degree;
  if (l.max_degree < 0) throw DomainError("max degree must be non-negative");
  l.field = PrimeField(p);
  if (l.threads <= 0) l.threads = std::max(1u, std::thread::hardware_concurrency());
  l.levels = validate_height(l.doc.space, l.doc.heights);
  return l;
}

void print_matrix(std::ostream& out, const Matrix& m, const PrimeField& f, const std::string& indent) {
  if (m.rows() == 0 || m.cols() == 0) {
    out << indent << "(" << m.rows() << "x" << m.cols() << ")\n";
    return;
  }
  for (const auto& row : m.to_signed(f)) {
    out << indent << "[";
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << (row[j] >= 0 ? " " : "") << row[j];
    out << " ]\n";
  }
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

int cmd_validate(const std::string& path, const Globals& g) {
  auto l = load(path, g);
  const auto& x = l.doc.space;
  auto report = validate(x);
  std::cout << "generators: " << x.size() << "\n";
  std::cout << "face identities: " << (report.ok() ? "ok" : "violated") << "\n";
  for (const auto& v : report.violations) std::cout << "  " << v << "\n";
  std::cout << "heights: monotone on all " << x.count(1) << " edges\n";
  return report.ok() ? 0 : 1;
}

int cmd_info(const std::string& path, const Globals& g) {
  auto l = load(path, g);
  const auto& x = l.doc.space;
  std::cout << "dimension: " << x.top_dim() << "\n";
  std::cout << "generators:";
  for (int d = 0; d <= x.top_dim(); ++d) std::cout << " " << x.count(d);
  std::cout << "\nlevels:";
  for (const auto& r : l.levels.levels()) std::cout << " " << format_rational(r);
  std::cout << "\nsubdivision number: " << subdivision_number(x, l.levels) << "\n";
  std::cout << "subdivided: " << (is_subdivided(x, l.levels) ? "true" : "false") << "\n";
  return 0;
}

std::vector<int> parse_word(const std::string& text, const LevelIndex& levels, bool& present) {
  std::vector<int> word;
  present = true;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational r;
    try {
      r = parse_rational(item);
    } catch (const DomainError& e) {
      throw ParseError(std::string("--heights: ") + e.what());
    }
    int a = levels.find_level(r);
    if (a < 0) present = false;
    word.push_back(a);
  }
  if (word.empty()) throw ParseError("--heights: expected a comma separated list of heights");
  for (std::size_t k = 1; k < word.size(); ++k)
    if (present && word[k] < word[k - 1]) throw DomainError("--heights: height word must be non-decreasing");
  return word;
}

int cmd_sections(const std::string& path, const Globals& g, const std::string& heights, int max_q, bool as_json) {
  auto l = load(path, g);
  SectionComplex sc(l.doc.space, l.levels, g.cap);
  bool present = false;
  auto word = parse_word(heights, l.levels, present);
  nlohmann::json doc = nlohmann::json::array();
  for (int q = 0; q <= max_q; ++q) {
    std::vector<Section> secs;
    if (present)
      for (auto& s : sc.enumerate(word, q))
        if (sc.is_doubly_nondegenerate(s)) secs.push_back(std::move(s));
    if (!as_json) std::cout << "q=" << q << ": " << secs.size() << " sections\n";
    for (const auto& s : secs) {
      auto faces = [&](Direction dir, int n) {
        std::vector<std::string> out;
        if (n == 0) return out;
        for (int i = 0; i <= n; ++i) {
          Section f = sc.face(s, dir, i);
          out.push_back(sc.is_degenerate(f, Direction::horizontal) || sc.is_degenerate(f, Direction::vertical)
                            ? "degenerate"
                            : sc.describe(f));
        }
        return out;
      };
      auto h = faces(Direction::horizontal, s.p);
      auto v = faces(Direction::vertical, s.q);
      if (as_json) {
        doc.push_back({{"p", s.p}, {"q", s.q}, {"section", sc.describe(s)}, {"horizontal_faces", h}, {"vertical_faces", v}});
      } else {
        std::cout << "  " << sc.describe(s) << "\n";
        for (std::size_t i = 0; i < h.size(); ++i) std::cout << "    dh" << i << " = " << h[i] << "\n";
        for (std::size_t i = 0; i < v.size(); ++i) std::cout << "    dv" << i << " = " << v[i] << "\n";
      }
    }
  }
  if (as_json) std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_reeb(const std::string& path, const Globals& g, int q) {
  auto l = load(path, g);
  SectionComplex sc(l.doc.space, l.levels, g.cap);
  ReebData data(sc, l.field, q, l.threads);
  auto rc = reeb_complex(data, q);
  std::cout << "G_" << q << " over GF(" << l.field.modulus() << ")\n";
  for (int p = 0; p <= rc.complex.top(); ++p) {
    std::cout << "degree " << p << ": dim " << rc.complex.size(p) << "\n";
    for (const auto& lab : rc.complex.labels(p)) std::cout << "  " << lab << "\n";
    if (p > 0) {
      Matrix d = rc.complex.differential(p);
      std::cout << "  d" << p << " (rank " << rank(l.field, d) << "):\n";
      print_matrix(std::cout, d, l.field, "    ");
    }
  }
  std::cout << "homology: (" << join(reeb_homology(rc)) << ")\n";
  return 0;
}

int cmd_reeb_graph(const std::string& path, const Globals& g, const std::string& format) {
  auto l = load(path, g);
  SectionComplex sc(l.doc.space, l.levels, g.cap);
  ReebData data(sc, l.field, 0, l.threads);
  auto graph = reeb_graph(data);
  if (format == "json") {
    std::cout << reeb_graph_json(data, graph).dump(2) << "\n";
    return 0;
  }
  std::cout << "graph reeb {\n";
  for (std::size_t k = 0; k < graph.vertices.size(); ++k)
    std::cout << "  v" << k << " [label=\"" << format_rational(l.levels.value(graph.vertices[k].level)) << "\"];\n";
  for (const auto& e : graph.edges) std::cout << "  v" << e.source << " -- v" << e.target << ";\n";
  std::cout << "}\n";
  return 0;
}

int cmd_barcode(const std::string& path, const Globals& g, const std::string& format, int max_q) {
  auto l = load(path, g);
  SectionComplex sc(l.doc.space, l.levels, g.cap);
  ReebData data(sc, l.field, max_q, l.threads);
  auto bc = barcode(data);
  if (format == "json")
    std::cout << barcode_json(bc).dump(2) << "\n";
  else
    std::cout << barcode_dot(bc);
  return 0;
}

int cmd_ss(const std::string& path, const Globals& g, int page) {
  auto l = load(path, g);
  SectionComplex sc(l.doc.space, l.levels, g.cap);
  auto tr = build_truncation(sc, l.max_degree, l.threads);
  DoubleComplex dc(sc, tr, l.field);
  SpectralSequence ss(dc);
  const int n = dc.certified_degree();
  if (page < 1) throw DomainError("page index must be at least 1");
  const int shown = std::min(page, ss.infinity_page());
  std::cout << "E^" << page << " over GF(" << l.field.modulus() << "), p + q <= " << n;
  if (shown != page) std::cout << " (stable from page " << ss.infinity_page() << ")";
  std::cout << "\n";
  for (int q = n; q >= 0; --q) {
    std::cout << "q=" << q << " |";
    for (int p = 0; p + q <= n; ++p) std::cout << " " << ss.dim(shown, p, q);
    std::cout << "\n";
  }
  std::cout << "entries:\n";
  for (int p = 0; p <= n; ++p)
    for (int q = 0; p + q <= n; ++q) {
      const auto& e = ss.entry(shown, p, q);
      if (e.dim == 0) continue;
      std::cout << "  (" << p << "," << q << ")=" << e.dim;
      if (p - shown >= 0) std::cout << "  d to (" << p - shown << "," << q + shown - 1 << ") rank " << rank(l.field, e.differential);
      std::cout << "\n";
    }
  return 0;
}

int cmd_homology(const std::string& path, const Globals& g) {
  auto l = load(path, g);
  auto b = space_homology(l.doc.space, l.field, l.max_degree);
  for (std::size_t n = 0; n < b.size(); ++n) std::cout << "H" << n << " = " << b[n] << "\n";
  return 0;
}

int cmd_diag_check(const std::string& path, const Globals& g) {
  auto l = load(path, g);
  SectionComplex sc(l.doc.space, l.levels, g.cap);
  auto r = convergence_check(sc, l.field, l.max_degree, l.threads);
  std::cout << "n  X  Tot  diag  Einf\n";
  for (std::size_t n = 0; n < r.betti_x.size(); ++n)
    std::cout << n << "  " << r.betti_x[n] << "  " << r.betti_tot[n] << "  " << r.betti_diag[n] << "  "
              << r.betti_infinity[n] << "\n";
  std::cout << "collapse at E^" << r.subdivision + 1 << ": " << (r.collapse_ok ? "yes" : "no") << "\n";
  for (const auto& f : r.failures) std::cout << "  " << f << "\n";
  std::cout << (r.ok() ? "PASS" : "FAIL") << " (" << join(r.betti_x) << ")\n";
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Section complexes and the section spectral sequence of a simplicial height function"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  g.field_opt = app.add_option("--field", g.field, "prime modulus of the coefficient field")->capture_default_str();
  g.degree_opt = app.add_option("--max-degree", g.max_degree, "largest total degree N")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads (0 = all)")->capture_default_str();
  app.add_option("--cap", g.cap, "cap on the number of enumerated sections")->capture_default_str();

  std::string file;
  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "sset-v1 JSON input")->required();
    return sub;
  };

  auto* validate_cmd = with_file(app.add_subcommand("validate", "check the simplicial identities and heights"));
  auto* info_cmd = with_file(app.add_subcommand("info", "levels, subdivision number and generator counts"));

  std::string heights;
  int q = 0;
  bool json = false;
  auto* sections_cmd = with_file(app.add_subcommand("sections", "list nondegenerate sections over a height word"));
  sections_cmd->add_option("--heights", heights, "height word a0,...,ap")->required();
  sections_cmd->add_option("--q", q, "largest vertical degree")->capture_default_str();
  sections_cmd->add_flag("--json", json, "JSON output");

  auto* reeb_cmd = with_file(app.add_subcommand("reeb", "Reeb complex G_q"));
  reeb_cmd->add_option("--q", q, "homology degree")->capture_default_str();

  std::string format = "json";
  auto* graph_cmd = with_file(app.add_subcommand("reeb-graph", "Reeb graph of a subdivided input"));
  graph_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}))->capture_default_str();

  int bq = 1;
  auto* barcode_cmd = with_file(app.add_subcommand("barcode", "barcode diagram of the section spaces"));
  barcode_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  barcode_cmd->add_option("--q", bq, "largest homology degree")->capture_default_str();

  int page = 2;
  auto* ss_cmd = with_file(app.add_subcommand("ss", "pages of the section spectral sequence"));
  ss_cmd->add_option("--page", page)->capture_default_str();

  auto* homology_cmd = with_file(app.add_subcommand("homology", "homology of X"));
  auto* diag_cmd = with_file(app.add_subcommand("diag-check", "compare X, Tot, diag and E-infinity"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(file, g);
    if (*info_cmd) return cmd_info(file, g);
    if (*sections_cmd) return cmd_sections(file, g, heights, q, json);
    if (*reeb_cmd) return cmd_reeb(file, g, q);
    if (*graph_cmd) return cmd_reeb_graph(file, g, format);
    if (*barcode_cmd) return cmd_barcode(file, g, format, bq);
    if (*ss_cmd) return cmd_ss(file, g, page);
    if (*homology_cmd) return cmd_homology(file, g);
    if (*diag_cmd) return cmd_diag_check(file, g);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const WindowError& e) {
    std::cerr << "error: " << e.what() << "; rerun with --max-degree " << e.required_degree() << " or larger\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
