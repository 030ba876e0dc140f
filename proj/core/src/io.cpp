#include "sofic/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "sofic/error.hpp"

namespace sofic {

namespace {

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  // Next non-empty line split into tokens, comments removed.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      tokens.clear();
      for (std::string t; ss >> t;) tokens.push_back(t);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError(source_ + ":" + std::to_string(line_no_) + ": " + msg);
  }

  std::uint64_t number(const std::string& token, std::uint64_t max = std::numeric_limits<std::uint32_t>::max() - 1) const {
    std::uint64_t v = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (ec != std::errc() || ptr != end) fail("expected a non-negative integer, got '" + token + "'");
    if (v > max) fail("value " + token + " is out of range");
    return v;
  }

  // "i -> j" or "i -> undef".
  std::pair<Point, Point> arrow(const std::vector<std::string>& t) const {
    if (t.size() != 3 || t[1] != "->") fail("expected 'i -> j'");
    const auto i = static_cast<Point>(number(t[0]));
    const Point j = t[2] == "undef" ? kError : static_cast<Point>(number(t[2]));
    return {i, j};
  }

  const std::string& source() const { return source_; }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_no_ = 0;
};

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

// Builds an ErrPerm from arrow lines, reporting collisions on the line that
// caused them.
class ImageBuilder {
 public:
  void add(const LineReader& r, Point i, Point j) {
    if (map_.count(i)) r.fail("point " + std::to_string(i) + " is assigned twice");
    if (j != kError) {
      if (used_.count(j)) r.fail("image " + std::to_string(j) + " is hit twice");
      used_.insert({j, i});
    }
    map_[i] = j;
  }

  Point max_point() const {
    Point m = 0;
    for (auto [i, j] : map_) m = std::max({m, i + 1, j == kError ? 0 : j + 1});
    return m;
  }

  ErrPerm build(const LineReader& r, Point universe) const {
    std::vector<Point> im(universe, kError);
    for (auto [i, j] : map_) {
      if (i >= universe || (j != kError && j >= universe))
        r.fail("point out of range for size " + std::to_string(universe));
      im[i] = j;
    }
    return ErrPerm(std::move(im));
  }

 private:
  std::map<Point, Point> map_;
  std::map<Point, Point> used_;
};

std::string join(const Cell& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
  return s;
}

void write_arrows(std::ostream& out, const ErrPerm& p) {
  for (Point i = 0; i < p.universe(); ++i)
    if (p.defined(i)) out << i << " -> " << p(i) << "\n";
}

}  // namespace

SimplicialComplex read_complex(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::vector<std::string> t;
  if (!r.next(t)) r.fail("empty complex file");
  if (t.size() != 2 || t[0] != "dim") r.fail("expected 'dim <d>'");
  const auto d = static_cast<int>(r.number(t[1], 64));
  std::vector<Cell> faces;
  Vertex bound = 0;
  bool pure = true;
  while (r.next(t)) {
    Cell c;
    for (const auto& tok : t) c.push_back(static_cast<Vertex>(r.number(tok)));
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) r.fail("repeated vertex in face");
    if (static_cast<int>(c.size()) > d + 1) r.fail("face has more than dim+1 vertices");
    if (static_cast<int>(c.size()) != d + 1) pure = false;
    bound = std::max(bound, c.back() + 1);
    faces.push_back(std::move(c));
  }
  if (faces.empty()) r.fail("complex has no faces");
  const bool reaches_dim = std::any_of(faces.begin(), faces.end(), [&](const Cell& c) {
    return static_cast<int>(c.size()) == d + 1;
  });
  if (!reaches_dim) r.fail("no face of dimension " + std::to_string(d));
  return pure ? SimplicialComplex::from_top_faces(faces) : SimplicialComplex::from_cells(faces, bound);
}

SimplicialComplex load_complex(const std::filesystem::path& path) {
  auto in = open(path);
  return read_complex(in, path.string());
}

void write_complex(std::ostream& out, const SimplicialComplex& x) {
  out << "dim " << x.dim() << "\n";
  for (int k = 0; k <= x.dim(); ++k)
    for (std::size_t i = 0; i < x.size(k); ++i)
      if (k == x.dim() || x.cofaces(k, i).empty()) out << join(x.cell(k, i)) << "\n";
}

F2Cochain read_cochain(std::istream& in, const SimplicialComplex& x, const std::string& source) {
  LineReader r(in, source);
  std::vector<std::string> t;
  if (!r.next(t)) r.fail("empty cochain file");
  if (t.size() != 2 || t[0] != "dim") r.fail("expected 'dim <k>'");
  const auto k = static_cast<int>(r.number(t[1], 64));
  if (k > x.dim()) r.fail("cochain degree exceeds the dimension of the complex");
  F2Cochain a = F2Cochain::zero(x, k);
  while (r.next(t)) {
    Cell c;
    for (const auto& tok : t) c.push_back(static_cast<Vertex>(r.number(tok)));
    std::sort(c.begin(), c.end());
    if (static_cast<int>(c.size()) != k + 1) r.fail("cell has the wrong number of vertices");
    const auto idx = x.index_of(c);
    if (!idx) r.fail("cell " + join(c) + " is not in the complex");
    a.bits.set(*idx);
  }
  return a;
}

F2Cochain load_cochain(const std::filesystem::path& path, const SimplicialComplex& x) {
  auto in = open(path);
  return read_cochain(in, x, path.string());
}

void write_cochain(std::ostream& out, const SimplicialComplex& x, const F2Cochain& a) {
  out << "dim " << a.k << "\n";
  for (std::size_t i = 0; i < a.bits.size(); ++i)
    if (a.bits.test(i)) out << join(x.cell(a.k, i)) << "\n";
}

Presentation read_presentation(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  Presentation p;
  std::vector<std::string> t;
  while (r.next(t)) {
    if (t[0] == "gen") {
      if (t.size() != 2) r.fail("expected 'gen <name>'");
      if (p.find(t[1])) r.fail("generator '" + t[1] + "' declared twice");
      if (t[1].find('^') != std::string::npos) r.fail("generator names may not contain '^'");
      p.add_generator(t[1]);
    } else if (t[0] == "rel") {
      std::string text;
      for (std::size_t i = 1; i < t.size(); ++i) text += (i > 1 ? " " : "") + t[i];
      try {
        p.add_relation(p.parse_word(text));
      } catch (const InputError& e) {
        r.fail(e.what());
      }
    } else {
      r.fail("unknown keyword '" + t[0] + "'");
    }
  }
  return p;
}

Presentation load_presentation(const std::filesystem::path& path) {
  auto in = open(path);
  return read_presentation(in, path.string());
}

void write_presentation(std::ostream& out, const Presentation& p) {
  for (const auto& g : p.generators()) out << "gen " << g << "\n";
  for (const auto& w : p.relations()) out << "rel " << p.format_word(w) << "\n";
}

AlmostAction read_action(std::istream& in, const Presentation& p, const std::string& source) {
  LineReader r(in, source);
  std::optional<Point> size;
  std::vector<std::optional<ImageBuilder>> blocks(p.generator_count());
  std::optional<std::uint32_t> current;
  std::vector<std::string> t;
  while (r.next(t)) {
    if (t[0] == "size") {
      if (t.size() != 2) r.fail("expected 'size <N>'");
      if (size || current) r.fail("'size' must come first and only once");
      size = static_cast<Point>(r.number(t[1]));
    } else if (t[0] == "gen") {
      if (t.size() != 2) r.fail("expected 'gen <name>'");
      const auto g = p.find(t[1]);
      if (!g) r.fail("unknown generator '" + t[1] + "'");
      if (blocks[*g]) r.fail("generator '" + t[1] + "' listed twice");
      blocks[*g].emplace();
      current = *g;
    } else {
      if (!current) r.fail("point mapping before any 'gen' line");
      const auto [i, j] = r.arrow(t);
      blocks[*current]->add(r, i, j);
    }
  }
  Point universe = size.value_or(0);
  if (!size)
    for (const auto& b : blocks)
      if (b) universe = std::max(universe, b->max_point());
  std::vector<ErrPerm> images;
  for (std::uint32_t g = 0; g < p.generator_count(); ++g) {
    if (!blocks[g]) r.fail("generator '" + p.generator(g) + "' has no permutation");
    images.push_back(blocks[g]->build(r, universe));
  }
  return AlmostAction(p, std::move(images), universe);
}

AlmostAction load_action(const std::filesystem::path& path, const Presentation& p) {
  auto in = open(path);
  return read_action(in, p, path.string());
}

void write_action(std::ostream& out, const AlmostAction& a) {
  out << "size " << a.universe() << "\n";
  for (std::uint32_t g = 0; g < a.presentation().generator_count(); ++g) {
    out << "gen " << a.presentation().generator(g) << "\n";
    write_arrows(out, a.image(g));
  }
}

SymCochain read_sym_cochain(std::istream& in, std::shared_ptr<const SimplicialComplex> x,
                            const std::string& source, const std::filesystem::path& base_dir) {
  LineReader r(in, source);
  std::optional<std::uint32_t> n;
  std::map<std::pair<Vertex, Vertex>, ImageBuilder> edges;
  std::optional<std::pair<Vertex, Vertex>> current;
  std::vector<std::pair<Vertex, Vertex>> order;
  std::vector<std::string> t;
  while (r.next(t)) {
    if (t[0] == "complex") {
      if (t.size() != 2) r.fail("expected 'complex <path>'");
      if (!x) {
        std::filesystem::path path(t[1]);
        if (path.is_relative()) path = base_dir / path;
        x = std::make_shared<const SimplicialComplex>(load_complex(path));
      }
    } else if (t[0] == "n") {
      if (t.size() != 2) r.fail("expected 'n <n>'");
      if (n) r.fail("'n' given twice");
      n = static_cast<std::uint32_t>(r.number(t[1]));
    } else if (t[0] == "edge") {
      if (t.size() != 3) r.fail("expected 'edge <u> <v>'");
      const auto u = static_cast<Vertex>(r.number(t[1]));
      const auto v = static_cast<Vertex>(r.number(t[2]));
      if (edges.count({u, v}) || edges.count({v, u})) r.fail("edge given twice");
      edges[{u, v}];
      order.emplace_back(u, v);
      current = std::pair{u, v};
    } else {
      if (!current) r.fail("point mapping before any 'edge' line");
      const auto [i, j] = r.arrow(t);
      edges[*current].add(r, i, j);
    }
  }
  if (!x) r.fail("no complex given");
  if (!n) r.fail("missing 'n <n>'");
  if (x->dim() < 1) r.fail("the complex has no edges");
  SymCochain f(x, 1, *n);
  for (const auto& [u, v] : order) {
    if (!x->contains(Cell{std::min(u, v), std::max(u, v)}))
      r.fail("edge " + std::to_string(u) + " " + std::to_string(v) + " is not in the complex");
    f.set_edge(u, v, edges.at({u, v}).build(r, *n));
  }
  return f;
}

SymCochain load_sym_cochain(const std::filesystem::path& path, std::shared_ptr<const SimplicialComplex> x) {
  auto in = open(path);
  return read_sym_cochain(in, std::move(x), path.string(), path.parent_path());
}

void write_sym_cochain(std::ostream& out, const SymCochain& f, const std::optional<std::string>& complex_path) {
  if (f.degree() != 1) throw InputError("only 1-cochains have a file format");
  if (complex_path) out << "complex " << *complex_path << "\n";
  out << "n " << f.n() << "\n";
  const auto& x = f.complex();
  for (std::size_t e = 0; e < x.size(1); ++e) {
    const Cell& c = x.cell(1, e);
    out << "edge " << c[0] << " " << c[1] << "\n";
    const ErrPerm& p = f.at(e);
    for (Point i = 0; i < f.n(); ++i) {
      out << i << " -> ";
      if (p.defined(i))
        out << p(i) << "\n";
      else
        out << "undef\n";
    }
  }
}

void CsvTable::add_rational_column(const std::string& name) {
  header_.push_back(name);
  header_.push_back(name + "_dec");
}

CsvTable::Row& CsvTable::Row::add(const std::string& cell) {
  if (cell.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : cell) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    cells_.push_back(q + "\"");
  } else {
    cells_.push_back(cell);
  }
  return *this;
}

CsvTable::Row& CsvTable::Row::add(const Rational& q) {
  cells_.push_back(to_fraction_string(q));
  cells_.push_back(to_decimal_string(q));
  return *this;
}

CsvTable::Row& CsvTable::new_row() { return rows_.emplace_back(); }

void CsvTable::write(std::ostream& out) const {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << "\n";
  };
  line(header_);
  for (const auto& r : rows_) {
    if (r.cells_.size() != header_.size())
      throw InputError("csv row has " + std::to_string(r.cells_.size()) + " cells, header has " +
                       std::to_string(header_.size()));
    line(r.cells_);
  }
}

std::string CsvTable::str() const {
  std::ostringstream ss;
  write(ss);
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("write failed for " + path.string());
}

}  // namespace sofic
