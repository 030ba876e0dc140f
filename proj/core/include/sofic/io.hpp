#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sofic/action.hpp"
#include "sofic/cohomology.hpp"
#include "sofic/complex.hpp"
#include "sofic/rational.hpp"
#include "sofic/sym_cochain.hpp"

namespace sofic {

// Text formats. Blank lines and anything after '#' are ignored. Parse
// errors throw InputError prefixed with "source:line:".
//
// complex:       dim <d>            then one maximal face per line: v0 v1 ... vk
// cochain:       dim <k>            then one cell per line; listed cells carry 1
// presentation:  gen <name>         rel <letter> <letter> ...   (letter = name or name^-1)
// action:        [size <N>]         gen <name>   then lines  i -> j  (or  i -> undef)
// sym cochain:   [complex <path>]   n <n>   edge <u> <v>   then lines  i -> j | undef
//
// Points an action or sym block does not list are undefined; edges a sym
// file never mentions keep the identity.

SimplicialComplex read_complex(std::istream& in, const std::string& source = "<input>");
SimplicialComplex load_complex(const std::filesystem::path& path);
void write_complex(std::ostream& out, const SimplicialComplex& x);

F2Cochain read_cochain(std::istream& in, const SimplicialComplex& x, const std::string& source = "<input>");
F2Cochain load_cochain(const std::filesystem::path& path, const SimplicialComplex& x);
void write_cochain(std::ostream& out, const SimplicialComplex& x, const F2Cochain& a);

Presentation read_presentation(std::istream& in, const std::string& source = "<input>");
Presentation load_presentation(const std::filesystem::path& path);
void write_presentation(std::ostream& out, const Presentation& p);

AlmostAction read_action(std::istream& in, const Presentation& p, const std::string& source = "<input>");
AlmostAction load_action(const std::filesystem::path& path, const Presentation& p);
void write_action(std::ostream& out, const AlmostAction& a);

/// When `x` is null the file must name its complex; a relative path is
/// resolved against `base_dir`.
SymCochain read_sym_cochain(std::istream& in, std::shared_ptr<const SimplicialComplex> x,
                            const std::string& source = "<input>",
                            const std::filesystem::path& base_dir = {});
SymCochain load_sym_cochain(const std::filesystem::path& path,
                            std::shared_ptr<const SimplicialComplex> x = nullptr);
void write_sym_cochain(std::ostream& out, const SymCochain& f,
                       const std::optional<std::string>& complex_path = std::nullopt);

/// Minimal CSV emitter. Rational columns are written as two cells, the
/// exact "num/den" under `name` and a rounded decimal under `name_dec`.
class CsvTable {
 public:
  void add_column(const std::string& name) { header_.push_back(name); }
  void add_rational_column(const std::string& name);
  const std::vector<std::string>& header() const { return header_; }

  class Row {
   public:
    Row& add(const std::string& cell);
    Row& add(std::size_t value) { return add(std::to_string(value)); }
    Row& add(bool value) { return add(std::string(value ? "true" : "false")); }
    Row& add(const char* cell) { return add(std::string(cell)); }
    Row& add(const Rational& q);

   private:
    friend class CsvTable;
    std::vector<std::string> cells_;
  };

  Row& new_row();
  /// Throws InputError when a row's width differs from the header.
  void write(std::ostream& out) const;
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<Row> rows_;
};

/// Writes text to a file, creating parent directories; throws InputError on
/// failure.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace sofic
