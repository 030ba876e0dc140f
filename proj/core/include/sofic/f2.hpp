#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace sofic::f2 {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Lexicographic order on bit sequences read from index 0 upward, 0 < 1.
/// Both operands must have the same length.
bool lex_less(const Bits& a, const Bits& b);

/// Reduced row echelon form. The pivot of a row is its lowest set index;
/// every other row is zero at that index. Rows are sorted by pivot.
struct Echelon {
  std::size_t width = 0;
  std::vector<Bits> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }
  /// Reduces v modulo the row space; zero iff v lies in the span.
  Bits reduce(Bits v) const;
  bool contains(const Bits& v) const { return reduce(v).none(); }
  /// Unit vectors at the non-pivot columns; together with `rows` they form
  /// a basis of the full space.
  std::vector<Bits> complement() const;
};

Echelon row_reduce(std::vector<Bits> rows, std::size_t width);

std::size_t rank(const std::vector<Bits>& rows, std::size_t width);

/// Basis of { x ∈ F2^width : <r, x> = 0 for every row r }.
std::vector<Bits> nullspace(const std::vector<Bits>& rows, std::size_t width);

/// Some x with <rows[i], x> = rhs[i] for all i, or nullopt.
std::optional<Bits> solve(const std::vector<Bits>& rows, std::size_t width, const Bits& rhs);

}  // namespace sofic::f2
