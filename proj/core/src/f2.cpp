#include "sofic/f2.hpp"

#include <algorithm>
#include <numeric>

#include "sofic/error.hpp"

namespace sofic::f2 {

bool lex_less(const Bits& a, const Bits& b) {
  Bits diff = a ^ b;
  const auto first = diff.find_first();
  if (first == Bits::npos) return false;
  return !a.test(first);
}

Bits Echelon::reduce(Bits v) const {
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (v.test(pivots[i])) v ^= rows[i];
  return v;
}

std::vector<Bits> Echelon::complement() const {
  std::vector<bool> is_pivot(width, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Bits> out;
  for (std::size_t c = 0; c < width; ++c) {
    if (is_pivot[c]) continue;
    Bits e(width);
    e.set(c);
    out.push_back(std::move(e));
  }
  return out;
}

Echelon row_reduce(std::vector<Bits> rows, std::size_t width) {
  Echelon e;
  e.width = width;
  for (auto& r : rows) {
    if (r.size() != width) throw InputError("row width mismatch in F2 elimination");
    for (std::size_t i = 0; i < e.rows.size(); ++i)
      if (r.test(e.pivots[i])) r ^= e.rows[i];
    const auto p = r.find_first();
    if (p == Bits::npos) continue;
    for (auto& existing : e.rows)
      if (existing.test(p)) existing ^= r;
    e.rows.push_back(std::move(r));
    e.pivots.push_back(p);
  }
  std::vector<std::size_t> order(e.rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return e.pivots[a] < e.pivots[b]; });
  Echelon sorted;
  sorted.width = width;
  for (auto i : order) {
    sorted.rows.push_back(std::move(e.rows[i]));
    sorted.pivots.push_back(e.pivots[i]);
  }
  return sorted;
}

std::size_t rank(const std::vector<Bits>& rows, std::size_t width) {
  return row_reduce(rows, width).rank();
}

std::vector<Bits> nullspace(const std::vector<Bits>& rows, std::size_t width) {
  const Echelon e = row_reduce(rows, width);
  std::vector<bool> is_pivot(width, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Bits> basis;
  for (std::size_t free = 0; free < width; ++free) {
    if (is_pivot[free]) continue;
    Bits x(width);
    x.set(free);
    // each row reads x[pivot] + x[free]*row[free] = 0
    for (std::size_t i = 0; i < e.rows.size(); ++i)
      if (e.rows[i].test(free)) x.set(e.pivots[i]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Bits> solve(const std::vector<Bits>& rows, std::size_t width, const Bits& rhs) {
  if (rhs.size() != rows.size()) throw InputError("rhs length mismatch in F2 solve");
  std::vector<Bits> augmented;
  augmented.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Bits a = rows[i];
    a.resize(width + 1);
    a[width] = rhs[i];
    augmented.push_back(std::move(a));
  }
  const Echelon e = row_reduce(std::move(augmented), width + 1);
  Bits x(width);
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == width) return std::nullopt;  // 0 = 1
    if (e.rows[i].test(width)) x.set(e.pivots[i]);
  }
  return x;
}

}  // namespace sofic::f2
