#include "sofic/cohomology.hpp"

#include <bit>

#include "sofic/error.hpp"

namespace sofic {

namespace {

void require_dim(const SimplicialComplex& x, int k) {
  if (k < 0 || k > x.dim())
    throw InputError("cochain dimension " + std::to_string(k) + " out of range for a " +
                     std::to_string(x.dim()) + "-dimensional complex");
}

void require_cochain(const SimplicialComplex& x, const F2Cochain& a) {
  require_dim(x, a.k);
  if (a.bits.size() != x.size(a.k)) throw InputError("cochain length does not match the complex");
}

std::uint64_t scaled_norm(const f2::Bits& bits, const WeightScale& w) {
  std::uint64_t total = 0;
  for (auto i = bits.find_first(); i != f2::Bits::npos; i = bits.find_next(i)) total += w.numerators[i];
  return total;
}

Rational as_rational(std::uint64_t num, std::uint64_t den) {
  Rational q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

struct GrayMinimum {
  std::uint64_t weight = 0;
  f2::Bits element;  // the subspace element v minimizing ‖α + v‖
};

// Walks span(basis) in Gray-code order, keeping ‖α + v‖ incrementally.
GrayMinimum gray_minimum(const f2::Bits& alpha, const std::vector<f2::Bits>& basis,
                         const WeightScale& w) {
  std::vector<std::vector<std::size_t>> supports;
  supports.reserve(basis.size());
  for (const auto& b : basis) {
    std::vector<std::size_t> s;
    for (auto i = b.find_first(); i != f2::Bits::npos; i = b.find_next(i)) s.push_back(i);
    supports.push_back(std::move(s));
  }
  f2::Bits cur = alpha;
  f2::Bits v(alpha.size());
  std::uint64_t cur_w = scaled_norm(cur, w);
  GrayMinimum best{cur_w, v};
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto j = static_cast<std::size_t>(std::countr_zero(step));
    for (auto idx : supports[j]) {
      if (cur.test(idx))
        cur_w -= w.numerators[idx];
      else
        cur_w += w.numerators[idx];
      cur.flip(idx);
    }
    v ^= basis[j];
    if (cur_w < best.weight || (cur_w == best.weight && f2::lex_less(v, best.element))) {
      best.weight = cur_w;
      best.element = v;
    }
  }
  return best;
}

}  // namespace

F2Cochain F2Cochain::zero(const SimplicialComplex& x, int k) {
  require_dim(x, k);
  return F2Cochain(k, f2::Bits(x.size(k)));
}

F2Cochain F2Cochain::ones(const SimplicialComplex& x, int k) {
  F2Cochain a = zero(x, k);
  a.bits.set();
  return a;
}

F2Cochain F2Cochain::indicator(const SimplicialComplex& x, const Cell& cell) {
  const int k = static_cast<int>(cell.size()) - 1;
  F2Cochain a = zero(x, k);
  a.bits.set(x.require_index(cell));
  return a;
}

F2Cochain& F2Cochain::operator+=(const F2Cochain& o) {
  if (o.k != k || o.bits.size() != bits.size()) throw InputError("adding cochains of different shape");
  bits ^= o.bits;
  return *this;
}

F2Cochain coboundary(const SimplicialComplex& x, const F2Cochain& alpha) {
  require_cochain(x, alpha);
  if (alpha.k >= x.dim())
    throw InputError("coboundary of a top-dimensional cochain has no codomain");
  const int k = alpha.k;
  F2Cochain out = F2Cochain::zero(x, k + 1);
  for (auto i = alpha.bits.find_first(); i != f2::Bits::npos; i = alpha.bits.find_next(i))
    for (auto c : x.cofaces(k, i)) out.bits.flip(c);
  return out;
}

Rational weighted_norm(const SimplicialComplex& x, const F2Cochain& alpha) {
  require_cochain(x, alpha);
  const WeightScale w = weight_scale(x, alpha.k);
  return as_rational(scaled_norm(alpha.bits, w), w.denominator);
}

Rational weighted_distance(const SimplicialComplex& x, const F2Cochain& a, const F2Cochain& b) {
  return weighted_norm(x, a + b);
}

std::vector<F2Cochain> F2Subspace::vectors() const {
  std::vector<F2Cochain> out;
  for (const auto& r : basis.rows) out.emplace_back(k, r);
  return out;
}

F2Subspace cocycle_space(const SimplicialComplex& x, int k) {
  require_dim(x, k);
  const std::size_t n = x.size(k);
  F2Subspace z;
  z.k = k;
  if (k == x.dim()) {
    std::vector<f2::Bits> all;
    for (std::size_t i = 0; i < n; ++i) {
      f2::Bits e(n);
      e.set(i);
      all.push_back(std::move(e));
    }
    z.basis = f2::row_reduce(std::move(all), n);
    return z;
  }
  // rows of δ_k: one per (k+1)-cell, supported on its boundary
  std::vector<f2::Bits> rows;
  rows.reserve(x.size(k + 1));
  for (std::size_t c = 0; c < x.size(k + 1); ++c) {
    f2::Bits r(n);
    for (auto f : x.boundary(k + 1, c)) r.set(f);
    rows.push_back(std::move(r));
  }
  z.basis = f2::row_reduce(f2::nullspace(rows, n), n);
  return z;
}

F2Subspace coboundary_space(const SimplicialComplex& x, int k) {
  require_dim(x, k);
  F2Subspace b;
  b.k = k;
  const std::size_t n = x.size(k);
  std::vector<f2::Bits> images;
  if (k > 0) {
    for (std::size_t i = 0; i < x.size(k - 1); ++i) {
      f2::Bits r(n);
      for (auto c : x.cofaces(k - 1, i)) r.set(c);
      images.push_back(std::move(r));
    }
  }
  b.basis = f2::row_reduce(std::move(images), n);
  return b;
}

CohomologyDims cohomology_dims(const SimplicialComplex& x, int k) {
  CohomologyDims d;
  d.cochains = x.size(k);
  d.cocycles = cocycle_space(x, k).dim();
  d.coboundaries = coboundary_space(x, k).dim();
  return d;
}

SubspaceDistance distance_to_subspace(const SimplicialComplex& x, const F2Cochain& alpha,
                                      const F2Subspace& v, SearchMode mode) {
  require_cochain(x, alpha);
  if (alpha.k != v.k || v.ambient_dim() != alpha.bits.size())
    throw InputError("cochain and subspace have different dimensions");
  const WeightScale w = weight_scale(x, alpha.k);
  SubspaceDistance out;
  if (mode == SearchMode::exact) {
    if (v.dim() > kExhaustiveDimLimit)
      throw SizeLimitError("exact distance needs a subspace of dimension at most " +
                           std::to_string(kExhaustiveDimLimit) + " (got " +
                           std::to_string(v.dim()) + "); use heuristic mode");
    GrayMinimum m = gray_minimum(alpha.bits, v.basis.rows, w);
    out.value = as_rational(m.weight, w.denominator);
    out.witness = F2Cochain(alpha.k, std::move(m.element));
    out.exact = true;
    return out;
  }
  f2::Bits cur = alpha.bits;
  std::uint64_t cur_w = scaled_norm(cur, w);
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto& b : v.basis.rows) {
      f2::Bits cand = cur ^ b;
      const std::uint64_t cw = scaled_norm(cand, w);
      if (cw < cur_w) {
        cur = std::move(cand);
        cur_w = cw;
        improved = true;
      }
    }
  }
  out.value = as_rational(cur_w, w.denominator);
  out.witness = F2Cochain(alpha.k, cur ^ alpha.bits);
  out.exact = false;
  return out;
}

ExpansionConstant cocycle_expansion_constant(const SimplicialComplex& x, int k) {
  require_dim(x, k);
  if (k >= x.dim()) throw InputError("expansion is defined for k < dim");
  const std::size_t n = x.size(k);
  if (n > kExhaustiveDimLimit)
    throw SizeLimitError("expansion constant enumerates all cochains; |X(k)| = " +
                         std::to_string(n) + " exceeds " + std::to_string(kExhaustiveDimLimit));
  const F2Subspace z = cocycle_space(x, k);
  const WeightScale wk = weight_scale(x, k);
  const WeightScale wk1 = weight_scale(x, k + 1);
  const std::vector<f2::Bits> reps = z.basis.complement();
  ExpansionConstant out;
  if (reps.empty()) return out;

  std::vector<f2::Bits> delta_reps;
  for (const auto& r : reps) delta_reps.push_back(coboundary(x, F2Cochain(k, r)).bits);

  f2::Bits rep(n);
  f2::Bits delta(x.size(k + 1));
  const std::uint64_t total = std::uint64_t{1} << reps.size();
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto j = static_cast<std::size_t>(std::countr_zero(step));
    rep ^= reps[j];
    delta ^= delta_reps[j];
    const std::uint64_t dist = gray_minimum(rep, z.basis.rows, wk).weight;
    const std::uint64_t dnorm = scaled_norm(delta, wk1);
    Rational ratio = as_rational(dnorm, wk1.denominator) / as_rational(dist, wk.denominator);
    if (!out.value || ratio < *out.value) {
      out.value = ratio;
      out.minimizer = F2Cochain(k, rep);
    }
  }
  return out;
}

ExpansionProfile cocycle_expansion_profile(const SimplicialComplex& x) {
  ExpansionProfile p;
  for (int k = 0; k < x.dim(); ++k) {
    p.per_dim.push_back(cocycle_expansion_constant(x, k));
    const auto& v = p.per_dim.back().value;
    if (v && (!p.minimum || *v < *p.minimum)) p.minimum = *v;
  }
  return p;
}

Cosystole cosystole(const SimplicialComplex& x, int k) {
  const F2Subspace z = cocycle_space(x, k);
  const F2Subspace b = coboundary_space(x, k);
  if (z.dim() > kExhaustiveDimLimit)
    throw SizeLimitError("cosystole enumerates Z^k; dim Z^k = " + std::to_string(z.dim()) +
                         " exceeds " + std::to_string(kExhaustiveDimLimit));
  // classes of Z^k / B^k: reduce the cocycle basis modulo B^k
  std::vector<f2::Bits> residues;
  for (const auto& r : z.basis.rows) residues.push_back(b.basis.reduce(r));
  const std::vector<f2::Bits> classes = f2::row_reduce(std::move(residues), z.ambient_dim()).rows;
  Cosystole out;
  if (classes.empty()) return out;
  const WeightScale w = weight_scale(x, k);
  f2::Bits rep(z.ambient_dim());
  const std::uint64_t total = std::uint64_t{1} << classes.size();
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto j = static_cast<std::size_t>(std::countr_zero(step));
    rep ^= classes[j];
    const GrayMinimum m = gray_minimum(rep, b.basis.rows, w);
    Rational value = as_rational(m.weight, w.denominator);
    if (!out.value || value < *out.value) {
      out.value = value;
      out.witness = F2Cochain(k, rep ^ m.element);
    }
  }
  return out;
}

std::optional<F2Cochain> solve_coboundary(const SimplicialComplex& x, const F2Cochain& target) {
  require_cochain(x, target);
  if (target.k == 0) throw InputError("there are no (-1)-cochains to solve for");
  const int k = target.k - 1;
  const std::size_t n = x.size(k);
  std::vector<f2::Bits> rows;
  rows.reserve(x.size(k + 1));
  for (std::size_t c = 0; c < x.size(k + 1); ++c) {
    f2::Bits r(n);
    for (auto f : x.boundary(k + 1, c)) r.set(f);
    rows.push_back(std::move(r));
  }
  auto sol = f2::solve(rows, n, target.bits);
  if (!sol) return std::nullopt;
  return F2Cochain(k, std::move(*sol));
}

}  // namespace sofic
