#include "sofic/perm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sofic/error.hpp"

namespace sofic {

ErrPerm::ErrPerm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t p = 0; p < images_.size(); ++p) {
    const Point q = images_[p];
    if (q == kError) continue;
    if (q >= images_.size())
      throw InputError("image " + std::to_string(q) + " of point " + std::to_string(p) +
                       " lies outside the universe of size " + std::to_string(images_.size()));
    if (hit[q]) throw InputError("point " + std::to_string(q) + " is hit twice; not injective");
    hit[q] = true;
  }
}

ErrPerm ErrPerm::identity(std::uint32_t n) {
  std::vector<Point> im(n);
  std::iota(im.begin(), im.end(), Point{0});
  ErrPerm p;
  p.images_ = std::move(im);
  return p;
}

ErrPerm ErrPerm::from_cycles(std::uint32_t n, const std::vector<std::vector<Point>>& cycles) {
  ErrPerm p = identity(n);
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n) throw InputError("cycle point out of range");
      if (used[c[i]]) throw InputError("cycles are not disjoint");
      used[c[i]] = true;
      p.images_[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

ErrPerm ErrPerm::from_cycles(std::uint32_t n,
                             std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> cs;
  for (auto c : cycles) cs.emplace_back(c);
  return from_cycles(n, cs);
}

std::uint32_t ErrPerm::domain_size() const {
  return static_cast<std::uint32_t>(
      std::count_if(images_.begin(), images_.end(), [](Point q) { return q != kError; }));
}

bool ErrPerm::is_total() const {
  return std::none_of(images_.begin(), images_.end(), [](Point q) { return q == kError; });
}

bool ErrPerm::is_permutation_of_domain() const {
  for (Point q : images_)
    if (q != kError && images_[q] == kError) return false;
  return true;
}

bool ErrPerm::is_involution() const {
  if (!is_total()) return false;
  for (std::size_t p = 0; p < images_.size(); ++p)
    if (images_[images_[p]] != p) return false;
  return true;
}

std::uint32_t ErrPerm::fixed_point_count() const {
  std::uint32_t n = 0;
  for (std::size_t p = 0; p < images_.size(); ++p)
    if (images_[p] == p) ++n;
  return n;
}

ErrPerm ErrPerm::inverse() const {
  ErrPerm inv;
  inv.images_.assign(images_.size(), kError);
  for (std::size_t p = 0; p < images_.size(); ++p)
    if (images_[p] != kError) inv.images_[images_[p]] = static_cast<Point>(p);
  return inv;
}

ErrPerm ErrPerm::after(const ErrPerm& first) const {
  const std::uint32_t n = std::max(universe(), first.universe());
  ErrPerm out;
  out.images_.resize(n);
  for (Point p = 0; p < n; ++p) out.images_[p] = (*this)(first(p));
  return out;
}

ErrPerm ErrPerm::extended_by_identity(std::uint32_t n) const {
  if (n < universe()) throw InputError("cannot shrink a permutation's universe");
  ErrPerm out = *this;
  for (Point p = universe(); p < n; ++p) out.images_.push_back(p);
  return out;
}

ErrPerm ErrPerm::padded(std::uint32_t n) const {
  if (n < universe()) throw InputError("cannot shrink a permutation's universe");
  ErrPerm out = *this;
  out.images_.resize(n, kError);
  return out;
}

ErrPerm ErrPerm::conjugated(const ErrPerm& relabel) const {
  if (relabel.universe() != universe() || !relabel.is_total())
    throw InputError("relabeling must be a permutation of the same universe");
  ErrPerm out;
  out.images_.assign(universe(), kError);
  for (Point p = 0; p < universe(); ++p) {
    const Point q = images_[p];
    out.images_[relabel(p)] = q == kError ? kError : relabel(q);
  }
  return out;
}

Rational hamming_distance_errors(const ErrPerm& a, const ErrPerm& b) {
  const std::uint32_t n = std::max(a.universe(), b.universe());
  bool a_in_b = true;
  bool b_in_a = true;
  std::uint32_t dom_a = 0;
  std::uint32_t dom_b = 0;
  std::uint32_t agree = 0;
  for (Point p = 0; p < n; ++p) {
    const bool da = a.defined(p);
    const bool db = b.defined(p);
    dom_a += da;
    dom_b += db;
    if (da && !db) a_in_b = false;
    if (db && !da) b_in_a = false;
    if (da && db && a(p) == b(p)) ++agree;
  }
  if (!a_in_b && !b_in_a)
    throw InputError("Hamming distance needs nested domains; neither contains the other");
  const std::uint32_t big = std::max(dom_a, dom_b);
  if (big == 0) return Rational(0);
  Rational d(static_cast<unsigned long>(big - agree), static_cast<unsigned long>(big));
  d.canonicalize();
  return d;
}

Rational distance_to_identity(const ErrPerm& sigma, std::uint32_t n) {
  if (n == 0) return Rational(0);
  std::uint32_t moved = 0;
  for (Point p = 0; p < n; ++p)
    if (sigma(p) != p) ++moved;
  Rational d(static_cast<unsigned long>(moved), static_cast<unsigned long>(n));
  d.canonicalize();
  return d;
}

SignedPerm::SignedPerm(ErrPerm perm) : perm_(std::move(perm)) {
  if (perm_.universe() % 2 != 0 || !perm_.is_total())
    throw InputError("a signed permutation must be total on an even number of points");
}

SignedPerm SignedPerm::sign_flip(std::uint32_t base) {
  std::vector<Point> im(2 * base);
  for (Point p = 0; p < 2 * base; ++p) im[p] = flip_sign(p);
  return SignedPerm(ErrPerm(std::move(im)));
}

SignedPerm SignedPerm::identity(std::uint32_t base) { return SignedPerm(ErrPerm::identity(2 * base)); }

SignedPerm SignedPerm::lift(const ErrPerm& base_perm, const std::vector<bool>& negate) {
  if (!base_perm.is_total() || negate.size() != base_perm.universe())
    throw InputError("lift needs a total base permutation and one sign per point");
  const std::uint32_t n = base_perm.universe();
  std::vector<Point> im(2 * n);
  for (Point s = 0; s < n; ++s) {
    const Point target = with_sign(plus(base_perm(s)), negate[s]);
    im[plus(s)] = target;
    im[minus(s)] = flip_sign(target);
  }
  return SignedPerm(ErrPerm(std::move(im)));
}

bool SignedPerm::commutes_with_sign_flip() const {
  for (Point p = 0; p < perm_.universe(); ++p)
    if (perm_(flip_sign(p)) != flip_sign(perm_(p))) return false;
  return true;
}

ErrPerm SignedPerm::quotient() const {
  const std::uint32_t n = base_size();
  std::vector<Point> im(n);
  for (Point s = 0; s < n; ++s) im[s] = base_of(perm_(plus(s)));
  return ErrPerm(std::move(im));
}

ErrPerm commutator(const ErrPerm& a, const ErrPerm& b) {
  return a.after(b.after(a.inverse().after(b.inverse())));
}

}  // namespace sofic
