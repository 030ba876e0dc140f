#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <vector>

#include "sofic/rational.hpp"

namespace sofic {

using Point = std::uint32_t;

/// The distinguished element outside every point set. Evaluating a
/// permutation at a point outside its domain yields kError, and kError is
/// absorbed by every further evaluation.
inline constexpr Point kError = std::numeric_limits<Point>::max();

/// A partial injection on [0, universe()): images()[p] is either kError
/// (p outside the domain) or a point of [0, universe()). A genuine
/// permutation of Ω is the case where the defined points form Ω and are
/// mapped onto Ω.
class ErrPerm {
 public:
  ErrPerm() = default;

  /// Validates injectivity and range.
  explicit ErrPerm(std::vector<Point> images);

  static ErrPerm identity(std::uint32_t n);
  /// Permutation of [0,n) from disjoint cycles.
  static ErrPerm from_cycles(std::uint32_t n, std::initializer_list<std::initializer_list<Point>> cycles);
  static ErrPerm from_cycles(std::uint32_t n, const std::vector<std::vector<Point>>& cycles);

  std::uint32_t universe() const { return static_cast<std::uint32_t>(images_.size()); }
  Point operator()(Point p) const { return p < images_.size() ? images_[p] : kError; }
  bool defined(Point p) const { return p < images_.size() && images_[p] != kError; }
  std::uint32_t domain_size() const;
  /// Every point of [0, universe()) is defined, so this is a bijection.
  bool is_total() const;
  /// The defined points map back into the domain (a permutation of its
  /// domain).
  bool is_permutation_of_domain() const;
  bool is_involution() const;
  std::uint32_t fixed_point_count() const;

  ErrPerm inverse() const;
  /// (*this ∘ first)(p) = (*this)(first(p)); the universe is the larger one.
  ErrPerm after(const ErrPerm& first) const;
  /// Same map on a universe of size n ≥ universe(); new points act as the
  /// identity.
  ErrPerm extended_by_identity(std::uint32_t n) const;
  /// Same map on a universe of size n ≥ universe(); new points undefined.
  ErrPerm padded(std::uint32_t n) const;
  /// relabel ∘ this ∘ relabel⁻¹ for a permutation `relabel` of the universe.
  ErrPerm conjugated(const ErrPerm& relabel) const;

  const std::vector<Point>& images() const { return images_; }

  friend bool operator==(const ErrPerm&, const ErrPerm&) = default;

 private:
  std::vector<Point> images_;
};

/// d_H(σ, σ') = 1 - |{⋆ ∈ Ω : σ.⋆ = σ'.⋆}| / |Σ| where Ω and Σ are the
/// smaller and larger of the two domains. Throws InputError when neither
/// domain contains the other.
Rational hamming_distance_errors(const ErrPerm& a, const ErrPerm& b);

/// Pr_{⋆ ∈ [0,n)}[σ.⋆ ≠ ⋆]; errors count as moved points. Equals
/// d_H(σ, Id_n) when σ is a partial injection whose domain lies in [0,n).
Rational distance_to_identity(const ErrPerm& sigma, std::uint32_t n);

/// Points of Ω± = {±} × Ω are encoded as 2⋆ (for +⋆) and 2⋆+1 (for -⋆).
constexpr Point plus(Point base) { return 2 * base; }
constexpr Point minus(Point base) { return 2 * base + 1; }
constexpr bool is_negative(Point p) { return (p & 1u) != 0; }
constexpr Point base_of(Point p) { return p >> 1; }
constexpr Point flip_sign(Point p) { return p ^ 1u; }
/// (-1)^negate applied to a signed point.
constexpr Point with_sign(Point p, bool negate) { return negate ? flip_sign(p) : p; }

/// A permutation of Ω± for a base set Ω = [0, base_size()).
class SignedPerm {
 public:
  SignedPerm() = default;
  /// `perm` must be total on [0, 2·base).
  explicit SignedPerm(ErrPerm perm);

  static SignedPerm sign_flip(std::uint32_t base);
  static SignedPerm identity(std::uint32_t base);
  /// The sign-commuting lift ⋆ ↦ (-1)^{negate[⋆]} σ(⋆) of a permutation σ
  /// of the base.
  static SignedPerm lift(const ErrPerm& base_perm, const std::vector<bool>& negate);

  std::uint32_t base_size() const { return perm_.universe() / 2; }
  const ErrPerm& perm() const { return perm_; }
  Point operator()(Point p) const { return perm_(p); }

  /// σ ∘ (-Id) = (-Id) ∘ σ.
  bool commutes_with_sign_flip() const;
  /// ⋆ ↦ |σ.(+⋆)|, a permutation of the base when σ commutes with -Id.
  ErrPerm quotient() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

 private:
  ErrPerm perm_;
};

/// [a, b] = a b a⁻¹ b⁻¹.
ErrPerm commutator(const ErrPerm& a, const ErrPerm& b);

}  // namespace sofic
