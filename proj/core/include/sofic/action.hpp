#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sofic/complex.hpp"
#include "sofic/perm.hpp"
#include "sofic/rational.hpp"

namespace sofic {

/// An assignment S → partial permutations of a common set Σ = [0, universe).
/// Each generator may act on its own subdomain of Σ.
class AlmostAction {
 public:
  AlmostAction() = default;
  /// Generators absent from `images` are not allowed; sizes must match.
  AlmostAction(Presentation presentation, std::vector<ErrPerm> images, std::uint32_t universe);

  /// Every generator acts as the identity on [0, universe).
  static AlmostAction trivial(Presentation presentation, std::uint32_t universe);

  const Presentation& presentation() const { return presentation_; }
  Presentation& mutable_presentation() { return presentation_; }
  std::uint32_t universe() const { return universe_; }

  const ErrPerm& image(std::uint32_t g) const { return images_.at(g); }
  const ErrPerm& image(const std::string& name) const { return images_.at(presentation_.require(name)); }
  const std::vector<ErrPerm>& images() const { return images_; }
  void set_image(std::uint32_t g, ErrPerm p);

  /// True when every image is a permutation of all of Σ.
  bool is_total() const;

  friend bool operator==(const AlmostAction&, const AlmostAction&) = default;

 private:
  Presentation presentation_;
  std::vector<ErrPerm> images_;
  std::uint32_t universe_ = 0;
};

/// Right-to-left evaluation: the last letter acts first. Points leaving a
/// generator's domain become kError for good. The empty word is Id_Σ.
ErrPerm evaluate_word(const AlmostAction& phi, const Word& w);

/// max over generators of hamming_distance_errors. Requires identical
/// generator lists.
Rational action_distance(const AlmostAction& phi, const AlmostAction& psi);

/// d_H(φ(r), Id_Σ) for one relation.
Rational relation_defect(const AlmostAction& phi, const Word& r);

/// max over relations of relation_defect; 0 without relations.
Rational defect(const AlmostAction& phi);

/// φ(s).⋆ = |ψ(s).+⋆| on Ω = [0, universe/2). Throws InputError unless
/// every image is total and commutes with -Id.
AlmostAction induced_quotient_action(const AlmostAction& psi);

/// As above, restricted to the generators of `base` (looked up by name) and
/// carrying base's relations.
AlmostAction induced_quotient_action(const AlmostAction& psi, const Presentation& base);

/// Soficity asks that non-relators move almost every point; only finitely
/// many words can be examined. For every freely reduced word of length
/// 1..max_length (in generator order, at most `word_budget` in total), this
/// records min_w d_H(φ(w), Id). A small value flags a word that the action
/// fails to separate from the identity; it does not decide whether w is a
/// relator.
struct SeparationRow {
  std::size_t length = 0;
  std::size_t words = 0;
  Rational min_distance;
  Word argmin;
};
std::vector<SeparationRow> separation_profile(const AlmostAction& phi, std::size_t max_length,
                                              std::size_t word_budget = 100000);

}  // namespace sofic
