#pragma once

#include <string>

#include "../support/oracles.hpp"
#include "sofic/perm.hpp"
#include "sofic/rational.hpp"

namespace acceptance {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

inline std::string q(const sofic::Rational& r) { return sofic::to_fraction_string(r); }

inline oracle::Vec vec_of(const sofic::ErrPerm& p) { return oracle::Vec(p.images().begin(), p.images().end()); }

Outcome involution_identity();
Outcome fixed_point_free_bound();
Outcome sign_commutation();
Outcome perturbation_bound();
Outcome normalization_pipeline();
Outcome cohomology_core();
Outcome covering_correctness();
/// Runs the suite once and fills the two outcomes for the inequality and
/// the first-type triangle identity.
void end_to_end(Outcome& inequality, Outcome& triangle_identity);
Outcome deletion_algorithm();
Outcome contractibility();
Outcome sampler();

}  // namespace acceptance
