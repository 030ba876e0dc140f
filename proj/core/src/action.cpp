#include "sofic/action.hpp"

#include <algorithm>

#include "sofic/error.hpp"

namespace sofic {

AlmostAction::AlmostAction(Presentation presentation, std::vector<ErrPerm> images,
                           std::uint32_t universe)
    : presentation_(std::move(presentation)), images_(std::move(images)), universe_(universe) {
  if (images_.size() != presentation_.generator_count())
    throw InputError("action assigns " + std::to_string(images_.size()) + " permutations to " +
                     std::to_string(presentation_.generator_count()) + " generators");
  for (std::size_t g = 0; g < images_.size(); ++g)
    if (images_[g].universe() > universe_)
      throw InputError("generator " + presentation_.generator(static_cast<std::uint32_t>(g)) +
                       " acts outside the universe");
}

AlmostAction AlmostAction::trivial(Presentation presentation, std::uint32_t universe) {
  std::vector<ErrPerm> images(presentation.generator_count(), ErrPerm::identity(universe));
  return AlmostAction(std::move(presentation), std::move(images), universe);
}

void AlmostAction::set_image(std::uint32_t g, ErrPerm p) {
  if (p.universe() > universe_) throw InputError("image acts outside the universe");
  images_.at(g) = std::move(p);
}

bool AlmostAction::is_total() const {
  return std::all_of(images_.begin(), images_.end(),
                     [&](const ErrPerm& p) { return p.universe() == universe_ && p.is_total(); });
}

namespace {

// Forward and inverse images per generator, so words evaluate pointwise.
struct LetterTable {
  std::vector<const ErrPerm*> forward;
  std::vector<ErrPerm> backward;

  explicit LetterTable(const AlmostAction& phi) {
    for (const auto& p : phi.images()) {
      forward.push_back(&p);
      backward.push_back(p.inverse());
    }
  }
  Point apply(const Letter& l, Point p) const {
    if (l.generator >= forward.size()) throw InputError("word uses an unknown generator");
    return l.inverse ? backward[l.generator](p) : (*forward[l.generator])(p);
  }
  std::vector<Point> evaluate(const Word& w, std::uint32_t n) const {
    std::vector<Point> out(n);
    for (Point s = 0; s < n; ++s) {
      Point p = s;
      for (auto it = w.rbegin(); it != w.rend() && p != kError; ++it) p = apply(*it, p);
      out[s] = p;
    }
    return out;
  }
};

std::uint32_t moved_count(const std::vector<Point>& images) {
  std::uint32_t moved = 0;
  for (Point s = 0; s < images.size(); ++s)
    if (images[s] != s) ++moved;
  return moved;
}

Rational fraction(std::uint32_t num, std::uint32_t den) {
  if (den == 0) return Rational(0);
  Rational q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

}  // namespace

ErrPerm evaluate_word(const AlmostAction& phi, const Word& w) {
  const LetterTable table(phi);
  return ErrPerm(table.evaluate(w, phi.universe()));
}

Rational action_distance(const AlmostAction& phi, const AlmostAction& psi) {
  if (phi.presentation().generators() != psi.presentation().generators())
    throw InputError("actions have different generator sets");
  Rational best(0);
  for (std::uint32_t g = 0; g < phi.images().size(); ++g)
    best = std::max(best, hamming_distance_errors(phi.image(g), psi.image(g)));
  return best;
}

Rational relation_defect(const AlmostAction& phi, const Word& r) {
  const LetterTable table(phi);
  return fraction(moved_count(table.evaluate(r, phi.universe())), phi.universe());
}

Rational defect(const AlmostAction& phi) {
  const LetterTable table(phi);
  std::uint32_t worst = 0;
  for (const auto& r : phi.presentation().relations())
    worst = std::max(worst, moved_count(table.evaluate(r, phi.universe())));
  return fraction(worst, phi.universe());
}

AlmostAction induced_quotient_action(const AlmostAction& psi) {
  if (psi.universe() % 2 != 0) throw InputError("a signed action needs an even universe");
  std::vector<ErrPerm> images;
  for (std::uint32_t g = 0; g < psi.images().size(); ++g) {
    const ErrPerm& p = psi.image(g);
    if (p.universe() != psi.universe() || !p.is_total())
      throw InputError("generator " + psi.presentation().generator(g) + " is not a permutation of Ω±");
    const SignedPerm sp(p);
    if (!sp.commutes_with_sign_flip())
      throw InputError("generator " + psi.presentation().generator(g) + " does not commute with -Id");
    images.push_back(sp.quotient());
  }
  return AlmostAction(psi.presentation(), std::move(images), psi.universe() / 2);
}

AlmostAction induced_quotient_action(const AlmostAction& psi, const Presentation& base) {
  const AlmostAction full = induced_quotient_action(psi);
  std::vector<ErrPerm> images;
  for (const auto& name : base.generators()) {
    const auto g = psi.presentation().find(name);
    if (!g) throw InputError("generator " + name + " has no image in the signed action");
    images.push_back(full.image(*g));
  }
  return AlmostAction(base, std::move(images), full.universe());
}

std::vector<SeparationRow> separation_profile(const AlmostAction& phi, std::size_t max_length,
                                              std::size_t word_budget) {
  const LetterTable table(phi);
  const std::uint32_t n = phi.universe();
  const auto gens = static_cast<std::uint32_t>(phi.presentation().generator_count());
  std::vector<SeparationRow> rows;
  std::size_t spent = 0;
  for (std::size_t len = 1; len <= max_length && spent < word_budget; ++len) {
    SeparationRow row;
    row.length = len;
    std::uint32_t best_moved = n + 1;
    Word word;
    std::vector<std::vector<Point>> stack{std::vector<Point>(n)};
    for (Point s = 0; s < n; ++s) stack[0][s] = s;
    // Words grow on the left, so each step applies the new letter last.
    auto recurse = [&](auto&& self) -> void {
      if (spent >= word_budget) return;
      if (word.size() == len) {
        ++spent;
        ++row.words;
        const std::uint32_t moved = moved_count(stack.back());
        if (moved < best_moved) {
          best_moved = moved;
          row.argmin = word;
        }
        return;
      }
      for (std::uint32_t g = 0; g < gens; ++g) {
        for (bool inv : {false, true}) {
          const Letter l{g, inv};
          if (!word.empty() && word.front().generator == g && word.front().inverse != inv) continue;
          std::vector<Point> next(n);
          for (Point s = 0; s < n; ++s) {
            const Point p = stack.back()[s];
            next[s] = p == kError ? kError : table.apply(l, p);
          }
          word.insert(word.begin(), l);
          stack.push_back(std::move(next));
          self(self);
          stack.pop_back();
          word.erase(word.begin());
        }
      }
    };
    recurse(recurse);
    if (row.words == 0) break;
    row.min_distance = fraction(best_moved, n);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sofic
