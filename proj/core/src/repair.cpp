#include "sofic/repair.hpp"

#include <algorithm>
#include <thread>

#include "sofic/error.hpp"

namespace sofic {

ErrPerm fix_to_involution(const ErrPerm& zeta) {
  if (!zeta.is_total()) throw InputError("fix_to_involution needs a total permutation");
  std::vector<Point> im(zeta.universe());
  for (Point p = 0; p < zeta.universe(); ++p) im[p] = zeta(zeta(p)) == p ? zeta(p) : p;
  return ErrPerm(std::move(im));
}

ErrPerm fix_fixed_point_free(const ErrPerm& zeta) {
  if (!zeta.is_involution()) throw InputError("fix_fixed_point_free needs an involution");
  const std::uint32_t n = zeta.universe();
  std::vector<Point> fixed;
  for (Point p = 0; p < n; ++p)
    if (zeta(p) == p) fixed.push_back(p);
  const std::uint32_t size = n + (n % 2);
  if (fixed.size() % 2 == 1) fixed.push_back(n);
  std::vector<Point> im(size);
  for (Point p = 0; p < n; ++p) im[p] = zeta(p);
  for (std::size_t i = 0; i < fixed.size(); i += 2) {
    im[fixed[i]] = fixed[i + 1];
    im[fixed[i + 1]] = fixed[i];
  }
  return ErrPerm(std::move(im));
}

namespace {

bool in_w(const SignedPerm& zeta, Point s) { return zeta(minus(s)) == flip_sign(zeta(plus(s))); }

}  // namespace

SignedPerm commute_with_sign_flip(const SignedPerm& zeta) {
  const std::uint32_t n = zeta.base_size();
  std::vector<Point> bar(n, kError);
  std::vector<bool> negate(n, false);
  std::vector<bool> target_used(n, false);
  std::vector<Point> free_sources;
  for (Point s = 0; s < n; ++s) {
    if (in_w(zeta, s)) {
      const Point t = zeta(plus(s));
      bar[s] = base_of(t);
      negate[s] = is_negative(t);
      target_used[base_of(t)] = true;
    } else {
      free_sources.push_back(s);
    }
  }
  std::size_t next = 0;
  for (Point t = 0; t < n; ++t) {
    if (target_used[t]) continue;
    bar[free_sources[next++]] = t;
  }
  return SignedPerm::lift(ErrPerm(std::move(bar)), negate);
}

Rational sign_commuting_fraction(const SignedPerm& zeta) {
  const std::uint32_t n = zeta.base_size();
  if (n == 0) return Rational(1);
  std::uint32_t w = 0;
  for (Point s = 0; s < n; ++s) w += in_w(zeta, s);
  Rational q(static_cast<unsigned long>(w), static_cast<unsigned long>(n));
  q.canonicalize();
  return q;
}

Rational NormalizationReport::stage1_bound() const {
  return Rational(static_cast<unsigned long>(ell + 2)) * epsilon;
}

Rational NormalizationReport::stage2_distance_bound() const {
  return Rational(2) * (epsilon_prime + epsilon);
}

Rational NormalizationReport::stage2_defect_bound() const {
  return Rational(static_cast<unsigned long>(2 * ell + 2)) * epsilon_prime +
         Rational(static_cast<unsigned long>(3 * ell + 4)) * epsilon;
}

Rational NormalizationReport::final_bound() const {
  return stage2_defect_bound() + Rational(static_cast<unsigned long>(ell + 1)) * d3;
}

bool NormalizationReport::within_bounds() const {
  return defect_f <= stage1_bound() && d2 <= stage2_distance_bound() &&
         defect_g <= stage2_defect_bound() && defect_out <= final_bound();
}

std::vector<std::string> add_sign_relations(Presentation& p, std::uint32_t tau) {
  std::vector<std::string> added;
  auto add = [&](Word w) {
    if (p.has_relation(w)) return;
    added.push_back(p.format_word(w));
    p.add_relation(std::move(w));
  };
  add(Word{{tau, false}, {tau, false}});
  for (std::uint32_t s = 0; s < p.generator_count(); ++s) {
    if (s == tau) continue;
    add(Word{{tau, false}, {s, false}, {tau, true}, {s, true}});
  }
  return added;
}

Normalization normalize_sofic_approx(const AlmostAction& psi, const std::string& tau_name,
                                     unsigned threads) {
  Presentation pres = psi.presentation();
  const auto tau_opt = pres.find(tau_name);
  if (!tau_opt) throw InputError("presentation has no generator named " + tau_name);
  const std::uint32_t tau = *tau_opt;
  if (!psi.is_total()) throw InputError("normalization needs every image to be a permutation of Σ");

  Normalization out;
  NormalizationReport& rep = out.report;
  rep.added_relations = add_sign_relations(pres, tau);
  const AlmostAction input(pres, psi.images(), psi.universe());
  const std::uint32_t n = input.universe();
  rep.input_universe = n;
  rep.ell = pres.max_relation_length();
  rep.epsilon = defect(input);
  rep.epsilon_prime = Rational(1) - hamming_distance_errors(input.image(tau), ErrPerm::identity(n));

  // Stage 1: make τ an involution.
  AlmostAction f = input;
  f.set_image(tau, fix_to_involution(input.image(tau)));
  rep.d1 = action_distance(input, f);
  rep.defect_f = defect(f);

  // Stage 2: make τ fixed-point-free on the padded set.
  const ErrPerm tau2 = fix_fixed_point_free(f.image(tau));
  const std::uint32_t m = tau2.universe();
  std::vector<ErrPerm> g_images;
  for (std::uint32_t s = 0; s < pres.generator_count(); ++s)
    g_images.push_back(s == tau ? tau2 : f.image(s).extended_by_identity(m));
  const AlmostAction g_raw(pres, g_images, m);
  rep.d2 = action_distance(f, g_raw);

  std::vector<Point> relabel(m, kError);
  Point next = 0;
  for (Point p = 0; p < m; ++p) {
    if (relabel[p] != kError) continue;
    relabel[p] = next++;
    relabel[tau2(p)] = next++;
  }
  out.relabel = ErrPerm(std::move(relabel));
  for (auto& img : g_images) img = img.conjugated(out.relabel);
  const AlmostAction g(pres, std::move(g_images), m);
  rep.defect_g = defect(g);

  // Stage 3: make every other generator commute with -Id.
  std::vector<ErrPerm> h_images(pres.generator_count());
  h_images[tau] = g.image(tau);
  std::vector<std::uint32_t> todo;
  for (std::uint32_t s = 0; s < pres.generator_count(); ++s)
    if (s != tau) todo.push_back(s);
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(todo.size())));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < todo.size(); i += workers)
      h_images[todo[i]] = commute_with_sign_flip(SignedPerm(g.image(todo[i]))).perm();
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  out.action = AlmostAction(pres, std::move(h_images), m);
  rep.d3 = action_distance(g, out.action);
  rep.defect_out = defect(out.action);
  rep.output_universe = m;
  return out;
}

}  // namespace sofic
