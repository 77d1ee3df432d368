#include "k3iso/mukai.hpp"

#include <stdexcept>

namespace k3iso {

MukaiVector isotropic_v(const PolarizedRank2& p) {
  return {p.a, 2 * p.a * p.a, 0, p.a};
}

MukaiVector h_class() { return {-1, 0, 0, 1}; }

Int mukai_product(const MukaiVector& u, const MukaiVector& w,
                  const PolarizedRank2& p) {
  if (!model_contains(p, u.c1x, u.c1y) || !model_contains(p, w.c1x, w.c1y))
    throw std::invalid_argument("mukai_product: c1 not in lattice");
  Rat pair = model_inner(p, u.c1x, u.c1y, w.c1x, w.c1y);
  Rat total = Rat(-(u.r * w.s + u.s * w.r)) + pair;
  if (denominator(total) != 1)
    throw std::logic_error("mukai_product: pairing of lattice vectors must be integral");
  return numerator(total);
}

NYPresentation ny_presentation(const PolarizedRank2& p) {
  Mat g{{2, 1}, {1, (1 - p.d) / 2}};
  NYPresentation out{GramLattice::from(g), Vec{1, 0}};
  if (out.gram.inner(out.h, out.h) != 2)
    throw std::logic_error("ny_presentation: h^2 != 2");
  if (gamma(out.gram, out.h) != 1)
    throw std::logic_error("ny_presentation: gamma(h) != 1");
  if (out.gram.det() != -p.d)
    throw std::logic_error("ny_presentation: determinant mismatch");
  return out;
}

bool det_equality_check(const PolarizedRank2& p) {
  return GramLattice::from(gram_of(p)).det() == ny_presentation(p).gram.det();
}

Int transcendental_index(const Int& a, const Int& gammaH) {
  if (a < 1 || gammaH < 1)
    throw std::invalid_argument("transcendental_index: arguments must be positive");
  if ((2 * a * a) % gammaH != 0)
    throw std::invalid_argument("transcendental_index: divisibility violated");
  return gcd_int(a, gammaH);
}

bool char_compat_check(const PolarizedRank2& p, const Int& x, const Int& y) {
  if (!model_contains(p, x, y))
    throw std::invalid_argument("char_compat_check: (x, y) not in lattice");
  if (model_norm(p, x, y) != 2)
    throw std::invalid_argument("char_compat_check: norm != 2");
  Int two_a = 2 * p.a;
  return mod_floor(x - two_a, p.d) == 0 || mod_floor(x + two_a, p.d) == 0;
}

}  // namespace k3iso
