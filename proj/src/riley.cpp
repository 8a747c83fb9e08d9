#include "knotepi/riley.hpp"

#include <stdexcept>

namespace knotepi {

SymMat2 operator*(const SymMat2& x, const SymMat2& y) {
  SymMat2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.at(r, c) = x.at(r, 0) * y.at(0, c) + x.at(r, 1) * y.at(1, c);
  return out;
}

SymMat2 operator-(const SymMat2& x, const SymMat2& y) {
  SymMat2 out;
  for (std::size_t i = 0; i < 4; ++i) out.e[i] = x.e[i] - y.e[i];
  return out;
}

TwoBridgePresentation tb_presentation(const TwoBridgeKnot& k) {
  TwoBridgePresentation pres{k, tb_epsilon_sequence(k), {}};
  pres.relator_word.reserve(pres.epsilons.size());
  for (std::size_t i = 0; i < pres.epsilons.size(); ++i)
    pres.relator_word.push_back({i % 2 == 0 ? 'x' : 'y', pres.epsilons[i]});
  return pres;
}

SymMat2 parabolic_x() { return SymMat2{{IntPoly{1}, IntPoly{1}, IntPoly{}, IntPoly{1}}}; }
SymMat2 parabolic_y() { return SymMat2{{IntPoly{1}, IntPoly{}, IntPoly{0, 1}, IntPoly{1}}}; }

SymMat2 evaluate_word(const std::vector<PresentationLetter>& word) {
  // right multiplication by a parabolic only touches one column
  const IntPoly w{0, 1};
  SymMat2 m;
  for (const auto& letter : word) {
    for (int r = 0; r < 2; ++r) {
      if (letter.gen == 'x') {
        // [[1, s], [0, 1]]: col1 += s col0
        IntPoly add = m.at(r, 0);
        m.at(r, 1) = letter.sign > 0 ? m.at(r, 1) + add : m.at(r, 1) - add;
      } else {
        // [[1, 0], [s w, 1]]: col0 += s w col1
        IntPoly add = m.at(r, 1) * w;
        m.at(r, 0) = letter.sign > 0 ? m.at(r, 0) + add : m.at(r, 0) - add;
      }
    }
  }
  return m;
}

SymMat2 relation_defect(const TwoBridgePresentation& pres) {
  const SymMat2 W = evaluate_word(pres.relator_word);
  return W * parabolic_x() - parabolic_y() * W;
}

IntPoly riley_polynomial(const TwoBridgeKnot& k) {
  const SymMat2 defect = relation_defect(tb_presentation(k));
  IntPoly g;
  for (const auto& entry : defect.e) g = poly_gcd(g, entry);
  g = primitive_part(g);
  const Int want = (k.p - 1) / 2;
  if (g.degree() != want)
    throw std::logic_error("Riley gcd for " + to_string(k) + " has degree " + std::to_string(g.degree()) +
                           ", expected " + std::to_string(want));
  return g;
}

Int parabolic_class_count(const TwoBridgeKnot& k) { return (k.p - 1) / 2; }

RileyAdvisory riley_divides_advisory(const IntPoly& phi_k, const IntPoly& phi_k2) {
  return divides_up_to_units(squarefree_part(phi_k2), squarefree_part(phi_k)) ? RileyAdvisory::consistent
                                                                             : RileyAdvisory::inconsistent;
}

RileyAdvisory riley_divides_advisory(const TwoBridgeKnot& k, const TwoBridgeKnot& k2) {
  return riley_divides_advisory(riley_polynomial(k), riley_polynomial(k2));
}

const char* to_string(RileyAdvisory a) {
  switch (a) {
    case RileyAdvisory::consistent: return "consistent";
    case RileyAdvisory::inconsistent: return "inconsistent";
    case RileyAdvisory::skipped: return "skipped";
  }
  return "skipped";
}

}  // namespace knotepi
