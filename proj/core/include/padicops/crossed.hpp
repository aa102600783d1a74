#pragma once

#include "padicops/convolution.hpp"

namespace padic {

// Element of the reduced crossed product C(X, Z_p) x G for a finite
// action: a map g -> (function X -> Z_p), with twisted convolution
// (phi * psi)(h) = sum_g phi(g) alpha_g(psi(g^{-1}h)), where
// alpha_g(f) = f o a_g^{-1}.
class CrossedProductElement {
public:
  CrossedProductElement(GroupAction action, long p, int prec);

  const GroupAction& action() const { return action_; }
  long prime() const { return prime_; }
  int precision() const { return prec_; }

  const PadicScalar& at(size_t g, size_t x) const { return coeffs_[g][x]; }
  void set(size_t g, size_t x, const PadicScalar& value);
  // phi(g) = f as a whole function.
  void set_fiber(size_t g, const std::vector<PadicScalar>& f);

  // a * delta_g for a single function a.
  static CrossedProductElement monomial(const GroupAction& action, size_t g,
                                        const std::vector<PadicScalar>& f,
                                        long p, int prec);

  CrossedProductElement operator+(const CrossedProductElement& rhs) const;
  CrossedProductElement operator-(const CrossedProductElement& rhs) const;
  bool congruent(const CrossedProductElement& rhs) const;
  // max_g ||phi(g)||_inf
  NormValue sup_norm() const;

private:
  void check_carrier(const CrossedProductElement& rhs) const;
  friend CrossedProductElement crossed_convolve(const CrossedProductElement&,
                                                const CrossedProductElement&);
  friend CrossedProductElement crossed_involution(const CrossedProductElement&);

  GroupAction action_;
  long prime_;
  int prec_;
  std::vector<std::vector<PadicScalar>> coeffs_;  // [g][x]
};

CrossedProductElement crossed_convolve(const CrossedProductElement& phi,
                                       const CrossedProductElement& psi);
// phi*(g) = alpha_g(phi(g^{-1})*); the coefficient algebra is commutative
// with trivial involution.
CrossedProductElement crossed_involution(const CrossedProductElement& phi);

// Regular representation on the window X x G (labels "x|g"), with the
// multiplication representation of C(X, Z_p) as the base.
OperatorMatrix crossed_product_representation(const CrossedProductElement& phi);

// *-isomorphism onto the convolution algebra of the action groupoid:
// (phi_g delta_g) -> [(h, x) -> phi_g(a_g(x)) if g = h else 0].
GroupoidAlgebraElement action_groupoid_iso(const CrossedProductElement& phi,
                                           const FiniteGroupoid& groupoid);

}  // namespace padic
