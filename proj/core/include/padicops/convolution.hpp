#pragma once

#include "padicops/group.hpp"
#include "padicops/groupoid.hpp"
#include "padicops/operator.hpp"

namespace padic {

// Z_p-valued function on a finite group, with the convolution product.
class GroupAlgebraElement {
public:
  GroupAlgebraElement(FiniteGroup group, long p, int prec);

  const FiniteGroup& group() const { return group_; }
  long prime() const { return prime_; }
  int precision() const { return prec_; }

  const PadicScalar& at(size_t g) const { return coeffs_[g]; }
  void set(size_t g, const PadicScalar& value);

  static GroupAlgebraElement delta(const FiniteGroup& grp, size_t g, long p,
                                   int prec);

  GroupAlgebraElement operator+(const GroupAlgebraElement& rhs) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& rhs) const;
  bool congruent(const GroupAlgebraElement& rhs) const;
  NormValue sup_norm() const;

private:
  void check_carrier(const GroupAlgebraElement& rhs) const;
  friend GroupAlgebraElement convolve(const GroupAlgebraElement&,
                                      const GroupAlgebraElement&);
  friend GroupAlgebraElement involution(const GroupAlgebraElement&);
  friend GroupAlgebraElement twisted_convolve(const GroupAlgebraElement&,
                                              const GroupAlgebraElement&,
                                              const Cocycle&);
  friend GroupAlgebraElement twisted_involution(const GroupAlgebraElement&,
                                                const Cocycle&);

  FiniteGroup group_;
  long prime_;
  int prec_;
  std::vector<PadicScalar> coeffs_;
};

// (phi * psi)(h) = sum_g phi(g) psi(g^{-1} h)
GroupAlgebraElement convolve(const GroupAlgebraElement& phi,
                             const GroupAlgebraElement& psi);
// phi*(g) = phi(g^{-1})
GroupAlgebraElement involution(const GroupAlgebraElement& phi);

// Left regular representation on the window G.
OperatorMatrix regular_representation(const GroupAlgebraElement& phi);

// omega-twisted convolution, involution and regular representation.
GroupAlgebraElement twisted_convolve(const GroupAlgebraElement& phi,
                                     const GroupAlgebraElement& psi,
                                     const Cocycle& omega);
GroupAlgebraElement twisted_involution(const GroupAlgebraElement& phi,
                                       const Cocycle& omega);
OperatorMatrix twisted_regular_representation(const GroupAlgebraElement& phi,
                                              const Cocycle& omega);

// Z_p-valued function on a finite groupoid.
class GroupoidAlgebraElement {
public:
  GroupoidAlgebraElement(FiniteGroupoid groupoid, long p, int prec);

  const FiniteGroupoid& groupoid() const { return groupoid_; }
  long prime() const { return prime_; }
  int precision() const { return prec_; }

  const PadicScalar& at(size_t g) const { return coeffs_[g]; }
  void set(size_t g, const PadicScalar& value);

  static GroupoidAlgebraElement delta(const FiniteGroupoid& gpd, size_t g,
                                      long p, int prec);

  GroupoidAlgebraElement operator+(const GroupoidAlgebraElement& rhs) const;
  GroupoidAlgebraElement operator-(const GroupoidAlgebraElement& rhs) const;
  bool congruent(const GroupoidAlgebraElement& rhs) const;
  NormValue sup_norm() const;

private:
  friend GroupoidAlgebraElement groupoid_convolve(const GroupoidAlgebraElement&,
                                                  const GroupoidAlgebraElement&);
  friend GroupoidAlgebraElement groupoid_involution(
      const GroupoidAlgebraElement&);

  FiniteGroupoid groupoid_;
  long prime_;
  int prec_;
  std::vector<PadicScalar> coeffs_;
};

// (phi * psi)(h) = sum_{r(g) = r(h)} phi(g) psi(g^{-1} h)
GroupoidAlgebraElement groupoid_convolve(const GroupoidAlgebraElement& phi,
                                         const GroupoidAlgebraElement& psi);
GroupoidAlgebraElement groupoid_involution(const GroupoidAlgebraElement& phi);

// Generators of the p-adic rotation algebra on the window {-M..M}^2,
// labels "m|n": U(delta_{m,n}) = z^m delta_{m,n+1}, V(delta_{m,n}) =
// delta_{m+1,n}. z must be a unit.
struct RotationPair {
  OperatorMatrix u;
  OperatorMatrix v;
};
RotationPair rotation_generators(const PadicScalar& z, long half_size);

// UV - zVU vanishes on columns with both coordinates at distance >= margin
// from the window edge; checks every entry of those columns.
bool rotation_relation_check(const RotationPair& uv, const PadicScalar& z,
                             long half_size, long margin = 1);

}  // namespace padic
