#include "padicops/crossed.hpp"

namespace padic {

CrossedProductElement::CrossedProductElement(GroupAction action, long p,
                                             int prec)
    : action_(std::move(action)), prime_(p), prec_(prec) {
  coeffs_.assign(action_.group().order(),
                 std::vector<PadicScalar>(action_.space().size(),
                                          PadicScalar::zero(p, prec)));
}

void CrossedProductElement::set(size_t g, size_t x, const PadicScalar& value) {
  if (value.prime() != prime_ || value.precision() != prec_)
    throw padic_error(errc::prime_mismatch, "coefficient context mismatch");
  if (!value.below_precision() && value.valuation() < 0)
    throw padic_error(errc::bad_input, "coefficients must lie in Z_p");
  coeffs_[g][x] = value;
}

void CrossedProductElement::set_fiber(size_t g,
                                      const std::vector<PadicScalar>& f) {
  if (f.size() != action_.space().size())
    throw padic_error(errc::bad_input, "fiber has wrong length");
  for (size_t x = 0; x < f.size(); ++x) set(g, x, f[x]);
}

CrossedProductElement CrossedProductElement::monomial(
    const GroupAction& action, size_t g, const std::vector<PadicScalar>& f,
    long p, int prec) {
  CrossedProductElement e(action, p, prec);
  e.set_fiber(g, f);
  return e;
}

void CrossedProductElement::check_carrier(
    const CrossedProductElement& rhs) const {
  if (!(action_ == rhs.action_) || prime_ != rhs.prime_ || prec_ != rhs.prec_)
    throw padic_error(errc::carrier_mismatch,
                      "crossed product elements over different actions");
}

CrossedProductElement CrossedProductElement::operator+(
    const CrossedProductElement& rhs) const {
  check_carrier(rhs);
  CrossedProductElement out(action_, prime_, prec_);
  for (size_t g = 0; g < coeffs_.size(); ++g)
    for (size_t x = 0; x < coeffs_[g].size(); ++x)
      out.coeffs_[g][x] = coeffs_[g][x] + rhs.coeffs_[g][x];
  return out;
}

CrossedProductElement CrossedProductElement::operator-(
    const CrossedProductElement& rhs) const {
  check_carrier(rhs);
  CrossedProductElement out(action_, prime_, prec_);
  for (size_t g = 0; g < coeffs_.size(); ++g)
    for (size_t x = 0; x < coeffs_[g].size(); ++x)
      out.coeffs_[g][x] = coeffs_[g][x] - rhs.coeffs_[g][x];
  return out;
}

bool CrossedProductElement::congruent(const CrossedProductElement& rhs) const {
  CrossedProductElement diff = *this - rhs;
  for (const auto& fiber : diff.coeffs_)
    for (const auto& c : fiber)
      if (!c.is_zero()) return false;
  return true;
}

NormValue CrossedProductElement::sup_norm() const {
  NormValue best = coeffs_[0][0].norm();
  for (const auto& fiber : coeffs_)
    for (const auto& c : fiber) best = norm_max(best, c.norm());
  return best;
}

CrossedProductElement crossed_convolve(const CrossedProductElement& phi,
                                       const CrossedProductElement& psi) {
  phi.check_carrier(psi);
  const GroupAction& act = phi.action();
  const FiniteGroup& grp = act.group();
  size_t nx = act.space().size();
  CrossedProductElement out(act, phi.prime(), phi.precision());
  for (size_t h = 0; h < grp.order(); ++h) {
    for (size_t x = 0; x < nx; ++x) {
      PadicScalar acc = PadicScalar::zero(phi.prime(), phi.precision());
      for (size_t g = 0; g < grp.order(); ++g) {
        size_t rest = grp.mul(grp.inv(g), h);
        // alpha_g(f)(x) = f(a_g^{-1}(x))
        size_t gx = act.act(grp.inv(g), x);
        acc = acc + phi.coeffs_[g][x] * psi.coeffs_[rest][gx];
      }
      out.coeffs_[h][x] = acc;
    }
  }
  return out;
}

CrossedProductElement crossed_involution(const CrossedProductElement& phi) {
  const GroupAction& act = phi.action();
  const FiniteGroup& grp = act.group();
  size_t nx = act.space().size();
  CrossedProductElement out(act, phi.prime(), phi.precision());
  for (size_t g = 0; g < grp.order(); ++g)
    for (size_t x = 0; x < nx; ++x)
      out.coeffs_[g][x] = phi.coeffs_[grp.inv(g)][act.act(grp.inv(g), x)];
  return out;
}

OperatorMatrix crossed_product_representation(
    const CrossedProductElement& phi) {
  const GroupAction& act = phi.action();
  const FiniteGroup& grp = act.group();
  size_t nx = act.space().size(), ng = grp.order();
  std::vector<std::string> labels;
  labels.reserve(nx * ng);
  for (size_t x = 0; x < nx; ++x)
    for (size_t h = 0; h < ng; ++h)
      labels.push_back(act.space()[x] + "|" + grp.label(h));
  Window w(std::move(labels));
  OperatorMatrix out(w, phi.prime(), phi.precision());
  auto idx = [ng](size_t x, size_t h) { return x * ng + h; };
  // rho(phi)(xi)(y, h) = sum_g phi(g)(a_h(y)) xi(y, g^{-1} h), so the
  // entry ((y, h), (y, h')) is phi(h h'^{-1})(a_h(y)).
  for (size_t y = 0; y < nx; ++y)
    for (size_t h = 0; h < ng; ++h)
      for (size_t hp = 0; hp < ng; ++hp) {
        size_t g = grp.mul(h, grp.inv(hp));
        out.set(idx(y, h), idx(y, hp), phi.at(g, act.act(h, y)));
      }
  return out;
}

GroupoidAlgebraElement action_groupoid_iso(const CrossedProductElement& phi,
                                           const FiniteGroupoid& groupoid) {
  const GroupAction& act = phi.action();
  const FiniteGroup& grp = act.group();
  size_t nx = act.space().size();
  if (groupoid.arrow_count() != grp.order() * nx)
    throw padic_error(errc::carrier_mismatch,
                      "groupoid does not match the action");
  GroupoidAlgebraElement out(groupoid, phi.prime(), phi.precision());
  for (size_t g = 0; g < grp.order(); ++g)
    for (size_t x = 0; x < nx; ++x) {
      size_t arrow =
          groupoid.arrow_index(grp.label(g) + "|" + act.space()[x]);
      out.set(arrow, phi.at(g, act.act(g, x)));
    }
  return out;
}

}  // namespace padic
