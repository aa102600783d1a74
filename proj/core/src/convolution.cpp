#include "padicops/convolution.hpp"

namespace padic {

GroupAlgebraElement::GroupAlgebraElement(FiniteGroup group, long p, int prec)
    : group_(std::move(group)), prime_(p), prec_(prec) {
  coeffs_.assign(group_.order(), PadicScalar::zero(p, prec));
}

void GroupAlgebraElement::set(size_t g, const PadicScalar& value) {
  if (value.prime() != prime_ || value.precision() != prec_)
    throw padic_error(errc::prime_mismatch, "coefficient context mismatch");
  if (!value.below_precision() && value.valuation() < 0)
    throw padic_error(errc::bad_input, "coefficients must lie in Z_p");
  coeffs_[g] = value;
}

GroupAlgebraElement GroupAlgebraElement::delta(const FiniteGroup& grp, size_t g,
                                               long p, int prec) {
  GroupAlgebraElement e(grp, p, prec);
  e.set(g, PadicScalar::from_integer(1, p, prec));
  return e;
}

void GroupAlgebraElement::check_carrier(const GroupAlgebraElement& rhs) const {
  if (!(group_ == rhs.group_) || prime_ != rhs.prime_ || prec_ != rhs.prec_)
    throw padic_error(errc::carrier_mismatch, "elements over different carriers");
}

GroupAlgebraElement GroupAlgebraElement::operator+(
    const GroupAlgebraElement& rhs) const {
  check_carrier(rhs);
  GroupAlgebraElement out(group_, prime_, prec_);
  for (size_t g = 0; g < coeffs_.size(); ++g)
    out.coeffs_[g] = coeffs_[g] + rhs.coeffs_[g];
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(
    const GroupAlgebraElement& rhs) const {
  check_carrier(rhs);
  GroupAlgebraElement out(group_, prime_, prec_);
  for (size_t g = 0; g < coeffs_.size(); ++g)
    out.coeffs_[g] = coeffs_[g] - rhs.coeffs_[g];
  return out;
}

bool GroupAlgebraElement::congruent(const GroupAlgebraElement& rhs) const {
  check_carrier(rhs);
  for (size_t g = 0; g < coeffs_.size(); ++g)
    if (!(coeffs_[g] - rhs.coeffs_[g]).is_zero()) return false;
  return true;
}

NormValue GroupAlgebraElement::sup_norm() const {
  NormValue best = coeffs_[0].norm();
  for (size_t g = 1; g < coeffs_.size(); ++g)
    best = norm_max(best, coeffs_[g].norm());
  return best;
}

GroupAlgebraElement convolve(const GroupAlgebraElement& phi,
                             const GroupAlgebraElement& psi) {
  phi.check_carrier(psi);
  const FiniteGroup& grp = phi.group();
  GroupAlgebraElement out(grp, phi.prime(), phi.precision());
  for (size_t h = 0; h < grp.order(); ++h) {
    PadicScalar acc = PadicScalar::zero(phi.prime(), phi.precision());
    for (size_t g = 0; g < grp.order(); ++g)
      acc = acc + phi.coeffs_[g] * psi.coeffs_[grp.mul(grp.inv(g), h)];
    out.coeffs_[h] = acc;
  }
  return out;
}

GroupAlgebraElement involution(const GroupAlgebraElement& phi) {
  const FiniteGroup& grp = phi.group();
  GroupAlgebraElement out(grp, phi.prime(), phi.precision());
  for (size_t g = 0; g < grp.order(); ++g)
    out.coeffs_[g] = phi.coeffs_[grp.inv(g)];
  return out;
}

OperatorMatrix regular_representation(const GroupAlgebraElement& phi) {
  const FiniteGroup& grp = phi.group();
  Window w(grp.labels());
  OperatorMatrix out(w, phi.prime(), phi.precision());
  // lambda(phi) delta_k = sum_g phi(g) delta_{gk}
  for (size_t g = 0; g < grp.order(); ++g)
    for (size_t k = 0; k < grp.order(); ++k)
      out.set(grp.mul(g, k), k, phi.at(g));
  return out;
}

GroupAlgebraElement twisted_convolve(const GroupAlgebraElement& phi,
                                     const GroupAlgebraElement& psi,
                                     const Cocycle& omega) {
  phi.check_carrier(psi);
  const FiniteGroup& grp = phi.group();
  if (!(omega.group() == grp))
    throw padic_error(errc::carrier_mismatch, "cocycle over a different group");
  GroupAlgebraElement out(grp, phi.prime(), phi.precision());
  for (size_t g = 0; g < grp.order(); ++g) {
    PadicScalar acc = PadicScalar::zero(phi.prime(), phi.precision());
    for (size_t h = 0; h < grp.order(); ++h) {
      size_t hg = grp.mul(grp.inv(h), g);
      acc = acc + phi.coeffs_[h] * psi.coeffs_[hg] * omega.at(h, hg);
    }
    out.coeffs_[g] = acc;
  }
  return out;
}

GroupAlgebraElement twisted_involution(const GroupAlgebraElement& phi,
                                       const Cocycle& omega) {
  const FiniteGroup& grp = phi.group();
  if (!(omega.group() == grp))
    throw padic_error(errc::carrier_mismatch, "cocycle over a different group");
  GroupAlgebraElement out(grp, phi.prime(), phi.precision());
  for (size_t g = 0; g < grp.order(); ++g)
    out.coeffs_[g] = omega.at(grp.inv(g), g) * phi.coeffs_[grp.inv(g)];
  return out;
}

OperatorMatrix twisted_regular_representation(const GroupAlgebraElement& phi,
                                              const Cocycle& omega) {
  const FiniteGroup& grp = phi.group();
  if (!(omega.group() == grp))
    throw padic_error(errc::carrier_mismatch, "cocycle over a different group");
  Window w(grp.labels());
  OperatorMatrix out(w, phi.prime(), phi.precision());
  // lambda^w_g delta_k = omega(g, k) delta_{gk}
  for (size_t g = 0; g < grp.order(); ++g)
    for (size_t k = 0; k < grp.order(); ++k)
      out.set(grp.mul(g, k), k, phi.at(g) * omega.at(g, k));
  return out;
}

GroupoidAlgebraElement::GroupoidAlgebraElement(FiniteGroupoid groupoid, long p,
                                               int prec)
    : groupoid_(std::move(groupoid)), prime_(p), prec_(prec) {
  coeffs_.assign(groupoid_.arrow_count(), PadicScalar::zero(p, prec));
}

void GroupoidAlgebraElement::set(size_t g, const PadicScalar& value) {
  if (value.prime() != prime_ || value.precision() != prec_)
    throw padic_error(errc::prime_mismatch, "coefficient context mismatch");
  if (!value.below_precision() && value.valuation() < 0)
    throw padic_error(errc::bad_input, "coefficients must lie in Z_p");
  coeffs_[g] = value;
}

GroupoidAlgebraElement GroupoidAlgebraElement::delta(const FiniteGroupoid& gpd,
                                                     size_t g, long p,
                                                     int prec) {
  GroupoidAlgebraElement e(gpd, p, prec);
  e.set(g, PadicScalar::from_integer(1, p, prec));
  return e;
}

GroupoidAlgebraElement GroupoidAlgebraElement::operator+(
    const GroupoidAlgebraElement& rhs) const {
  if (!(groupoid_ == rhs.groupoid_))
    throw padic_error(errc::carrier_mismatch, "elements over different groupoids");
  GroupoidAlgebraElement out(groupoid_, prime_, prec_);
  for (size_t g = 0; g < coeffs_.size(); ++g)
    out.coeffs_[g] = coeffs_[g] + rhs.coeffs_[g];
  return out;
}

GroupoidAlgebraElement GroupoidAlgebraElement::operator-(
    const GroupoidAlgebraElement& rhs) const {
  if (!(groupoid_ == rhs.groupoid_))
    throw padic_error(errc::carrier_mismatch, "elements over different groupoids");
  GroupoidAlgebraElement out(groupoid_, prime_, prec_);
  for (size_t g = 0; g < coeffs_.size(); ++g)
    out.coeffs_[g] = coeffs_[g] - rhs.coeffs_[g];
  return out;
}

bool GroupoidAlgebraElement::congruent(const GroupoidAlgebraElement& rhs) const {
  GroupoidAlgebraElement diff = *this - rhs;
  for (const auto& c : diff.coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

NormValue GroupoidAlgebraElement::sup_norm() const {
  NormValue best = coeffs_[0].norm();
  for (size_t g = 1; g < coeffs_.size(); ++g)
    best = norm_max(best, coeffs_[g].norm());
  return best;
}

GroupoidAlgebraElement groupoid_convolve(const GroupoidAlgebraElement& phi,
                                         const GroupoidAlgebraElement& psi) {
  if (!(phi.groupoid() == psi.groupoid()) || phi.prime() != psi.prime() ||
      phi.precision() != psi.precision())
    throw padic_error(errc::carrier_mismatch, "elements over different groupoids");
  const FiniteGroupoid& gpd = phi.groupoid();
  GroupoidAlgebraElement out(gpd, phi.prime(), phi.precision());
  for (size_t h = 0; h < gpd.arrow_count(); ++h) {
    PadicScalar acc = PadicScalar::zero(phi.prime(), phi.precision());
    for (size_t g = 0; g < gpd.arrow_count(); ++g) {
      if (gpd.range(g) != gpd.range(h)) continue;
      size_t rest = gpd.compose(gpd.inv(g), h);
      acc = acc + phi.coeffs_[g] * psi.coeffs_[rest];
    }
    out.coeffs_[h] = acc;
  }
  return out;
}

GroupoidAlgebraElement groupoid_involution(const GroupoidAlgebraElement& phi) {
  const FiniteGroupoid& gpd = phi.groupoid();
  GroupoidAlgebraElement out(gpd, phi.prime(), phi.precision());
  for (size_t g = 0; g < gpd.arrow_count(); ++g)
    out.coeffs_[g] = phi.coeffs_[gpd.inv(g)];
  return out;
}

namespace {

std::string torus_label(long m, long n) {
  return std::to_string(m) + "|" + std::to_string(n);
}

PadicScalar unit_power(const PadicScalar& z, long m) {
  PadicScalar acc = PadicScalar::from_integer(1, z.prime(), z.precision());
  PadicScalar base = m >= 0 ? z : z.invert();
  for (long i = 0; i < (m >= 0 ? m : -m); ++i) acc = acc * base;
  return acc;
}

}  // namespace

RotationPair rotation_generators(const PadicScalar& z, long half_size) {
  if (!z.is_unit())
    throw padic_error(errc::not_a_unit, "rotation parameter must be a unit");
  long p = z.prime();
  int prec = z.precision();
  long m0 = -half_size, m1 = half_size;
  std::vector<std::string> labels;
  for (long m = m0; m <= m1; ++m)
    for (long n = m0; n <= m1; ++n) labels.push_back(torus_label(m, n));
  Window w(std::move(labels));
  OperatorMatrix u(w, p, prec), v(w, p, prec);
  PadicScalar one = PadicScalar::from_integer(1, p, prec);
  for (long m = m0; m <= m1; ++m) {
    for (long n = m0; n <= m1; ++n) {
      size_t col = w.index_of(torus_label(m, n));
      if (n + 1 <= m1)
        u.set(w.index_of(torus_label(m, n + 1)), col, unit_power(z, m));
      if (m + 1 <= m1) v.set(w.index_of(torus_label(m + 1, n)), col, one);
    }
  }
  return {std::move(u), std::move(v)};
}

bool rotation_relation_check(const RotationPair& uv, const PadicScalar& z,
                             long half_size, long margin) {
  const OperatorMatrix& u = uv.u;
  const OperatorMatrix& v = uv.v;
  OperatorMatrix lhs = compose(u, v);
  OperatorMatrix rhs = compose(v, u).scaled(z);
  OperatorMatrix defect = lhs - rhs;
  const Window& w = u.window();
  for (long m = -half_size + margin; m <= half_size - margin; ++m)
    for (long n = -half_size + margin; n <= half_size - margin; ++n) {
      size_t col = w.index_of(torus_label(m, n));
      for (size_t row = 0; row < w.size(); ++row)
        if (!defect.at(row, col).is_zero()) return false;
    }
  return true;
}

}  // namespace padic
