#include "padicops/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace padic {

const char* errc_name(errc code) {
  switch (code) {
    case errc::prime_mismatch: return "PRIME_MISMATCH";
    case errc::precision_mismatch: return "PRECISION_MISMATCH";
    case errc::not_a_unit: return "NOT_A_UNIT";
    case errc::no_square_root: return "NO_SQUARE_ROOT";
    case errc::unsupported_prime: return "UNSUPPORTED_PRIME";
    case errc::precision_loss: return "PRECISION_LOSS";
    case errc::window_mismatch: return "WINDOW_MISMATCH";
    case errc::carrier_mismatch: return "CARRIER_MISMATCH";
    case errc::not_normal_contraction: return "NOT_NORMAL_CONTRACTION";
    case errc::bad_input: return "BAD_INPUT";
  }
  return "UNKNOWN";
}

NormValue norm_max(const NormValue& a, const NormValue& b) {
  // Values p^{-e}: larger exponent = smaller value.
  if (a.is_exact() && b.is_exact())
    return NormValue::exact(std::min(a.exponent, b.exponent));
  if (a.is_exact() && !b.is_exact()) {
    if (a.exponent <= b.exponent) return a;  // bound is below the exact value
    return NormValue::upper(b.exponent);
  }
  if (!a.is_exact() && b.is_exact()) return norm_max(b, a);
  return NormValue::upper(std::min(a.exponent, b.exponent));
}

NormValue norm_mul(const NormValue& a, const NormValue& b) {
  auto kind = (a.is_exact() && b.is_exact()) ? NormValue::Kind::exact
                                             : NormValue::Kind::upper_bound;
  return {kind, a.exponent + b.exponent};
}

bool norm_le(const NormValue& a, const NormValue& b) {
  // a's recorded value (exact or bound) is at most b's exact value, or at
  // most b's bound when both are bounds.
  if (b.is_exact()) return a.exponent >= b.exponent;
  if (!a.is_exact()) return a.exponent >= b.exponent;
  return false;
}

std::string norm_to_string(const NormValue& n, long p) {
  std::ostringstream os;
  if (!n.is_exact()) os << "<=";
  if (n.exponent == 0)
    os << "1";
  else if (n.exponent > 0)
    os << p << "^-" << n.exponent;
  else
    os << p << "^" << -n.exponent;
  return os.str();
}

mpz_class pow_p(long p, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e));
  return r;
}

bool is_prime(long p) {
  if (p < 2) return false;
  mpz_class z = p;
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

PadicScalar PadicScalar::zero(long p, int prec) {
  PadicScalar s(p, prec);
  s.below_ = true;
  s.val_ = prec;
  return s;
}

PadicScalar PadicScalar::below(long p, int prec, long floor) {
  PadicScalar s(p, prec);
  s.below_ = true;
  s.val_ = floor;
  return s;
}

PadicScalar PadicScalar::make(long p, int prec, const mpz_class& rep,
                              long v_base, long abs_prec) {
  // Value is rep * p^{v_base}, known modulo p^{abs_prec}.
  long digits = abs_prec - v_base;
  if (digits <= 0) {
    PadicScalar s(p, prec);
    s.below_ = true;
    s.val_ = abs_prec;
    return s;
  }
  mpz_class mod = pow_p(p, digits);
  mpz_class r = rep % mod;
  if (r < 0) r += mod;
  if (r == 0) {
    PadicScalar s(p, prec);
    s.below_ = true;
    s.val_ = abs_prec;
    return s;
  }
  mpz_class pz = p;
  unsigned long shift = mpz_remove(r.get_mpz_t(), r.get_mpz_t(), pz.get_mpz_t());
  long v = v_base + static_cast<long>(shift);
  long eff = std::min<long>(abs_prec - v, prec);
  r %= pow_p(p, eff);
  PadicScalar s(p, prec);
  s.below_ = false;
  s.val_ = v;
  s.eff_ = static_cast<int>(eff);
  s.unit_ = r;
  return s;
}

PadicScalar PadicScalar::from_integer(const mpz_class& n, long p, int prec) {
  if (prec < 1) throw padic_error(errc::bad_input, "precision must be >= 1");
  if (!is_prime(p)) throw padic_error(errc::bad_input, "p must be prime");
  if (n == 0) return zero(p, prec);
  mpz_class r = n;
  mpz_class pz = p;
  unsigned long v = mpz_remove(r.get_mpz_t(), r.get_mpz_t(), pz.get_mpz_t());
  return make(p, prec, r, static_cast<long>(v), static_cast<long>(v) + prec);
}

PadicScalar PadicScalar::from_integer(long n, long p, int prec) {
  return from_integer(mpz_class(n), p, prec);
}

PadicScalar PadicScalar::from_unit(long p, int prec, long val,
                                   const mpz_class& unit) {
  if (prec < 1) throw padic_error(errc::bad_input, "precision must be >= 1");
  if (!is_prime(p)) throw padic_error(errc::bad_input, "p must be prime");
  if (unit % p == 0)
    throw padic_error(errc::bad_input, "mantissa must be a unit");
  return make(p, prec, unit, val, val + prec);
}

long PadicScalar::valuation() const {
  if (below_)
    throw padic_error(errc::precision_loss, "valuation of a below-precision value");
  return val_;
}

long PadicScalar::precision_floor() const {
  if (!below_)
    throw padic_error(errc::bad_input, "precision_floor of a resolved value");
  return val_;
}

const mpz_class& PadicScalar::mantissa() const {
  if (below_)
    throw padic_error(errc::precision_loss, "mantissa of a below-precision value");
  return unit_;
}

int PadicScalar::effective_precision() const { return below_ ? 0 : eff_; }

long PadicScalar::abs_precision() const { return below_ ? val_ : val_ + eff_; }

NormValue PadicScalar::norm() const {
  if (below_) return NormValue::upper(val_);
  return NormValue::exact(val_);
}

void PadicScalar::check_compatible(const PadicScalar& rhs) const {
  if (prime_ != rhs.prime_)
    throw padic_error(errc::prime_mismatch, "operands over different primes");
  if (prec_ != rhs.prec_)
    throw padic_error(errc::precision_mismatch,
                      "operands at different working precisions");
}

PadicScalar PadicScalar::operator+(const PadicScalar& rhs) const {
  check_compatible(rhs);
  long m = std::min(abs_precision(), rhs.abs_precision());
  if (below_ && rhs.below_) {
    PadicScalar s(prime_, prec_);
    s.below_ = true;
    s.val_ = m;
    return s;
  }
  if (below_ || rhs.below_) {
    const PadicScalar& x = below_ ? rhs : *this;
    return make(prime_, prec_, x.unit_, x.val_, m);
  }
  long v0 = std::min(val_, rhs.val_);
  mpz_class rep = unit_ * pow_p(prime_, val_ - v0) +
                  rhs.unit_ * pow_p(prime_, rhs.val_ - v0);
  return make(prime_, prec_, rep, v0, m);
}

PadicScalar PadicScalar::operator-() const {
  if (below_) return *this;
  mpz_class u = pow_p(prime_, eff_) - unit_;
  PadicScalar s(prime_, prec_);
  s.below_ = false;
  s.val_ = val_;
  s.eff_ = eff_;
  s.unit_ = u;
  return s;
}

PadicScalar PadicScalar::operator-(const PadicScalar& rhs) const {
  return *this + (-rhs);
}

PadicScalar PadicScalar::operator*(const PadicScalar& rhs) const {
  check_compatible(rhs);
  if (below_ || rhs.below_) {
    // val_ is the floor for a below value and the valuation otherwise, so
    // |ab| <= p^{-(val_ + rhs.val_)} in every combination.
    PadicScalar s(prime_, prec_);
    s.below_ = true;
    s.val_ = val_ + rhs.val_;
    return s;
  }
  long v = val_ + rhs.val_;
  long eff = std::min(eff_, rhs.eff_);
  mpz_class u = (unit_ * rhs.unit_) % pow_p(prime_, eff);
  PadicScalar s(prime_, prec_);
  s.below_ = false;
  s.val_ = v;
  s.eff_ = static_cast<int>(eff);
  s.unit_ = u;
  return s;
}

PadicScalar operator*(long k, const PadicScalar& x) {
  return PadicScalar::from_integer(k, x.prime(), x.precision()) * x;
}

PadicScalar PadicScalar::invert() const {
  if (below_ || val_ != 0)
    throw padic_error(errc::not_a_unit, "inverse requires a unit");
  mpz_class mod = pow_p(prime_, eff_);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t());
  PadicScalar s(prime_, prec_);
  s.below_ = false;
  s.val_ = 0;
  s.eff_ = eff_;
  s.unit_ = inv;
  return s;
}

PadicScalar PadicScalar::scaled_by_p(long k) const {
  PadicScalar s = *this;
  s.val_ += k;
  return s;
}

PadicScalar PadicScalar::divexact(const mpz_class& n) const {
  if (n == 0) throw padic_error(errc::bad_input, "division by zero");
  mpz_class w = n < 0 ? mpz_class(-n) : n;
  mpz_class pz = prime_;
  long e = static_cast<long>(mpz_remove(w.get_mpz_t(), w.get_mpz_t(), pz.get_mpz_t()));
  if (below_) {
    if (val_ - e <= 0)
      throw padic_error(errc::precision_loss,
                        "exact division exhausts the precision floor");
    PadicScalar s(prime_, prec_);
    s.below_ = true;
    s.val_ = val_ - e;
    return s;
  }
  if (val_ < e)
    throw padic_error(errc::precision_loss,
                      "value not divisible by the requested power of p");
  mpz_class mod = pow_p(prime_, eff_);
  mpz_class winv;
  mpz_invert(winv.get_mpz_t(), w.get_mpz_t(), mod.get_mpz_t());
  mpz_class u = (unit_ * winv) % mod;
  if (n < 0) u = mod - u;
  PadicScalar s(prime_, prec_);
  s.below_ = false;
  s.val_ = val_ - e;
  s.eff_ = eff_;
  s.unit_ = u;
  return s;
}

bool PadicScalar::congruent(const PadicScalar& rhs) const {
  return (*this - rhs).is_zero();
}

mpz_class PadicScalar::lift() const {
  if (below_) return 0;
  if (val_ < 0)
    throw padic_error(errc::bad_input, "lift of a value outside Z_p");
  return unit_ * pow_p(prime_, val_);
}

std::string PadicScalar::to_string() const {
  std::ostringstream os;
  if (below_) {
    os << "O(" << prime_ << "^" << val_ << ")";
    return os.str();
  }
  os << unit_.get_str();
  if (val_ != 0) os << "*" << prime_ << "^" << val_;
  os << " + O(" << prime_ << "^" << abs_precision() << ")";
  return os.str();
}

PadicScalar hensel_sqrt(const PadicScalar& c) {
  long p = c.prime();
  if (p == 2)
    throw padic_error(errc::unsupported_prime, "hensel_sqrt requires odd p");
  if (!c.is_unit())
    throw padic_error(errc::not_a_unit, "hensel_sqrt requires a unit");
  mpz_class c0 = c.mantissa() % p;
  long r0 = -1;
  for (long r = 1; r < p; ++r) {
    if ((r * r) % p == c0.get_si()) {
      r0 = r;
      break;
    }
  }
  if (r0 < 0)
    throw padic_error(errc::no_square_root, "residue is a quadratic non-residue");
  // Newton iteration r <- (r + c/r)/2 doubles the number of correct digits.
  int eff = c.effective_precision();
  mpz_class mod = pow_p(p, eff);
  mpz_class r = r0;
  mpz_class target = c.mantissa();
  long known = 1;
  mpz_class two_inv;
  {
    mpz_class two = 2;
    mpz_invert(two_inv.get_mpz_t(), two.get_mpz_t(), mod.get_mpz_t());
  }
  while (known < eff) {
    mpz_class rinv;
    mpz_invert(rinv.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    r = (two_inv * (r + target * rinv)) % mod;
    known *= 2;
  }
  // Both square roots lift r0 and -r0; the loop above preserves the branch.
  return PadicScalar::from_unit(p, c.precision(), 0, r);
}

long factorial_valuation(unsigned long n, long p) {
  long v = 0;
  unsigned long q = n;
  while (q > 0) {
    q /= static_cast<unsigned long>(p);
    v += static_cast<long>(q);
  }
  return v;
}

PadicScalar padic_binomial(const PadicScalar& x, unsigned long n) {
  long p = x.prime();
  int prec = x.precision();
  if (!x.below_precision() && x.valuation() < 0)
    throw padic_error(errc::bad_input, "binomial requires x in Z_p");
  if (n == 0) return PadicScalar::from_integer(1, p, prec);
  long vfact = factorial_valuation(n, p);
  if (vfact >= prec)
    throw padic_error(errc::precision_loss,
                      "v_p(n!) exceeds the working precision");
  PadicScalar num = x;
  for (unsigned long k = 1; k < n; ++k)
    num = num * (x - PadicScalar::from_integer(static_cast<long>(k), p, prec));
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  return num.divexact(fact);
}

std::vector<PadicScalar> mahler_coefficients(
    const std::vector<PadicScalar>& f_values) {
  std::vector<PadicScalar> diff = f_values;
  std::vector<PadicScalar> coeffs;
  coeffs.reserve(f_values.size());
  while (!diff.empty()) {
    coeffs.push_back(diff.front());
    std::vector<PadicScalar> next;
    next.reserve(diff.size() - 1);
    for (size_t i = 0; i + 1 < diff.size(); ++i)
      next.push_back(diff[i + 1] - diff[i]);
    diff = std::move(next);
  }
  return coeffs;
}

PadicScalar mahler_sum(const std::vector<PadicScalar>& coeffs,
                       const PadicScalar& x) {
  PadicScalar acc = PadicScalar::zero(x.prime(), x.precision());
  for (size_t n = 0; n < coeffs.size(); ++n)
    acc = acc + coeffs[n] * padic_binomial(x, static_cast<unsigned long>(n));
  return acc;
}

}  // namespace padic
