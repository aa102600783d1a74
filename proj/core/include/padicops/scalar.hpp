#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace padic {

enum class errc {
  prime_mismatch,
  precision_mismatch,
  not_a_unit,
  no_square_root,
  unsupported_prime,
  precision_loss,
  window_mismatch,
  carrier_mismatch,
  not_normal_contraction,
  bad_input,
};

class padic_error : public std::runtime_error {
public:
  padic_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

const char* errc_name(errc code);

// Norm of a p-adic quantity, recorded as p^{-exponent}. An upper bound
// arises when every known digit of the underlying value is zero: all we
// can assert is |x| <= p^{-exponent}.
struct NormValue {
  enum class Kind { exact, upper_bound };
  Kind kind = Kind::exact;
  long exponent = 0;

  static NormValue exact(long e) { return {Kind::exact, e}; }
  static NormValue upper(long e) { return {Kind::upper_bound, e}; }
  bool is_exact() const { return kind == Kind::exact; }

  friend bool operator==(const NormValue&, const NormValue&) = default;
};

// Larger norm means smaller exponent. The max of an exact norm and a
// strictly smaller bound stays exact; otherwise only a bound survives.
NormValue norm_max(const NormValue& a, const NormValue& b);
NormValue norm_mul(const NormValue& a, const NormValue& b);
// True when a <= b can be certified from the recorded data (b exact, or
// both bounds with a's bound at most b's).
bool norm_le(const NormValue& a, const NormValue& b);
std::string norm_to_string(const NormValue& n, long p);

mpz_class pow_p(long p, long e);

// Element of Q_p known to finite precision: value p^v * u with u a unit
// mantissa known modulo p^eff (eff <= N, the working relative precision).
// A value whose known digits are all zero collapses to the below-precision
// state, which only remembers the absolute precision floor.
class PadicScalar {
public:
  static PadicScalar from_integer(const mpz_class& n, long p, int prec);
  static PadicScalar from_integer(long n, long p, int prec);
  // General constructor: value p^val * unit, val may be negative (Q_p).
  static PadicScalar from_unit(long p, int prec, long val, const mpz_class& unit);
  static PadicScalar zero(long p, int prec);
  // Below-precision value with an explicit absolute precision floor.
  static PadicScalar below(long p, int prec, long floor);

  long prime() const { return prime_; }
  int precision() const { return prec_; }

  bool below_precision() const { return below_; }
  // Valuation of a value with at least one known digit.
  long valuation() const;
  // Absolute precision floor: the value is known to vanish mod p^floor.
  long precision_floor() const;
  const mpz_class& mantissa() const;
  int effective_precision() const;
  // Value known modulo p^{abs_precision()}.
  long abs_precision() const;

  NormValue norm() const;
  bool is_unit() const { return !below_ && val_ == 0; }

  PadicScalar operator+(const PadicScalar& rhs) const;
  PadicScalar operator-(const PadicScalar& rhs) const;
  PadicScalar operator*(const PadicScalar& rhs) const;
  PadicScalar operator-() const;
  friend PadicScalar operator*(long k, const PadicScalar& x);

  PadicScalar invert() const;
  // Multiply by p^k (k may be negative: exact division by a power of p).
  PadicScalar scaled_by_p(long k) const;
  // Exact division by an integer n = p^e * w: requires valuation >= e.
  PadicScalar divexact(const mpz_class& n) const;

  // Congruent to zero at the working absolute precision.
  bool is_zero() const { return below_; }
  bool congruent(const PadicScalar& rhs) const;

  // Canonical representative in [0, p^{abs_precision}) for val >= 0 values;
  // below-precision values lift to 0.
  mpz_class lift() const;
  std::string to_string() const;

private:
  PadicScalar(long p, int prec) : prime_(p), prec_(prec) {}
  static PadicScalar make(long p, int prec, const mpz_class& rep, long v_base,
                          long abs_prec);
  void check_compatible(const PadicScalar& rhs) const;

  long prime_ = 2;
  int prec_ = 1;
  bool below_ = true;
  long val_ = 0;  // valuation, or the precision floor when below_
  int eff_ = 0;
  mpz_class unit_;
};

// Square root of a unit by Hensel lifting, odd p only. The branch is
// pinned to the smallest positive residue root mod p.
PadicScalar hensel_sqrt(const PadicScalar& c);

// binom(x, n) = x(x-1)...(x-(n-1))/n! in Z_p.
PadicScalar padic_binomial(const PadicScalar& x, unsigned long n);

// v_p(n!) by Legendre's formula.
long factorial_valuation(unsigned long n, long p);

// Mahler coefficients c_n = (Delta^n f)(0) from values f(0..n_max).
std::vector<PadicScalar> mahler_coefficients(const std::vector<PadicScalar>& f_values);

// Sum of c_n * binom(x, n): reconstructs f(x) from Mahler coefficients.
PadicScalar mahler_sum(const std::vector<PadicScalar>& coeffs, const PadicScalar& x);

bool is_prime(long p);

}  // namespace padic
