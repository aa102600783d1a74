#include "padicops/hilbert.hpp"

#include <sstream>

namespace padic {

Window::Window(std::vector<std::string> labels, size_t interior_margin)
    : Window(std::move(labels), interior_margin, interior_margin) {}

Window::Window(std::vector<std::string> labels, size_t lo_margin,
               size_t hi_margin)
    : labels_(std::move(labels)), lo_margin_(lo_margin), hi_margin_(hi_margin) {
  if (labels_.empty())
    throw padic_error(errc::bad_input, "window must be non-empty");
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second)
      throw padic_error(errc::bad_input, "duplicate window label " + labels_[i]);
  }
  if (lo_margin_ + hi_margin_ >= labels_.size())
    throw padic_error(errc::bad_input, "interior margin swallows the window");
}

Window Window::integer_range(long lo, long hi, size_t interior_margin) {
  if (hi < lo) throw padic_error(errc::bad_input, "empty integer range");
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(hi - lo + 1));
  for (long k = lo; k <= hi; ++k) labels.push_back(std::to_string(k));
  return Window(std::move(labels), interior_margin);
}

size_t Window::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    throw padic_error(errc::bad_input, "label not in window: " + label);
  return it->second;
}

bool Window::has_label(const std::string& label) const {
  return index_.count(label) != 0;
}

Window Window::with_margin(size_t margin) const {
  return Window(labels_, margin);
}

Window Window::with_margin(size_t lo, size_t hi) const {
  return Window(labels_, lo, hi);
}

PadicVector::PadicVector(Window window, long p, int prec)
    : window_(std::move(window)), prime_(p), prec_(prec) {
  entries_.assign(window_.size(), PadicScalar::zero(p, prec));
}

const PadicScalar& PadicVector::at_label(const std::string& label) const {
  return entries_[window_.index_of(label)];
}

void PadicVector::set(const std::string& label, const PadicScalar& value) {
  if (value.prime() != prime_ || value.precision() != prec_)
    throw padic_error(errc::prime_mismatch, "entry context mismatch");
  entries_[window_.index_of(label)] = value;
}

PadicVector PadicVector::basis(const Window& w, const std::string& label,
                               long p, int prec) {
  PadicVector v(w, p, prec);
  v.set(label, PadicScalar::from_integer(1, p, prec));
  return v;
}

PadicVector PadicVector::operator+(const PadicVector& rhs) const {
  if (!(window_ == rhs.window_))
    throw padic_error(errc::window_mismatch, "vector windows differ");
  PadicVector out(window_, prime_, prec_);
  for (size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

PadicVector PadicVector::operator-(const PadicVector& rhs) const {
  if (!(window_ == rhs.window_))
    throw padic_error(errc::window_mismatch, "vector windows differ");
  PadicVector out(window_, prime_, prec_);
  for (size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] - rhs.entries_[i];
  return out;
}

PadicVector PadicVector::scaled(const PadicScalar& lambda) const {
  PadicVector out(window_, prime_, prec_);
  for (size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = lambda * entries_[i];
  return out;
}

ResidueClass ResidueClass::operator+(const ResidueClass& rhs) const {
  if (prime != rhs.prime)
    throw padic_error(errc::prime_mismatch, "residue classes over different primes");
  long k = std::max(exponent, rhs.exponent);
  if (k == 0) return zero(prime);
  mpz_class den = pow_p(prime, k);
  mpz_class num = numerator * pow_p(prime, k - exponent) +
                  rhs.numerator * pow_p(prime, k - rhs.exponent);
  num %= den;
  if (num < 0) num += den;
  // Normalize: strip common powers of p.
  while (k > 0 && num % prime == 0) {
    if (num == 0) return zero(prime);
    num /= prime;
    --k;
  }
  if (k == 0) return zero(prime);
  return {prime, num, k};
}

std::string ResidueClass::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << numerator.get_str() << "/" << prime << "^" << exponent;
  return os.str();
}

ResidueClass residue_class(const PadicScalar& x) {
  if (x.below_precision()) {
    if (x.precision_floor() < 0)
      throw padic_error(errc::precision_loss,
                        "fractional part not determined at this precision");
    return ResidueClass::zero(x.prime());
  }
  long v = x.valuation();
  if (v >= 0) return ResidueClass::zero(x.prime());
  long k = -v;
  if (x.effective_precision() < k)
    throw padic_error(errc::precision_loss,
                      "fractional digits exceed known precision");
  mpz_class den = pow_p(x.prime(), k);
  mpz_class num = x.mantissa() % den;
  return {x.prime(), num, k};
}

NormValue sup_norm(const PadicVector& xi) {
  NormValue best = xi[0].norm();
  for (size_t i = 1; i < xi.size(); ++i) best = norm_max(best, xi[i].norm());
  return best;
}

ResidueClass pairing(const PadicVector& xi, const PadicVector& eta) {
  if (!(xi.window() == eta.window()))
    throw padic_error(errc::window_mismatch, "pairing windows differ");
  // Summing fractional parts termwise is exact mod Z_p.
  ResidueClass acc = ResidueClass::zero(xi.prime());
  for (size_t i = 0; i < xi.size(); ++i)
    acc = acc + residue_class(xi[i] * eta[i]);
  return acc;
}

}  // namespace padic
