#pragma once

#include <map>
#include <string>
#include <vector>

#include "padicops/scalar.hpp"

namespace padic {

// Finite truncation of an index set. The interior margin marks boundary
// labels excluded from relation checks on truncated operators.
class Window {
public:
  Window() = default;
  explicit Window(std::vector<std::string> labels, size_t interior_margin = 0);
  // One-sided truncations (a unilateral shift only corrupts the top end).
  Window(std::vector<std::string> labels, size_t lo_margin, size_t hi_margin);
  // Consecutive integer labels lo..hi.
  static Window integer_range(long lo, long hi, size_t interior_margin = 0);

  size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(size_t i) const { return labels_[i]; }
  size_t index_of(const std::string& label) const;
  bool has_label(const std::string& label) const;
  // Index range [begin, end) of the interior sub-window.
  size_t interior_begin() const { return lo_margin_; }
  size_t interior_end() const { return labels_.size() - hi_margin_; }
  bool in_interior(size_t i) const {
    return i >= interior_begin() && i < interior_end();
  }
  Window with_margin(size_t margin) const;
  Window with_margin(size_t lo, size_t hi) const;

  friend bool operator==(const Window& a, const Window& b) {
    return a.labels_ == b.labels_;
  }

private:
  std::vector<std::string> labels_;
  std::map<std::string, size_t> index_;
  size_t lo_margin_ = 0;
  size_t hi_margin_ = 0;
};

// Element of the p-adic Hilbert space over a finite window. Entries may
// have negative valuation (they live in Q_p).
class PadicVector {
public:
  PadicVector(Window window, long p, int prec);

  const Window& window() const { return window_; }
  long prime() const { return prime_; }
  int precision() const { return prec_; }
  size_t size() const { return entries_.size(); }

  const PadicScalar& operator[](size_t i) const { return entries_[i]; }
  PadicScalar& operator[](size_t i) { return entries_[i]; }
  const PadicScalar& at_label(const std::string& label) const;
  void set(const std::string& label, const PadicScalar& value);

  static PadicVector basis(const Window& w, const std::string& label, long p,
                           int prec);

  PadicVector operator+(const PadicVector& rhs) const;
  PadicVector operator-(const PadicVector& rhs) const;
  PadicVector scaled(const PadicScalar& lambda) const;

private:
  Window window_;
  long prime_;
  int prec_;
  std::vector<PadicScalar> entries_;
};

// Class in Q_p/Z_p: numerator / p^exponent with 0 <= numerator < p^exponent.
struct ResidueClass {
  long prime = 2;
  mpz_class numerator = 0;
  long exponent = 0;  // 0 means the zero class

  static ResidueClass zero(long p) { return {p, 0, 0}; }
  bool is_zero() const { return exponent == 0; }
  ResidueClass operator+(const ResidueClass& rhs) const;
  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
  std::string to_string() const;
};

// Fractional part of a scalar: its class in Q_p/Z_p.
ResidueClass residue_class(const PadicScalar& x);

NormValue sup_norm(const PadicVector& xi);

// Bilinear pairing <xi, eta> = sum xi(x) eta(x) mod Z_p.
ResidueClass pairing(const PadicVector& xi, const PadicVector& eta);

}  // namespace padic
