#pragma once

#include <functional>
#include <map>
#include <optional>

#include "padicops/hilbert.hpp"

namespace padic {

struct OperatorClass {
  bool unitary = false;
  bool projection = false;
  bool isometry = false;
  bool co_isometry = false;
  bool partial_isometry = false;
  bool self_adjoint = false;
};

// Square matrix over a finite window with exact p-adic entries, row-major.
class OperatorMatrix {
public:
  OperatorMatrix(Window window, long p, int prec);

  const Window& window() const { return window_; }
  long prime() const { return prime_; }
  int precision() const { return prec_; }
  size_t dim() const { return window_.size(); }

  const PadicScalar& at(size_t row, size_t col) const {
    return entries_[row * dim() + col];
  }
  void set(size_t row, size_t col, const PadicScalar& value);
  void set(const std::string& row_label, const std::string& col_label,
           const PadicScalar& value);

  static OperatorMatrix identity(const Window& w, long p, int prec);
  static OperatorMatrix zero(const Window& w, long p, int prec);

  // All entries lie in Z_p (norm <= 1) as far as the precision floor shows.
  bool is_contractive() const;

  OperatorMatrix operator+(const OperatorMatrix& rhs) const;
  OperatorMatrix operator-(const OperatorMatrix& rhs) const;
  OperatorMatrix scaled(const PadicScalar& lambda) const;

  // Every entry of the difference is below precision.
  bool congruent(const OperatorMatrix& rhs) const;
  // Same, restricted to rows and columns in the interior sub-window.
  bool congruent_on_interior(const OperatorMatrix& rhs) const;

private:
  void check_context(const OperatorMatrix& rhs) const;

  Window window_;
  long prime_;
  int prec_;
  std::vector<PadicScalar> entries_;
};

// Operator norm = max entry norm.
NormValue op_norm(const OperatorMatrix& t);
// Max entry norm over the interior sub-window.
NormValue op_norm_interior(const OperatorMatrix& t);

OperatorMatrix adjoint(const OperatorMatrix& t);
OperatorMatrix compose(const OperatorMatrix& s, const OperatorMatrix& t);
PadicVector apply(const OperatorMatrix& t, const PadicVector& xi);

// Kronecker product on the product window; labels "x|y". Both factors
// must be contractive.
OperatorMatrix kronecker(const OperatorMatrix& s, const OperatorMatrix& t);

// Identity checks are made on the interior sub-window of the matrix's
// own window, so truncations of infinite operators classify correctly.
OperatorClass classify(const OperatorMatrix& t);

struct CstarReport {
  NormValue norm_sq;       // ||T||^2
  NormValue norm_adj_prod; // ||T* T||
  bool identity_holds;     // asserted only from exact norms
};
CstarReport cstar_defect(const OperatorMatrix& t);

enum class ShiftDirection { left, right };
OperatorMatrix shift_operator(const Window& w, ShiftDirection dir, long p,
                              int prec);

// Cuntz isometries s_1..s_n on the window {0..M-1}: s_i(delta_k) =
// delta_{n*k+i-1} where defined. Relations hold on the interior
// {0..floor(M/n)-1}.
std::vector<OperatorMatrix> cuntz_family(unsigned n, size_t window_size, long p,
                                         int prec);
Window cuntz_window(unsigned n, size_t window_size);
// Indices on which the Cuntz relations are certified.
size_t cuntz_interior_size(unsigned n, size_t window_size);

// 0/1 matrix of a partial bijection f on the window labels.
OperatorMatrix partial_bijection_operator(
    const Window& w, const std::map<std::string, std::string>& f, long p,
    int prec);

struct NormalContractionResult {
  bool ok;
  std::optional<unsigned> first_failure;
};
// Checks ||A(A-1)...(A-(n-1))|| <= |n!|_p for 1 <= n <= n_max.
NormalContractionResult normal_contraction_check(const OperatorMatrix& a,
                                                 unsigned n_max);

// Functional calculus: sum c_n * binom(A, n) with exact division by n!.
OperatorMatrix mahler_evaluate(const std::vector<PadicScalar>& coeffs,
                               const OperatorMatrix& a, unsigned n_max);

}  // namespace padic
