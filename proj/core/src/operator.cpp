#include "padicops/operator.hpp"

#include <algorithm>

namespace padic {

OperatorMatrix::OperatorMatrix(Window window, long p, int prec)
    : window_(std::move(window)), prime_(p), prec_(prec) {
  entries_.assign(window_.size() * window_.size(), PadicScalar::zero(p, prec));
}

void OperatorMatrix::set(size_t row, size_t col, const PadicScalar& value) {
  if (value.prime() != prime_ || value.precision() != prec_)
    throw padic_error(errc::prime_mismatch, "entry context mismatch");
  entries_[row * dim() + col] = value;
}

void OperatorMatrix::set(const std::string& row_label,
                         const std::string& col_label,
                         const PadicScalar& value) {
  set(window_.index_of(row_label), window_.index_of(col_label), value);
}

OperatorMatrix OperatorMatrix::identity(const Window& w, long p, int prec) {
  OperatorMatrix m(w, p, prec);
  for (size_t i = 0; i < m.dim(); ++i)
    m.set(i, i, PadicScalar::from_integer(1, p, prec));
  return m;
}

OperatorMatrix OperatorMatrix::zero(const Window& w, long p, int prec) {
  return OperatorMatrix(w, p, prec);
}

bool OperatorMatrix::is_contractive() const {
  for (const auto& e : entries_) {
    if (e.below_precision()) {
      if (e.precision_floor() < 0) return false;
    } else if (e.valuation() < 0) {
      return false;
    }
  }
  return true;
}

void OperatorMatrix::check_context(const OperatorMatrix& rhs) const {
  if (prime_ != rhs.prime_)
    throw padic_error(errc::prime_mismatch, "matrices over different primes");
  if (prec_ != rhs.prec_)
    throw padic_error(errc::precision_mismatch,
                      "matrices at different precisions");
  if (!(window_ == rhs.window_))
    throw padic_error(errc::window_mismatch, "matrix windows differ");
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& rhs) const {
  check_context(rhs);
  OperatorMatrix out(window_, prime_, prec_);
  for (size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& rhs) const {
  check_context(rhs);
  OperatorMatrix out(window_, prime_, prec_);
  for (size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] - rhs.entries_[i];
  return out;
}

OperatorMatrix OperatorMatrix::scaled(const PadicScalar& lambda) const {
  OperatorMatrix out(window_, prime_, prec_);
  for (size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = lambda * entries_[i];
  return out;
}

bool OperatorMatrix::congruent(const OperatorMatrix& rhs) const {
  check_context(rhs);
  for (size_t i = 0; i < entries_.size(); ++i)
    if (!(entries_[i] - rhs.entries_[i]).is_zero()) return false;
  return true;
}

bool OperatorMatrix::congruent_on_interior(const OperatorMatrix& rhs) const {
  check_context(rhs);
  size_t n = dim();
  for (size_t i = window_.interior_begin(); i < window_.interior_end(); ++i)
    for (size_t j = window_.interior_begin(); j < window_.interior_end(); ++j)
      if (!(entries_[i * n + j] - rhs.entries_[i * n + j]).is_zero())
        return false;
  return true;
}

NormValue op_norm(const OperatorMatrix& t) {
  NormValue best = t.at(0, 0).norm();
  for (size_t i = 0; i < t.dim(); ++i)
    for (size_t j = 0; j < t.dim(); ++j)
      best = norm_max(best, t.at(i, j).norm());
  return best;
}

NormValue op_norm_interior(const OperatorMatrix& t) {
  const Window& w = t.window();
  NormValue best =
      t.at(w.interior_begin(), w.interior_begin()).norm();
  for (size_t i = w.interior_begin(); i < w.interior_end(); ++i)
    for (size_t j = w.interior_begin(); j < w.interior_end(); ++j)
      best = norm_max(best, t.at(i, j).norm());
  return best;
}

OperatorMatrix adjoint(const OperatorMatrix& t) {
  OperatorMatrix out(t.window(), t.prime(), t.precision());
  for (size_t i = 0; i < t.dim(); ++i)
    for (size_t j = 0; j < t.dim(); ++j) out.set(j, i, t.at(i, j));
  return out;
}

OperatorMatrix compose(const OperatorMatrix& s, const OperatorMatrix& t) {
  if (!(s.window() == t.window()))
    throw padic_error(errc::window_mismatch, "composition windows differ");
  OperatorMatrix out(s.window(), s.prime(), s.precision());
  for (size_t i = 0; i < s.dim(); ++i) {
    for (size_t j = 0; j < s.dim(); ++j) {
      // Below-precision factors never contribute digits; fold only their
      // precision floors, so sparse matrices compose cheaply.
      PadicScalar acc = PadicScalar::zero(s.prime(), s.precision());
      bool have_floor = false;
      long floor = 0;
      for (size_t k = 0; k < s.dim(); ++k) {
        const PadicScalar& a = s.at(i, k);
        const PadicScalar& b = t.at(k, j);
        if (a.below_precision() || b.below_precision()) {
          long fa = a.below_precision() ? a.precision_floor() : a.valuation();
          long fb = b.below_precision() ? b.precision_floor() : b.valuation();
          floor = have_floor ? std::min(floor, fa + fb) : fa + fb;
          have_floor = true;
          continue;
        }
        acc = acc + a * b;
      }
      if (have_floor)
        acc = acc + PadicScalar::below(s.prime(), s.precision(), floor);
      out.set(i, j, acc);
    }
  }
  return out;
}

PadicVector apply(const OperatorMatrix& t, const PadicVector& xi) {
  if (!(t.window() == xi.window()))
    throw padic_error(errc::window_mismatch, "apply windows differ");
  PadicVector out(t.window(), t.prime(), t.precision());
  for (size_t i = 0; i < t.dim(); ++i) {
    PadicScalar acc = PadicScalar::zero(t.prime(), t.precision());
    for (size_t j = 0; j < t.dim(); ++j) acc = acc + t.at(i, j) * xi[j];
    out[i] = acc;
  }
  return out;
}

OperatorMatrix kronecker(const OperatorMatrix& s, const OperatorMatrix& t) {
  if (s.prime() != t.prime() || s.precision() != t.precision())
    throw padic_error(errc::prime_mismatch, "kronecker context mismatch");
  if (!s.is_contractive() || !t.is_contractive())
    throw padic_error(errc::bad_input,
                      "tensor product requires contractive factors");
  std::vector<std::string> labels;
  labels.reserve(s.dim() * t.dim());
  for (const auto& a : s.window().labels())
    for (const auto& b : t.window().labels()) labels.push_back(a + "|" + b);
  OperatorMatrix out(Window(std::move(labels)), s.prime(), s.precision());
  size_t dt = t.dim();
  for (size_t i = 0; i < s.dim(); ++i)
    for (size_t j = 0; j < s.dim(); ++j)
      for (size_t k = 0; k < dt; ++k)
        for (size_t l = 0; l < dt; ++l)
          out.set(i * dt + k, j * dt + l, s.at(i, j) * t.at(k, l));
  return out;
}

OperatorClass classify(const OperatorMatrix& t) {
  if (!t.is_contractive())
    throw padic_error(errc::bad_input, "classify requires a contraction");
  OperatorMatrix star = adjoint(t);
  OperatorMatrix st = compose(star, t);
  OperatorMatrix ts = compose(t, star);
  OperatorMatrix id =
      OperatorMatrix::identity(t.window(), t.prime(), t.precision());
  OperatorClass c;
  c.self_adjoint = t.congruent_on_interior(star);
  c.isometry = st.congruent_on_interior(id);
  c.co_isometry = ts.congruent_on_interior(id);
  c.unitary = c.isometry && c.co_isometry;
  c.partial_isometry = compose(ts, t).congruent_on_interior(t);
  c.projection = c.self_adjoint && compose(t, t).congruent_on_interior(t);
  return c;
}

CstarReport cstar_defect(const OperatorMatrix& t) {
  if (!t.is_contractive())
    throw padic_error(errc::bad_input, "cstar_defect requires a contraction");
  NormValue n = op_norm(t);
  NormValue nsq = norm_mul(n, n);
  NormValue nst = op_norm(compose(adjoint(t), t));
  bool holds = nsq.is_exact() && nst.is_exact() && nsq.exponent == nst.exponent;
  return {nsq, nst, holds};
}

OperatorMatrix shift_operator(const Window& w, ShiftDirection dir, long p,
                              int prec) {
  OperatorMatrix out(w, p, prec);
  PadicScalar one = PadicScalar::from_integer(1, p, prec);
  for (size_t k = 0; k + 1 < w.size(); ++k) {
    if (dir == ShiftDirection::right)
      out.set(k + 1, k, one);
    else
      out.set(k, k + 1, one);
  }
  return out;
}

Window cuntz_window(unsigned n, size_t window_size) {
  size_t interior = cuntz_interior_size(n, window_size);
  std::vector<std::string> labels;
  labels.reserve(window_size);
  for (size_t k = 0; k < window_size; ++k) labels.push_back(std::to_string(k));
  return Window(std::move(labels), 0, window_size - interior);
}

size_t cuntz_interior_size(unsigned n, size_t window_size) {
  if (n < 2) throw padic_error(errc::bad_input, "cuntz family needs n >= 2");
  size_t interior = window_size / n;
  if (interior == 0)
    throw padic_error(errc::bad_input, "window too small for a cuntz family");
  return interior;
}

std::vector<OperatorMatrix> cuntz_family(unsigned n, size_t window_size, long p,
                                         int prec) {
  Window w = cuntz_window(n, window_size);
  PadicScalar one = PadicScalar::from_integer(1, p, prec);
  std::vector<OperatorMatrix> family;
  family.reserve(n);
  for (unsigned i = 1; i <= n; ++i) {
    OperatorMatrix s(w, p, prec);
    for (size_t k = 0; k < window_size; ++k) {
      size_t target = n * k + i - 1;
      if (target < window_size) s.set(target, k, one);
    }
    family.push_back(std::move(s));
  }
  return family;
}

OperatorMatrix partial_bijection_operator(
    const Window& w, const std::map<std::string, std::string>& f, long p,
    int prec) {
  std::map<std::string, std::string> seen;
  for (const auto& [x, fx] : f) {
    if (!w.has_label(x) || !w.has_label(fx))
      throw padic_error(errc::bad_input, "partial map leaves the window");
    auto [it, fresh] = seen.emplace(fx, x);
    if (!fresh)
      throw padic_error(errc::bad_input, "partial map is not injective");
  }
  OperatorMatrix out(w, p, prec);
  PadicScalar one = PadicScalar::from_integer(1, p, prec);
  for (const auto& [x, fx] : f) out.set(w.index_of(fx), w.index_of(x), one);
  return out;
}

NormalContractionResult normal_contraction_check(const OperatorMatrix& a,
                                                 unsigned n_max) {
  if (!a.is_contractive())
    throw padic_error(errc::bad_input, "normal contraction check on a contraction");
  long p = a.prime();
  int prec = a.precision();
  OperatorMatrix id = OperatorMatrix::identity(a.window(), p, prec);
  OperatorMatrix prod = a;
  for (unsigned n = 1; n <= n_max; ++n) {
    if (n > 1) {
      PadicScalar shift = PadicScalar::from_integer(static_cast<long>(n - 1),
                                                    p, prec);
      prod = compose(prod, a - id.scaled(shift));
    }
    long threshold = factorial_valuation(n, p);
    if (op_norm(prod).exponent < threshold)
      return {false, n};
  }
  return {true, std::nullopt};
}

OperatorMatrix mahler_evaluate(const std::vector<PadicScalar>& coeffs,
                               const OperatorMatrix& a, unsigned n_max) {
  long p = a.prime();
  int prec = a.precision();
  if (coeffs.empty()) return OperatorMatrix::zero(a.window(), p, prec);
  unsigned top =
      std::min<unsigned>(n_max, static_cast<unsigned>(coeffs.size() - 1));
  auto check = normal_contraction_check(a, top);
  if (!check.ok)
    throw padic_error(errc::not_normal_contraction,
                      "operator fails the normal contraction bound");
  OperatorMatrix id = OperatorMatrix::identity(a.window(), p, prec);
  OperatorMatrix acc(a.window(), p, prec);
  OperatorMatrix binom = id;  // binom(A, 0)
  for (unsigned n = 0; n <= top; ++n) {
    if (n > 0) {
      PadicScalar shift = PadicScalar::from_integer(static_cast<long>(n - 1),
                                                    p, prec);
      OperatorMatrix next = compose(binom, a - id.scaled(shift));
      // binom(A, n) = binom(A, n-1)(A-(n-1))/n; divisibility is guaranteed
      // for normal contractions.
      OperatorMatrix divided(a.window(), p, prec);
      for (size_t i = 0; i < next.dim(); ++i)
        for (size_t j = 0; j < next.dim(); ++j)
          divided.set(i, j, next.at(i, j).divexact(mpz_class(n)));
      binom = std::move(divided);
    }
    acc = acc + binom.scaled(coeffs[n]);
  }
  return acc;
}

}  // namespace padic
