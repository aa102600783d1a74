#include "padicops/ktheory.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "padicops/scalar.hpp"

namespace padic {

IntMatrix::IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols) {
  data_.assign(rows * cols, 0);
}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw padic_error(errc::bad_input, "matrix shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) += at(i, k) * rhs.at(k, j);
    }
  return out;
}

mpz_class IntMatrix::det() const {
  if (rows_ != cols_)
    throw padic_error(errc::bad_input, "determinant of a non-square matrix");
  // Bareiss fraction-free elimination.
  IntMatrix a = *this;
  size_t n = rows_;
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      size_t swap = k + 1;
      while (swap < n && a.at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        mpz_class t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : mpz_class(-a.at(n - 1, n - 1));
}

namespace {

struct SnfState {
  IntMatrix a, u, v;
};

void swap_rows(SnfState& s, size_t i, size_t j) {
  for (size_t c = 0; c < s.a.cols(); ++c) std::swap(s.a.at(i, c), s.a.at(j, c));
  for (size_t c = 0; c < s.u.cols(); ++c) std::swap(s.u.at(i, c), s.u.at(j, c));
}

void swap_cols(SnfState& s, size_t i, size_t j) {
  for (size_t r = 0; r < s.a.rows(); ++r) std::swap(s.a.at(r, i), s.a.at(r, j));
  for (size_t r = 0; r < s.v.rows(); ++r) std::swap(s.v.at(r, i), s.v.at(r, j));
}

// row_i -= q * row_t
void row_op(SnfState& s, size_t i, size_t t, const mpz_class& q) {
  for (size_t c = 0; c < s.a.cols(); ++c) s.a.at(i, c) -= q * s.a.at(t, c);
  for (size_t c = 0; c < s.u.cols(); ++c) s.u.at(i, c) -= q * s.u.at(t, c);
}

// col_j -= q * col_t
void col_op(SnfState& s, size_t j, size_t t, const mpz_class& q) {
  for (size_t r = 0; r < s.a.rows(); ++r) s.a.at(r, j) -= q * s.a.at(r, t);
  for (size_t r = 0; r < s.v.rows(); ++r) s.v.at(r, j) -= q * s.v.at(r, t);
}

void negate_row(SnfState& s, size_t i) {
  for (size_t c = 0; c < s.a.cols(); ++c) s.a.at(i, c) = -s.a.at(i, c);
  for (size_t c = 0; c < s.u.cols(); ++c) s.u.at(i, c) = -s.u.at(i, c);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SnfState s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  size_t rank_bound = std::min(m.rows(), m.cols());
  for (size_t t = 0; t < rank_bound; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing submatrix as pivot.
      size_t pi = t, pj = t;
      bool found = false;
      mpz_class best;
      for (size_t i = t; i < s.a.rows(); ++i)
        for (size_t j = t; j < s.a.cols(); ++j) {
          if (s.a.at(i, j) == 0) continue;
          mpz_class v = abs(s.a.at(i, j));
          if (!found || v < best) {
            best = v;
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) {
        t = rank_bound;  // remaining submatrix is zero
        break;
      }
      if (pi != t) swap_rows(s, pi, t);
      if (pj != t) swap_cols(s, pj, t);
      bool dirty = false;
      for (size_t i = t + 1; i < s.a.rows(); ++i) {
        if (s.a.at(i, t) == 0) continue;
        mpz_class q = s.a.at(i, t) / s.a.at(t, t);
        row_op(s, i, t, q);
        if (s.a.at(i, t) != 0) dirty = true;
      }
      for (size_t j = t + 1; j < s.a.cols(); ++j) {
        if (s.a.at(t, j) == 0) continue;
        mpz_class q = s.a.at(t, j) / s.a.at(t, t);
        col_op(s, j, t, q);
        if (s.a.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // Enforce the divisibility chain: the pivot must divide every entry
      // of the trailing submatrix.
      bool chain_ok = true;
      for (size_t i = t + 1; i < s.a.rows() && chain_ok; ++i)
        for (size_t j = t + 1; j < s.a.cols() && chain_ok; ++j)
          if (s.a.at(i, j) % s.a.at(t, t) != 0) {
            row_op(s, t, i, mpz_class(-1));  // row_t += row_i
            chain_ok = false;
          }
      if (chain_ok) break;
    }
    if (t >= rank_bound) break;
    if (s.a.at(t, t) < 0) negate_row(s, t);
  }
  return {s.a, s.u, s.v};
}

FinGenAbGroup FinGenAbGroup::cyclic(const mpz_class& n) {
  mpz_class d = abs(n);
  if (d == 0) return free_group(1);
  if (d == 1) return trivial();
  return {0, {d}};
}

mpz_class FinGenAbGroup::torsion_order() const {
  mpz_class o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

std::string FinGenAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (free_rank == 1) {
    sep();
    os << "Z";
  } else if (free_rank > 1) {
    sep();
    os << "Z^" << free_rank;
  }
  for (const auto& d : invariant_factors) {
    sep();
    os << "Z/" << d.get_str();
  }
  return os.str();
}

FinGenAbGroup normalize_cyclic_sum(const std::vector<mpz_class>& orders) {
  size_t rank = 0;
  std::vector<mpz_class> torsion;
  for (const auto& c : orders) {
    mpz_class d = abs(c);
    if (d == 0)
      ++rank;
    else if (d > 1)
      torsion.push_back(d);
  }
  // Renormalize the torsion part through the SNF of a diagonal relation
  // matrix.
  if (torsion.size() > 1) {
    IntMatrix rel(torsion.size(), torsion.size());
    for (size_t i = 0; i < torsion.size(); ++i) rel.at(i, i) = torsion[i];
    SmithResult snf = smith_normal_form(rel);
    torsion.clear();
    for (size_t i = 0; i < rel.rows(); ++i)
      if (snf.d.at(i, i) > 1) torsion.push_back(snf.d.at(i, i));
  }
  return {rank, torsion};
}

FinGenAbGroup direct_sum(const FinGenAbGroup& a, const FinGenAbGroup& b) {
  std::vector<mpz_class> orders;
  orders.insert(orders.end(), a.invariant_factors.begin(),
                a.invariant_factors.end());
  orders.insert(orders.end(), b.invariant_factors.begin(),
                b.invariant_factors.end());
  FinGenAbGroup out = normalize_cyclic_sum(orders);
  out.free_rank = a.free_rank + b.free_rank;
  return out;
}

FinGenAbGroup quillen_k(long m, long p) {
  if (!is_prime(p)) throw padic_error(errc::bad_input, "p must be prime");
  if (m < 0) return FinGenAbGroup::trivial();
  if (m == 0) return FinGenAbGroup::free_group(1);
  if (m % 2 == 0) return FinGenAbGroup::trivial();
  long i = (m + 1) / 2;
  mpz_class order = pow_p(p, i) - 1;
  return FinGenAbGroup::cyclic(order);
}

KernelCokernel map_on_k(const IntMatrix& n, long m, long p) {
  FinGenAbGroup g = quillen_k(m, p);
  if (g.is_trivial()) return {FinGenAbGroup::trivial(), FinGenAbGroup::trivial()};
  SmithResult snf = smith_normal_form(n);
  size_t rank_bound = std::min(n.rows(), n.cols());
  if (g.free_rank == 1) {
    // Copies of Z.
    size_t r = 0;
    std::vector<mpz_class> torsion;
    for (size_t i = 0; i < rank_bound; ++i)
      if (snf.d.at(i, i) != 0) {
        ++r;
        torsion.push_back(snf.d.at(i, i));
      }
    FinGenAbGroup coker = normalize_cyclic_sum(torsion);
    coker.free_rank = n.rows() - r;
    return {FinGenAbGroup::free_group(n.cols() - r), coker};
  }
  // Copies of Z/d: both kernel and cokernel are sums of Z/gcd(d_i, d).
  mpz_class d = g.invariant_factors[0];
  auto gcd_part = [&](size_t count) {
    std::vector<mpz_class> orders;
    for (size_t i = 0; i < count; ++i) {
      mpz_class di = i < rank_bound ? snf.d.at(i, i) : mpz_class(0);
      mpz_class gi;
      mpz_gcd(gi.get_mpz_t(), di.get_mpz_t(), d.get_mpz_t());
      orders.push_back(gi);
    }
    return normalize_cyclic_sum(orders);
  };
  return {gcd_part(n.cols()), gcd_part(n.rows())};
}

std::vector<size_t> Graph::regular_vertices() const {
  std::vector<size_t> reg;
  for (size_t v = 0; v < vertices.size(); ++v) {
    for (const auto& e : edges)
      if (e.source == vertices[v]) {
        reg.push_back(v);
        break;
      }
  }
  return reg;
}

size_t Graph::vertex_index(const std::string& v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end())
    throw padic_error(errc::bad_input, "unknown vertex: " + v);
  return static_cast<size_t>(it - vertices.begin());
}

Graph Graph::rose(unsigned n) {
  Graph g;
  g.vertices = {"v"};
  for (unsigned i = 0; i < n; ++i)
    g.edges.push_back({"e" + std::to_string(i), "v", "v"});
  return g;
}

IntMatrix graph_incidence(const Graph& e) {
  for (const auto& ed : e.edges) {
    e.vertex_index(ed.source);
    e.vertex_index(ed.range);
  }
  std::vector<size_t> reg = e.regular_vertices();
  IntMatrix n(e.vertices.size(), reg.size());
  for (size_t col = 0; col < reg.size(); ++col) {
    size_t w = reg[col];
    for (size_t v = 0; v < e.vertices.size(); ++v) {
      long count = 0;
      for (const auto& ed : e.edges)
        if (ed.source == e.vertices[w] && ed.range == e.vertices[v]) ++count;
      n.at(v, col) = (v == w ? 1 : 0) - count;
    }
  }
  return n;
}

ExtensionData graph_kh(const Graph& e, long p, long m) {
  IntMatrix n = graph_incidence(e);
  ExtensionData out;
  out.sub = map_on_k(n, m, p).cokernel;
  out.quot = map_on_k(n, m - 1, p).kernel;
  if (out.quot.is_trivial())
    out.resolved = out.sub;
  else if (out.sub.is_trivial())
    out.resolved = out.quot;
  else
    out.notes.push_back("extension of nontrivial pieces left unresolved");
  return out;
}

FinGenAbGroup cuntz_kh(unsigned n, long p, long m) {
  if (n < 2) throw padic_error(errc::bad_input, "cuntz algebra needs n >= 2");
  if (m < 0) return FinGenAbGroup::trivial();
  if (m == 0) return FinGenAbGroup::cyclic(n - 1);
  long i = m % 2 == 0 ? m / 2 : (m + 1) / 2;
  mpz_class order = pow_p(p, i) - 1;
  mpz_class g;
  mpz_class n1 = n - 1;
  mpz_gcd(g.get_mpz_t(), order.get_mpz_t(), n1.get_mpz_t());
  return FinGenAbGroup::cyclic(g);
}

FinGenAbGroup laurent_kh(long p, long m) {
  if (!is_prime(p)) throw padic_error(errc::bad_input, "p must be prime");
  if (m < 0) return FinGenAbGroup::trivial();
  if (m == 0) return FinGenAbGroup::free_group(1);
  if (m == 1)
    return direct_sum(FinGenAbGroup::free_group(1),
                      FinGenAbGroup::cyclic(p - 1));
  return FinGenAbGroup::cyclic(p - 1);
}

long unit_order_mod_p(long lambda, long p) {
  long l = lambda % p;
  if (l < 0) l += p;
  if (l == 0)
    throw padic_error(errc::not_a_unit, "lambda must be a unit mod p");
  long k = 1;
  long acc = l;
  while (acc != 1) {
    acc = (acc * l) % p;
    ++k;
  }
  return k;
}

RotationKh rotation_kh(long lambda, long p, long n) {
  if (!is_prime(p)) throw padic_error(errc::bad_input, "p must be prime");
  long k = unit_order_mod_p(lambda, p);
  RotationKh out;
  out.degree = n;
  ExtensionData& c = out.c_lambda;
  if (n < 0) {
    c.resolved = FinGenAbGroup::trivial();
  } else if (n == 0) {
    c.resolved = FinGenAbGroup::free_group(1);
  } else if (n == 1) {
    // F_p^x / <lambda^{-1}>: cyclic of order (p-1)/ord(lambda).
    c.resolved = FinGenAbGroup::cyclic((p - 1) / k);
  } else if (n == 2) {
    c.resolved = FinGenAbGroup::free_group(1);
    out.notes.push_back("free part is k*Z with k = " + std::to_string(k) +
                        " = ord(lambda); every unit mod p is a root of unity, "
                        "so the vanishing branch is unreachable");
  } else if (n % 2 == 0) {
    c.resolved = FinGenAbGroup::trivial();
  } else {
    // Odd n >= 3: extension of K_{n-2}(F_p) by K_n(F_p).
    c.sub = quillen_k(n, p);
    c.quot = quillen_k(n - 2, p);
    if (c.quot.is_trivial())
      c.resolved = c.sub;
    else if (c.sub.is_trivial())
      c.resolved = c.quot;
    else
      c.notes.push_back("boundary map not pinned in this degree; "
                        "extension left unresolved");
  }
  if (c.resolved)
    out.a_lambda = direct_sum(*c.resolved, laurent_kh(p, n));
  // Rational dimensions: torsion never contributes.
  size_t dim = laurent_kh(p, n).free_rank;
  if (c.resolved)
    dim += c.resolved->free_rank;
  out.rational_dim = dim;
  return out;
}

}  // namespace padic
