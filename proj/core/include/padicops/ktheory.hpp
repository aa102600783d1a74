#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace padic {

// Integer matrix in exact arithmetic.
class IntMatrix {
public:
  IntMatrix(size_t rows, size_t cols);
  static IntMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  mpz_class& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  mpz_class det() const;  // square matrices, by expansion over SNF-sized inputs

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  size_t rows_, cols_;
  std::vector<mpz_class> data_;
};

struct SmithResult {
  IntMatrix d;  // diagonal, divisibility chain, non-negative
  IntMatrix u;  // unimodular, u * m * v = d
  IntMatrix v;
};
SmithResult smith_normal_form(const IntMatrix& m);

// Finitely generated abelian group: Z^rank + sum Z/d_i with d_1 | d_2 | ...
struct FinGenAbGroup {
  size_t free_rank = 0;
  std::vector<mpz_class> invariant_factors;  // each >= 2

  static FinGenAbGroup trivial() { return {}; }
  static FinGenAbGroup free_group(size_t rank) { return {rank, {}}; }
  static FinGenAbGroup cyclic(const mpz_class& n);

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  // Order of the torsion part.
  mpz_class torsion_order() const;
  std::string to_string() const;

  friend bool operator==(const FinGenAbGroup&, const FinGenAbGroup&) = default;
};

// Canonical invariant-factor form of a direct sum of cyclic groups Z/c_i
// (c_i = 0 meaning Z).
FinGenAbGroup normalize_cyclic_sum(const std::vector<mpz_class>& orders);
FinGenAbGroup direct_sum(const FinGenAbGroup& a, const FinGenAbGroup& b);

// Quillen: K_0 = Z, K_{2i-1} = Z/(p^i - 1), even positive and negative
// degrees vanish.
FinGenAbGroup quillen_k(long m, long p);

// Kernel and cokernel of the map G^cols -> G^rows induced by an integer
// matrix acting diagonally on copies of G = quillen_k(m, p).
struct KernelCokernel {
  FinGenAbGroup kernel;
  FinGenAbGroup cokernel;
};
KernelCokernel map_on_k(const IntMatrix& n, long m, long p);

// Finite directed graph.
struct Graph {
  std::vector<std::string> vertices;
  struct Edge {
    std::string id, source, range;
  };
  std::vector<Edge> edges;

  // Vertices emitting at least one edge.
  std::vector<size_t> regular_vertices() const;
  size_t vertex_index(const std::string& v) const;

  // E_n: one vertex, n loops.
  static Graph rose(unsigned n);
};

// N_E(v, w) = delta_{v,w} - #{e : s(e) = w, r(e) = v}, columns indexed by
// regular vertices.
IntMatrix graph_incidence(const Graph& e);

// 0 -> coker(K_m) -> KH_m -> ker(K_{m-1}) -> 0.
struct ExtensionData {
  FinGenAbGroup sub;   // cokernel piece
  FinGenAbGroup quot;  // kernel piece
  std::optional<FinGenAbGroup> resolved;
  std::vector<std::string> notes;
};
ExtensionData graph_kh(const Graph& e, long p, long m);

// Closed form for the Cuntz algebra O_n: Z/gcd(p^i - 1, n - 1).
FinGenAbGroup cuntz_kh(unsigned n, long p, long m);

// KH of Laurent polynomials over F_p.
FinGenAbGroup laurent_kh(long p, long m);

// Rotation algebra report for one degree.
struct RotationKh {
  long degree;
  ExtensionData c_lambda;       // KH_n(C_lambda)
  std::optional<FinGenAbGroup> a_lambda;  // KH_n(A_lambda) when resolved
  size_t rational_dim;
  std::vector<std::string> notes;
};
// lambda is a unit residue mod p; ord is computed in F_p^x.
RotationKh rotation_kh(long lambda, long p, long n);
long unit_order_mod_p(long lambda, long p);

}  // namespace padic
