#include "padicops/group.hpp"

#include <algorithm>

namespace padic {

FiniteGroup::FiniteGroup(std::vector<std::string> elements,
                         std::vector<std::vector<size_t>> table)
    : elements_(std::move(elements)), table_(std::move(table)) {
  size_t n = elements_.size();
  if (n == 0) throw padic_error(errc::bad_input, "empty group");
  if (table_.size() != n)
    throw padic_error(errc::bad_input, "multiplication table has wrong shape");
  for (const auto& row : table_) {
    if (row.size() != n)
      throw padic_error(errc::bad_input, "multiplication table has wrong shape");
    for (size_t v : row)
      if (v >= n)
        throw padic_error(errc::bad_input, "table entry out of range");
  }
  // Identity.
  bool found = false;
  for (size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (size_t g = 0; g < n; ++g)
      if (table_[e][g] != g || table_[g][e] != g) { ok = false; break; }
    if (ok) { identity_ = e; found = true; }
  }
  if (!found) throw padic_error(errc::bad_input, "group has no identity");
  // Inverses.
  inverse_.assign(n, n);
  for (size_t g = 0; g < n; ++g) {
    for (size_t h = 0; h < n; ++h) {
      if (table_[g][h] == identity_ && table_[h][g] == identity_) {
        inverse_[g] = h;
        break;
      }
    }
    if (inverse_[g] == n)
      throw padic_error(errc::bad_input,
                        "group element without inverse: " + elements_[g]);
  }
  // Associativity.
  for (size_t g = 0; g < n; ++g)
    for (size_t h = 0; h < n; ++h)
      for (size_t k = 0; k < n; ++k)
        if (table_[table_[g][h]][k] != table_[g][table_[h][k]])
          throw padic_error(errc::bad_input, "multiplication is not associative");
}

size_t FiniteGroup::index_of(const std::string& label) const {
  auto it = std::find(elements_.begin(), elements_.end(), label);
  if (it == elements_.end())
    throw padic_error(errc::bad_input, "not a group element: " + label);
  return static_cast<size_t>(it - elements_.begin());
}

FiniteGroup FiniteGroup::cyclic(size_t n) {
  std::vector<std::string> elems;
  std::vector<std::vector<size_t>> table(n, std::vector<size_t>(n));
  for (size_t i = 0; i < n; ++i) {
    elems.push_back("g" + std::to_string(i));
    for (size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FiniteGroup(std::move(elems), std::move(table));
}

FiniteGroup FiniteGroup::dihedral(size_t n) {
  // Elements r^i and s r^i; s r^i * s r^j = r^{j-i}, r^i s r^j = s r^{j-i}.
  size_t order = 2 * n;
  std::vector<std::string> elems(order);
  auto idx = [n](bool flip, size_t rot) { return (flip ? n : 0) + rot; };
  for (size_t i = 0; i < n; ++i) {
    elems[idx(false, i)] = "r" + std::to_string(i);
    elems[idx(true, i)] = "sr" + std::to_string(i);
  }
  std::vector<std::vector<size_t>> table(order, std::vector<size_t>(order));
  for (size_t a = 0; a < order; ++a) {
    bool fa = a >= n;
    size_t ra = a % n;
    for (size_t b = 0; b < order; ++b) {
      bool fb = b >= n;
      size_t rb = b % n;
      // (s^fa r^ra)(s^fb r^rb) = s^{fa^fb} r^{rb + (fb ? n-ra : ra)}
      size_t rot = fb ? (rb + n - ra) % n : (ra + rb) % n;
      table[a][b] = idx(fa != fb, rot);
    }
  }
  return FiniteGroup(std::move(elems), std::move(table));
}

FiniteGroup FiniteGroup::quaternion8() {
  // {1, -1, i, -i, j, -j, k, -k}
  std::vector<std::string> elems = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  auto neg = [](size_t a) { return a ^ 1u; };
  auto base_mul = [&](size_t a, size_t b) -> size_t {
    // Multiplication on {1, i, j, k} (indices 0..3) with the usual
    // anticommutation: i*j=k, j*k=i, k*i=j, squares = -1.
    static const size_t tbl[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    size_t ia = a / 2, ib = b / 2;
    size_t r = tbl[ia][ib] * 2;
    return sg[ia][ib] > 0 ? r : neg(r);
  };
  std::vector<std::vector<size_t>> table(8, std::vector<size_t>(8));
  for (size_t a = 0; a < 8; ++a)
    for (size_t b = 0; b < 8; ++b) {
      size_t r = base_mul(a & ~1u, b & ~1u);
      bool negate = ((a & 1u) != 0) != ((b & 1u) != 0);
      table[a][b] = negate ? neg(r) : r;
    }
  return FiniteGroup(std::move(elems), std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a,
                                        const FiniteGroup& b) {
  size_t na = a.order(), nb = b.order();
  std::vector<std::string> elems;
  elems.reserve(na * nb);
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < nb; ++j)
      elems.push_back(a.label(i) + "|" + b.label(j));
  std::vector<std::vector<size_t>> table(na * nb, std::vector<size_t>(na * nb));
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < nb; ++j)
      for (size_t k = 0; k < na; ++k)
        for (size_t l = 0; l < nb; ++l)
          table[i * nb + j][k * nb + l] = a.mul(i, k) * nb + b.mul(j, l);
  return FiniteGroup(std::move(elems), std::move(table));
}

Cocycle::Cocycle(FiniteGroup group, std::vector<std::vector<PadicScalar>> values)
    : group_(std::move(group)), values_(std::move(values)) {
  size_t n = group_.order();
  if (values_.size() != n)
    throw padic_error(errc::bad_input, "cocycle table has wrong shape");
  for (const auto& row : values_)
    if (row.size() != n)
      throw padic_error(errc::bad_input, "cocycle table has wrong shape");
  for (size_t g = 0; g < n; ++g)
    for (size_t h = 0; h < n; ++h)
      if (!values_[g][h].is_unit())
        throw padic_error(errc::not_a_unit, "cocycle value is not a unit");
  size_t e = group_.identity();
  PadicScalar one = PadicScalar::from_integer(1, prime(), precision());
  for (size_t g = 0; g < n; ++g)
    if (!values_[g][e].congruent(one) || !values_[e][g].congruent(one))
      throw padic_error(errc::bad_input, "cocycle is not normalized");
  for (size_t g = 0; g < n; ++g)
    for (size_t h = 0; h < n; ++h)
      for (size_t k = 0; k < n; ++k) {
        PadicScalar lhs = values_[g][h] * values_[group_.mul(g, h)][k];
        PadicScalar rhs = values_[g][group_.mul(h, k)] * values_[h][k];
        if (!lhs.congruent(rhs))
          throw padic_error(errc::bad_input, "cocycle identity fails");
      }
}

Cocycle Cocycle::trivial(const FiniteGroup& g, long p, int prec) {
  size_t n = g.order();
  std::vector<std::vector<PadicScalar>> values(
      n, std::vector<PadicScalar>(n, PadicScalar::from_integer(1, p, prec)));
  return Cocycle(g, std::move(values));
}

GroupAction::GroupAction(FiniteGroup group, std::vector<std::string> space,
                         std::vector<std::vector<size_t>> perms)
    : group_(std::move(group)), space_(std::move(space)),
      perms_(std::move(perms)) {
  size_t n = group_.order(), m = space_.size();
  if (m == 0) throw padic_error(errc::bad_input, "empty action space");
  if (perms_.size() != n)
    throw padic_error(errc::bad_input, "action table has wrong shape");
  for (const auto& row : perms_) {
    if (row.size() != m)
      throw padic_error(errc::bad_input, "action table has wrong shape");
    std::vector<bool> hit(m, false);
    for (size_t v : row) {
      if (v >= m || hit[v])
        throw padic_error(errc::bad_input, "action is not by bijections");
      hit[v] = true;
    }
  }
  for (size_t x = 0; x < m; ++x)
    if (perms_[group_.identity()][x] != x)
      throw padic_error(errc::bad_input, "identity does not act trivially");
  for (size_t g = 0; g < n; ++g)
    for (size_t h = 0; h < n; ++h)
      for (size_t x = 0; x < m; ++x)
        if (perms_[g][perms_[h][x]] != perms_[group_.mul(g, h)][x])
          throw padic_error(errc::bad_input, "action is not multiplicative");
}

GroupAction GroupAction::trivial(const FiniteGroup& g,
                                 std::vector<std::string> space) {
  std::vector<size_t> id(space.size());
  for (size_t i = 0; i < id.size(); ++i) id[i] = i;
  std::vector<std::vector<size_t>> perms(g.order(), id);
  return GroupAction(g, std::move(space), std::move(perms));
}

}  // namespace padic
