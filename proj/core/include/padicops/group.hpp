#pragma once

#include <vector>

#include "padicops/scalar.hpp"

namespace padic {

// Finite group given by an explicit multiplication table. Axioms are
// verified on construction.
class FiniteGroup {
public:
  // table[g][h] = index of gh.
  FiniteGroup(std::vector<std::string> elements,
              std::vector<std::vector<size_t>> table);

  static FiniteGroup cyclic(size_t n);
  static FiniteGroup dihedral(size_t n);  // order 2n
  static FiniteGroup quaternion8();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  size_t order() const { return elements_.size(); }
  size_t mul(size_t g, size_t h) const { return table_[g][h]; }
  size_t inv(size_t g) const { return inverse_[g]; }
  size_t identity() const { return identity_; }
  const std::string& label(size_t g) const { return elements_[g]; }
  const std::vector<std::string>& labels() const { return elements_; }
  size_t index_of(const std::string& label) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.elements_ == b.elements_ && a.table_ == b.table_;
  }

private:
  std::vector<std::string> elements_;
  std::vector<std::vector<size_t>> table_;
  size_t identity_ = 0;
  std::vector<size_t> inverse_;
};

// Normalized 2-cocycle with values in Z_p^x; both the normalization and
// the cocycle identity are checked exhaustively.
class Cocycle {
public:
  Cocycle(FiniteGroup group, std::vector<std::vector<PadicScalar>> values);
  static Cocycle trivial(const FiniteGroup& g, long p, int prec);

  const FiniteGroup& group() const { return group_; }
  const PadicScalar& at(size_t g, size_t h) const { return values_[g][h]; }
  long prime() const { return values_[0][0].prime(); }
  int precision() const { return values_[0][0].precision(); }

private:
  FiniteGroup group_;
  std::vector<std::vector<PadicScalar>> values_;
};

// Action of a finite group on a finite point set by bijections.
class GroupAction {
public:
  // perms[g][x] = index of g.x.
  GroupAction(FiniteGroup group, std::vector<std::string> space,
              std::vector<std::vector<size_t>> perms);

  static GroupAction trivial(const FiniteGroup& g,
                             std::vector<std::string> space);

  const FiniteGroup& group() const { return group_; }
  const std::vector<std::string>& space() const { return space_; }
  size_t act(size_t g, size_t x) const { return perms_[g][x]; }

  friend bool operator==(const GroupAction& a, const GroupAction& b) {
    return a.group_ == b.group_ && a.space_ == b.space_ && a.perms_ == b.perms_;
  }

private:
  FiniteGroup group_;
  std::vector<std::string> space_;
  std::vector<std::vector<size_t>> perms_;
};

}  // namespace padic
