#pragma once

#include <map>
#include <utility>
#include <vector>

#include "padicops/group.hpp"

namespace padic {

// Finite discrete groupoid by explicit tables. Arrows g: s(g) -> r(g);
// compose(g, h) is defined exactly when s(g) = r(h).
class FiniteGroupoid {
public:
  FiniteGroupoid(std::vector<std::string> objects,
                 std::vector<std::string> arrows, std::vector<size_t> source,
                 std::vector<size_t> range, std::vector<size_t> inverse,
                 std::map<std::pair<size_t, size_t>, size_t> compose,
                 std::vector<size_t> unit_of_object);

  static FiniteGroupoid pair_groupoid(const std::vector<std::string>& points);
  static FiniteGroupoid action_groupoid(const GroupAction& action);
  // A group is a groupoid with one object.
  static FiniteGroupoid from_group(const FiniteGroup& g);

  size_t object_count() const { return objects_.size(); }
  size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& arrow_labels() const { return arrows_; }
  const std::string& arrow_label(size_t g) const { return arrows_[g]; }
  const std::string& object_label(size_t x) const { return objects_[x]; }
  size_t source(size_t g) const { return source_[g]; }
  size_t range(size_t g) const { return range_[g]; }
  size_t inv(size_t g) const { return inverse_[g]; }
  bool composable(size_t g, size_t h) const { return source_[g] == range_[h]; }
  size_t compose(size_t g, size_t h) const;
  size_t unit(size_t object) const { return unit_of_object_[object]; }
  bool is_unit(size_t g) const;
  size_t arrow_index(const std::string& label) const;

  friend bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b) {
    return a.objects_ == b.objects_ && a.arrows_ == b.arrows_ &&
           a.source_ == b.source_ && a.range_ == b.range_ &&
           a.compose_ == b.compose_;
  }

private:
  void verify() const;

  std::vector<std::string> objects_;
  std::vector<std::string> arrows_;
  std::vector<size_t> source_;
  std::vector<size_t> range_;
  std::vector<size_t> inverse_;
  std::map<std::pair<size_t, size_t>, size_t> compose_;
  std::vector<size_t> unit_of_object_;
};

}  // namespace padic
