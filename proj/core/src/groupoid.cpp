#include "padicops/groupoid.hpp"

#include <algorithm>

namespace padic {

FiniteGroupoid::FiniteGroupoid(
    std::vector<std::string> objects, std::vector<std::string> arrows,
    std::vector<size_t> source, std::vector<size_t> range,
    std::vector<size_t> inverse,
    std::map<std::pair<size_t, size_t>, size_t> compose,
    std::vector<size_t> unit_of_object)
    : objects_(std::move(objects)), arrows_(std::move(arrows)),
      source_(std::move(source)), range_(std::move(range)),
      inverse_(std::move(inverse)), compose_(std::move(compose)),
      unit_of_object_(std::move(unit_of_object)) {
  verify();
}

size_t FiniteGroupoid::compose(size_t g, size_t h) const {
  auto it = compose_.find({g, h});
  if (it == compose_.end())
    throw padic_error(errc::bad_input, "arrows are not composable");
  return it->second;
}

bool FiniteGroupoid::is_unit(size_t g) const {
  return unit_of_object_[source_[g]] == g;
}

size_t FiniteGroupoid::arrow_index(const std::string& label) const {
  auto it = std::find(arrows_.begin(), arrows_.end(), label);
  if (it == arrows_.end())
    throw padic_error(errc::bad_input, "not an arrow: " + label);
  return static_cast<size_t>(it - arrows_.begin());
}

void FiniteGroupoid::verify() const {
  size_t no = objects_.size(), na = arrows_.size();
  if (no == 0 || na == 0)
    throw padic_error(errc::bad_input, "groupoid needs objects and arrows");
  if (source_.size() != na || range_.size() != na || inverse_.size() != na ||
      unit_of_object_.size() != no)
    throw padic_error(errc::bad_input, "groupoid tables have wrong shape");
  for (size_t g = 0; g < na; ++g)
    if (source_[g] >= no || range_[g] >= no || inverse_[g] >= na)
      throw padic_error(errc::bad_input, "groupoid table entry out of range");
  // Units.
  for (size_t x = 0; x < no; ++x) {
    size_t u = unit_of_object_[x];
    if (u >= na || source_[u] != x || range_[u] != x)
      throw padic_error(errc::bad_input, "unit arrow has wrong endpoints");
  }
  // Composition defined exactly on composable pairs, with matching
  // endpoints: (gh): s(h) -> r(g).
  for (size_t g = 0; g < na; ++g) {
    for (size_t h = 0; h < na; ++h) {
      auto it = compose_.find({g, h});
      if (composable(g, h)) {
        if (it == compose_.end())
          throw padic_error(errc::bad_input,
                            "composable pair without a composite");
        size_t gh = it->second;
        if (source_[gh] != source_[h] || range_[gh] != range_[g])
          throw padic_error(errc::bad_input, "composite has wrong endpoints");
      } else if (it != compose_.end()) {
        throw padic_error(errc::bad_input,
                          "composite defined for a non-composable pair");
      }
    }
  }
  // Inverses and unit laws.
  for (size_t g = 0; g < na; ++g) {
    size_t gi = inverse_[g];
    if (source_[gi] != range_[g] || range_[gi] != source_[g])
      throw padic_error(errc::bad_input, "inverse has wrong endpoints");
    if (compose_.at({g, gi}) != unit_of_object_[range_[g]] ||
        compose_.at({gi, g}) != unit_of_object_[source_[g]])
      throw padic_error(errc::bad_input, "inverse law fails");
    if (compose_.at({unit_of_object_[range_[g]], g}) != g ||
        compose_.at({g, unit_of_object_[source_[g]]}) != g)
      throw padic_error(errc::bad_input, "unit law fails");
  }
  // Associativity on composable triples.
  for (size_t g = 0; g < na; ++g)
    for (size_t h = 0; h < na; ++h) {
      if (!composable(g, h)) continue;
      for (size_t k = 0; k < na; ++k) {
        if (!composable(h, k)) continue;
        if (compose_.at({compose_.at({g, h}), k}) !=
            compose_.at({g, compose_.at({h, k})}))
          throw padic_error(errc::bad_input, "composition is not associative");
      }
    }
}

FiniteGroupoid FiniteGroupoid::pair_groupoid(
    const std::vector<std::string>& points) {
  size_t n = points.size();
  std::vector<std::string> arrows;
  std::vector<size_t> source, range, inverse, units(n);
  auto id = [n](size_t i, size_t j) { return i * n + j; };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      // Arrow (i, j): j -> i.
      arrows.push_back("(" + points[i] + "," + points[j] + ")");
      source.push_back(j);
      range.push_back(i);
      inverse.push_back(id(j, i));
    }
  for (size_t i = 0; i < n; ++i) units[i] = id(i, i);
  std::map<std::pair<size_t, size_t>, size_t> comp;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        comp[{id(i, j), id(j, k)}] = id(i, k);
  return FiniteGroupoid(points, std::move(arrows), std::move(source),
                        std::move(range), std::move(inverse), std::move(comp),
                        std::move(units));
}

FiniteGroupoid FiniteGroupoid::action_groupoid(const GroupAction& action) {
  const FiniteGroup& grp = action.group();
  size_t nh = grp.order(), nx = action.space().size();
  auto id = [nx](size_t h, size_t x) { return h * nx + x; };
  std::vector<std::string> arrows;
  std::vector<size_t> source, range, inverse, units(nx);
  for (size_t h = 0; h < nh; ++h)
    for (size_t x = 0; x < nx; ++x) {
      // Arrow (h, x): x -> h.x.
      arrows.push_back(grp.label(h) + "|" + action.space()[x]);
      source.push_back(x);
      range.push_back(action.act(h, x));
      inverse.push_back(id(grp.inv(h), action.act(h, x)));
    }
  for (size_t x = 0; x < nx; ++x) units[x] = id(grp.identity(), x);
  std::map<std::pair<size_t, size_t>, size_t> comp;
  for (size_t g = 0; g < nh; ++g)
    for (size_t h = 0; h < nh; ++h)
      for (size_t x = 0; x < nx; ++x) {
        // (g, h.x) o (h, x) = (gh, x)
        comp[{id(g, action.act(h, x)), id(h, x)}] = id(grp.mul(g, h), x);
      }
  return FiniteGroupoid(action.space(), std::move(arrows), std::move(source),
                        std::move(range), std::move(inverse), std::move(comp),
                        std::move(units));
}

FiniteGroupoid FiniteGroupoid::from_group(const FiniteGroup& g) {
  size_t n = g.order();
  std::vector<size_t> source(n, 0), range(n, 0), inverse(n);
  for (size_t i = 0; i < n; ++i) inverse[i] = g.inv(i);
  std::map<std::pair<size_t, size_t>, size_t> comp;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) comp[{a, b}] = g.mul(a, b);
  return FiniteGroupoid({"*"}, g.labels(), std::move(source), std::move(range),
                        std::move(inverse), std::move(comp), {g.identity()});
}

}  // namespace padic
