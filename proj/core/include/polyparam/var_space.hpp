// Variable spaces: an ordered list of clock variables followed by parameters.
// Polyhedra, valuations and constraints are always relative to one space.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polyparam/rational.hpp"

namespace polyparam::poly {

class VarSpace;
using VarSpacePtr = std::shared_ptr<const VarSpace>;

class VarSpace {
 public:
  static VarSpacePtr make(std::vector<std::string> clocks,
                          std::vector<std::string> params);

  size_t dim() const { return names_.size(); }
  size_t clock_count() const { return clock_count_; }
  size_t param_count() const { return names_.size() - clock_count_; }
  bool is_clock(size_t i) const { return i < clock_count_; }
  const std::string& name(size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  // Index of the j-th parameter within the full space.
  size_t param_index(size_t j) const { return clock_count_ + j; }

  std::optional<size_t> index_of(const std::string& name) const;
  VarSpacePtr param_space() const;  // parameters only, same order
  bool same(const VarSpace& other) const;

 private:
  VarSpace(std::vector<std::string> names, size_t clock_count)
      : names_(std::move(names)), clock_count_(clock_count) {}
  std::vector<std::string> names_;
  size_t clock_count_;
};

// A full-dimension point of a space, exact rational coordinates.
struct Valuation {
  VarSpacePtr space;
  std::vector<Rational> values;
};

}  // namespace polyparam::poly
