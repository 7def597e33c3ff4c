#include "polyparam/var_space.hpp"

#include <set>
#include <stdexcept>

namespace polyparam::poly {

VarSpacePtr VarSpace::make(std::vector<std::string> clocks,
                           std::vector<std::string> params) {
  std::vector<std::string> names = std::move(clocks);
  size_t clock_count = names.size();
  names.insert(names.end(), params.begin(), params.end());
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate variable name: " + n);
  }
  return VarSpacePtr(new VarSpace(std::move(names), clock_count));
}

std::optional<size_t> VarSpace::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

VarSpacePtr VarSpace::param_space() const {
  return make({}, std::vector<std::string>(names_.begin() + clock_count_,
                                           names_.end()));
}

bool VarSpace::same(const VarSpace& other) const {
  return clock_count_ == other.clock_count_ && names_ == other.names_;
}

}  // namespace polyparam::poly
