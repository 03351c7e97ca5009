#pragma once

#include <memory>
#include <string>

#include "nqr/parse.hpp"
#include "nqr/quiver.hpp"

namespace testing {

inline std::shared_ptr<const nqr::Quiver> doubled(const std::string& name) {
  return std::make_shared<const nqr::Quiver>(nqr::builtin_quiver(name)->doubled());
}

inline nqr::Necklace neck(const nqr::Quiver& q, const std::string& text) {
  auto s = nqr::parse_necklace_sum(text, q);
  return s.begin()->first;
}

}  // namespace testing
