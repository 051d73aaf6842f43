#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "teamlogic/parser.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic::testing {

inline Formula F(std::string_view text) { return parse(text); }

inline Scope S(std::vector<std::string> names) { return Scope(std::move(names)); }

inline Team T(std::string_view literal, std::size_t num_vars) { return Team::parse(literal, num_vars); }

inline std::vector<std::string> var_names(std::size_t n) {
  static const char* names[] = {"p", "q", "r", "s", "t", "u"};
  return std::vector<std::string>(names, names + n);
}

}  // namespace teamlogic::testing
