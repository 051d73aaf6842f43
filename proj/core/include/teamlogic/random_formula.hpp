#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>

#include "teamlogic/formula.hpp"
#include "teamlogic/team.hpp"

namespace teamlogic {

// Seeded generators for property tests and experiments. Depth counts nodes,
// so depth 1 yields atoms only. Outputs always pass validate_fragment.
class FormulaGenerator {
 public:
  FormulaGenerator(Fragment fragment, std::vector<std::string> vars, std::uint64_t seed);

  Formula formula(std::size_t max_depth);
  // Built only from constructors that preserve flatness.
  Formula flat_formula(std::size_t max_depth);
  Team team(std::size_t num_vars);
  std::mt19937_64& rng() noexcept { return rng_; }

  Fragment fragment() const noexcept { return fragment_; }

 private:
  Formula atom();
  Formula variable();
  Formula literal();
  Formula dependence();
  bool chance(double p);
  std::size_t pick(std::size_t n);

  Fragment fragment_;
  std::vector<std::string> vars_;
  std::mt19937_64 rng_;
};

}  // namespace teamlogic
