#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "teamlogic/errors.hpp"

namespace teamlogic {

// Ordered list of distinct variables p_1..p_n.
class Scope {
 public:
  Scope() = default;
  explicit Scope(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  // Number of valuations, 2^n.
  std::uint64_t universe() const noexcept { return std::uint64_t{1} << names_.size(); }

  // This scope followed by the variables of `other` not already present.
  Scope merged(const Scope& other) const;
  Scope merged(std::span<const std::string> names) const;

  friend bool operator==(const Scope& a, const Scope& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

// A valuation on an n-variable scope: bit i holds v(p_i).
class Valuation {
 public:
  Valuation(std::size_t num_vars, std::uint64_t code);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::uint64_t code() const noexcept { return code_; }
  bool operator[](std::size_t i) const noexcept { return (code_ >> i) & 1U; }

  // Characters in scope order, '1' for true: "10" is p=1, q=0 over (p, q).
  std::string to_string() const;
  static Valuation parse(std::string_view bits);

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::size_t num_vars_;
  std::uint64_t code_;
};

// A set of valuations over an n-variable scope, stored as a 2^n-bit set
// where bit j stands for the valuation with code j.
class Team {
 public:
  explicit Team(std::size_t num_vars = 0);

  static Team full(std::size_t num_vars);
  static Team singleton(const Valuation& v);
  // Team whose bitset equals `bits`; requires 2^n <= 64.
  static Team from_word(std::size_t num_vars, std::uint64_t bits);
  static Team from_codes(std::size_t num_vars, std::span<const std::uint64_t> codes);

  std::size_t num_vars() const noexcept { return num_vars_; }
  std::uint64_t universe() const noexcept { return std::uint64_t{1} << num_vars_; }

  bool contains(std::uint64_t code) const noexcept {
    return (words_[code >> 6] >> (code & 63)) & 1U;
  }
  bool contains(const Valuation& v) const noexcept { return contains(v.code()); }
  void insert(std::uint64_t code) noexcept { words_[code >> 6] |= std::uint64_t{1} << (code & 63); }
  void erase(std::uint64_t code) noexcept { words_[code >> 6] &= ~(std::uint64_t{1} << (code & 63)); }

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  std::optional<std::uint64_t> first() const noexcept;
  std::vector<std::uint64_t> members() const;

  bool subset_of(const Team& other) const noexcept;
  Team operator|(const Team& other) const;
  Team operator&(const Team& other) const;
  Team operator-(const Team& other) const;
  Team complement() const;
  Team& operator|=(const Team& other) noexcept;
  Team& operator&=(const Team& other) noexcept;
  Team& operator-=(const Team& other) noexcept;

  // Only meaningful when 2^n <= 64.
  std::uint64_t word() const noexcept { return words_[0]; }
  std::span<const std::uint64_t> words() const noexcept { return {words_.data(), words_.size()}; }

  // "{10, 01}" in increasing valuation code order; "{}" for the empty team.
  std::string to_string() const;
  std::vector<std::string> member_strings() const;
  static Team parse(std::string_view literal, std::size_t num_vars);
  static Team from_strings(std::span<const std::string> members, std::size_t num_vars);

  std::size_t hash() const noexcept;

  friend bool operator==(const Team& a, const Team& b) noexcept {
    return a.num_vars_ == b.num_vars_ && a.words_ == b.words_;
  }
  // Orders by numeric bitset value (most significant word first).
  friend std::strong_ordering operator<=>(const Team& a, const Team& b) noexcept;

 private:
  void require_same_space(const Team& other) const;

  std::size_t num_vars_;
  boost::container::small_vector<std::uint64_t, 1> words_;
};

struct TeamHash {
  std::size_t operator()(const Team& t) const noexcept { return t.hash(); }
};

// Calls fn(Y) for every subteam Y of `team` (2^|team| calls, the empty team first).
template <class Fn>
void for_each_subteam(const Team& team, Fn&& fn) {
  const std::vector<std::uint64_t> members = team.members();
  if (members.size() >= 63) throw BudgetExceeded("team too large for subteam enumeration");
  const std::uint64_t count = std::uint64_t{1} << members.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Team sub(team.num_vars());
    for (std::size_t i = 0; i < members.size(); ++i) {
      if ((mask >> i) & 1U) sub.insert(members[i]);
    }
    fn(sub);
  }
}

// A set of teams on one scope, kept sorted by bitset value.
class TeamFamily {
 public:
  TeamFamily(Scope scope, std::vector<Team> teams);

  const Scope& scope() const noexcept { return scope_; }
  const std::vector<Team>& teams() const noexcept { return teams_; }
  std::size_t size() const noexcept { return teams_.size(); }
  bool contains(const Team& t) const;
  bool downward_closed() const;

  friend bool operator==(const TeamFamily& a, const TeamFamily& b) {
    return a.scope_ == b.scope_ && a.teams_ == b.teams_;
  }

 private:
  Scope scope_;
  std::vector<Team> teams_;
};

}  // namespace teamlogic
