#include "teamlogic/team.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace teamlogic {

namespace {

std::size_t word_count(std::size_t num_vars) {
  return num_vars <= 6 ? 1 : (std::size_t{1} << (num_vars - 6));
}

std::uint64_t tail_mask(std::size_t num_vars) {
  return num_vars >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << num_vars)) - 1;
}

}  // namespace

Scope::Scope(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) {
      throw ScopeMismatch("duplicate variable in scope: " + names_[i]);
    }
  }
}

std::optional<std::size_t> Scope::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Scope Scope::merged(const Scope& other) const { return merged(other.names()); }

Scope Scope::merged(std::span<const std::string> names) const {
  std::vector<std::string> out = names_;
  for (const std::string& n : names) {
    if (!contains(n) && std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  }
  return Scope(std::move(out));
}

Valuation::Valuation(std::size_t num_vars, std::uint64_t code) : num_vars_(num_vars), code_(code) {
  if (num_vars > 32 || (num_vars < 64 && (code >> num_vars) != 0)) {
    throw std::invalid_argument("valuation code out of range");
  }
}

std::string Valuation::to_string() const {
  std::string out(num_vars_, '0');
  for (std::size_t i = 0; i < num_vars_; ++i) {
    if ((*this)[i]) out[i] = '1';
  }
  return out;
}

Valuation Valuation::parse(std::string_view bits) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      code |= std::uint64_t{1} << i;
    } else if (bits[i] != '0') {
      throw std::invalid_argument("valuation must be a string of 0/1, got '" + std::string(bits) + "'");
    }
  }
  return Valuation(bits.size(), code);
}

Team::Team(std::size_t num_vars) : num_vars_(num_vars), words_(word_count(num_vars), 0) {
  if (num_vars > 30) throw ScopeCapExceeded(num_vars, 30, "team");
}

Team Team::full(std::size_t num_vars) {
  Team t(num_vars);
  std::fill(t.words_.begin(), t.words_.end(), ~std::uint64_t{0});
  t.words_.back() &= tail_mask(num_vars);
  return t;
}

Team Team::singleton(const Valuation& v) {
  Team t(v.num_vars());
  t.insert(v.code());
  return t;
}

Team Team::from_word(std::size_t num_vars, std::uint64_t bits) {
  if (num_vars > 6) throw std::invalid_argument("from_word needs at most 6 variables");
  Team t(num_vars);
  t.words_[0] = bits & tail_mask(num_vars);
  return t;
}

Team Team::from_codes(std::size_t num_vars, std::span<const std::uint64_t> codes) {
  Team t(num_vars);
  for (std::uint64_t c : codes) {
    if (c >= t.universe()) throw std::invalid_argument("valuation code out of range");
    t.insert(c);
  }
  return t;
}

std::size_t Team::size() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Team::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<std::uint64_t> Team::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * 64 + static_cast<std::uint64_t>(std::countr_zero(words_[i]));
  }
  return std::nullopt;
}

std::vector<std::uint64_t> Team::members() const {
  std::vector<std::uint64_t> out;
  out.reserve(size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(i * 64 + static_cast<std::uint64_t>(std::countr_zero(w)));
    }
  }
  return out;
}

void Team::require_same_space(const Team& other) const {
  if (num_vars_ != other.num_vars_) {
    throw ScopeMismatch("teams over scopes of different sizes (" + std::to_string(num_vars_) +
                        " vs " + std::to_string(other.num_vars_) + ")");
  }
}

bool Team::subset_of(const Team& other) const noexcept {
  if (num_vars_ != other.num_vars_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

Team& Team::operator|=(const Team& other) noexcept {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Team& Team::operator&=(const Team& other) noexcept {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Team& Team::operator-=(const Team& other) noexcept {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Team Team::operator|(const Team& other) const {
  require_same_space(other);
  Team t = *this;
  return t |= other;
}

Team Team::operator&(const Team& other) const {
  require_same_space(other);
  Team t = *this;
  return t &= other;
}

Team Team::operator-(const Team& other) const {
  require_same_space(other);
  Team t = *this;
  return t -= other;
}

Team Team::complement() const { return full(num_vars_) - *this; }

std::vector<std::string> Team::member_strings() const {
  std::vector<std::string> out;
  for (std::uint64_t c : members()) out.push_back(Valuation(num_vars_, c).to_string());
  return out;
}

std::string Team::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const std::string& m : member_strings()) {
    if (!first) out += ", ";
    first = false;
    out += m;
  }
  return out + "}";
}

Team Team::from_strings(std::span<const std::string> members, std::size_t num_vars) {
  Team t(num_vars);
  for (const std::string& m : members) {
    if (m.size() != num_vars) {
      throw ScopeMismatch("valuation '" + m + "' does not have " + std::to_string(num_vars) + " bits");
    }
    t.insert(Valuation::parse(m).code());
  }
  return t;
}

Team Team::parse(std::string_view literal, std::size_t num_vars) {
  std::size_t b = 0;
  std::size_t e = literal.size();
  while (b < e && std::isspace(static_cast<unsigned char>(literal[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(literal[e - 1]))) --e;
  if (e - b < 2 || literal[b] != '{' || literal[e - 1] != '}') {
    throw std::invalid_argument("team literal must look like {10, 01}: '" + std::string(literal) + "'");
  }
  std::vector<std::string> members;
  std::string current;
  for (std::size_t i = b + 1; i + 1 < e; ++i) {
    const char c = literal[i];
    if (c == ',') {
      if (current.empty()) throw std::invalid_argument("empty valuation in team literal");
      members.push_back(std::move(current));
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  if (!current.empty()) {
    members.push_back(std::move(current));
  } else if (!members.empty()) {
    throw std::invalid_argument("trailing comma in team literal");
  }
  return from_strings(members, num_vars);
}

std::size_t Team::hash() const noexcept {
  std::size_t h = num_vars_;
  for (std::uint64_t w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::strong_ordering operator<=>(const Team& a, const Team& b) noexcept {
  if (auto c = a.num_vars_ <=> b.num_vars_; c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

TeamFamily::TeamFamily(Scope scope, std::vector<Team> teams)
    : scope_(std::move(scope)), teams_(std::move(teams)) {
  for (const Team& t : teams_) {
    if (t.num_vars() != scope_.size()) throw ScopeMismatch("team does not match family scope");
  }
  std::sort(teams_.begin(), teams_.end());
  teams_.erase(std::unique(teams_.begin(), teams_.end()), teams_.end());
}

bool TeamFamily::contains(const Team& t) const {
  return std::binary_search(teams_.begin(), teams_.end(), t);
}

bool TeamFamily::downward_closed() const {
  for (const Team& t : teams_) {
    for (std::uint64_t c : t.members()) {
      Team smaller = t;
      smaller.erase(c);
      if (!contains(smaller)) return false;
    }
  }
  return true;
}

}  // namespace teamlogic
