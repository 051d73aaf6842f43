#include "teamlogic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace teamlogic {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

// Binding strength used by the renderer; larger binds tighter.
int precedence(Kind kind) {
  switch (kind) {
    case Kind::Imp: return 1;
    case Kind::Or: return 2;
    case Kind::Tensor: return 3;
    case Kind::And: return 4;
    default: return 5;
  }
}

std::string_view symbol(Kind kind) {
  switch (kind) {
    case Kind::And: return " /\\ ";
    case Kind::Tensor: return " \\/ ";
    case Kind::Or: return " || ";
    case Kind::Imp: return " -> ";
    default: return "";
  }
}

void render_into(const Formula& f, std::string& out);

void render_child(const Formula& child, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(child, out);
  if (parens) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Kind::Var: out += f.name(); return;
    case Kind::Bot: out += "bot"; return;
    case Kind::Top: out += "top"; return;
    case Kind::Neg:
      out += '~';
      render_child(f.operand(), f.operand().is_binary(), out);
      return;
    case Kind::Dep: {
      out += "=(";
      bool first = true;
      for (const Formula& arg : f.children()) {
        if (!first) out += ", ";
        first = false;
        render_into(arg, out);
      }
      out += ')';
      return;
    }
    default: break;
  }
  const int own = precedence(f.kind());
  const bool right_assoc = f.is(Kind::Imp);
  const int lp = precedence(f.lhs().kind());
  const int rp = precedence(f.rhs().kind());
  render_child(f.lhs(), right_assoc ? lp <= own : lp < own, out);
  out += symbol(f.kind());
  render_child(f.rhs(), right_assoc ? rp < own : rp <= own, out);
}

void collect_vars(const Formula& f, std::vector<std::string>& out,
                  std::unordered_set<std::string>& seen) {
  if (f.is(Kind::Var)) {
    if (seen.insert(f.name()).second) out.push_back(f.name());
    return;
  }
  for (const Formula& c : f.children()) collect_vars(c, out, seen);
}

void check_node(const Formula& f, Fragment fragment, std::vector<Violation>& out) {
  switch (f.kind()) {
    case Kind::Var:
    case Kind::Bot:
    case Kind::Top:
      return;
    case Kind::Neg:
      // In PT and InqL ~phi abbreviates phi -> bot; only PD restricts it.
      if (fragment == Fragment::PD && !f.operand().is(Kind::Var)) {
        out.push_back({ViolationKind::NegationNotOnVariable, f,
                       "negation applies only to variables in PD"});
      }
      break;
    case Kind::Dep:
      if (fragment == Fragment::InqL) {
        out.push_back({ViolationKind::DependenceAtomNotInFragment, f,
                       "InqL has no dependence atoms"});
        break;
      }
      for (const Formula& arg : f.children()) {
        if (arg.is(Kind::Var)) continue;
        if (fragment == Fragment::PD || fragment == Fragment::PT) {
          out.push_back({ViolationKind::DependenceArgumentNotVariable, arg,
                         "dependence atom arguments must be variables in " +
                             std::string(to_string(fragment))});
        } else if (fragment == Fragment::XPD) {
          out.push_back({ViolationKind::RequiresSemanticCheck, arg,
                         "XPD dependence atom arguments must be flat"});
        }
      }
      break;
    default:
      if (!has_connective(fragment, f.kind())) {
        out.push_back({ViolationKind::ConnectiveNotInFragment, f,
                       std::string(to_string(f.kind())) + " is not a connective of " +
                           std::string(to_string(fragment))});
      }
      break;
  }
  for (const Formula& c : f.children()) check_node(c, fragment, out);
}

Formula translate(const Formula& f) {
  switch (f.kind()) {
    case Kind::Var: return Formula::neg(f);
    case Kind::Top: return Formula::bot();
    case Kind::Bot: return Formula::top();
    case Kind::Dep: return Formula::bot();
    case Kind::Neg:
      if (f.operand().is(Kind::Var)) return f.operand();
      // (~phi)^~ is (phi^~)^~: phi^~ is equivalent to ~phi and already in
      // the table's domain, so the recursion stays on smaller formulas.
      return translate(translate(f.operand()));
    case Kind::And: return Formula::tensor(translate(f.lhs()), translate(f.rhs()));
    case Kind::Tensor: return Formula::conj(translate(f.lhs()), translate(f.rhs()));
    case Kind::Or:
    case Kind::Imp:
      throw UnsupportedConnective("negation_translate is undefined on " +
                                  std::string(to_string(f.kind())) + " in " + render(f));
  }
  throw UnsupportedConnective("unknown formula kind");
}

}  // namespace

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::Var: return "variable";
    case Kind::Bot: return "bot";
    case Kind::Top: return "top";
    case Kind::Neg: return "negation";
    case Kind::Dep: return "dependence atom";
    case Kind::And: return "conjunction";
    case Kind::Tensor: return "tensor";
    case Kind::Or: return "intuitionistic disjunction";
    case Kind::Imp: return "implication";
  }
  return "?";
}

Formula Formula::make(Kind kind, std::string name, std::vector<Formula> children) {
  Node node{kind, std::move(name), std::move(children)};
  std::size_t h = mix(0, static_cast<std::size_t>(kind));
  if (kind == Kind::Var) h = mix(h, std::hash<std::string>{}(node.name));
  std::size_t depth = 0;
  for (const Formula& c : node.children) {
    h = mix(h, c.hash());
    node.size += c.size();
    depth = std::max(depth, c.depth());
  }
  node.hash = h;
  node.depth = depth + 1;
  return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula Formula::var(std::string name) { return make(Kind::Var, std::move(name), {}); }

Formula Formula::bot() {
  static const Formula instance = make(Kind::Bot, {}, {});
  return instance;
}

Formula Formula::top() {
  static const Formula instance = make(Kind::Top, {}, {});
  return instance;
}

Formula Formula::neg(Formula operand) { return make(Kind::Neg, {}, {std::move(operand)}); }

Formula Formula::dep(std::vector<Formula> antecedents, Formula consequent) {
  antecedents.push_back(std::move(consequent));
  return make(Kind::Dep, {}, std::move(antecedents));
}

Formula Formula::binary(Kind kind, Formula lhs, Formula rhs) {
  if (kind != Kind::And && kind != Kind::Tensor && kind != Kind::Or && kind != Kind::Imp) {
    throw std::invalid_argument("not a binary connective: " + std::string(to_string(kind)));
  }
  return make(kind, {}, {std::move(lhs), std::move(rhs)});
}

Formula Formula::conj(Formula lhs, Formula rhs) { return binary(Kind::And, std::move(lhs), std::move(rhs)); }
Formula Formula::tensor(Formula lhs, Formula rhs) { return binary(Kind::Tensor, std::move(lhs), std::move(rhs)); }
Formula Formula::disj(Formula lhs, Formula rhs) { return binary(Kind::Or, std::move(lhs), std::move(rhs)); }
Formula Formula::imp(Formula lhs, Formula rhs) { return binary(Kind::Imp, std::move(lhs), std::move(rhs)); }

bool Formula::is_binary() const noexcept {
  switch (kind()) {
    case Kind::And:
    case Kind::Tensor:
    case Kind::Or:
    case Kind::Imp:
      return true;
    default:
      return false;
  }
}

const std::string& Formula::name() const {
  if (!is(Kind::Var)) throw std::logic_error("name() on a non-variable formula");
  return node_->name;
}

const Formula& Formula::operand() const {
  if (!is(Kind::Neg)) throw std::logic_error("operand() on a non-negation");
  return node_->children[0];
}

const Formula& Formula::lhs() const {
  if (!is_binary()) throw std::logic_error("lhs() on a non-binary formula");
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (!is_binary()) throw std::logic_error("rhs() on a non-binary formula");
  return node_->children[1];
}

std::span<const Formula> Formula::antecedents() const {
  if (!is(Kind::Dep)) throw std::logic_error("antecedents() on a non-dependence atom");
  return std::span<const Formula>(node_->children).first(node_->children.size() - 1);
}

const Formula& Formula::consequent() const {
  if (!is(Kind::Dep)) throw std::logic_error("consequent() on a non-dependence atom");
  return node_->children.back();
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
  if (a.is(Kind::Var)) return a.node_->name == b.node_->name;
  return std::equal(a.node_->children.begin(), a.node_->children.end(),
                    b.node_->children.begin(), b.node_->children.end());
}

namespace {

Formula fold(Kind kind, std::span<const Formula> parts, const Formula& empty) {
  if (parts.empty()) return empty;
  Formula acc = parts.front();
  for (const Formula& p : parts.subspan(1)) acc = Formula::binary(kind, acc, p);
  return acc;
}

}  // namespace

Formula conj_all(std::span<const Formula> parts) { return fold(Kind::And, parts, Formula::top()); }
Formula tensor_all(std::span<const Formula> parts) { return fold(Kind::Tensor, parts, Formula::bot()); }
Formula disj_all(std::span<const Formula> parts) { return fold(Kind::Or, parts, Formula::bot()); }

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << render(f); }

std::vector<std::string> free_vars(const Formula& f) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  collect_vars(f, out, seen);
  return out;
}

std::string_view to_string(Fragment fragment) {
  switch (fragment) {
    case Fragment::PD: return "PD";
    case Fragment::InqL: return "InqL";
    case Fragment::PT: return "PT";
    case Fragment::XPD: return "XPD";
    case Fragment::XPT: return "XPT";
  }
  return "?";
}

std::optional<Fragment> parse_fragment(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "pd") return Fragment::PD;
  if (lower == "inql") return Fragment::InqL;
  if (lower == "pt") return Fragment::PT;
  if (lower == "xpd") return Fragment::XPD;
  if (lower == "xpt") return Fragment::XPT;
  return std::nullopt;
}

bool has_connective(Fragment fragment, Kind kind) {
  switch (kind) {
    case Kind::Var:
    case Kind::Bot:
    case Kind::Top:
    case Kind::Neg:
    case Kind::And:
      return true;
    case Kind::Dep:
      return fragment != Fragment::InqL;
    case Kind::Tensor:
      return fragment != Fragment::InqL;
    case Kind::Or:
    case Kind::Imp:
      return fragment == Fragment::InqL || fragment == Fragment::PT || fragment == Fragment::XPT;
  }
  return false;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NegationNotOnVariable: return "NegationNotOnVariable";
    case ViolationKind::ConnectiveNotInFragment: return "ConnectiveNotInFragment";
    case ViolationKind::DependenceAtomNotInFragment: return "DependenceAtomNotInFragment";
    case ViolationKind::DependenceArgumentNotVariable: return "DependenceArgumentNotVariable";
    case ViolationKind::RequiresSemanticCheck: return "RequiresSemanticCheck";
    case ViolationKind::DependenceArgumentNotFlat: return "DependenceArgumentNotFlat";
  }
  return "?";
}

std::string describe(const Violation& v) {
  return std::string(to_string(v.kind)) + " at '" + render(v.node) + "': " + v.detail;
}

std::vector<Violation> fragment_check(const Formula& f, Fragment fragment) {
  std::vector<Violation> out;
  check_node(f, fragment, out);
  return out;
}

namespace {

std::string violation_message(Fragment fragment, const std::vector<Violation>& violations) {
  std::string msg = "formula is not in " + std::string(to_string(fragment));
  for (const Violation& v : violations) msg += "; " + describe(v);
  return msg;
}

}  // namespace

FragmentViolation::FragmentViolation(Fragment fragment, std::vector<Violation> violations)
    : Error(violation_message(fragment, violations)), violations_(std::move(violations)) {}

FragmentViolation::FragmentViolation(const std::string& message) : Error(message) {}

Formula negation_translate(const Formula& f) { return translate(f); }

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected,
                         const std::string& found)
    : Error([&] {
        std::string msg = "syntax error at position " + std::to_string(position) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
          if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
          msg += expected[i];
        }
        msg += ", found " + found;
        return msg;
      }()),
      position_(position),
      expected_(std::move(expected)) {}

ScopeCapExceeded::ScopeCapExceeded(std::size_t scope_size, std::size_t cap, const std::string& which)
    : Error("scope of " + std::to_string(scope_size) + " variables exceeds the " + which + " cap of " +
            std::to_string(cap) + " (raise it with --" + which + "-cap or TEAMLOGIC_" +
            [&] {
              std::string up;
              for (char c : which) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
              return up;
            }() +
            "_CAP)"),
      scope_size_(scope_size),
      cap_(cap) {}

}  // namespace teamlogic
