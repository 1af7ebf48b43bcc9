/*
 * Copyright 2026 The rbatl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rbatl/formula.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>

#include "rbatl/checker_symbolic.hpp"
#include "rbatl/errors.hpp"
#include "rbatl/model.hpp"

namespace rbatl {

struct Formula::Node {
  FormulaKind kind = FormulaKind::True;
  std::string name;
  std::vector<std::string> coalition;
  std::optional<BoundVec> bound;
  std::vector<Formula> kids;
  std::size_t size = 1;
};

namespace {

std::vector<std::string> normalize_coalition(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

}  // namespace

Formula::Formula() : node_(std::make_shared<Node>()) {}
Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::truth() { return Formula(); }

Formula Formula::falsity() {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::False;
  return Formula(std::move(n));
}

Formula Formula::prop(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Prop;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Not;
  n->size = 1 + f.size();
  n->kids.push_back(std::move(f));
  return Formula(std::move(n));
}

std::shared_ptr<Formula::Node> Formula::binary(FormulaKind kind, Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->size = 1 + lhs.size() + rhs.size();
  n->kids.push_back(std::move(lhs));
  n->kids.push_back(std::move(rhs));
  return n;
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(binary(FormulaKind::Or, std::move(lhs), std::move(rhs)));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(binary(FormulaKind::And, std::move(lhs), std::move(rhs)));
}

Formula Formula::next(std::vector<std::string> coalition, std::optional<BoundVec> bound,
                      Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Next;
  n->coalition = normalize_coalition(std::move(coalition));
  n->bound = std::move(bound);
  n->size = 1 + f.size();
  n->kids.push_back(std::move(f));
  return Formula(std::move(n));
}

Formula Formula::always(std::vector<std::string> coalition, std::optional<BoundVec> bound,
                        Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Always;
  n->coalition = normalize_coalition(std::move(coalition));
  n->bound = std::move(bound);
  n->size = 1 + f.size();
  n->kids.push_back(std::move(f));
  return Formula(std::move(n));
}

Formula Formula::until(std::vector<std::string> coalition, std::optional<BoundVec> bound,
                       Formula lhs, Formula rhs) {
  auto n = binary(FormulaKind::Until, std::move(lhs), std::move(rhs));
  n->coalition = normalize_coalition(std::move(coalition));
  n->bound = std::move(bound);
  return Formula(std::move(n));
}

FormulaKind Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::name() const noexcept { return node_->name; }
const std::vector<std::string>& Formula::coalition() const noexcept {
  return node_->coalition;
}
const std::optional<BoundVec>& Formula::bound() const noexcept { return node_->bound; }

const Formula& Formula::lhs() const {
  if (node_->kids.empty()) throw StructuralError("formula has no operand");
  return node_->kids[0];
}

const Formula& Formula::rhs() const {
  if (node_->kids.size() < 2) throw StructuralError("formula has no right operand");
  return node_->kids[1];
}

bool Formula::is_modality() const noexcept {
  const auto k = node_->kind;
  return k == FormulaKind::Next || k == FormulaKind::Always || k == FormulaKind::Until;
}

bool Formula::is_resource_bounded() const noexcept {
  return is_modality() && node_->bound && !all_infinite(*node_->bound);
}

std::size_t Formula::size() const noexcept { return node_->size; }

Formula Formula::with_bound(std::optional<BoundVec> bound) const {
  if (!is_modality()) throw ContractViolation("with_bound on a non-modal formula");
  auto n = std::make_shared<Node>(*node_);
  n->bound = std::move(bound);
  return Formula(std::move(n));
}

bool operator==(const Formula& a, const Formula& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  const Formula::Node* x = a.node_.get();
  const Formula::Node* y = b.node_.get();
  if (x == y) return std::strong_ordering::equal;
  if (auto c = x->kind <=> y->kind; c != 0) return c;
  if (auto c = x->name <=> y->name; c != 0) return c;
  if (auto c = x->coalition <=> y->coalition; c != 0) return c;
  if (auto c = x->bound.has_value() <=> y->bound.has_value(); c != 0) return c;
  if (x->bound) {
    if (auto c = *x->bound <=> *y->bound; c != 0) return c;
  }
  return x->kids <=> y->kids;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void print(std::ostream& out, const Formula& f) {
  auto modality = [&out, &f] {
    out << "<{";
    for (std::size_t i = 0; i < f.coalition().size(); ++i) {
      if (i) out << ',';
      out << f.coalition()[i];
    }
    out << '}';
    if (f.bound()) {
      out << ':';
      for (std::size_t i = 0; i < f.bound()->size(); ++i) {
        out << (i ? "," : " ") << (*f.bound())[i].to_string();
      }
    }
    out << "> ";
  };

  switch (f.kind()) {
    case FormulaKind::True: out << "true"; break;
    case FormulaKind::False: out << "false"; break;
    case FormulaKind::Prop: out << f.name(); break;
    case FormulaKind::Not:
      out << '!';
      print(out, f.lhs());
      break;
    case FormulaKind::Or:
    case FormulaKind::And:
      out << '(';
      print(out, f.lhs());
      out << (f.kind() == FormulaKind::Or ? " | " : " & ");
      print(out, f.rhs());
      out << ')';
      break;
    case FormulaKind::Next:
      modality();
      out << "X ";
      print(out, f.lhs());
      break;
    case FormulaKind::Always:
      modality();
      out << "G ";
      print(out, f.lhs());
      break;
    case FormulaKind::Until:
      modality();
      out << '(';
      print(out, f.lhs());
      out << " U ";
      print(out, f.rhs());
      out << ')';
      break;
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::ostringstream out;
  print(out, f);
  return out.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Word, Sym, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  std::size_t pos = 0;
};

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool is_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
           return std::isdigit(static_cast<unsigned char>(c));
         });
}

bool is_keyword(const std::string& s) {
  return s == "X" || s == "G" || s == "U" || s == "true" || s == "false" || s == "inf";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_word_char(c)) {
      const std::size_t start = i;
      while (i < text.size() && is_word_char(text[i])) ++i;
      out.push_back({Tok::Word, std::string(text.substr(start, i - start)), start});
      continue;
    }
    static const std::string kSymbols = "<>{}:,;()!|&-";
    if (kSymbols.find(c) == std::string::npos) {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Tok::Sym, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, bool allow_endowments)
      : tokens_(tokenize(text)), allow_endowments_(allow_endowments) {}

  Formula parse() {
    Formula f = parse_or();
    if (peek().type != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  bool at_sym(char c) const { return peek().type == Tok::Sym && peek().text[0] == c; }
  bool at_word(const char* w) const { return peek().type == Tok::Word && peek().text == w; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos); }

  void expect_sym(char c) {
    if (!at_sym(c)) {
      fail(std::string("expected '") + c + "'" +
           (peek().type == Tok::End ? " before end of input" : ", found '" + peek().text + "'"));
    }
    ++pos_;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (at_sym('|')) {
      ++pos_;
      f = Formula::disjunction(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (at_sym('&')) {
      ++pos_;
      f = Formula::conjunction(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    if (at_sym('!')) {
      ++pos_;
      return Formula::negation(parse_unary());
    }
    if (at_sym('<')) return parse_modality();
    return parse_primary();
  }

  Formula parse_primary() {
    if (at_sym('(')) {
      ++pos_;
      Formula f = parse_or();
      expect_sym(')');
      return f;
    }
    if (peek().type != Tok::Word) {
      fail(peek().type == Tok::End ? "unexpected end of input"
                                   : "unexpected '" + peek().text + "'");
    }
    const Token& t = peek();
    if (t.text == "true") {
      ++pos_;
      return Formula::truth();
    }
    if (t.text == "false") {
      ++pos_;
      return Formula::falsity();
    }
    if (is_keyword(t.text)) fail("keyword '" + t.text + "' cannot be a proposition");
    if (std::isdigit(static_cast<unsigned char>(t.text[0]))) {
      fail("proposition '" + t.text + "' must not start with a digit");
    }
    ++pos_;
    return Formula::prop(t.text);
  }

  Amount parse_component() {
    if (at_sym('-')) fail("bound components must be natural numbers, found a negative value");
    if (peek().type != Tok::Word) fail("expected a bound component");
    const Token& t = take();
    if (t.text == "inf") return Amount::infinity();
    if (!is_digits(t.text)) {
      throw ParseError("bound component '" + t.text + "' is neither a natural nor 'inf'", t.pos);
    }
    errno = 0;
    const unsigned long long v = std::strtoull(t.text.c_str(), nullptr, 10);
    if (errno == ERANGE || v > static_cast<unsigned long long>(std::numeric_limits<std::int64_t>::max())) {
      throw ParseError("bound component '" + t.text + "' is too large", t.pos);
    }
    return Amount(static_cast<std::uint64_t>(v));
  }

  BoundVec parse_bound() {
    std::vector<Amount> comps{parse_component()};
    while (at_sym(',')) {
      ++pos_;
      comps.push_back(parse_component());
    }
    return BoundVec(std::move(comps));
  }

  Formula parse_modality() {
    const std::size_t start = peek().pos;
    expect_sym('<');
    expect_sym('{');
    std::vector<std::string> agents;
    std::vector<std::optional<BoundVec>> rows;
    if (!at_sym('}')) {
      while (true) {
        if (peek().type != Tok::Word) fail("expected an agent name");
        agents.push_back(take().text);
        if (at_sym(':')) {
          ++pos_;
          rows.emplace_back(parse_bound());
        } else {
          rows.emplace_back(std::nullopt);
        }
        if (at_sym(',') || at_sym(';')) {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect_sym('}');

    const bool any_row = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.has_value(); });
    std::optional<BoundVec> bound;
    if (any_row) {
      if (!allow_endowments_) {
        throw ParseError("endowment annotations are not bounds; translate the formula first", start);
      }
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i]) {
          throw ParseError("endowment row missing for coalition member '" + agents[i] + "'", start);
        }
        if (rows[i]->size() != rows[0]->size()) {
          throw ParseError("endowment rows have different lengths", start);
        }
      }
      BoundVec sum = zero_bound(rows[0]->size());
      for (const auto& r : rows) sum = add(sum, *r);
      bound = std::move(sum);
    }
    if (at_sym(':')) {
      if (any_row) fail("a modality cannot carry both endowments and a bound");
      ++pos_;
      bound = parse_bound();
    }
    expect_sym('>');

    if (at_word("X")) {
      ++pos_;
      return Formula::next(std::move(agents), std::move(bound), parse_unary());
    }
    if (at_word("G")) {
      ++pos_;
      return Formula::always(std::move(agents), std::move(bound), parse_unary());
    }
    if (at_sym('(')) {
      ++pos_;
      Formula lhs = parse_or();
      if (!at_word("U")) fail("expected 'U'");
      ++pos_;
      Formula rhs = parse_or();
      expect_sym(')');
      return Formula::until(std::move(agents), std::move(bound), std::move(lhs), std::move(rhs));
    }
    fail("expected 'X', 'G' or '(' after a coalition modality");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  bool allow_endowments_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text, false).parse(); }

Formula parse_formula_with_endowments(std::string_view text) {
  return Parser(text, true).parse();
}

std::string translate_endowment(std::string_view text) {
  return to_string(parse_formula_with_endowments(text));
}

// ---------------------------------------------------------------------------
// Subformula orderings

Formula infinite_version(const Formula& f) {
  if (!f.is_resource_bounded()) return f;
  return f.with_bound(infinite_bound(f.bound()->size()));
}

bool complexity_less(const Formula& a, const Formula& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const bool ba = a.is_resource_bounded();
  const bool bb = b.is_resource_bounded();
  if (ba != bb) return bb;
  if (ba) {
    const auto sa = finite_sum(*a.bound());
    const auto sb = finite_sum(*b.bound());
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

namespace {

void collect(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  if (f.is_resource_bounded()) collect(infinite_version(f), out);
  switch (f.kind()) {
    case FormulaKind::Not:
    case FormulaKind::Next:
    case FormulaKind::Always:
      collect(f.lhs(), out);
      break;
    case FormulaKind::Or:
    case FormulaKind::And:
    case FormulaKind::Until:
      collect(f.lhs(), out);
      collect(f.rhs(), out);
      break;
    default:
      break;
  }
}

std::vector<Formula> ordered(const std::set<Formula>& set) {
  std::vector<Formula> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), complexity_less);
  return out;
}

}  // namespace

std::vector<Formula> sub_ordered(const Formula& root) {
  std::set<Formula> all;
  collect(root, all);
  return ordered(all);
}

std::vector<Formula> sub_plus(const Formula& root) {
  std::set<Formula> all;
  collect(root, all);
  std::vector<Formula> base(all.begin(), all.end());
  for (const auto& f : base) {
    if (!f.is_resource_bounded()) continue;
    if (f.kind() != FormulaKind::Always && f.kind() != FormulaKind::Until) continue;
    for (const auto& [d, rest] : split(*f.bound())) all.insert(f.with_bound(rest));
  }
  return ordered(all);
}

// ---------------------------------------------------------------------------
// Binding

Formula bind_to_model(const Formula& f, const Model& m) {
  switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False:
      return f;
    case FormulaKind::Prop:
      if (m.label(f.name()) == nullptr) {
        throw ValidationError("unknown proposition '" + f.name() + "'");
      }
      return f;
    case FormulaKind::Not:
      return Formula::negation(bind_to_model(f.lhs(), m));
    case FormulaKind::Or:
      return Formula::disjunction(bind_to_model(f.lhs(), m), bind_to_model(f.rhs(), m));
    case FormulaKind::And:
      return Formula::conjunction(bind_to_model(f.lhs(), m), bind_to_model(f.rhs(), m));
    case FormulaKind::Next:
    case FormulaKind::Always:
    case FormulaKind::Until:
      break;
  }
  for (const auto& a : f.coalition()) {
    if (!m.find_agent(a)) throw ValidationError("unknown agent '" + a + "'");
  }
  BoundVec bound = f.bound() ? *f.bound() : infinite_bound(m.num_resources());
  if (bound.size() != m.num_resources()) {
    throw ValidationError("bound " + to_string(bound) + " in '" + to_string(f) + "' has " +
                          std::to_string(bound.size()) + " components, the model has " +
                          std::to_string(m.num_resources()) + " resources");
  }
  if (f.kind() == FormulaKind::Until) {
    return Formula::until(f.coalition(), std::move(bound), bind_to_model(f.lhs(), m),
                          bind_to_model(f.rhs(), m));
  }
  if (f.kind() == FormulaKind::Next) {
    return Formula::next(f.coalition(), std::move(bound), bind_to_model(f.lhs(), m));
  }
  return Formula::always(f.coalition(), std::move(bound), bind_to_model(f.lhs(), m));
}

}  // namespace rbatl
