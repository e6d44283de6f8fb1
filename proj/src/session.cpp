#include "khb/session.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace khb {

std::vector<const CommandStmt*> Session::commands() const {
  std::vector<const CommandStmt*> out;
  for (const auto& st : statements)
    if (const auto* c = std::get_if<CommandStmt>(&st)) out.push_back(c);
  return out;
}

namespace {

struct KeywordSlot {
  std::string keyword;
  Arg::Kind kind;
  bool required;
};

// Keyword order here is the canonical print order.
const std::map<std::string, std::vector<KeywordSlot>>& command_signatures() {
  using K = Arg::Kind;
  static const std::map<std::string, std::vector<KeywordSlot>> signatures = {
      {"groebner", {{"ideal", K::name, true}, {"order", K::name, true}}},
      {"kernel", {{"source", K::name, true}, {"targets", K::names, true}, {"order", K::name, false}, {"as", K::name, true}}},
      {"normalform", {{"poly", K::name, true}, {"ideal", K::name, true}, {"order", K::name, true}}},
      {"subduct", {{"poly", K::name, true}, {"basis", K::names, true}, {"order", K::name, true}, {"ideal", K::name, false}}},
      {"sagbi-vars",
       {{"ideal", K::name, true}, {"order", K::name, true}, {"valuation", K::name, false}, {"tiebreak", K::name, false}}},
      {"toric-lattice",
       {{"ideal", K::name, true}, {"order", K::name, true}, {"valuation", K::name, false}, {"bound", K::number, false}}},
      {"mu", {{"poly", K::name, true}, {"ideal", K::name, true}, {"order", K::name, true}, {"valuation", K::name, false}}},
      {"certificate",
       {{"ideal", K::name, true}, {"valuation", K::name, true}, {"order", K::name, true}, {"bound", K::number, false}}},
      {"nobody-direct", {{"valuation", K::name, true}}},
      {"nobody-alg1",
       {{"ideal", K::name, false},
        {"valuation", K::name, false},
        {"order", K::name, false},
        {"lattice", K::matrix, false},
        {"degrees", K::vector, false},
        {"W", K::matrix, false},
        {"bound", K::number, false}}},
      {"affine-check",
       {{"ideal", K::name, true}, {"valuation", K::name, true}, {"order", K::name, true}, {"bound", K::number, false}}},
  };
  return signatures;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string vector_text(const IntVector& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(to_string(x));
  return "[" + join(parts, ",") + "]";
}

std::string matrix_text(const RatMatrix& m) { return m.rows() == 0 ? "[]" : to_string(m); }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  // Polynomial expression; `resolve` maps a name to a value or returns nullopt.
  using Resolver = std::function<std::optional<Polynomial>(const std::string&, SourceLocation)>;

  Polynomial expression(std::size_t nvars, const Resolver& resolve) {
    Polynomial acc = term(nvars, resolve);
    for (;;) {
      skip();
      if (peek() == '+') {
        advance();
        acc += term(nvars, resolve);
      } else if (peek() == '-') {
        advance();
        acc -= term(nvars, resolve);
      } else {
        return acc;
      }
    }
  }

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

  SourceLocation here() const { return loc_; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(loc_, message); }
  [[noreturn]] void fail(SourceLocation at, const std::string& message) const { throw ParseError(at, message); }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char peek_after_space() {
    skip();
    return peek();
  }

  void advance() {
    if (pos_ >= text_.size()) return;
    if (text_[pos_] == '\n') {
      ++loc_.line;
      loc_.column = 1;
    } else {
      ++loc_.column;
    }
    ++pos_;
  }

  void expect(char c, const std::string& context) {
    skip();
    if (peek() != c) fail("expected '" + std::string(1, c) + "' " + context + describe_found());
    advance();
  }

  std::string describe_found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return ", found '" + std::string(1, text_[pos_]) + "'";
  }

  // NAME := [A-Za-z_][A-Za-z0-9_]*; with `hyphen`, '-' may appear inside.
  std::string name(const std::string& what, bool hyphen = false) {
    skip();
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected " + what + describe_found());
    std::string s;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
                (hyphen && c == '-' && pos_ + 1 < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_ + 1])));
      if (!ok) break;
      s += c;
      advance();
    }
    return s;
  }

  void keyword(const std::string& kw) {
    SourceLocation at = (skip(), loc_);
    std::string w = name("'" + kw + "'");
    if (w != kw) fail(at, "expected '" + kw + "', found '" + w + "'");
  }

  std::string digits(const std::string& what) {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected " + what + describe_found());
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      s += peek();
      advance();
    }
    return s;
  }

  Rational fraction() {
    skip();
    SourceLocation at = loc_;
    std::string s;
    if (peek() == '-') {
      s += '-';
      advance();
    }
    s += digits("a number");
    if (peek() == '/') {
      advance();
      s += '/' + digits("a denominator");
    }
    try {
      return parse_rational(s);
    } catch (const std::exception& e) {
      fail(at, e.what());
    }
  }

  Integer integer() {
    skip();
    std::string s;
    if (peek() == '-') {
      s += '-';
      advance();
    }
    s += digits("an integer");
    return Integer(s);
  }

  long natural(const std::string& what) {
    std::string s = digits(what);
    if (s.size() > 9) fail("number too large");
    return std::stol(s);
  }

  // [[a,b],[c,d]] or [] (no rows).
  RatMatrix matrix() {
    expect('[', "to open a matrix");
    if (peek_after_space() == ']') {
      advance();
      return RatMatrix(0, 0);
    }
    std::vector<RatVector> rows;
    SourceLocation at = loc_;
    for (;;) {
      expect('[', "to open a matrix row");
      RatVector row;
      for (;;) {
        row.push_back(fraction());
        if (peek_after_space() == ',') {
          advance();
          continue;
        }
        break;
      }
      expect(']', "to close a matrix row");
      rows.push_back(std::move(row));
      if (peek_after_space() == ',') {
        advance();
        continue;
      }
      break;
    }
    expect(']', "to close the matrix");
    for (const auto& r : rows)
      if (r.size() != rows.front().size()) fail(at, "matrix rows have different lengths");
    return RatMatrix::from_rows(rows, rows.front().size());
  }

  IntVector int_vector() {
    expect('[', "to open a vector");
    IntVector v;
    if (peek_after_space() == ']') {
      advance();
      return v;
    }
    for (;;) {
      v.push_back(integer());
      if (peek_after_space() == ',') {
        advance();
        continue;
      }
      break;
    }
    expect(']', "to close the vector");
    return v;
  }

  std::vector<std::string> name_list(const std::string& what) {
    expect('[', "to open a list of " + what);
    std::vector<std::string> v;
    if (peek_after_space() == ']') {
      advance();
      return v;
    }
    for (;;) {
      v.push_back(name(what));
      if (peek_after_space() == ',') {
        advance();
        continue;
      }
      break;
    }
    expect(']', "to close the list");
    return v;
  }

 private:
  Polynomial term(std::size_t nvars, const Resolver& resolve) {
    Polynomial acc = factor(nvars, resolve);
    for (;;) {
      skip();
      char c = peek();
      if (c == '*') {
        advance();
        acc = acc * factor(nvars, resolve);
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
        fail("expected '*' between factors" + describe_found());
      } else {
        return acc;
      }
    }
  }

  Polynomial factor(std::size_t nvars, const Resolver& resolve) {
    skip();
    if (peek() == '-') {
      advance();
      return -factor(nvars, resolve);
    }
    Polynomial base = atom(nvars, resolve);
    skip();
    if (peek() != '^') return base;
    advance();
    skip();
    SourceLocation at = loc_;
    if (peek() == '-' || peek() == '(') fail(at, "exponent must be a nonnegative integer literal (negative exponents are not allowed)");
    long e = natural("an exponent");
    if (e > 100000) fail(at, "exponent too large");
    return base.pow(static_cast<unsigned>(e));
  }

  Polynomial atom(std::size_t nvars, const Resolver& resolve) {
    skip();
    SourceLocation at = loc_;
    char c = peek();
    if (c == '(') {
      advance();
      Polynomial p = expression(nvars, resolve);
      expect(')', "to close the parenthesis");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s = digits("a number");
      if (peek() == '/') {
        advance();
        s += '/' + digits("a denominator");
      }
      try {
        return Polynomial::constant(nvars, parse_rational(s));
      } catch (const std::exception& e) {
        fail(at, e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string n = name("a variable");
      auto v = resolve(n, at);
      if (!v) fail(at, "undeclared name '" + n + "'");
      return *v;
    }
    fail("expected a variable, number or '('" + describe_found());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  SourceLocation loc_;
};

Parser::Resolver variables_only(const std::vector<std::string>& vars) {
  return [&vars](const std::string& n, SourceLocation) -> std::optional<Polynomial> {
    auto it = std::find(vars.begin(), vars.end(), n);
    if (it == vars.end()) return std::nullopt;
    return Polynomial::variable(vars.size(), static_cast<std::size_t>(it - vars.begin()));
  };
}

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {"ring", "use", "order", "poly", "ideal", "valuation", "grading", "vars",
                                              "lex", "grlex", "grevlex", "weight", "tiebreak", "matrix", "valueorder",
                                              "degrees"};
  return words;
}

class SessionBuilder {
 public:
  explicit SessionBuilder(std::string_view text) : p_(text) {}

  Session run() {
    while (!p_.at_end()) statement();
    return std::move(s_);
  }

 private:
  void statement() {
    SourceLocation at = p_.here();
    std::string kw = p_.name("a statement keyword", true);
    if (kw == "ring") return ring();
    if (kw == "use") return use(at);
    if (kw == "order") return order();
    if (kw == "poly") return poly();
    if (kw == "ideal") return ideal();
    if (kw == "grading") return grading();
    if (kw == "valuation") return valuation();
    if (command_signatures().count(kw)) return command(kw, at);
    std::vector<std::string> all = {"ring", "use", "order", "poly", "ideal", "grading", "valuation"};
    for (const auto& [v, _] : command_signatures()) all.push_back(v);
    p_.fail(at, "unknown statement '" + kw + "'; expected one of: " + join(all, ", "));
  }

  std::string fresh_name(const std::string& what) {
    SourceLocation at = p_.here();
    std::string n = p_.name(what);
    if (reserved_words().count(n)) p_.fail(at, "'" + n + "' is a reserved word");
    if (declared_.count(n)) p_.fail(at, "name '" + n + "' is already declared");
    declared_.insert(n);
    return n;
  }

  const std::string& current_ring(SourceLocation at) {
    if (current_.empty()) p_.fail(at, "no ring declared yet");
    return current_;
  }

  void end() { p_.expect(';', "to end the statement"); }

  void ring() {
    RingStmt st;
    st.name = fresh_name("a ring name");
    p_.keyword("vars");
    std::set<std::string> seen;
    while (p_.peek_after_space() != ';') {
      SourceLocation at = p_.here();
      std::string v = p_.name("a variable name");
      if (reserved_words().count(v)) p_.fail(at, "'" + v + "' is a reserved word");
      if (!seen.insert(v).second) p_.fail(at, "variable '" + v + "' repeated");
      st.vars.push_back(v);
    }
    if (st.vars.empty()) p_.fail("a ring needs at least one variable");
    end();
    s_.rings[st.name] = RingInfo{st.vars};
    current_ = st.name;
    s_.statements.emplace_back(std::move(st));
  }

  void use(SourceLocation) {
    SourceLocation at = p_.here();
    std::string r = p_.name("a ring name");
    if (!s_.rings.count(r)) p_.fail(at, "undeclared ring '" + r + "'");
    end();
    current_ = r;
    s_.statements.emplace_back(UseStmt{r});
  }

  const OrderBinding& lookup_order(const std::string& n, SourceLocation at, const std::string& ring) {
    auto it = s_.orders.find(n);
    if (it == s_.orders.end()) p_.fail(at, "undeclared order '" + n + "'");
    if (it->second.ring != ring) p_.fail(at, "order '" + n + "' belongs to ring '" + it->second.ring + "', not '" + ring + "'");
    return it->second;
  }

  void order() {
    SourceLocation start = p_.here();
    const std::string ring = current_ring(start);
    OrderStmt st;
    st.name = fresh_name("an order name");
    const std::size_t n = s_.rings[ring].vars.size();
    SourceLocation at = p_.here();
    std::string kind = p_.name("an order kind (lex, grlex, grevlex, weight, valuation)");
    std::optional<MonomialOrder> built;
    try {
      if (kind == "lex") {
        st.kind = OrderStmt::Kind::lex;
        built = MonomialOrder::lex(n);
      } else if (kind == "grlex") {
        st.kind = OrderStmt::Kind::grlex;
        built = MonomialOrder::grlex(n);
      } else if (kind == "grevlex") {
        st.kind = OrderStmt::Kind::grevlex;
        built = MonomialOrder::grevlex(n);
      } else if (kind == "weight") {
        st.kind = OrderStmt::Kind::weight;
        st.weights = p_.matrix();
        p_.keyword("tiebreak");
        SourceLocation tat = p_.here();
        st.tiebreak = p_.name("a tiebreak order");
        const auto& tb = lookup_order(st.tiebreak, tat, ring);
        if (st.weights.cols() != n) p_.fail(at, "weight matrix needs " + std::to_string(n) + " columns");
        built = MonomialOrder::weight(st.weights, tb.order);
      } else if (kind == "valuation") {
        st.kind = OrderStmt::Kind::valuation;
        SourceLocation vat = p_.here();
        st.valuation = p_.name("a valuation name");
        auto vit = s_.valuations.find(st.valuation);
        if (vit == s_.valuations.end()) p_.fail(vat, "undeclared valuation '" + st.valuation + "'");
        if (vit->second.ring != ring) p_.fail(vat, "valuation '" + st.valuation + "' belongs to another ring");
        p_.keyword("tiebreak");
        SourceLocation tat = p_.here();
        st.tiebreak = p_.name("a tiebreak order");
        const auto& tb = lookup_order(st.tiebreak, tat, ring);
        built = valuation_induced_order(vit->second.table, tb.order);
      } else {
        p_.fail(at, "unknown order kind '" + kind + "'; expected lex, grlex, grevlex, weight or valuation");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      p_.fail(at, e.what());
    }
    end();
    s_.orders.emplace(st.name, OrderBinding{ring, *built});
    s_.statements.emplace_back(std::move(st));
  }

  void poly() {
    SourceLocation start = p_.here();
    const std::string ring = current_ring(start);
    PolyStmt st;
    st.name = fresh_name("a polynomial name");
    p_.expect('=', "after the polynomial name");
    const auto& vars = s_.rings[ring].vars;
    Polynomial value = p_.expression(vars.size(), [&](const std::string& n, SourceLocation at) -> std::optional<Polynomial> {
      auto it = std::find(vars.begin(), vars.end(), n);
      if (it != vars.end()) return Polynomial::variable(vars.size(), static_cast<std::size_t>(it - vars.begin()));
      auto pit = s_.polys.find(n);
      if (pit == s_.polys.end()) return std::nullopt;
      if (pit->second.ring != ring) p_.fail(at, "polynomial '" + n + "' belongs to ring '" + pit->second.ring + "'");
      return pit->second.value;
    });
    end();
    s_.polys.emplace(st.name, PolyBinding{ring, std::move(value)});
    s_.statements.emplace_back(std::move(st));
  }

  void ideal() {
    SourceLocation start = p_.here();
    const std::string ring = current_ring(start);
    IdealStmt st;
    st.name = fresh_name("an ideal name");
    p_.expect('=', "after the ideal name");
    SourceLocation at = p_.here();
    st.generators = p_.name_list("polynomial names");
    std::vector<Polynomial> gens;
    for (const auto& g : st.generators) {
      auto it = s_.polys.find(g);
      if (it == s_.polys.end()) p_.fail(at, "undeclared polynomial '" + g + "'");
      if (it->second.ring != ring) p_.fail(at, "polynomial '" + g + "' is not in ring '" + ring + "'");
      gens.push_back(it->second.value);
    }
    end();
    s_.ideals.emplace(st.name, IdealBinding{ring, Ideal(s_.rings[ring].vars.size(), std::move(gens))});
    s_.statements.emplace_back(std::move(st));
  }

  void grading() {
    GradingStmt st;
    st.name = fresh_name("a grading name");
    p_.expect('=', "after the grading name");
    st.degrees = p_.int_vector();
    end();
    s_.gradings[st.name] = st.degrees;
    s_.statements.emplace_back(std::move(st));
  }

  void valuation() {
    SourceLocation start = p_.here();
    const std::string ring = current_ring(start);
    ValuationStmt st;
    st.name = fresh_name("a valuation name");
    p_.keyword("matrix");
    SourceLocation mat = p_.here();
    st.matrix = p_.matrix();
    p_.keyword("valueorder");
    st.value_order = p_.matrix();
    std::optional<IntVector> degrees;
    if (p_.peek_after_space() != ';') {
      p_.keyword("degrees");
      SourceLocation dat = p_.here();
      if (p_.peek_after_space() == '[') {
        st.degrees = p_.int_vector();
        degrees = st.degrees;
      } else {
        std::string g = p_.name("a grading name or vector");
        auto it = s_.gradings.find(g);
        if (it == s_.gradings.end()) p_.fail(dat, "undeclared grading '" + g + "'");
        st.grading = g;
        degrees = it->second;
      }
    }
    const std::size_t n = s_.rings[ring].vars.size();
    if (st.matrix.cols() != n)
      p_.fail(mat, "valuation matrix has " + std::to_string(st.matrix.cols()) + " columns; ring '" + ring + "' has " +
                       std::to_string(n) + " variables");
    std::optional<ValuationTable> table;
    try {
      table.emplace(st.matrix, ValueOrder(st.value_order), degrees);
    } catch (const std::exception& e) {
      p_.fail(mat, e.what());
    }
    end();
    s_.valuations.emplace(st.name, ValuationBinding{ring, *table});
    s_.statements.emplace_back(std::move(st));
  }

  void command(const std::string& verb, SourceLocation at) {
    CommandStmt st;
    st.verb = verb;
    st.where = at;
    const auto& signature = command_signatures().at(verb);
    while (p_.peek_after_space() != ';') {
      SourceLocation kat = p_.here();
      std::string kw = p_.name("a keyword");
      auto it = std::find_if(signature.begin(), signature.end(), [&](const KeywordSlot& k) { return k.keyword == kw; });
      if (it == signature.end()) {
        std::vector<std::string> allowed;
        for (const auto& k : signature) allowed.push_back(k.keyword);
        p_.fail(kat, "unknown keyword '" + kw + "' for " + verb + "; expected one of: " + join(allowed, ", "));
      }
      if (st.args.count(kw)) p_.fail(kat, "keyword '" + kw + "' given twice");
      Arg a;
      a.kind = it->kind;
      SourceLocation vat = p_.here();
      switch (it->kind) {
        case Arg::Kind::name: {
          // `as` introduces a new name; the rest refer to declared ones.
          a.name = kw == "as" ? fresh_name("a result name") : p_.name("a name after '" + kw + "'");
          break;
        }
        case Arg::Kind::names: a.names = p_.name_list("names"); break;
        case Arg::Kind::matrix: a.matrix = p_.matrix(); break;
        case Arg::Kind::vector:
          if (p_.peek_after_space() == '[') {
            a.vector = p_.int_vector();
          } else {
            a.kind = Arg::Kind::name;
            a.name = p_.name("a grading name or vector");
            if (!s_.gradings.count(a.name)) p_.fail(vat, "undeclared grading '" + a.name + "'");
            a.vector = s_.gradings[a.name];
          }
          break;
        case Arg::Kind::number: a.number = p_.natural("a number after '" + kw + "'"); break;
      }
      st.args.emplace(kw, std::move(a));
      arg_locations_[kw] = vat;
    }
    for (const auto& k : signature)
      if (k.required && !st.args.count(k.keyword))
        p_.fail(p_.here(), verb + " requires '" + k.keyword + "'" + describe_signature(signature));
    check_command(st);
    end();
    s_.statements.emplace_back(std::move(st));
  }

  static std::string describe_signature(const std::vector<KeywordSlot>& signature) {
    std::vector<std::string> parts;
    for (const auto& k : signature) parts.push_back(k.required ? k.keyword : "[" + k.keyword + "]");
    return " (usage: " + join(parts, " ") + ")";
  }

  SourceLocation loc_of(const std::string& kw) const {
    auto it = arg_locations_.find(kw);
    return it == arg_locations_.end() ? p_.here() : it->second;
  }

  // Name resolution and ring agreement; returns the ring of the named object.
  std::string ring_of(const CommandStmt& c, const std::string& kw) {
    const std::string& n = c.at(kw).name;
    SourceLocation at = loc_of(kw);
    if (kw == "ideal") {
      auto it = s_.ideals.find(n);
      if (it == s_.ideals.end()) p_.fail(at, "undeclared ideal '" + n + "'");
      return it->second.ring;
    }
    if (kw == "order" || kw == "tiebreak") {
      auto it = s_.orders.find(n);
      if (it == s_.orders.end()) p_.fail(at, "undeclared order '" + n + "'");
      return it->second.ring;
    }
    if (kw == "valuation") {
      auto it = s_.valuations.find(n);
      if (it == s_.valuations.end()) p_.fail(at, "undeclared valuation '" + n + "'");
      return it->second.ring;
    }
    if (kw == "poly") {
      auto it = s_.polys.find(n);
      if (it == s_.polys.end()) p_.fail(at, "undeclared polynomial '" + n + "'");
      return it->second.ring;
    }
    if (kw == "source") {
      if (!s_.rings.count(n)) p_.fail(at, "undeclared ring '" + n + "'");
      return n;
    }
    return "";
  }

  void check_command(CommandStmt& c) {
    std::string ring;
    for (const std::string kw : {"ideal", "order", "tiebreak", "valuation", "poly"}) {
      if (!c.has(kw)) continue;
      std::string r = ring_of(c, kw);
      if (ring.empty()) {
        ring = r;
      } else if (r != ring) {
        p_.fail(loc_of(kw), "'" + c.at(kw).name + "' is in ring '" + r + "' but this command works in ring '" + ring + "'");
      }
    }
    if (c.verb == "kernel") {
      const std::string source = ring_of(c, "source");
      if (c.has("order") && ring_of(c, "order") != source)
        p_.fail(loc_of("order"), "kernel order must belong to the source ring");
      const auto& targets = c.at("targets").names;
      const std::size_t need = s_.rings[source].vars.size();
      if (targets.size() != need)
        p_.fail(loc_of("targets"), "kernel needs " + std::to_string(need) + " targets (one per variable of '" + source +
                                       "'), got " + std::to_string(targets.size()));
      std::string target_ring;
      for (const auto& t : targets) {
        auto it = s_.polys.find(t);
        if (it == s_.polys.end()) p_.fail(loc_of("targets"), "undeclared polynomial '" + t + "'");
        if (target_ring.empty()) target_ring = it->second.ring;
        if (it->second.ring != target_ring) p_.fail(loc_of("targets"), "kernel targets must share one ring");
      }
      s_.ideals.emplace(c.at("as").name, IdealBinding{source, std::nullopt});
    }
    if (c.verb == "subduct") {
      for (const auto& b : c.at("basis").names) {
        auto it = s_.polys.find(b);
        if (it == s_.polys.end()) p_.fail(loc_of("basis"), "undeclared polynomial '" + b + "'");
        if (it->second.ring != ring) p_.fail(loc_of("basis"), "basis element '" + b + "' is not in ring '" + ring + "'");
      }
    }
    if (c.verb == "sagbi-vars" && c.has("valuation") != c.has("tiebreak"))
      p_.fail(c.where, "sagbi-vars takes 'valuation' and 'tiebreak' together");
    if (c.verb == "nobody-alg1") {
      bool gb_path = c.has("ideal") || c.has("valuation") || c.has("order");
      bool lattice_path = c.has("lattice") || c.has("degrees");
      if (gb_path == lattice_path)
        p_.fail(c.where, "nobody-alg1 takes either 'ideal valuation order' or 'lattice degrees'");
      if (gb_path && !(c.has("ideal") && c.has("valuation") && c.has("order")))
        p_.fail(c.where, "nobody-alg1 needs all of 'ideal', 'valuation' and 'order'");
      if (lattice_path) {
        if (!(c.has("lattice") && c.has("degrees"))) p_.fail(c.where, "nobody-alg1 needs both 'lattice' and 'degrees'");
        const auto& L = c.at("lattice").matrix;
        const std::size_t m = c.at("degrees").vector.size();
        if (L.rows() > 0 && L.cols() != m)
          p_.fail(loc_of("lattice"), "lattice generators have length " + std::to_string(L.cols()) + ", degrees have " +
                                         std::to_string(m));
      }
    }
    arg_locations_.clear();
  }

  Parser p_;
  Session s_;
  std::string current_;
  std::set<std::string> declared_;
  std::map<std::string, SourceLocation> arg_locations_;
};

std::string order_kind_text(const OrderStmt& o) {
  switch (o.kind) {
    case OrderStmt::Kind::lex: return "lex";
    case OrderStmt::Kind::grlex: return "grlex";
    case OrderStmt::Kind::grevlex: return "grevlex";
    case OrderStmt::Kind::weight: return "weight " + matrix_text(o.weights) + " tiebreak " + o.tiebreak;
    case OrderStmt::Kind::valuation: return "valuation " + o.valuation + " tiebreak " + o.tiebreak;
  }
  return "";
}

std::string arg_text(const Arg& a) {
  switch (a.kind) {
    case Arg::Kind::name: return a.name;
    case Arg::Kind::names: return "[" + join(a.names, ", ") + "]";
    case Arg::Kind::matrix: return matrix_text(a.matrix);
    case Arg::Kind::vector: return vector_text(a.vector);
    case Arg::Kind::number: return std::to_string(a.number);
  }
  return "";
}

}  // namespace

Session parse_session(std::string_view text) { return SessionBuilder(text).run(); }

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  Parser p(text);
  Polynomial f = p.expression(vars.size(), variables_only(vars));
  if (!p.at_end()) p.fail("unexpected trailing input" + p.describe_found());
  return f;
}

std::string print_statement(const Session& s, const Statement& st) {
  struct Visitor {
    const Session& s;
    std::string operator()(const RingStmt& r) const { return "ring " + r.name + " vars " + join(r.vars, " ") + ";"; }
    std::string operator()(const UseStmt& u) const { return "use " + u.ring + ";"; }
    std::string operator()(const OrderStmt& o) const { return "order " + o.name + " " + order_kind_text(o) + ";"; }
    std::string operator()(const PolyStmt& p) const {
      const auto& b = s.polys.at(p.name);
      return "poly " + p.name + " = " + to_string(b.value, s.rings.at(b.ring).vars) + ";";
    }
    std::string operator()(const IdealStmt& i) const { return "ideal " + i.name + " = [" + join(i.generators, ", ") + "];"; }
    std::string operator()(const GradingStmt& g) const { return "grading " + g.name + " = " + vector_text(g.degrees) + ";"; }
    std::string operator()(const ValuationStmt& v) const {
      std::string out = "valuation " + v.name + " matrix " + matrix_text(v.matrix) + " valueorder " + matrix_text(v.value_order);
      if (v.grading) out += " degrees " + *v.grading;
      if (v.degrees) out += " degrees " + vector_text(*v.degrees);
      return out + ";";
    }
    std::string operator()(const CommandStmt& c) const {
      std::string out = c.verb;
      for (const auto& k : command_signatures().at(c.verb)) {
        auto it = c.args.find(k.keyword);
        if (it != c.args.end()) out += " " + k.keyword + " " + arg_text(it->second);
      }
      return out + ";";
    }
  };
  return std::visit(Visitor{s}, st);
}

std::string print_session(const Session& s) {
  std::string out;
  for (const auto& st : s.statements) out += print_statement(s, st) + "\n";
  return out;
}

}  // namespace khb
