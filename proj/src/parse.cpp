#include "sgk/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace sgk {

ParseError::ParseError(const std::string& source, int line, int column, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------- expressions

namespace {

WordPolynomial poly_mul(const WordPolynomial& a, const WordPolynomial& b, const Field& f) {
  WordPolynomial out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Word w = x.word;
      w.insert(w.end(), y.word.begin(), y.word.end());
      out.push_back({f.mul(x.coefficient, y.coefficient), std::move(w)});
    }
  return out;
}

class ExprParser {
 public:
  ExprParser(std::string_view text, const GeneratorTable& gens, const Field& f, const std::string& source, int line,
             int column)
      : text_(text), gens_(gens), field_(f), source_(source), line_(line), column_(column) {}

  WordPolynomial parse() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty expression");
    WordPolynomial out = expr();
    skip_ws();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(source_, line_, column_ + static_cast<int>(pos_), msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  WordPolynomial expr() {
    WordPolynomial out;
    bool first = true;
    while (true) {
      skip_ws();
      Scalar sign = 1;
      if (peek('+') || peek('-')) {
        if (text_[pos_] == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        break;
      }
      WordPolynomial t = term();
      for (auto& x : t) out.push_back({field_.mul(x.coefficient, field_.from_rational(sign)), std::move(x.word)});
      first = false;
      skip_ws();
      if (!(peek('+') || peek('-'))) break;
    }
    return out;
  }

  WordPolynomial term() {
    WordPolynomial out = factor();
    while (peek('*')) {
      ++pos_;
      out = poly_mul(out, factor(), field_);
    }
    return out;
  }

  WordPolynomial factor() {
    WordPolynomial base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      WordPolynomial out{{field_.from_int(1), {}}};
      for (int i = 0; i < e; ++i) out = poly_mul(out, base, field_);
      return out;
    }
    return base;
  }

  WordPolynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      WordPolynomial inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class num(std::string(text_.substr(start, pos_ - start)));
      mpz_class den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t ds = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (ds == pos_) fail("expected a denominator");
        den = mpz_class(std::string(text_.substr(ds, pos_ - ds)));
        if (den == 0) fail("zero denominator");
      }
      Scalar q(num, den);
      q.canonicalize();
      try {
        return {{field_.from_rational(q), {}}};
      } catch (const std::domain_error& e) {
        fail(e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\''))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto g = gens_.index_of(name);
      if (!g) {
        pos_ = start;
        fail("unknown generator '" + name + "'");
      }
      return {{field_.from_int(1), Word{*g}}};
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const GeneratorTable& gens_;
  const Field& field_;
  const std::string& source_;
  int line_;
  int column_;
  std::size_t pos_ = 0;
};

}  // namespace

WordPolynomial parse_word_polynomial(std::string_view text, const GeneratorTable& gens, const Field& f,
                                     const std::string& source, int line, int column) {
  return ExprParser(text, gens, f, source, line, column).parse();
}

Element parse_element(std::string_view text, const Presentation& p, const std::string& source, int line, int column) {
  return normal_form(parse_word_polynomial(text, p.gens(), p.field(), source, line, column), p);
}

std::vector<Element> parse_element_list(std::string_view text, const Presentation& p, const std::string& source) {
  std::vector<Element> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(parse_element(text.substr(start, i - start), p, source, 1, static_cast<int>(start) + 1));
      start = i + 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------- ring files

namespace {

struct Line {
  int number;
  std::string text;  // comment stripped
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int n = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++n;
    std::string line(text.substr(start, end - start));
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back({n, line});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

/// Splits "keyword rest" and returns the column (1-based) where rest begins.
std::pair<std::string, std::string> keyword(const std::string& line, int& rest_column) {
  std::size_t i = 0;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  std::size_t k = i;
  while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
  std::size_t r = k;
  while (r < line.size() && std::isspace(static_cast<unsigned char>(line[r]))) ++r;
  std::size_t e = line.size();
  while (e > r && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
  rest_column = static_cast<int>(r) + 1;
  return {line.substr(i, k - i), line.substr(r, e - r)};
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

/// "name : degree"
std::pair<std::string, int> parse_gen_decl(const std::string& rest, const std::string& source, int line, int col) {
  auto colon = rest.find(':');
  if (colon == std::string::npos) throw ParseError(source, line, col, "expected '<name> : <degree>'");
  std::string name = trim(rest.substr(0, colon));
  std::string deg = trim(rest.substr(colon + 1));
  if (!is_identifier(name)) throw ParseError(source, line, col, "invalid generator name '" + name + "'");
  int d = 0;
  try {
    std::size_t used = 0;
    d = std::stoi(deg, &used);
    if (used != deg.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ParseError(source, line, col + static_cast<int>(colon) + 1, "expected an integer degree");
  }
  return {name, d};
}

Field parse_field(const std::string& rest, const std::string& source, int line, int col) {
  if (rest == "QQ") return Field::rationals();
  if (rest.rfind("GF(", 0) == 0 && rest.back() == ')') {
    std::string p = rest.substr(3, rest.size() - 4);
    try {
      return Field::prime(std::stoull(p));
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, line, col, std::string(e.what()));
    }
  }
  throw ParseError(source, line, col, "field must be QQ or GF(p)");
}

struct Pending {
  int line;
  int column;
  std::string text;
};

}  // namespace

const IdealDecl& RingFile::ideal(const std::string& name) const {
  for (const auto& i : ideals)
    if (i.name == name) return i;
  throw std::invalid_argument("no ideal named '" + name + "'");
}

const OreDecl& RingFile::ore(const std::string& name) const {
  for (const auto& o : ores)
    if (o.name == name) return o;
  throw std::invalid_argument("no Ore set named '" + name + "'");
}

RingFile parse_ring_file(std::string_view text, const std::string& source) {
  std::string name;
  Field field;
  GeneratorTable gens;
  struct RuleText {
    GenIndex high, low;
    Pending rhs;
  };
  std::vector<RuleText> rules;
  struct IdealText {
    IdealDecl decl;
    std::vector<Pending> gens;
  };
  std::vector<IdealText> ideals;
  std::vector<std::pair<std::string, Pending>> ores;
  bool in_ideal = false;
  int last_line = 0;

  for (const auto& ln : split_lines(text)) {
    last_line = ln.number;
    int col = 1;
    auto [kw, rest] = keyword(ln.text, col);
    if (kw.empty()) continue;
    const int kwcol = static_cast<int>(ln.text.find(kw)) + 1;
    if (kw == "ring") {
      if (!name.empty()) throw ParseError(source, ln.number, kwcol, "only one ring per file");
      if (!is_identifier(rest)) throw ParseError(source, ln.number, col, "expected a ring name");
      name = rest;
      in_ideal = false;
    } else if (kw == "field") {
      field = parse_field(rest, source, ln.number, col);
      in_ideal = false;
    } else if (kw == "gen" && in_ideal) {
      ideals.back().gens.push_back({ln.number, col, rest});
    } else if (kw == "gen") {
      if (!rules.empty()) throw ParseError(source, ln.number, kwcol, "generators must be declared before rules");
      auto [g, d] = parse_gen_decl(rest, source, ln.number, col);
      if (d < 1) throw ParseError(source, ln.number, col, "generator degree must be >= 1");
      if (gens.index_of(g)) throw ParseError(source, ln.number, col, "duplicate generator '" + g + "'");
      gens.add(g, d);
    } else if (kw == "rel") {
      in_ideal = false;
      auto arrow = rest.find("->");
      if (arrow == std::string::npos) throw ParseError(source, ln.number, col, "expected '<gj>*<gi> -> <expression>'");
      std::string lhs = trim(rest.substr(0, arrow));
      auto star = lhs.find('*');
      if (star == std::string::npos) throw ParseError(source, ln.number, col, "rule left side must be <gj>*<gi>");
      std::string a = trim(lhs.substr(0, star)), b = trim(lhs.substr(star + 1));
      auto ga = gens.index_of(a), gb = gens.index_of(b);
      if (!ga) throw ParseError(source, ln.number, col, "unknown generator '" + a + "'");
      if (!gb) throw ParseError(source, ln.number, col + static_cast<int>(star) + 1, "unknown generator '" + b + "'");
      if (*ga <= *gb)
        throw ParseError(source, ln.number, col,
                         "rule left side must be a descending pair (" + a + " must come after " + b + ")");
      for (const auto& r : rules)
        if (r.high == *ga && r.low == *gb)
          throw ParseError(source, ln.number, col, "second rule for " + a + "*" + b);
      std::size_t rhs_start = arrow + 2;
      while (rhs_start < rest.size() && std::isspace(static_cast<unsigned char>(rest[rhs_start]))) ++rhs_start;
      rules.push_back({*ga, *gb, {ln.number, col + static_cast<int>(rhs_start), rest.substr(rhs_start)}});
    } else if (kw == "ore") {
      in_ideal = false;
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw ParseError(source, ln.number, col, "expected 'ore <Name> = powers(<expr>)'");
      std::string oname = trim(rest.substr(0, eq));
      if (!is_identifier(oname)) throw ParseError(source, ln.number, col, "invalid Ore set name");
      std::string body = trim(rest.substr(eq + 1));
      std::size_t body_col = rest.find(body, eq + 1);
      if (body.rfind("powers(", 0) != 0 || body.back() != ')')
        throw ParseError(source, ln.number, col + static_cast<int>(body_col), "expected powers(<expr>)");
      ores.push_back(
          {oname, {ln.number, col + static_cast<int>(body_col) + 7, body.substr(7, body.size() - 8)}});
    } else if (kw == "ideal") {
      std::istringstream ss(rest);
      std::string iname, in, ring;
      ss >> iname >> in >> ring;
      if (!is_identifier(iname) || in != "in" || ring.empty())
        throw ParseError(source, ln.number, col, "expected 'ideal <Name> in <Ring>'");
      if (!name.empty() && ring != name)
        throw ParseError(source, ln.number, col, "ideal refers to ring '" + ring + "' but this file defines '" + name + "'");
      for (const auto& i : ideals)
        if (i.decl.name == iname) throw ParseError(source, ln.number, col, "duplicate ideal '" + iname + "'");
      ideals.push_back({IdealDecl{iname, ring, Side::TwoSided, {}}, {}});
      in_ideal = true;
    } else if ((kw == "twosided" || kw == "left") && in_ideal) {
      if (!rest.empty()) throw ParseError(source, ln.number, col, "unexpected text after side marker");
      ideals.back().decl.side = kw == "left" ? Side::Left : Side::TwoSided;
    } else if (kw == "end" && in_ideal) {
      in_ideal = false;
    } else {
      throw ParseError(source, ln.number, kwcol, "unknown statement '" + kw + "'");
    }
  }
  if (name.empty()) throw ParseError(source, 1, 1, "missing 'ring <Name>'");
  if (gens.size() == 0) throw ParseError(source, last_line, 1, "ring has no generators");
  for (GenIndex hi = 0; hi < gens.size(); ++hi)
    for (GenIndex lo = 0; lo < hi; ++lo) {
      bool found = false;
      for (const auto& r : rules) found |= r.high == hi && r.low == lo;
      if (!found)
        throw ParseError(source, last_line, 1, "missing rule for " + gens.name(hi) + "*" + gens.name(lo));
    }
  std::vector<RewriteRule> rr;
  for (const auto& r : rules)
    rr.push_back({r.high, r.low, parse_word_polynomial(r.rhs.text, gens, field, source, r.rhs.line, r.rhs.column)});
  RingFile out;
  out.presentation = std::make_shared<const Presentation>(name, gens, field, std::move(rr));
  const Presentation& p = *out.presentation;
  for (auto& it : ideals) {
    for (const auto& g : it.gens) it.decl.generators.push_back(parse_element(g.text, p, source, g.line, g.column));
    out.ideals.push_back(std::move(it.decl));
  }
  for (auto& [oname, pend] : ores)
    out.ores.push_back({oname, parse_element(pend.text, p, source, pend.line, pend.column)});
  return out;
}

RingFile load_ring_file(const std::string& path) { return parse_ring_file(read_file(path), path); }

// -------------------------------------------------------------- module files

ModuleDecl parse_module_file(std::string_view text, const Presentation& ring, const std::string& source) {
  ModuleDecl decl;
  std::vector<Pending> rels;
  struct ActText {
    GenIndex g;
    std::string basis;
    Pending rhs;
  };
  std::vector<ActText> acts;
  for (const auto& ln : split_lines(text)) {
    int col = 1;
    auto [kw, rest] = keyword(ln.text, col);
    if (kw.empty()) continue;
    const int kwcol = static_cast<int>(ln.text.find(kw)) + 1;
    if (kw == "module") {
      std::istringstream ss(rest);
      std::string mname, over, target;
      ss >> mname >> over >> target;
      if (!is_identifier(mname) || over != "over" || target.empty())
        throw ParseError(source, ln.number, col, "expected 'module <Name> over <Ring>'");
      decl.name = mname;
      auto slash = target.find('/');
      decl.ring = target.substr(0, slash);
      if (slash != std::string::npos) decl.over_ideal = target.substr(slash + 1);
      if (decl.ring != ring.name())
        throw ParseError(source, ln.number, col,
                         "module is over '" + decl.ring + "' but the loaded ring is '" + ring.name() + "'");
    } else if (kw == "gen") {
      auto [g, d] = parse_gen_decl(rest, source, ln.number, col);
      if (d < 0) throw ParseError(source, ln.number, col, "module generator degree must be >= 0");
      if (ring.gens().index_of(g)) throw ParseError(source, ln.number, col, "'" + g + "' is a ring generator");
      for (const auto& e : decl.generators)
        if (e.name == g) throw ParseError(source, ln.number, col, "duplicate module generator '" + g + "'");
      decl.generators.push_back({g, d});
    } else if (kw == "rel") {
      rels.push_back({ln.number, col, rest});
    } else if (kw == "act") {
      // act <g> * <basis> = <combination of basis>
      auto eq = rest.find('=');
      auto star = rest.find('*');
      if (eq == std::string::npos || star == std::string::npos || star > eq)
        throw ParseError(source, ln.number, col, "expected 'act <g> * <basis> = <combination>'");
      std::string g = trim(rest.substr(0, star));
      std::string b = trim(rest.substr(star + 1, eq - star - 1));
      auto gi = ring.gens().index_of(g);
      if (!gi) throw ParseError(source, ln.number, col, "unknown ring generator '" + g + "'");
      std::size_t rc = eq + 1;
      while (rc < rest.size() && std::isspace(static_cast<unsigned char>(rest[rc]))) ++rc;
      acts.push_back({*gi, b, {ln.number, col + static_cast<int>(rc), rest.substr(rc)}});
    } else {
      throw ParseError(source, ln.number, kwcol, "unknown statement '" + kw + "'");
    }
  }
  if (decl.name.empty()) throw ParseError(source, 1, 1, "missing 'module <Name> over <Ring>'");
  if (!rels.empty() && !acts.empty())
    throw ParseError(source, acts.front().rhs.line, 1, "a module is given either by relations or by actions");

  // Module generators extend the ring alphabet; each relation term must end in one of them.
  GeneratorTable ext = ring.gens();
  for (const auto& e : decl.generators) ext.add(e.name, std::max(1, e.degree));
  const std::size_t ng = ring.gens().size();

  if (!acts.empty()) {
    decl.explicit_actions = true;
    const std::size_t nb = decl.generators.size();
    decl.images.assign(ng, std::vector<Vector>(nb, Vector(nb)));
    for (const auto& a : acts) {
      std::size_t j = nb;
      for (std::size_t i = 0; i < nb; ++i)
        if (decl.generators[i].name == a.basis) j = i;
      if (j == nb) throw ParseError(source, a.rhs.line, 1, "unknown basis element '" + a.basis + "'");
      WordPolynomial wp = parse_word_polynomial(a.rhs.text, ext, ring.field(), source, a.rhs.line, a.rhs.column);
      Vector img(nb);
      for (const auto& t : wp) {
        if (t.word.empty() && sgn(t.coefficient) == 0) continue;
        if (t.word.size() != 1 || t.word[0] < ng)
          throw ParseError(source, a.rhs.line, a.rhs.column, "action images must be combinations of basis elements");
        img[t.word[0] - ng] = ring.field().add(img[t.word[0] - ng], t.coefficient);
      }
      decl.images[a.g][j] = std::move(img);
    }
    return decl;
  }

  for (const auto& r : rels) {
    WordPolynomial wp = parse_word_polynomial(r.text, ext, ring.field(), source, r.line, r.column);
    FreeElement x(decl.generators.size());
    for (const auto& t : wp) {
      if (t.word.empty() || t.word.back() < ng)
        throw ParseError(source, r.line, r.column, "each relation term must end in exactly one module generator");
      for (std::size_t i = 0; i + 1 < t.word.size(); ++i)
        if (t.word[i] >= ng)
          throw ParseError(source, r.line, r.column, "each relation term must end in exactly one module generator");
      Word prefix(t.word.begin(), t.word.end() - 1);
      x[t.word.back() - ng].add_scaled(normal_form(prefix, ring), t.coefficient, ring.field());
    }
    decl.relations.push_back(std::move(x));
  }
  return decl;
}

ModuleDecl load_module_file(const std::string& path, const Presentation& ring) {
  return parse_module_file(read_file(path), ring, path);
}

ModulePtr build_module(const RingPtr& r, const ModuleDecl& decl, IdealPtr annihilator) {
  if (decl.explicit_actions) return explicit_module(r, decl.name, decl.generators, decl.images, annihilator);
  std::vector<FreeElement> rels = decl.relations;
  if (annihilator) {
    // J * e_i for every window basis element of J.
    for (std::size_t e = 0; e < decl.generators.size(); ++e)
      for (const auto& j : annihilator->basis_elements()) {
        if (j.max_degree() + decl.generators[e].degree > r->max_degree()) continue;
        FreeElement x(decl.generators.size());
        x[e] = j;
        rels.push_back(std::move(x));
      }
  }
  return module_from_presentation(r, decl.name, decl.generators, rels, annihilator);
}

}  // namespace sgk
