#include "sgk/freealg.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace sgk {

// ---------------------------------------------------------------- generators

void GeneratorTable::add(const std::string& name, int degree) {
  if (index_of(name)) throw std::invalid_argument("duplicate generator '" + name + "'");
  if (degree < 1) throw std::invalid_argument("generator '" + name + "' must have degree >= 1");
  names_.push_back(name);
  degrees_.push_back(degree);
}

int GeneratorTable::max_degree() const {
  int d = 0;
  for (int x : degrees_) d = std::max(d, x);
  return d;
}

std::optional<GenIndex> GeneratorTable::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<GenIndex>(it - names_.begin());
}

int word_degree(const Word& w, const GeneratorTable& gens) {
  int d = 0;
  for (GenIndex g : w) d += gens.degree(g);
  return d;
}

bool is_sorted_word(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

std::strong_ordering compare_words(const Word& a, const Word& b, const GeneratorTable& gens) {
  if (auto c = word_degree(a, gens) <=> word_degree(b, gens); c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// ------------------------------------------------------------------ monomial

Monomial Monomial::from_word(const Word& w, const GeneratorTable& gens) {
  Monomial m = one(gens.size());
  for (GenIndex g : w) {
    ++m.exponents.at(g);
    m.degree += gens.degree(g);
  }
  return m;
}

Monomial Monomial::generator(GenIndex g, const GeneratorTable& gens) { return from_word(Word{g}, gens); }

Word Monomial::to_word() const {
  Word w;
  for (GenIndex i = 0; i < exponents.size(); ++i) w.insert(w.end(), exponents[i], i);
  return w;
}

std::size_t Monomial::length() const {
  std::size_t n = 0;
  for (auto e : exponents) n += e;
  return n;
}

// ------------------------------------------------------------------- element

Element Element::constant(const Scalar& c, std::size_t ngens, const Field& f) {
  Element e;
  e.add_term(Monomial::one(ngens), c, f);
  return e;
}

Element Element::monomial(const Monomial& m, const Scalar& c) {
  Element e;
  if (sgn(c) != 0) e.terms_.emplace(m, c);
  return e;
}

int Element::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree; }
int Element::min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree; }

bool Element::is_homogeneous() const { return terms_.empty() || max_degree() == min_degree(); }

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(const Monomial& m, const Scalar& c, const Field& f) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, f.from_rational(c));
  if (!inserted) {
    it->second = f.add(it->second, c);
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Element::add_scaled(const Element& other, const Scalar& c, const Field& f) {
  if (sgn(c) == 0) return;
  for (const auto& [m, v] : other.terms_) add_term(m, f.mul(v, c), f);
}

Element Element::scaled(const Scalar& c, const Field& f) const {
  Element r;
  r.add_scaled(*this, c, f);
  return r;
}

Element Element::plus(const Element& o, const Field& f) const {
  Element r = *this;
  r.add_scaled(o, 1, f);
  return r;
}

Element Element::minus(const Element& o, const Field& f) const {
  Element r = *this;
  r.add_scaled(o, f.from_int(-1), f);
  return r;
}

Element Element::component(int k) const {
  Element r;
  for (const auto& [m, c] : terms_)
    if (m.degree == k) r.terms_.emplace(m, c);
  return r;
}

std::map<int, Element> degree_decompose(const Element& a) {
  std::map<int, Element> out;
  for (const auto& [m, c] : a.terms()) out[m.degree].add_term(m, c, Field::rationals());
  return out;
}

// -------------------------------------------------------------- presentation

namespace detail {

/// Memo of m * g for PBW monomials m and generators g.
class ProductCache {
 public:
  std::optional<Element> find(const Monomial& m, GenIndex g) const {
    std::shared_lock lock(mu_);
    auto it = table_.find({m, g});
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const Monomial& m, GenIndex g, const Element& e) {
    std::unique_lock lock(mu_);
    table_.emplace(std::make_pair(m, g), e);
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<std::pair<Monomial, GenIndex>, Element> table_;
};

}  // namespace detail

Presentation::Presentation(std::string name, GeneratorTable gens, Field field, std::vector<RewriteRule> rules)
    : name_(std::move(name)),
      gens_(std::move(gens)),
      field_(field),
      rules_(std::move(rules)),
      cache_(std::make_shared<detail::ProductCache>()) {
  const std::size_t n = gens_.size();
  rhs_.assign(n, std::vector<std::optional<Element>>(n));
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  for (const auto& r : rules_) {
    if (r.high >= n || r.low >= n || r.high <= r.low)
      throw std::invalid_argument("rule lhs must be a descending generator pair");
    if (seen[r.high][r.low])
      throw std::invalid_argument("duplicate rule for " + gens_.name(r.high) + "*" + gens_.name(r.low));
    seen[r.high][r.low] = true;
    bool sorted = std::all_of(r.rhs.begin(), r.rhs.end(), [](const WordTerm& t) { return is_sorted_word(t.word); });
    if (!sorted) continue;
    Element e;
    for (const auto& t : r.rhs) e.add_term(Monomial::from_word(t.word, gens_), t.coefficient, field_);
    rhs_[r.high][r.low] = std::move(e);
  }
}

const Element& Presentation::rhs(GenIndex high, GenIndex low) const {
  const auto& slot = rhs_.at(high).at(low);
  if (!slot) throw std::logic_error("presentation '" + name_ + "' has no normal-form rule for this pair");
  return *slot;
}

bool Presentation::is_graded() const {
  for (const auto& r : rules_) {
    int d = gens_.degree(r.high) + gens_.degree(r.low);
    for (const auto& t : r.rhs)
      if (word_degree(t.word, gens_) != d) return false;
  }
  return true;
}

ValidationReport validate_presentation(const Presentation& p) {
  ValidationReport rep;
  const auto& gens = p.gens();
  auto issue = [&](std::string rule, std::string msg) {
    rep.ok = false;
    rep.issues.push_back({std::move(rule), std::move(msg)});
  };
  for (GenIndex i = 0; i < gens.size(); ++i)
    if (gens.degree(i) < 1) issue("gen " + gens.name(i), "degree must be >= 1");

  std::vector<std::vector<bool>> have(gens.size(), std::vector<bool>(gens.size(), false));
  for (const auto& r : p.rules()) {
    Word lhs{r.high, r.low};
    std::string label = to_string(lhs, gens);
    have[r.high][r.low] = true;
    int lhs_deg = word_degree(lhs, gens);
    for (const auto& t : r.rhs) {
      if (sgn(t.coefficient) == 0) continue;
      int d = word_degree(t.word, gens);
      if (d > lhs_deg)
        issue(label, "rhs monomial " + to_string(t.word, gens) + " has degree " + std::to_string(d) + " > " +
                         std::to_string(lhs_deg));
      if (!is_sorted_word(t.word))
        issue(label, "rhs monomial " + to_string(t.word, gens) + " is not in PBW normal form");
      else if (compare_words(t.word, lhs, gens) != std::strong_ordering::less)
        issue(label, "rhs monomial " + to_string(t.word, gens) + " is not smaller than the lhs in the word order");
    }
  }
  for (GenIndex j = 0; j < gens.size(); ++j)
    for (GenIndex i = 0; i < j; ++i)
      if (!have[j][i]) issue(gens.name(j) + "*" + gens.name(i), "missing rule for descending pair");
  return rep;
}

// ------------------------------------------------------------------ rewriting

namespace {

Element right_mul_monomial(const Monomial& m, GenIndex g, const Presentation& p);

Element right_mul_element(const Element& a, GenIndex g, const Presentation& p) {
  const Field& f = p.field();
  Element out;
  for (const auto& [m, c] : a.terms()) out.add_scaled(right_mul_monomial(m, g, p), c, f);
  return out;
}

Element right_mul_monomial(const Monomial& m, GenIndex g, const Presentation& p) {
  const auto& gens = p.gens();
  GenIndex last = 0;
  bool empty = true;
  for (GenIndex i = m.exponents.size(); i-- > 0;) {
    if (m.exponents[i] != 0) {
      last = i;
      empty = false;
      break;
    }
  }
  if (empty || g >= last) {
    Monomial r = m;
    ++r.exponents[g];
    r.degree += gens.degree(g);
    return Element::monomial(r);
  }
  if (auto hit = p.cache().find(m, g)) return *hit;

  // m * g = m' * (last * g) = m' * rhs(last, g)
  Monomial prefix = m;
  --prefix.exponents[last];
  prefix.degree -= gens.degree(last);
  const Field& f = p.field();
  Element out;
  for (const auto& [w, c] : p.rhs(last, g).terms()) {
    Element acc = Element::monomial(prefix);
    for (GenIndex letter : w.to_word()) acc = right_mul_element(acc, letter, p);
    out.add_scaled(acc, c, f);
  }
  p.cache().insert(m, g, out);
  return out;
}

}  // namespace

Element multiply_generator_right(const Element& a, GenIndex g, const Presentation& p) {
  return right_mul_element(a, g, p);
}

Element multiply_generator_left(GenIndex g, const Element& a, const Presentation& p) {
  return multiply(Element::monomial(Monomial::generator(g, p.gens())), a, p);
}

Element normal_form(const Word& w, const Presentation& p) {
  Element acc = Element::constant(1, p.ngens(), p.field());
  for (GenIndex g : w) acc = right_mul_element(acc, g, p);
  return acc;
}

Element normal_form(const WordPolynomial& w, const Presentation& p) {
  Element out;
  for (const auto& t : w) out.add_scaled(normal_form(t.word, p), t.coefficient, p.field());
  return out;
}

Element normal_form(const Element& e, const Presentation& p) {
  // Terms are already PBW monomials; normalizing coefficients is all that remains.
  Element out;
  for (const auto& [m, c] : e.terms()) out.add_term(m, c, p.field());
  return out;
}

Element multiply(const Element& a, const Element& b, const Presentation& p) {
  const Field& f = p.field();
  Element out;
  for (const auto& [mb, cb] : b.terms()) {
    Element acc = a;
    for (GenIndex letter : mb.to_word()) acc = right_mul_element(acc, letter, p);
    out.add_scaled(acc, cb, f);
  }
  return out;
}

Element power(const Element& a, int k, const Presentation& p) {
  Element acc = Element::constant(1, p.ngens(), p.field());
  for (int i = 0; i < k; ++i) acc = multiply(acc, a, p);
  return acc;
}

WindowProduct multiply_in_window(const Element& a, const Element& b, const Presentation& p, int bound) {
  WindowProduct r{multiply(a, b, p), false};
  r.overflow = r.value.max_degree() > bound;
  return r;
}

ConfluenceReport check_confluence(const Presentation& p, int bound) {
  ConfluenceReport rep;
  rep.bound = bound;
  const auto& gens = p.gens();
  const Field& f = p.field();
  for (GenIndex k = 0; k < gens.size(); ++k)
    for (GenIndex j = 0; j < k; ++j)
      for (GenIndex i = 0; i < j; ++i) {
        Word w{k, j, i};
        if (word_degree(w, gens) > bound) continue;
        ++rep.checked;
        // (g_k g_j) g_i: rewrite the left pair first, then reduce fully.
        Element left;
        for (const auto& [m, c] : p.rhs(k, j).terms()) {
          Word ww = m.to_word();
          ww.push_back(i);
          left.add_scaled(normal_form(ww, p), c, f);
        }
        // g_k (g_j g_i)
        Element right;
        for (const auto& [m, c] : p.rhs(j, i).terms()) {
          Word ww{k};
          Word tail = m.to_word();
          ww.insert(ww.end(), tail.begin(), tail.end());
          right.add_scaled(normal_form(ww, p), c, f);
        }
        if (left != right) {
          rep.confluent = false;
          rep.unresolved.push_back({w, left, right});
        }
      }
  return rep;
}

// ------------------------------------------------------------------ printing

std::string to_string(const Monomial& m, const GeneratorTable& gens) {
  if (m.is_one()) return "1";
  std::string s;
  for (GenIndex i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += gens.name(i);
    if (m.exponents[i] > 1) s += "^" + std::to_string(m.exponents[i]);
  }
  return s;
}

std::string to_string(const Word& w, const GeneratorTable& gens) {
  if (w.empty()) return "1";
  std::string s;
  for (GenIndex g : w) {
    if (!s.empty()) s += "*";
    s += gens.name(g);
  }
  return s;
}

std::string to_string(const Element& e, const GeneratorTable& gens) {
  if (e.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Scalar a = abs(c);
    bool negative = sgn(c) < 0;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    if (m.is_one())
      s += a.get_str();
    else if (a == 1)
      s += to_string(m, gens);
    else
      s += a.get_str() + "*" + to_string(m, gens);
  }
  return s;
}

}  // namespace sgk
