#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgk/field.hpp"

namespace sgk {

using GenIndex = std::size_t;

/// Ordered generator names with positive degrees. Declaration order is the
/// PBW order: normal monomials are x_0^{a_0} x_1^{a_1} ... x_{g-1}^{a_{g-1}}.
class GeneratorTable {
 public:
  GeneratorTable() = default;

  /// Throws std::invalid_argument on duplicate names or degree < 1.
  void add(const std::string& name, int degree);

  std::size_t size() const { return names_.size(); }
  const std::string& name(GenIndex i) const { return names_.at(i); }
  int degree(GenIndex i) const { return degrees_.at(i); }
  int max_degree() const;
  std::optional<GenIndex> index_of(const std::string& name) const;

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& degrees() const { return degrees_; }

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
};

/// Letters of a free-monoid word, as generator indices.
using Word = std::vector<GenIndex>;

int word_degree(const Word& w, const GeneratorTable& gens);
bool is_sorted_word(const Word& w);

/// Word order used to orient rules: weighted degree, then length, then
/// lexicographic in generator order. Admissible and well-founded.
std::strong_ordering compare_words(const Word& a, const Word& b, const GeneratorTable& gens);

/// PBW monomial stored by exponent vector. Ordered degree-first, then
/// lexicographically on the exponent vector.
struct Monomial {
  int degree = 0;
  std::vector<std::uint16_t> exponents;

  static Monomial one(std::size_t ngens) { return Monomial{0, std::vector<std::uint16_t>(ngens, 0)}; }
  static Monomial from_word(const Word& w, const GeneratorTable& gens);
  static Monomial generator(GenIndex g, const GeneratorTable& gens);

  Word to_word() const;
  bool is_one() const { return degree == 0; }
  std::size_t length() const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

/// Exact linear combination of PBW monomials. Zero coefficients are never
/// stored, so equal elements have identical term maps.
class Element {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  Element() = default;
  static Element constant(const Scalar& c, std::size_t ngens, const Field& f);
  static Element monomial(const Monomial& m, const Scalar& c = 1);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Largest monomial degree, or -1 for zero.
  int max_degree() const;
  int min_degree() const;
  bool is_homogeneous() const;
  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c, const Field& f);
  void add_scaled(const Element& other, const Scalar& c, const Field& f);

  Element scaled(const Scalar& c, const Field& f) const;
  Element plus(const Element& o, const Field& f) const;
  Element minus(const Element& o, const Field& f) const;

  /// Terms of degree exactly k.
  Element component(int k) const;

  bool operator==(const Element&) const = default;

 private:
  TermMap terms_;
};

/// Degree components; keys are exactly the degrees present.
std::map<int, Element> degree_decompose(const Element& a);

/// Non-normalized noncommutative polynomial, as parsed.
struct WordTerm {
  Scalar coefficient;
  Word word;
};
using WordPolynomial = std::vector<WordTerm>;

/// g_high * g_low -> rhs, with high > low in generator order.
struct RewriteRule {
  GenIndex high = 0;
  GenIndex low = 0;
  WordPolynomial rhs;
};

namespace detail {
class ProductCache;
}

/// Quadratic PBW-type presentation: one rule per descending generator pair.
class Presentation {
 public:
  Presentation(std::string name, GeneratorTable gens, Field field, std::vector<RewriteRule> rules);

  const std::string& name() const { return name_; }
  const GeneratorTable& gens() const { return gens_; }
  const Field& field() const { return field_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::size_t ngens() const { return gens_.size(); }

  /// Normal-form right-hand side of g_high * g_low. Requires a validated presentation.
  const Element& rhs(GenIndex high, GenIndex low) const;

  /// True when every rule's rhs is homogeneous of the lhs degree.
  bool is_graded() const;

  detail::ProductCache& cache() const { return *cache_; }

 private:
  std::string name_;
  GeneratorTable gens_;
  Field field_;
  std::vector<RewriteRule> rules_;
  std::vector<std::vector<std::optional<Element>>> rhs_;  // [high][low]
  std::shared_ptr<detail::ProductCache> cache_;
};

struct ValidationIssue {
  std::string rule;  // "y*x" or "gen y"
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;
};

/// Positivity of generator degrees, one rule per descending pair, rhs in PBW
/// normal form, degree non-increase, and orientation in the word order.
ValidationReport validate_presentation(const Presentation& p);

/// Reduces by the rewriting rules. Every rewrite replaces g_j g_i (j > i) by
/// words strictly smaller in the (degree, length, lex) order, which is
/// admissible and well-founded, so reduction terminates.
Element normal_form(const Word& w, const Presentation& p);
Element normal_form(const WordPolynomial& w, const Presentation& p);
Element normal_form(const Element& e, const Presentation& p);

Element multiply(const Element& a, const Element& b, const Presentation& p);
Element multiply_generator_right(const Element& a, GenIndex g, const Presentation& p);
Element multiply_generator_left(GenIndex g, const Element& a, const Presentation& p);
Element power(const Element& a, int k, const Presentation& p);

/// Product with a flag raised when some monomial exceeds degree `bound`.
struct WindowProduct {
  Element value;
  bool overflow = false;
};
WindowProduct multiply_in_window(const Element& a, const Element& b, const Presentation& p, int bound);

struct Overlap {
  Word word;
  Element left;   // (g_k g_j) g_i reduced
  Element right;  // g_k (g_j g_i) reduced
};

struct ConfluenceReport {
  bool confluent = true;
  int checked = 0;
  int bound = 0;
  std::vector<Overlap> unresolved;
};

/// Resolves every overlap g_k g_j g_i (k > j > i) of total degree <= bound.
ConfluenceReport check_confluence(const Presentation& p, int bound);

std::string to_string(const Monomial& m, const GeneratorTable& gens);
std::string to_string(const Element& e, const GeneratorTable& gens);
std::string to_string(const Word& w, const GeneratorTable& gens);

}  // namespace sgk
