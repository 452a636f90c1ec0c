#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgk/freealg.hpp"
#include "sgk/glin.hpp"

namespace sgk {

/// PBW monomials of total degree k, in ascending term order.
std::vector<Monomial> monomials_of_degree(const GeneratorTable& gens, int k);

using SparseColumn = std::vector<std::pair<std::size_t, Scalar>>;

/// Linear action of one ring generator on a window, column by column.
/// overflow[j] is set when the image of basis vector j has a nonzero part
/// beyond the window (that part is dropped from the column).
struct Action {
  std::vector<SparseColumn> columns;
  std::vector<char> overflow;

  std::size_t dim() const { return columns.size(); }
};

struct ActionResult {
  Vector value;
  bool overflow = false;
};

/// Applies an action; overflow is raised when v touches an overflowing column.
ActionResult apply(const Action& a, const Vector& v, const Field& f);

/// Dense matrix of an action (overflowed parts dropped).
Matrix to_matrix(const Action& a);

/// Semi-graded ring presented by a validated, window-confluent PBW
/// presentation, truncated to degrees 0..D.
class SGRing {
 public:
  /// Throws std::invalid_argument if validation or confluence up to D fails.
  SGRing(std::shared_ptr<const Presentation> p, int max_degree);

  const Presentation& presentation() const { return *presentation_; }
  std::shared_ptr<const Presentation> presentation_ptr() const { return presentation_; }
  const GeneratorTable& gens() const { return presentation_->gens(); }
  const Field& field() const { return presentation_->field(); }
  const std::string& name() const { return presentation_->name(); }
  int max_degree() const { return window_.max_degree(); }
  const Window& window() const { return window_; }
  bool is_graded() const { return presentation_->is_graded(); }

  const std::vector<Monomial>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(const Monomial& m) const;

  /// Throws WindowOverflow when e has terms beyond D.
  Vector to_vector(const Element& e) const;
  /// Drops terms beyond D; reports whether any were dropped.
  ActionResult to_vector_truncated(const Element& e) const;
  Element to_element(const Vector& v) const;

  Element multiply(const Element& a, const Element& b) const;
  Element generator(GenIndex g) const;
  Element one() const;

  const Action& left_action(GenIndex g) const { return left_.at(g); }
  const Action& right_action(GenIndex g) const { return right_.at(g); }
  std::vector<const Action*> left_actions() const;
  std::vector<const Action*> two_sided_actions() const;

 private:
  std::shared_ptr<const Presentation> presentation_;
  Window window_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
  std::vector<Action> left_;
  std::vector<Action> right_;
};

using RingPtr = std::shared_ptr<const SGRing>;

/// Least subspace containing X that holds the homogeneous components of
/// its elements and is stable under the given actions (as far as the
/// window allows). Flagged truncated when some product left the window.
GradedSubspace sg_closure(const std::vector<Vector>& x, const Window& w, const std::vector<const Action*>& actions,
                          const Field& f);

/// Span of X closed under the actions only (no components). Products that
/// would leave the window are skipped and flag the result as truncated.
struct FlatSubspace {
  Echelon space;
  bool truncated = false;
};
FlatSubspace action_closure(const std::vector<Vector>& x, std::size_t dim, const std::vector<const Action*>& actions,
                            const Field& f);

/// Smallest generating set (under the actions) of the span of `vectors`,
/// chosen greedily in ascending degree order.
std::vector<Vector> minimal_generators(const std::vector<Vector>& vectors, const Window& w,
                                       const std::vector<const Action*>& actions, const Field& f);

/// Basis of R_n as ring elements. Throws WindowOverflow for n > D.
std::vector<Element> component(const SGRing& r, int n);

enum class Side { TwoSided, Left };

/// SG ideal (or left SG ideal) of the window.
struct SGIdeal {
  std::string name;
  RingPtr ring;
  Side side = Side::TwoSided;
  std::vector<Element> generators;
  GradedSubspace space;

  std::vector<Element> basis_elements() const;
};

using IdealPtr = std::shared_ptr<const SGIdeal>;

/// <X>^SG as a two-sided (or left) ideal.
SGIdeal sg_ideal(const RingPtr& r, const std::vector<Element>& gens, Side side, std::string name = "J");

/// R_{>=t}: SG closure of all window monomials of degree >= t.
SGIdeal r_geq(const RingPtr& r, int t);

/// Why r (homogeneous of degree n) is not in R'_n (or R''_n): the first
/// window basis element h whose product with r is inhomogeneous.
std::optional<std::string> prime_violation(const SGRing& r, const Element& x, bool double_prime);

/// Window-certified slice R'_n (or R''_n).
struct RPrimeSlice {
  int degree = 0;
  bool double_prime = false;
  int certified_to = 0;           // products checked against all h with deg h <= certified_to
  std::vector<Vector> basis;      // vectors in R_n coordinates (slice coordinates)
  std::vector<Element> elements;  // the same, as ring elements
  /// First basis monomial of R_n whose product failed, with the offending h
  /// and product, when the slice is smaller than R_n.
  std::optional<std::string> witness;
};

RPrimeSlice r_prime(const SGRing& r, int n);
RPrimeSlice r_double_prime(const SGRing& r, int n);

/// Span of products of n window basis elements of I (two-sided closure
/// applied); not degreewise in general.
FlatSubspace ideal_power(const SGRing& r, const SGIdeal& ideal, int n);

/// R/J on the window: standard monomials per degree with induced product.
class QuotientRing {
 public:
  QuotientRing(RingPtr ring, IdealPtr ideal);

  const SGRing& ring() const { return *ring_; }
  RingPtr ring_ptr() const { return ring_; }
  const SGIdeal& ideal() const { return *ideal_; }
  IdealPtr ideal_ptr() const { return ideal_; }
  const Window& window() const { return window_; }
  std::vector<std::size_t> dims() const { return window_.dims(); }

  /// Canonical homogeneous surjection R -> R/J on the window.
  const GradedMap& canonical_map() const { return canonical_; }
  /// Standard-monomial lift R/J -> R.
  const GradedMap& section() const { return section_; }

  Vector project(const Vector& ring_vector) const;
  Vector multiply(const Vector& a, const Vector& b) const;
  std::optional<Vector> multiply_in_window(const Vector& a, const Vector& b) const;

  const std::vector<std::size_t>& standard_columns() const { return standard_; }

 private:
  RingPtr ring_;
  IdealPtr ideal_;
  Window window_;
  std::vector<std::size_t> standard_;  // ring window indices of the standard monomials
  GradedMap canonical_;
  GradedMap section_;
};

/// Thrown when an ideal handed to quotient_ring is not SG-closed.
class NotSGClosed : public std::invalid_argument {
 public:
  NotSGClosed(const std::string& what, std::string witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

std::shared_ptr<const QuotientRing> quotient_ring(const RingPtr& r, const IdealPtr& j);

/// Verifies a flat two-sided ideal subspace is action-closed and
/// degreewise, then builds R/J. Throws NotSGClosed with a witness.
std::shared_ptr<const QuotientRing> quotient_ring(const RingPtr& r, const Echelon& flat_ideal);

/// Windowed model of S^{-1}R for S = {s^k}, s homogeneous and normal.
class Localization {
 public:
  struct Fraction {
    int power = 0;  // s^{-power} * numerator
    Element numerator;
  };

  const SGRing& ring() const { return *ring_; }
  const Element& denominator() const { return s_; }
  int max_power() const { return k_max_; }

  /// Degree of s^{-k} f for homogeneous f.
  int degree(const Fraction& q) const;
  /// Numerator at the common denominator s^{k_max}.
  Element common_numerator(const Fraction& q) const;
  bool equal(const Fraction& a, const Fraction& b) const;
  /// (s^{-a} f)(s^{-b} g) = s^{-(a+b)} phi^b(f) g with phi(h) = s h s^{-1}.
  Fraction multiply(const Fraction& a, const Fraction& b) const;

  /// Basis of (S^{-1}R)_n among fractions s^{-k} m, k <= k_max, with
  /// numerators of degree <= D.
  std::vector<Fraction> component(int n) const;
  int min_degree() const;

  /// twist()[g] solves s * h = g * s; conjugation()[g] solves h * s = s * g.
  const std::vector<Element>& twist() const { return twist_; }
  const std::vector<Element>& conjugation() const { return conjugation_; }

 private:
  friend std::shared_ptr<const Localization> localize_at_normal(const RingPtr&, const Element&, int);
  Localization() = default;

  Element conjugate(const Element& f, int times) const;

  RingPtr ring_;
  Element s_;
  int k_max_ = 0;
  std::vector<Element> twist_;        // s * twist[g] = g * s
  std::vector<Element> conjugation_;  // conjugation[g] * s = s * g
};

class LocalizationError : public std::invalid_argument {
 public:
  LocalizationError(const std::string& what, std::string witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

/// Throws LocalizationError when s is not homogeneous, not normal on the
/// window, or a zero divisor on the window.
std::shared_ptr<const Localization> localize_at_normal(const RingPtr& r, const Element& s, int k_max);

}  // namespace sgk
