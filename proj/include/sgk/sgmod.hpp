#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgk/sgcore.hpp"

namespace sgk {

/// Element of a free module: one ring coefficient per free generator.
using FreeElement = std::vector<Element>;

struct ModuleGenerator {
  std::string name;
  int degree = 0;
};

/// Windowed SG module: a vector-space window with one left action per ring
/// generator. A module over R/J is stored as an R-module together with the
/// ideal J that annihilates it.
class SGModule {
 public:
  SGModule(std::string name, RingPtr ring, Window window, std::vector<Action> actions,
           std::vector<ModuleGenerator> generators = {}, std::vector<Vector> generator_vectors = {},
           IdealPtr annihilator = nullptr);

  const std::string& name() const { return name_; }
  const SGRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const Window& window() const { return window_; }
  int max_degree() const { return window_.max_degree(); }
  std::size_t dim() const { return window_.dim(); }
  std::vector<std::size_t> dims() const { return window_.dims(); }

  const Action& action(GenIndex g) const { return actions_.at(g); }
  std::vector<const Action*> actions() const;

  /// Generator action; overflow when v touches a column with parts beyond D.
  ActionResult act(GenIndex g, const Vector& v) const;
  /// Action of a ring element, letter by letter. Any intermediate overflow
  /// makes the result unknown beyond its window part and raises the flag.
  ActionResult act(const Element& r, const Vector& v) const;
  /// Matrix of r acting on the window with parts beyond D dropped. Over a
  /// graded ring this is the action on the honest quotient M / M_{>D}.
  Matrix truncated_matrix(const Element& r) const;

  const std::vector<ModuleGenerator>& generators() const { return generators_; }
  /// Window vectors of the declared generators (empty vector if beyond D).
  const std::vector<Vector>& generator_vectors() const { return generator_vectors_; }
  /// Window vector of sum_i r_i * e_i.
  ActionResult element(const FreeElement& x) const;

  const IdealPtr& annihilator() const { return annihilator_; }

  /// First pair (rule, basis vector) where the actions break a ring
  /// relation on the window, ignoring columns that overflow.
  std::optional<std::string> relation_violation() const;

  /// Every action column is homogeneous of degree (basis degree + generator degree).
  bool is_graded() const;
  /// Some column of some action overflows.
  bool has_overflow() const;

  std::string vector_to_string(const Vector& v) const;

 private:
  std::string name_;
  RingPtr ring_;
  Window window_;
  std::vector<Action> actions_;
  std::vector<ModuleGenerator> generators_;
  std::vector<Vector> generator_vectors_;
  IdealPtr annihilator_;
};

using ModulePtr = std::shared_ptr<const SGModule>;

/// Same carrier and action, different name or annihilator.
ModulePtr with_annihilator(const SGModule& m, IdealPtr annihilator, std::string name);

/// Free SG module on the given generators, truncated at total degree D.
ModulePtr free_module(const RingPtr& r, const std::vector<ModuleGenerator>& gens, std::string name = "F");

/// R as a left module over itself.
ModulePtr regular_module(const RingPtr& r);

/// Quotient of the free module by the SG closure of the relations. The
/// closure is taken on a window padded by the largest generator degree so
/// that actions reaching just past D are reduced before truncation.
/// Throws WindowOverflow when a relation has degree above D.
ModulePtr module_from_presentation(const RingPtr& r, std::string name, const std::vector<ModuleGenerator>& gens,
                                   const std::vector<FreeElement>& relations, IdealPtr annihilator = nullptr);

/// Module given directly by basis vectors and generator actions.
/// images[g][j] is the image of basis vector j under generator g, in basis
/// coordinates. Throws std::invalid_argument if the ring relations fail.
ModulePtr explicit_module(const RingPtr& r, std::string name, const std::vector<ModuleGenerator>& basis,
                          const std::vector<std::vector<Vector>>& images, IdealPtr annihilator = nullptr);

/// Raised when a subspace offered as a submodule is not closed under the action.
class NotActionClosed : public std::invalid_argument {
 public:
  NotActionClosed(const std::string& what, std::string generator, std::string witness)
      : std::invalid_argument(what), generator_(std::move(generator)), witness_(std::move(witness)) {}
  const std::string& generator() const { return generator_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string generator_;
  std::string witness_;
};

struct SubmoduleCheck {
  bool sg = true;
  std::optional<Vector> element;    // element of N with a component outside N
  std::optional<Vector> component;  // that component
  std::string witness;
};

/// Span of `spanning` must be action-closed (up to overflow); then decides
/// whether it is degreewise. The spanning vectors are examined first, in
/// order, so witnesses are readable.
SubmoduleCheck is_sg_submodule(const std::vector<Vector>& spanning, const SGModule& m);

/// Three independent formulations of "N is an SG submodule" for an
/// action-closed window subspace N.
bool predicate_degreewise(const Echelon& n, const Window& w);
bool predicate_component_closed(const Echelon& n, const Window& w);
bool predicate_quotient_consistent(const Echelon& n, const Window& w);

struct QuotientModule {
  ModulePtr module;
  GradedMap projection;  // M -> M/N
  GradedMap section;     // standard lift M/N -> M
};

/// M/N with (M/N)_n = (M_n + N)/N. Throws NotSGClosed if N is not degreewise.
QuotientModule quotient_module(const ModulePtr& m, const GradedSubspace& n, std::string name = "");

struct SubmoduleModule {
  ModulePtr module;
  GradedMap inclusion;  // N -> M
};

/// N as a module in its own right, on the echelon basis of its slices.
/// Throws NotActionClosed if some exact product leaves N.
SubmoduleModule submodule_as_module(const ModulePtr& m, const GradedSubspace& n, std::string name = "");

struct LsgReport {
  bool lsg = true;
  int certified_to = 0;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // products that overflowed the window
  std::optional<std::string> witness;
};

/// R'_n M_m inside M_{n+m} for every window-certified R'_n basis element.
LsgReport is_lsg(const SGModule& m);

struct TorsionWitness {
  int n = 0;
  int t = 0;
};

struct TorsionReport {
  Echelon space;
  std::vector<Vector> basis;               // one vector per detected dimension
  std::vector<TorsionWitness> witnesses;   // (n, t) with R_{>=t}^n m = 0 for basis[i]
  std::optional<TorsionWitness> uniform;   // least (n, t) that kills the whole of T
  int bound = 0;
  bool degreewise = true;
  bool action_closed = true;
};

/// Elements killed by some power of some R_{>=t}, t, n in 1..D, certified by
/// exact products inside the window.
TorsionReport torsion(const SGModule& m);

/// Union over k <= k_max of the exact kernels of s^k acting on M.
Echelon kappa(const Element& s, int k_max, const SGModule& m);

/// {v : r . v in target for every r in rs}, restricted to vectors whose
/// products stay inside the window.
Echelon exact_preimage(const SGModule& m, const std::vector<Element>& rs, const Echelon& target);

/// Flat span intersected with each degree slice, summed back up.
Echelon degreewise_part(const Echelon& p, const Window& w);

}  // namespace sgk
