#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sgk/sgmod.hpp"

namespace sgk {

/// The canonical map f: R -> R/J and everything needed to move modules along it.
struct QuotientContext {
  RingPtr ring;
  IdealPtr ideal;
  std::shared_ptr<const QuotientRing> quotient;
  const GradedMap& f() const { return quotient->canonical_map(); }
  /// Two-sided minimal generators of J on the window.
  std::vector<Element> ideal_generators;
};

/// Throws NotSGClosed when J is not an SG ideal.
QuotientContext make_context(const RingPtr& r, const IdealPtr& j);

// Functors act on windows truncated at D: products are taken with their
// parts beyond D dropped. Over a graded ring this is the genuine module
// M / M_{>D}, so every identity below is exact; over a non-graded ring
// the reports carry a truncation flag.

/// f_*: the same carrier viewed as an R-module. Requires J to act as zero.
ModulePtr restrict_scalars(const QuotientContext& ctx, const ModulePtr& m);

/// Throws std::invalid_argument with a witness if J does not act as zero on M.
void require_annihilated(const QuotientContext& ctx, const SGModule& m);

struct ShriekResult {
  ModulePtr module;      // f^!(M), an R/J-module
  GradedMap inclusion;   // f^!(M) -> M
  GradedSubspace space;  // inside M
};

/// Largest SG submodule of M killed by J.
ShriekResult shriek(const QuotientContext& ctx, const ModulePtr& m);

struct UpperStarResult {
  ModulePtr module;        // f^*(M) = M / <JM>^SG
  GradedMap projection;    // M -> f^*(M)
  GradedMap section;       // standard lift
  GradedSubspace killed;   // <JM>^SG
};

UpperStarResult upper_star(const QuotientContext& ctx, const ModulePtr& m);

/// Homogeneous (degree-preserving) module maps, as a canonical basis.
struct HomSpace {
  ModulePtr source;
  ModulePtr target;
  std::vector<GradedMap> basis;
  std::size_t dim() const { return basis.size(); }
};

HomSpace hom_sg(const ModulePtr& source, const ModulePtr& target);

/// phi commutes with every generator action (truncated semantics).
bool is_homomorphism(const GradedMap& phi, const SGModule& source, const SGModule& target);

/// Flattened block entries, the coordinates used for hom-space linear algebra.
Vector map_coordinates(const GradedMap& phi);

/// f^!(beta) for beta: M -> M', restricted to the shriek submodules.
GradedMap shriek_map(const ShriekResult& source, const ShriekResult& target, const GradedMap& beta, const Field& f);
/// f^*(alpha) for alpha: M -> M', induced on the quotients.
GradedMap upper_star_map(const UpperStarResult& source, const UpperStarResult& target, const GradedMap& alpha,
                         const Field& f);

struct SquareFailure {
  std::string variable;   // "M" or "N"
  std::size_t morphism;   // index into the sampled morphisms
  std::size_t element;    // index into the hom-space basis
  std::string detail;
};

struct AdjunctionReport {
  std::size_t left_dim = 0;   // Hom_{R/J}(M, f^!N)  or  Hom_R(M, f_*N)
  std::size_t right_dim = 0;  // Hom_R(f_*M, N)      or  Hom_{R/J}(f^*M, N)
  bool dimensions_equal = false;
  bool bijection = false;
  bool inverse_identities = false;  // the two composites are identities
  std::size_t squares_checked = 0;
  std::vector<SquareFailure> failures;
  bool truncated = false;

  bool ok() const { return dimensions_equal && bijection && inverse_identities && failures.empty(); }
};

struct AdjunctionOptions {
  /// Test hook: replaces mu by mu(g) + mu(b_0), which is not natural.
  bool corrupt = false;
};

/// (f_*, f^!): mu(g) = inclusion o g from Hom_{R/J}(M, f^!N) to Hom_R(f_*M, N).
AdjunctionReport verify_adjunction_shriek(const QuotientContext& ctx, const ModulePtr& m, const ModulePtr& n,
                                          AdjunctionOptions opts = {});

/// (f^*, f_*): lambda(h) = h o section from Hom_R(M, f_*N) to Hom_{R/J}(f^*M, N)
/// and lambda'(g) = g o projection back.
AdjunctionReport verify_adjunction_star(const QuotientContext& ctx, const ModulePtr& m, const ModulePtr& n,
                                        AdjunctionOptions opts = {});

}  // namespace sgk
