#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgk/functors.hpp"

namespace sgk {

enum class Status { Pass, Fail, Inconclusive };

std::string to_string(Status s);

/// S = {s^k : 0 <= k <= k_max} for a homogeneous s.
struct OreSetSpec {
  std::string name;
  RingPtr ring;
  Element s;
  int k_max = 0;

  /// k_max defaults to the largest power that fits in the window.
  static OreSetSpec powers(const RingPtr& r, Element s, std::string name = "S", int k_max = -1);
  int degree() const { return s.max_degree(); }
  bool non_trivial() const { return degree() >= 1; }
  Element power(int k) const;
};

/// s^k * r = u * s, verified by exact multiplication.
struct OreWitness {
  Element r;
  int k = 0;
  Element u;
};

struct OreReport {
  Status status = Status::Pass;
  int bound = 0;      // r ranges over window monomials of degree <= bound
  std::vector<OreWitness> witnesses;
  std::optional<std::string> failure;
};

/// Left Ore condition on the window: for every basis monomial r of degree
/// <= (D - deg s) / 2 the least k with s^k r in R s, with u.
OreReport check_left_ore(const OreSetSpec& spec);

struct GoodOreReport {
  Status status = Status::Pass;
  int bound = 0;
  std::vector<int> powers_in_r2;          // k with s^k verified in R''
  std::vector<OreWitness> witnesses;      // u in R', s^k r = u s
  std::optional<std::string> failure;
};

/// (i) s^k in R'' for every power in the window; (ii) for r in the R'
/// slices, s^k r = u s with u in R'.
GoodOreReport check_good_ore(const OreSetSpec& spec);

/// p = sum_s u_s x_s, verified by exact multiplication.
struct CoverCertificate {
  Element p;
  std::vector<Element> u;
};

struct SchematicResult {
  std::vector<Element> sample;
  Status status = Status::Pass;
  int t = 0;
  int m = 0;
  bool monotone_next_t = true;
  bool window_truncated = false;
  std::vector<CoverCertificate> certificates;
  std::optional<std::string> failure;
};

struct SchematicReport {
  Status status = Status::Pass;
  int bound = 0;
  std::vector<std::string> preconditions;  // failures of good-Ore / non-triviality
  std::vector<SchematicResult> tuples;
};

/// For each sample tuple (and the tuple of Ore generators) finds the least
/// (t, m), m first, with (R_{>=t})^m inside sum_s R x_s on the window.
SchematicReport check_schematic(const RingPtr& r, const std::vector<OreSetSpec>& ore_sets,
                                const std::vector<std::vector<Element>>& samples, int m_max = 3);

struct CompatibleDegree {
  int degree = 0;
  std::size_t image_dim = 0;     // dim f(R'_n)
  std::size_t quotient_dim = 0;  // dim (R/J)'_n
  bool equal = false;
  std::vector<Element> image_basis;  // r in R'_n whose images span f(R'_n)
};

struct CompatibleReport {
  Status status = Status::Pass;
  int bound = 0;
  std::vector<CompatibleDegree> degrees;
  std::optional<std::string> failure;
};

/// Window-certified (R/J)'_n computed inside R/J, by coordinates in the
/// standard monomials.
std::vector<Vector> quotient_prime_slice(const QuotientRing& q, int n);

CompatibleReport check_compatible(const QuotientContext& ctx);

/// g x = sum c_ij j_i p_j for every left generator g of (R_{>=t_x})^{n_x}.
struct StarCertificate {
  Element g;
  std::vector<Scalar> coefficients;
  std::vector<std::pair<Element, Element>> products;  // (j_i, p_j) with nonzero coefficient
};

struct StarItem {
  int t = 0;
  int n = 0;
  Element x;
  Status status = Status::Pass;
  int t_x = 0;
  int n_x = 0;
  std::vector<StarCertificate> certificates;
  std::string note;
};

struct StarReport {
  Status status = Status::Pass;
  int bound = 0;
  std::vector<StarItem> items;
  std::optional<std::string> failure;
};

struct StarBounds {
  std::vector<int> t_values{1, 2, 3};
  std::vector<int> n_values{1, 2, 3};
  int n_x_max = 3;
};

/// Condition (*): each x in J intersected with (R_{>=t})^n has some
/// (R_{>=t_x})^{n_x} x inside J (R_{>=t})^n.
StarReport check_star(const QuotientContext& ctx, const StarBounds& bounds = {});

/// Recomputes every claimed identity by exact multiplication.
bool verify(const OreReport& rep, const OreSetSpec& spec);
bool verify(const GoodOreReport& rep, const OreSetSpec& spec);
bool verify(const SchematicResult& res, const SGRing& r);
bool verify(const CompatibleReport& rep, const QuotientContext& ctx);
bool verify(const StarReport& rep, const QuotientContext& ctx);

/// kappa_S(M) after confirming S is left Ore; throws std::invalid_argument otherwise.
Echelon kappa_checked(const OreSetSpec& spec, const SGModule& m);

}  // namespace sgk
