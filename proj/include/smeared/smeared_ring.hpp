#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smeared/errors.hpp"
#include "smeared/ideal.hpp"

namespace smeared {

/// Ambient ring S and ideals I_1..I_n describing R = ∩_i (Q + I_i). Ideal indices are
/// 0-based throughout the library.
struct SmearedRingConfig {
  RingPtr ring;
  std::vector<Ideal> ideals;
  /// Per ideal; missing entries count as not asserted.
  std::vector<bool> radical_asserted;
};

struct Violation {
  enum class Kind { EmptyFamily, WrongRing, Zero, NotProper, Maximal, NotCoprime, NotRadical };

  Kind kind;
  std::vector<std::size_t> ideals;
  std::string message;
};

std::string to_string(Violation::Kind kind);

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Checks that every ideal is nonzero, proper and non-maximal and that the ideals are
/// pairwise coprime. With `spot_check_radical`, ideals flagged radical are probed with
/// radical_member on low-degree monomials and on the squarefree parts of their univariate
/// elimination polynomials; a probe in the radical but not in the ideal is a violation.
ValidationReport validate(const SmearedRingConfig& config, bool spot_check_radical = false);

class ValidationFailed : public Error {
 public:
  explicit ValidationFailed(ValidationReport report)
      : Error("invalid configuration: " + report.to_string()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

struct MembershipCertificate {
  bool member = false;
  /// alpha_i with f - alpha_i in I_i, one per ideal, when member.
  std::vector<Rational> constants;
  /// First ideal where the normal form of f is not constant, when not a member.
  std::optional<std::size_t> witness_index;
  std::optional<Polynomial> nonconstant_remainder;
};

/// a + b = 1 with a in I_i and b in every other ideal.
struct PartitionWitness {
  std::size_t index;
  Polynomial a;
  Polynomial b;
  MembershipCertificate a_membership;
  MembershipCertificate b_membership;
};

/// Certifies that g*R ⊂ (g, gh)*R ⊂ ... ⊂ (g, .., g*h^length)*R is strictly increasing.
/// evidence[j] is the normal form of h^j modulo I_index, j = 0..length.
struct ChainWitness {
  std::size_t index;
  Polynomial g;
  Polynomial h;
  std::size_t length;
  std::vector<Polynomial> evidence;
};

struct Verdicts {
  bool noetherian;
  bool depicted_by_S;
  std::vector<std::size_t> per_ideal_dims;
  /// Lower bound on the geometric dimension of each smeared point: dim S/I_i.
  std::vector<std::size_t> gdim_lower_bounds;
  /// False if some ideal was not asserted radical; the noetherian direction assumes it.
  bool radicality_asserted;
};

struct LocusEvidence {
  std::size_t ideal;
  /// Index of a generator that does not vanish at the point, if any.
  std::optional<std::size_t> nonvanishing_generator;
  /// Value of that generator at the point (zero when all vanish).
  Rational value;
};

struct LocusResult {
  bool in_locus;
  std::vector<LocusEvidence> evidence;
};

struct ConstancyReport {
  std::size_t index;
  Rational alpha;
  std::vector<Rational> values;
  /// Positions in the point list where the value differs from alpha.
  std::vector<std::size_t> mismatches;

  bool consistent() const { return mismatches.empty(); }
};

/// Normal form of h^j modulo the ideal for j = 0..length, with the index of the first
/// step whose new power lies in the span of the earlier ones (nullopt when all steps are
/// strict).
struct PowerSpan {
  std::vector<Polynomial> normal_forms;
  std::optional<std::size_t> first_dependent_step;
};
PowerSpan power_span(const Ideal& ideal, const Polynomial& h, std::size_t length);

/// Picks h with ideal ∩ Q[h] = 0: a variable when possible, otherwise one of at most 16
/// small random integer linear forms. nullopt if none is found.
std::optional<Polynomial> select_chain_element(const Ideal& ideal);

/// Chain witness for R = Q + I. Throws HypothesisFailure when dim S/I = 0 and
/// InternalError if the strictness certificate cannot be completed.
ChainWitness chain_witness(const Ideal& ideal, std::size_t length, std::size_t index = 0);

/// R = ∩_i (Q + I_i) for a validated configuration. Immutable; all queries are const and
/// safe to run concurrently.
class SmearedRing {
 public:
  /// Throws ValidationFailed if validate() reports any violation.
  explicit SmearedRing(SmearedRingConfig config);

  const SmearedRingConfig& config() const { return config_; }
  const RingPtr& ring() const { return config_.ring; }
  std::size_t num_ideals() const { return config_.ideals.size(); }
  const Ideal& ideal(std::size_t i) const;

  MembershipCertificate member(const Polynomial& f) const;
  /// The image of f under R -> R/(I_i ∩ R) = Q. Throws NotMember.
  Rational evaluate_at_smeared_point(const Polynomial& f, std::size_t i) const;
  /// Requires at least two ideals.
  PartitionWitness partition_of_unity(std::size_t i) const;

  Verdicts noetherian_verdict() const { return verdicts(); }
  Verdicts depiction_verdict() const { return verdicts(); }
  Verdicts verdicts() const;
  std::vector<std::size_t> dims() const;

  /// Point outside every Z(I_i)?
  LocusResult locus_member(const std::vector<Rational>& point) const;
  ChainWitness chain_witness(std::size_t i, std::size_t length) const;
  /// Basis of {f in R : deg f <= d}.
  std::vector<Polynomial> r_basis(std::size_t degree) const;
  /// Throws PreconditionError if a point is not on Z(I_i), NotMember if f is not in R.
  ConstancyReport smeared_constancy_check(const Polynomial& f, std::size_t i,
                                          const std::vector<std::vector<Rational>>& points) const;

 private:
  void check_index(std::size_t i) const;
  void check_ring(const Polynomial& f) const;

  SmearedRingConfig config_;
};

/// All monomials of total degree <= d, in decreasing order of the ring's order.
std::vector<Monomial> monomials_up_to(const PolyRing& ring, std::size_t degree);

}  // namespace smeared
