#pragma once

#include <string>
#include <vector>

#include "petristruct/arith.hpp"
#include "petristruct/net.hpp"

namespace petristruct {

/// Coefficient domain of a generating set.
enum class Ring { integers, nonneg_rationals, naturals };

std::string to_string(Ring r);

/// Place weighting f with f^T (Post - Pre) = 0.
class Semiflow {
 public:
  /// Throws domain_error if `coeffs` is not a semiflow of `net` or is zero.
  Semiflow(const Net& net, IntVector coeffs);

  const IntVector& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  const Integer& operator[](std::size_t p) const { return coeffs_[p]; }

  friend bool operator==(const Semiflow&, const Semiflow&) = default;
  friend auto operator<=>(const Semiflow& a, const Semiflow& b) { return a.coeffs_ <=> b.coeffs_; }

 private:
  IntVector coeffs_;
};

struct GeneratingSet {
  std::vector<Semiflow> elements;
  Ring ring = Ring::naturals;
  /// Every element is a <=-minimal non-zero semiflow.
  bool minimal_semiflows = false;
  /// Every element has a minimal support.
  bool minimal_supports = false;

  std::vector<IntVector> vectors() const;
};

struct SupportSplit {
  PlaceSet support;
  PlaceSet positive;
  PlaceSet negative;
};

struct MinimalSupport {
  PlaceSet support;
  /// The unique minimal semiflow carried by this support.
  Semiflow semiflow;
};

struct DecompositionResult {
  /// Aligned with the generators used.
  std::vector<Rational> coefficients;
  /// input - sum(coefficients[i] * generator[i]); zero on success.
  IntVector residual;
};

bool is_semiflow(const Net& net, const IntVector& v);

/// Basis of the rational left kernel of Post - Pre, as primitive integer
/// vectors whose first non-zero entry is positive, sorted lexicographically.
GeneratingSet z_flow_basis(const Net& net);

/// All minimal non-negative semiflows, sorted lexicographically. This is the
/// unique <=-minimal generating set over the naturals.
GeneratingSet nonneg_generating_set(const Net& net);

/// One minimal semiflow per minimal support, sorted lexicographically; a
/// generating set over the non-negative rationals.
GeneratingSet minimal_support_generating_set(const Net& net);

SupportSplit support_split(const IntVector& v);

/// Supports of `gens` that are minimal under inclusion, each with its
/// minimal semiflow. Requires ring == naturals.
std::vector<MinimalSupport> minimal_supports(const GeneratingSet& gens);

/// Greedy residual construction: in generator order, subtract the largest
/// multiple of each generator that keeps the residual non-negative.
DecompositionResult decompose_over_n(const Net& net, const IntVector& f, const GeneratingSet& gens);

/// Non-negative rational coefficients with f = sum alpha_i reps_i. `reps`
/// must be semiflows with supports inside ||f||. A basic feasible solution
/// is found by exhaustive search over linearly independent subsets.
DecompositionResult decompose_over_qplus(const Net& net, const IntVector& f,
                                         const std::vector<IntVector>& reps);

/// Places as columns, semiflows as rows.
std::string tableau(const Net& net, const GeneratingSet& gens);

}  // namespace petristruct
