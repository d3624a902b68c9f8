#pragma once

// 2-fold extensions 0 -> A -> M -> N -> R -> 0 with M -> N a crossed module.

#include <cstdint>
#include <optional>
#include <string>

#include "rlie/beck_module.hpp"
#include "rlie/crossed.hpp"

namespace rlie {

struct TwoFoldExtension {
  BeckModule a;           // declared Beck R-module
  CrossedModule crossed;  // mu: M -> N with N acting on M
  Matrix iota;            // M x A
  RestrictedLieAlgebra r;
  Matrix pi;  // R x N
  /// Fixed-augmentation variant: N is a given g and pi a given epimorphism g -> R;
  /// morphisms must then be the identity on N.
  bool fixed_augmentation = false;

  const RestrictedLieAlgebra& m() const { return crossed.m; }
  const RestrictedLieAlgebra& n() const { return crossed.n; }
};

/// Action of R on A through lifts to N and the p-map of M restricted to A.
/// Throws std::invalid_argument when A is not central in M or pi is not onto.
BeckModule induced_beck_structure(const TwoFoldExtension& x);

Report verify_two_fold(const TwoFoldExtension& x, const CheckOptions& opts = {});

/// T_R(A) = (A -id-> A -0-> R -id-> R), R acting on A through the module.
TwoFoldExtension trivial_two_fold(const BeckModule& a);
/// Fixed variant (A -> A x N -> g -> R) for an epimorphism p: g -> R with kernel N,
/// where g acts on A through p and on N by brackets.
TwoFoldExtension trivial_two_fold_fixed(const RestrictedLieAlgebra& g, const Matrix& p, const BeckModule& a);

struct TwoFoldMorphism {
  Matrix f;  // M -> M'
  Matrix g;  // N -> N'
};

/// Restricted maps commuting with iota, mu, pi and the actions (identity on A and R).
Report check_two_fold_morphism(const TwoFoldExtension& x, const TwoFoldExtension& y, const TwoFoldMorphism& phi,
                               const CheckOptions& opts = {});

/// Pullback of the N's over R, product of the M's modulo the antidiagonal copy of A.
TwoFoldExtension baer_sum_2(const TwoFoldExtension& x, const TwoFoldExtension& y, const CheckOptions& opts = {});

struct MorphismSearch {
  std::optional<TwoFoldMorphism> found;
  std::uint64_t candidates = 0;  // solutions of the linear constraints examined
  bool exhausted = true;         // false when the candidate space exceeded the limit
};

/// Enumerates the affine space cut out by the linear conditions and tests each point.
MorphismSearch find_two_fold_morphism(const TwoFoldExtension& x, const TwoFoldExtension& y,
                                      const CheckOptions& opts = {});

struct Equivalence2 {
  bool equivalent = false;
  /// No witness and the search could not rule one out (zigzags longer than one
  /// morphism were allowed, or the candidate space was too large).
  bool undetermined = false;
  std::optional<TwoFoldMorphism> forward;   // x -> y
  std::optional<TwoFoldMorphism> backward;  // y -> x
  std::string note;
};

/// Looks for a single morphism in either direction. max_zigzag is the longest
/// zigzag the caller is asking about; only length 1 is searched.
Equivalence2 is_equivalent_2(const TwoFoldExtension& x, const TwoFoldExtension& y, std::size_t max_zigzag = 1,
                             const CheckOptions& opts = {});

}  // namespace rlie
