#pragma once

// Short exact sequences 0 -> N -> g -> b -> 0 and the associated five- and
// eight-term sequences with Beck-module coefficients A over b.

#include <string>
#include <vector>

#include "rlie/derivations.hpp"
#include "rlie/extensions.hpp"
#include "rlie/two_fold.hpp"

namespace rlie {

struct ShortExactSequence {
  RestrictedLieAlgebra n;
  RestrictedLieAlgebra g;
  RestrictedLieAlgebra b;
  Matrix incl;     // g x n
  Matrix proj;     // b x g
  Matrix section;  // g x b, linear, proj * section = id
};

Report verify_sequence(const ShortExactSequence& s, const CheckOptions& opts = {});
/// N = ker(proj) as a subalgebra, section from unit vectors.
ShortExactSequence sequence_from_epimorphism(const RestrictedLieAlgebra& g, const RestrictedLieAlgebra& b,
                                             const Matrix& proj);
/// 0 -> span{z} -> Heisenberg -> F_p^2 -> 0 (zero p-maps).
ShortExactSequence heisenberg_sequence(Coeff p);

struct NAb {
  BeckModule module;         // N / <[N,N]>_p over b
  Subspace relations{2, 0};  // <[N,N]>_p inside N
  QuotientWithSection maps;  // on N coordinates
};

/// b acts by x.n = [s(x), n]; the p-map is n^[p]. section overrides s.section when given.
NAb n_ab(const ShortExactSequence& s, const Matrix* section = nullptr);

/// Beck derivations of g x| N (coordinates (x, n), augmented by (x, n) -> proj x) that
/// satisfy d(x,n) - d(x,n') + d(x+n, n'-n) = 0 on all triples.
struct Tor0Space {
  RestrictedLieAlgebra semidirect;
  Matrix augmentation;
  std::vector<Matrix> basis;  // each dim A x (dim g + dim N)
  bool sampled = false;
  std::size_t dim() const { return basis.size(); }
};

Tor0Space tor0_direct(const ShortExactSequence& s, const BeckModule& a, const CheckOptions& opts = {});
/// d -> (class of n -> d(0, n)).
Matrix tor0_to_hom(const ShortExactSequence& s, const NAb& nab, const Matrix& d);
/// phi -> d(x, n) = phi(class of n).
Matrix hom_to_tor0(const ShortExactSequence& s, const NAb& nab, const Matrix& phi);
/// Dimensions agree, both maps land in the right spaces, both round trips are the identity.
Report check_tor0_hom_iso(const ShortExactSequence& s, const BeckModule& a, const CheckOptions& opts = {});

// ---------------------------------------------------------------------------
// Maps of the sequences

/// Pullback of an extension of b along proj, as cocycle data over g (module pulled back).
CocycleData inflate_class(const ShortExactSequence& s, const BeckModule& a, const CocycleData& data_b,
                          const CheckOptions& opts = {});
/// Extension (g x_f A) / {(n, -phi(n))} of b by A, as cocycle data.
CocycleData transgression(const ShortExactSequence& s, const BeckModule& a, const NAb& nab, const Matrix& phi,
                          const CheckOptions& opts = {});

/// E -> (A -> q^{-1}(N) -> g -> b) with the fixed augmentation proj.
TwoFoldExtension alpha_map(const ShortExactSequence& s, const BeckModule& a, const CocycleData& data_g,
                           bool full_preimage = false, const CheckOptions& opts = {});
/// Forgets the fixed augmentation.
TwoFoldExtension beta_map(const TwoFoldExtension& x);
/// Pullback along proj: N' = N x_b g, mu' = (mu, 0), pi' = second projection.
TwoFoldExtension gamma_map(const ShortExactSequence& s, const TwoFoldExtension& x, bool skip_pullback = false);

/// Y = (A -> A x M -> E -> b) with morphisms Y -> beta(alpha(E)) and Y -> T_b(A).
struct ZigzagWitness {
  TwoFoldExtension y;
  TwoFoldMorphism to_image;
  TwoFoldMorphism to_trivial;
};

ZigzagWitness zigzag_witness(const ShortExactSequence& s, const BeckModule& a, const CocycleData& data_g,
                             const CheckOptions& opts = {});

// ---------------------------------------------------------------------------
// Reports

enum class Perturbation {
  none,
  inflation_zero,       // Der_p(b) -> Der_p(g) replaced by 0
  transgression_zero,   // Hom -> H^1(b) replaced by 0
  transgression_shift,  // a fixed non-trivial class added to every transgression
  h1_inflation_zero,    // H^1(b) -> H^1(g) replaced by 0
  alpha_full_preimage,  // alpha uses all of E instead of q^{-1}(N)
  gamma_no_pullback,    // gamma keeps N and uses the identity augmentation
};

std::vector<Perturbation> all_perturbations();
std::string to_string(Perturbation p);
/// Throws std::invalid_argument on an unknown name.
Perturbation perturbation_from_string(const std::string& name);

struct NodeVerdict {
  std::string node;     // e.g. "five-term node 3"
  std::string space;    // e.g. "Hom_w(N_ab, A)"
  std::string verdict;  // exact | not-exact | composite-zero-only | composite-fails | undetermined
  bool passed = true;
  std::string detail;
};

struct SequenceReport {
  std::string header;  // the sequence being checked, and the reading of its last term
  std::size_t dim_der_b = 0;
  std::size_t dim_der_g = 0;
  std::size_t dim_hom = 0;
  std::size_t dim_h1_b = 0;
  std::size_t dim_h1_g = 0;
  bool transgression_injective = false;
  std::vector<NodeVerdict> nodes;
  Report checks;
  bool sampled = false;

  bool passed() const;
  std::string render() const;
};

SequenceReport five_term(const ShortExactSequence& s, const BeckModule& a, Perturbation perturb = Perturbation::none,
                         const CheckOptions& opts = {});
SequenceReport eight_term(const ShortExactSequence& s, const BeckModule& a,
                          Perturbation perturb = Perturbation::none, const CheckOptions& opts = {});

}  // namespace rlie
