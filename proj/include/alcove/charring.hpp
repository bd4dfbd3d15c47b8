#pragma once

#include <map>
#include <string>
#include <vector>

#include "alcove/affine.hpp"
#include "alcove/kl.hpp"
#include "alcove/poly.hpp"
#include "alcove/rootsys.hpp"

namespace alcove {

/// Formal character: weight -> multiplicity, finite support, zeros absent.
/// Weights are keyed by their fundamental coordinates.
using FormalCharacter = std::map<std::vector<int>, Int>;

/// Coefficients in the Weyl-character basis: dominant weight -> integer.
using DeltaVector = std::map<std::vector<int>, Int>;

/// A sub-root-system of rs spanned by a subset of the simple roots, living in
/// the ambient weight lattice.  full() is the system itself.
struct SubSystem {
  std::vector<int> simple;     // kept simple-root indices, sorted
  std::vector<int> pos_roots;  // indices into rs.positive_roots()

  static SubSystem full(const RootSystem& rs);
};

bool is_dominant_sub(const RootSystem& rs, const SubSystem& sub,
                     const Weight& lambda);

/// Weyl (standard) character by the Freudenthal multiplicity recursion over
/// the given subsystem.  lambda must be sub-dominant.
FormalCharacter weyl_character_sub(const RootSystem& rs, const SubSystem& sub,
                                   const Weight& lambda);

FormalCharacter weyl_character(const RootSystem& rs, const Weight& lambda);

FormalCharacter char_mul(const FormalCharacter& a, const FormalCharacter& b);

Int char_dimension(const FormalCharacter& chi);

/// Weyl dimension formula (exact integer arithmetic).
Int weyl_dimension(const RootSystem& rs, const Weight& lambda);

/// Express a W-invariant character exactly in the Weyl-character basis by
/// highest-weight peeling.  Throws std::domain_error if chi is not
/// W-invariant.
DeltaVector brauer_decompose(const RootSystem& rs, const FormalCharacter& chi);

/// Expand a DeltaVector back into a formal character.
FormalCharacter delta_expand(const RootSystem& rs, const DeltaVector& dv);

/// Frobenius twist: support scaled by p.
FormalCharacter frobenius_twist(const FormalCharacter& chi, int p);

struct LusztigResult {
  DeltaVector delta;           // coefficients in the Weyl-character basis
  FormalCharacter expansion;   // the expanded formal character
  bool is_character = false;   // all multiplicities >= 0, top weight mult 1
  Weight base;                 // the C^- representative of the orbit
  AffineElement x;             // element with x . base = lambda
};

/// Alternating Kazhdan-Lusztig sum of Weyl characters attached to a regular
/// dominant weight.  The result need not be a genuine character; the
/// is_character flag reports whether it is one.
LusztigResult lusztig_character(const RootSystem& rs, const Weight& lambda,
                                int p, KLTable& table);

struct TwistReport {
  DeltaVector lhs;  // decomposition of the twisted Weyl character
  DeltaVector rhs;  // Kazhdan-Lusztig sum at p*lambda
  bool verdict = false;
  bool within_hypotheses = false;  // simply laced, p >= h (E types: p > h+1)
  std::string note;
};

/// Character identity comparing ch Delta(lambda)^{(1)} with the alternating
/// Kazhdan-Lusztig sum at p*lambda.  Throws std::domain_error when p*lambda
/// is singular.
TwistReport verify_twist_identity(const RootSystem& rs, const Weight& lambda,
                                  int p, KLTable& table);

}  // namespace alcove
