#pragma once

#include <optional>
#include <vector>

#include "alcove/charring.hpp"
#include "alcove/rootsys.hpp"

namespace alcove {

/// Levi subsystem Phi_H spanned by a kept subset of simple roots, together
/// with its positive roots inside the parent system.
struct LeviDatum {
  SubSystem sub;
  std::vector<CartanType> components;  // Cartan types of the Dynkin components

  std::string type_str() const;  // e.g. "A1" or "A1xA1"
};

/// J lists the kept simple-root indices (0-based).
LeviDatum levi_subsystem(const RootSystem& rs, const std::vector<int>& J);

/// mu - lambda in Z^+ Phi_J^+ (exact integer cone membership).  With J = all
/// simple roots this is the usual order <= on X.
bool order_leq(const RootSystem& rs, const Weight& lambda, const Weight& mu,
               const std::vector<int>& J);

bool order_leq_full(const RootSystem& rs, const Weight& lambda,
                    const Weight& mu);

/// diff in Z Phi_J (signed integer span).
bool in_levi_root_lattice(const RootSystem& rs, const Weight& diff,
                          const std::vector<int>& J);

/// The finite ideal {gamma in X+ : gamma <= f for some f in F} generated by a
/// finite set of dominant weights, sorted lexicographically.
std::vector<Weight> ideal_generated(const RootSystem& rs,
                                    const std::vector<Weight>& F);

struct CosetResult {
  std::vector<Weight> members;  // Gamma cap (omega + Z Phi_H), sorted
  bool coideal_in_gamma = false;
  bool ideal_in_levi_order = false;
};

/// Members of Gamma in the coset omega + Z Phi_H, with the structural
/// properties (coideal in (Gamma, <=), ideal in (X^{(H)+}, <=_H)) verified
/// and reported.
CosetResult coset_members(const RootSystem& rs, const LeviDatum& H,
                          const Weight& omega,
                          const std::vector<Weight>& gamma);

/// Restriction of the multiplicity map to support cap (omega + Z Phi_H).
FormalCharacter truncate_character(const RootSystem& rs,
                                   const FormalCharacter& chi,
                                   const LeviDatum& H, const Weight& omega);

/// Character shadow of the truncation theorem: truncating the Weyl character
/// of lambda at omega = lambda equals the H-Weyl character of lambda.
bool donkin_check(const RootSystem& rs, const LeviDatum& H,
                  const Weight& lambda);

}  // namespace alcove
