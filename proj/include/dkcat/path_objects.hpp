#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "dkcat/enriched.hpp"
#include "dkcat/intervals.hpp"

namespace dkcat {

// Path objects for dg-categories. Cotensors are X^J = [J, X] with the
// convention A (x) J -> X  <->  A -> [J, X]; ev_k = [d_k, X] : X^{I1} -> X.

/// An object of P0 A: a degree-0 cycle of A(source, target) representing a
/// map of [A].
struct PathObjectEntry {
  std::size_t source = 0, target = 0;
  Vector cycle;
  /// Whether the class is invertible in [A].
  bool isomorphism = false;

  bool operator==(const PathObjectEntry&) const = default;
};

/// Every H_0 class of every hom-complex, ordered by (source, target, class
/// code), one canonical representative each; the class of a unit is
/// represented by the unit itself. Requires F_p; throws Error when the
/// ledger would exceed `max_objects`.
std::vector<PathObjectEntry> p0_objects(const ChainCategory& a, std::size_t max_objects = 64);

/// P0 A(f0, f1): the limit of
/// A(a0,a1) -f1_*-> A(a0,b1) <-ev1- A(a0,b1)^{I1} -ev0-> A(a0,b1) <-f0^*- A(b0,b1).
struct PathHom {
  Pullback limit;
  ChainMap push;  ///< f1_* : A(a0,a1) -> A(a0,b1), post-composition with f1
  ChainMap pull;  ///< f0^* : A(b0,b1) -> A(a0,b1), pre-composition with f0
  ChainMap ev0, ev1;

  const ChainComplex& complex() const { return limit.complex(); }
  const ChainMap& p() const { return limit.projections[0]; }
  const ChainMap& mid() const { return limit.projections[1]; }
  const ChainMap& q() const { return limit.projections[2]; }
};

/// Intermediate maps of the composition A0 (x) A1 -> P0 A(f0, f2), with
/// Ai = P0 A(fi, fi+1).
struct HomAssemblyTrace {
  ChainMap h0, h1;        ///< Hi : Ai (x) I1 -> A(ai, bi+1), adjoint to the middle projection
  ChainMap g1, g2;        ///< (A0 (x) A1) (x) I1 -> A(a0, b2)
  ChainMap paired;        ///< A0 (x) A1 -> X^{I1} x_X X^{I1}, X = A(a0, b2)
  ChainMap m;             ///< X^{I1} x_X X^{I1} -> X^{I1}, X^c after the inverse of X^{[i0, i1]}
  ChainMap g;             ///< m o paired
  ChainMap composition;   ///< A0 (x) A1 -> P0 A(f0, f2)
};

/// Builds P0 A for a chain interval passing every strict axiom. Throws
/// StructuralError when A or the interval fails validation, when the ledger
/// lacks an identity entry for some object, or when a gluing condition fails.
class PathObjectBuilder {
 public:
  PathObjectBuilder(std::shared_ptr<const ChainCategory> a, ChainInterval interval,
                    std::vector<PathObjectEntry> ledger);

  const ChainCategory& base() const { return *base_; }
  const ChainInterval& interval() const { return interval_; }
  const std::vector<PathObjectEntry>& ledger() const { return ledger_; }
  /// Ledger index of the entry representing id_x.
  std::size_t identity_entry(std::size_t x) const { return identities_.at(x); }

  const PathHom& hom(std::size_t f0, std::size_t f1) const { return homs_.at(f0 * ledger_.size() + f1); }
  /// The degree-0 unit of P0 A(f, f).
  Vector unit(std::size_t f) const;
  HomAssemblyTrace composition(std::size_t f0, std::size_t f1, std::size_t f2) const;
  /// (i0)_{x,y} : A(x, y) -> P0 A(id_x, id_y), u -> (u, X^p u, u).
  ChainMap i0_component(std::size_t x, std::size_t y) const;

  /// f_* : A(x, y) -> A(x, z) and f^* : A(y, z) -> A(x, z) for a degree-0
  /// vector f of A(y, z), resp. A(x, y).
  ChainMap post_composition(std::size_t x, std::size_t y, std::size_t z, const Vector& f) const;
  ChainMap pre_composition(std::size_t x, std::size_t y, std::size_t z, const Vector& f) const;

 private:
  struct Cotensor {
    ChainMap ev0, ev1, constant, m;
    Pullback glued;
  };
  const Cotensor& cotensor(std::size_t x, std::size_t y) const { return cotensors_.at(x * base_->size() + y); }
  Cotensor make_cotensor(const ChainComplex& x) const;

  std::shared_ptr<const ChainCategory> base_;
  ChainInterval interval_;
  std::vector<PathObjectEntry> ledger_;
  std::vector<std::size_t> identities_;
  std::vector<Cotensor> cotensors_;
  std::vector<PathHom> homs_;
};

/// P0 A with i0, s, t; the full subcategory P A on the isomorphisms with i
/// and the restricted s, t.
struct PathObjectBundle {
  std::shared_ptr<const ChainCategory> base;
  std::shared_ptr<const ChainCategory> square;  ///< A x A
  std::vector<PathObjectEntry> ledger;
  std::shared_ptr<const ChainCategory> p0;
  std::shared_ptr<const ChainCategory> p;
  /// Ledger indices of the objects of P A.
  std::vector<std::size_t> p_objects;
  ChainFunctor diagonal;
  ChainFunctor i0, s, t, st;
  ChainFunctor i, s_p, t_p, st_p;
  /// Per pair of ledger entries, in the order f0 * n + f1.
  std::vector<PathHom> homs;
};

/// P0 A is assembled without checking the category laws; verify_path_object
/// checks them.
PathObjectBundle build_path_object(std::shared_ptr<const ChainCategory> a, const ChainInterval& interval,
                                   std::vector<PathObjectEntry> ledger);
/// Uses p0_objects(*a, max_objects).
PathObjectBundle build_path_object(std::shared_ptr<const ChainCategory> a, const ChainInterval& interval,
                                   std::size_t max_objects = 64);

/// Checks, in order:
///   P0_category, P_category: the assembled categories satisfy the laws;
///   functors: i0, s, t, (s,t), i and the restricted (s,t) are functors;
///   diagonal: (s,t) o i = Delta, bit-exact;
///   i_locally_weak_equivalence, st_locally_fibration;
///   i_essentially_surjective, st_isofibration;
///   i_dk_equivalence, st_dk_fibration;
///   pullback_square: every (s,t)_{f0,f1} is the base change of (ev1, ev0)
///   along f1_* x f0^*.
/// Checks that need [A] are undetermined over Q.
AxiomReport verify_path_object(const PathObjectBundle& bundle);

}  // namespace dkcat
