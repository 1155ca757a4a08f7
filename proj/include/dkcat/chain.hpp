#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dkcat/matrix.hpp"

namespace dkcat {

/// A bounded, non-negatively graded complex of finite-rank free modules.
///
/// `boundary(n)` is d_n : C_n -> C_{n-1}, a rank(n-1) x rank(n) matrix.
/// Trailing zero ranks are trimmed on construction, so two complexes
/// compare equal exactly when their ranks and boundary matrices agree.
class ChainComplex {
 public:
  ChainComplex() = default;
  /// `boundaries[n-1]` is d_n. Throws ShapeError on inconsistent shapes.
  ChainComplex(Field field, std::vector<std::size_t> ranks, std::vector<Matrix> boundaries);

  static ChainComplex zero(Field field);
  /// The monoidal unit: k in degree 0.
  static ChainComplex unit(Field field);
  /// S^n: k in degree n.
  static ChainComplex sphere(Field field, int n);
  /// D^n: k in degrees n and n-1 joined by the identity; D^0 is the unit.
  static ChainComplex disk(Field field, int n);

  const Field& field() const { return field_; }
  /// Highest degree with non-zero rank, or -1 for the zero complex.
  int top() const { return static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int n) const;
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  std::size_t total_rank() const;
  /// d_n, or the zero matrix of the right shape when n is out of range.
  Matrix boundary(int n) const;

  bool operator==(const ChainComplex&) const = default;

 private:
  Field field_;
  std::vector<std::size_t> ranks_;
  std::vector<Matrix> boundaries_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<int> failing_degrees;
};

/// Checks d_{n} d_{n+1} = 0 in every degree.
ValidationReport validate(const ChainComplex& c);

/// Degreewise matrices between two complexes. Construction only checks
/// shapes; `commutes()` decides whether the data is a chain map.
class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(ChainComplex source, ChainComplex target, std::vector<Matrix> components);

  static ChainMap identity(const ChainComplex& c);
  static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  const Field& field() const { return source_.field(); }
  /// f_n, or a zero matrix of the right shape outside the source's range.
  Matrix component(int n) const;
  void set_component(int n, Matrix m);
  const std::vector<Matrix>& components() const { return components_; }

  std::vector<int> noncommuting_degrees() const;
  bool commutes() const { return noncommuting_degrees().empty(); }

  bool operator==(const ChainMap&) const = default;

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::vector<Matrix> components_;
};

/// Throws StructuralError naming `what` unless `f` commutes with boundaries.
void require_chain_map(const ChainMap& f, const char* what);

/// g o f.
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap negate(const ChainMap& f);
/// I -> X sending the generator to the degree-0 vector `v`.
ChainMap point(const ChainComplex& x, const Vector& v);

// ---- direct sums -----------------------------------------------------------

struct DirectSum {
  ChainComplex sum;
  ChainMap in1, in2, pr1, pr2;
};

/// A (+) B with A's basis first in every degree.
DirectSum direct_sum(const ChainComplex& a, const ChainComplex& b);
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);
/// (f, g) : X -> A (+) B.
ChainMap pairing(const ChainMap& f, const ChainMap& g);
/// [f, g] : A (+) B -> X.
ChainMap copairing(const ChainMap& f, const ChainMap& g);

// ---- monoidal structure ----------------------------------------------------

/// (C (x) D)_n = (+)_{i+j=n} C_i (x) D_j, summands in increasing i, each
/// summand in kron order. d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.
ChainComplex tensor(const ChainComplex& c, const ChainComplex& d);
ChainMap tensor(const ChainMap& f, const ChainMap& g);
/// Offset of the C_i (x) D_{n-i} summand inside (C (x) D)_n.
std::size_t tensor_offset(const ChainComplex& c, const ChainComplex& d, int n, int i);
/// (A (x) B) (x) C -> A (x) (B (x) C), a permutation matrix in each degree.
ChainMap associator(const ChainComplex& a, const ChainComplex& b, const ChainComplex& c);
/// A (x) B -> B (x) A, x (x) y |-> (-1)^{|x||y|} y (x) x.
ChainMap symmetry(const ChainComplex& a, const ChainComplex& b);

// ---- internal hom ----------------------------------------------------------

/// The internal hom [B, X] in non-negative degrees: degree n >= 1 holds all
/// graded maps B_m -> X_{m+n}; degree 0 holds the chain maps (the cycles of
/// the unbounded hom). The differential is d(phi) = d_X phi - (-1)^n phi d_B.
///
/// A graded map of degree n is flattened block by block (m ascending), each
/// block Hom(B_m, X_{m+n}) row-major.
class InternalHom {
 public:
  InternalHom(ChainComplex source, ChainComplex target);

  const ChainComplex& complex() const { return complex_; }
  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }

  std::size_t graded_dim(int n) const;
  std::size_t block_offset(int n, int m) const;
  /// Differential on graded maps: degree n -> degree n-1 (n >= 0).
  Matrix graded_differential(int n) const;
  /// Complex coordinates -> graded-map coordinates in degree n.
  Matrix embed(int n) const;
  /// Graded-map columns -> complex coordinates; throws StructuralError when
  /// a degree-0 column is not a chain map.
  Matrix extract(int n, const Matrix& graded) const;

 private:
  ChainComplex source_;
  ChainComplex target_;
  KernelSubspace cycles0_;
  ChainComplex complex_;
};

ChainComplex internal_hom(const ChainComplex& source, const ChainComplex& target);
/// [u, v] : [X, Y] -> [X', Y'], phi |-> v o phi o u, for u : X' -> X, v : Y -> Y'.
ChainMap internal_hom(const ChainMap& u, const ChainMap& v);
/// A (x) B -> X  |->  A -> [B, X].
ChainMap adjoint_transpose(const ChainMap& g, const ChainComplex& a, const ChainComplex& b);
/// A -> [B, X]  |->  A (x) B -> X.
ChainMap adjoint_untranspose(const ChainMap& h, const ChainComplex& b, const ChainComplex& x);
/// [B, X] (x) B -> X.
ChainMap evaluation(const ChainComplex& b, const ChainComplex& x);

// ---- homology and model-structure predicates -------------------------------

struct HomologyDegree {
  KernelSubspace cycles;
  /// Quotient of cycle coordinates by boundary coordinates.
  Quotient classes;
  /// Canonical cycle representatives, one column per class basis vector.
  Matrix representatives;

  std::size_t dim() const { return classes.dim(); }
  /// Class coordinates of a cycle.
  Vector class_of(const Vector& cycle) const { return classes.project(cycles.coordinates(cycle)); }
};

class Homology {
 public:
  explicit Homology(const ChainComplex& c);

  std::vector<std::size_t> dims() const;
  /// Empty degree data beyond the complex's top degree.
  const HomologyDegree& degree(int n) const;
  int top() const { return static_cast<int>(degrees_.size()) - 1; }

 private:
  std::vector<HomologyDegree> degrees_;
  HomologyDegree empty_;
};

/// Betti numbers in degrees 0..top.
std::vector<std::size_t> homology(const ChainComplex& c);
/// H_n(f) in the canonical class bases.
Matrix induced_on_homology(const ChainMap& f, int n, const Homology& hs, const Homology& ht);

bool is_isomorphism(const ChainMap& f);
std::optional<ChainMap> inverse(const ChainMap& f);
bool is_quasi_iso(const ChainMap& f);
/// Projective model structure: surjective in every degree n >= 1.
bool is_fibration(const ChainMap& f);
/// Over a field the cofibrations are the degreewise injections.
bool is_cofibration(const ChainMap& f);
/// Surjective in every degree with acyclic kernel. Equivalent to being a
/// fibration and a quasi-isomorphism, but computed without either test.
bool is_trivial_fibration(const ChainMap& f);

/// Position of the first differing entry of two parallel maps.
struct Difference {
  int degree;
  std::size_t row, col;
};
std::optional<Difference> first_difference(const ChainMap& a, const ChainMap& b);

// ---- limits and colimits ---------------------------------------------------

struct Subcomplex {
  ChainComplex complex;
  ChainMap inclusion;
  std::vector<KernelSubspace> spaces;
};

/// Degreewise kernel of a chain map, with rref-canonical bases.
Subcomplex kernel_complex(const ChainMap& f);
/// Factors g : T -> E through the kernel subcomplex K -> E.
ChainMap factor_through(const Subcomplex& k, const ChainMap& g);

struct QuotientComplex {
  ChainComplex complex;
  ChainMap projection;
  std::vector<Quotient> spaces;
};

/// Degreewise cokernel of a chain map.
QuotientComplex cokernel_complex(const ChainMap& f);
/// Factors g : E -> T through E -> Q; throws StructuralError unless g kills the image.
ChainMap factor_through(const QuotientComplex& q, const ChainMap& g);

struct Pullback {
  Subcomplex kernel;
  /// One projection per object of the diagram, in diagram order.
  std::vector<ChainMap> projections;

  const ChainComplex& complex() const { return kernel.complex; }
};

/// Pullback of f : A -> C <- B : g.
Pullback pullback(const ChainMap& f, const ChainMap& g);
/// Limit of a zigzag X_0 -> C_0 <- X_1 -> C_1 <- ... <- X_k given as
/// legs {X_0->C_0, X_1->C_0, X_1->C_1, X_2->C_1, ...}.
Pullback wide_pullback(const std::vector<ChainMap>& legs);
/// Induced map T -> limit from a cone given by one map per diagram object.
ChainMap cone_to_limit(const Pullback& limit, const std::vector<ChainMap>& cone);

struct Pushout {
  QuotientComplex quotient;
  ChainMap in1, in2;

  const ChainComplex& complex() const { return quotient.complex; }
};

/// Pushout of A <- C -> B along f : C -> A and g : C -> B.
Pushout pushout(const ChainMap& f, const ChainMap& g);
/// [x, y] : A +_C B -> T.
ChainMap induced_from_pushout(const Pushout& po, const ChainMap& x, const ChainMap& y);

/// The subcomplex of degrees <= top.
ChainComplex truncate(const ChainComplex& c, int top);

/// S^{n-1} -> D^n (0 -> I for n = 0).
ChainMap generating_cofibration(Field field, int n);

}  // namespace dkcat
