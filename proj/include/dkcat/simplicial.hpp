#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dkcat/chain.hpp"

namespace dkcat {

/// A simplicial module truncated at level L: free modules M_0..M_L with
/// faces d_i : M_n -> M_{n-1} (1 <= n <= L, 0 <= i <= n) and degeneracies
/// s_i : M_n -> M_{n+1} (0 <= n < L, 0 <= i <= n).
///
/// `faces[n]` holds d_0..d_n for level n (faces[0] is empty);
/// `degeneracies[n]` holds s_0..s_n out of level n (degeneracies[L] is empty).
class SimplicialModule {
 public:
  SimplicialModule() = default;
  SimplicialModule(Field field, int truncation, std::vector<std::size_t> ranks,
                   std::vector<std::vector<Matrix>> faces, std::vector<std::vector<Matrix>> degeneracies);

  /// The constant module with value k^rank; rank 1 gives the unit ck.
  static SimplicialModule constant(Field field, int truncation, std::size_t rank = 1);

  const Field& field() const { return field_; }
  int truncation() const { return truncation_; }
  std::size_t rank(int n) const { return ranks_.at(n); }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  const Matrix& face(int n, int i) const { return faces_.at(n).at(i); }
  const Matrix& degeneracy(int n, int i) const { return degeneracies_.at(n).at(i); }
  const std::vector<std::vector<Matrix>>& faces() const { return faces_; }
  const std::vector<std::vector<Matrix>>& degeneracies() const { return degeneracies_; }

  bool operator==(const SimplicialModule&) const = default;

 private:
  Field field_;
  int truncation_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<std::vector<Matrix>> faces_;
  std::vector<std::vector<Matrix>> degeneracies_;
};

struct SimplicialReport {
  bool ok = true;
  /// Human-readable names of the failing identities, e.g. "d0 d1 = d0 d0 at level 2".
  std::vector<std::string> failures;
};

/// Checks every simplicial identity that fits below the truncation level.
SimplicialReport validate(const SimplicialModule& m);

/// Levelwise matrices between simplicial modules of equal truncation.
class SimplicialMap {
 public:
  SimplicialMap() = default;
  SimplicialMap(SimplicialModule source, SimplicialModule target, std::vector<Matrix> components);

  static SimplicialMap identity(const SimplicialModule& m);
  static SimplicialMap zero(const SimplicialModule& source, const SimplicialModule& target);

  const SimplicialModule& source() const { return source_; }
  const SimplicialModule& target() const { return target_; }
  const Field& field() const { return source_.field(); }
  const Matrix& component(int n) const { return components_.at(n); }
  const std::vector<Matrix>& components() const { return components_; }

  /// Names of the face/degeneracy squares that fail to commute.
  std::vector<std::string> failures() const;
  bool commutes() const { return failures().empty(); }

  bool operator==(const SimplicialMap&) const = default;

 private:
  SimplicialModule source_;
  SimplicialModule target_;
  std::vector<Matrix> components_;
};

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
bool is_isomorphism(const SimplicialMap& f);
std::optional<SimplicialMap> inverse(const SimplicialMap& f);

/// Pointwise tensor product, levelwise Kronecker products.
SimplicialModule tensor(const SimplicialModule& a, const SimplicialModule& b);
SimplicialMap tensor(const SimplicialMap& f, const SimplicialMap& g);

struct SimplicialSum {
  SimplicialModule sum;
  SimplicialMap in1, in2, pr1, pr2;
};

/// Levelwise direct sum, A's basis first.
SimplicialSum direct_sum(const SimplicialModule& a, const SimplicialModule& b);
/// (f, g) : X -> A (+) B.
SimplicialMap pairing(const SimplicialMap& f, const SimplicialMap& g);

/// Transport of structure along levelwise isomorphisms g_n : M_n -> M'_n.
/// Returns the isomorphism M -> M'.
SimplicialMap conjugate(const SimplicialModule& m, const std::vector<Matrix>& isos);

// ---- normalization and Dold-Kan ------------------------------------------

struct Normalization {
  /// N(M) in degrees 0..L.
  ChainComplex complex;
  /// N_n as a subspace of M_n (the intersection of ker d_i, i >= 1).
  std::vector<KernelSubspace> cycles;
  /// M_n -> N_n, the projection along the degenerate part D_n = sum im s_j.
  std::vector<Matrix> projections;
};

Normalization normalization(const SimplicialModule& m);
ChainComplex normalize(const SimplicialModule& m);
ChainMap normalize(const SimplicialMap& f);
ChainMap normalize(const SimplicialMap& f, const Normalization& source, const Normalization& target);

/// Gamma(C)_n = (+)_{[n] ->> [m]} C_m. A surjection is encoded by the bitmask
/// of positions j in 1..n with sigma(j) = sigma(j-1) + 1 (bit j-1); summands
/// are ordered by m, then by mask.
struct GammaSummand {
  int m;
  std::uint32_t mask;
  std::size_t offset;
};

std::vector<GammaSummand> gamma_summands(const ChainComplex& c, int n);
/// Throws ShapeError when `truncation` is below the top degree of `c`.
SimplicialModule gamma(const ChainComplex& c, int truncation);
SimplicialMap gamma(const ChainMap& f, int truncation);

/// The natural isomorphism Gamma N (M) -> M, x in the sigma-summand going
/// to sigma^*(x).
SimplicialMap dold_kan_iso(const SimplicialModule& m);

/// sigma^* : M_m -> M_n for the surjection [n] ->> [m] with the given mask.
Matrix degeneracy_operator(const SimplicialModule& m, int n, std::uint32_t mask);

// ---- monoidal comparison maps ---------------------------------------------

enum class ShuffleSigns { standard, unsigned_terms };

/// Eilenberg-Zilber shuffle map N(A) (x) N(B) -> N(A (x) B), with the tensor
/// complex truncated at the common truncation level.
ChainMap shuffle(const SimplicialModule& a, const SimplicialModule& b,
                 ShuffleSigns signs = ShuffleSigns::standard);
/// Alexander-Whitney map N(A (x) B) -> N(A) (x) N(B).
ChainMap alexander_whitney(const SimplicialModule& a, const SimplicialModule& b);

/// AW o shuffle computed without normalizing A (x) B. Degenerate elements of
/// A (x) B are sent by AW into degenerate tensors, so this agrees with
/// `compose(alexander_whitney(a, b), shuffle(a, b))`.
ChainMap aw_after_shuffle(const SimplicialModule& a, const SimplicialModule& b,
                          const Normalization& na, const Normalization& nb,
                          ShuffleSigns signs = ShuffleSigns::standard);

/// Whether the shuffle map is a chain map into the unnormalized complex of
/// A (x) B (differential sum (-1)^i d_i). Returns the first failing degree,
/// or -1.
int shuffle_chain_failure(const SimplicialModule& a, const SimplicialModule& b,
                          const Normalization& na, const Normalization& nb,
                          ShuffleSigns signs = ShuffleSigns::standard);

// ---- model structure ------------------------------------------------------

/// Weak equivalences and fibrations are created by N: quasi-isomorphism and
/// surjectivity in positive degrees respectively (simplicial modules are
/// simplicial groups, so every surjection on N_{>0} is a Kan fibration).
bool is_weak_equivalence(const SimplicialMap& f);
bool is_fibration(const SimplicialMap& f);
/// Over a field the cofibrations are the levelwise injections.
bool is_cofibration(const SimplicialMap& f);
bool is_trivial_fibration(const SimplicialMap& f);

struct SimplicialPushout {
  SimplicialModule module;
  SimplicialMap in1, in2;
  std::vector<Quotient> spaces;
};

/// Levelwise pushout of A <- C -> B.
SimplicialPushout pushout(const SimplicialMap& f, const SimplicialMap& g);
SimplicialMap induced_from_pushout(const SimplicialPushout& po, const SimplicialMap& x, const SimplicialMap& y);

// ---- simplicial sets and pi_0 --------------------------------------------

/// Finite simplicial set truncated at level L. `faces[n][i][x]` is d_i of the
/// x-th n-simplex; `degeneracies[n][i][x]` is s_i of it.
struct FiniteSimplicialSet {
  int truncation = 0;
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::vector<std::size_t>>> faces;
  std::vector<std::vector<std::vector<std::size_t>>> degeneracies;

  bool operator==(const FiniteSimplicialSet&) const = default;
};

SimplicialReport validate(const FiniteSimplicialSet& x);
/// Delta[k]: n-simplices are the non-decreasing sequences in [k] of length
/// n+1, in lexicographic order.
FiniteSimplicialSet standard_simplex(int k, int truncation);
/// Levelwise product, pair (x, y) at index x * |Y_n| + y.
FiniteSimplicialSet product(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y);
SimplicialModule free_module(Field field, const FiniteSimplicialSet& x);

/// Connected components of the underlying simplicial set of M (requires
/// F_p): the quotient of M_0 by the relation generated by d_1 z ~ d_0 z for
/// all z in M_1, found by enumerating M_1.
struct Pi0 {
  /// Smallest base-p code (coordinate i weighted p^i) in each class, ascending.
  std::vector<std::uint64_t> representatives;
  /// Class index of every element of M_0, by code.
  std::vector<std::size_t> class_of_code;

  std::size_t size() const { return representatives.size(); }
};

/// Throws UnsupportedField over Q and Error when M_1 has more than
/// `max_elements` elements.
Pi0 pi0_underlying(const SimplicialModule& m, std::uint64_t max_elements = std::uint64_t{1} << 22);

std::uint64_t encode(const Field& f, const Vector& v);
Vector decode(const Field& f, std::uint64_t code, std::size_t dim);

/// The comparison H_0(N M) -> pi_0(U M), class of a cycle to its component.
struct EtaReport {
  std::size_t h0_classes = 0;
  std::size_t pi0_classes = 0;
  /// Image of each H_0 class (enumerated by base-p code of its coordinates).
  std::vector<std::size_t> images;
  bool bijective = false;
};

EtaReport check_eta(const SimplicialModule& m);

}  // namespace dkcat
