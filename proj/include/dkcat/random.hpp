#pragma once

#include <cstdint>
#include <random>

#include "dkcat/chain.hpp"
#include "dkcat/simplicial.hpp"

namespace dkcat {

/// Seeded generator with platform-independent draws (std distributions are
/// implementation-defined, so reports built on them would not be portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  bool coin() { return below(2) == 1; }

  Scalar scalar(const Field& f);
  Matrix matrix(const Field& f, std::size_t rows, std::size_t cols);

 private:
  std::mt19937_64 engine_;
};

/// Random complex with ranks in [0, max_rank] up to `max_degree`. Boundaries
/// are built as d_n = (random) restricted to a complement of im d_{n+1}'s
/// constraint, so d^2 = 0 holds by construction.
ChainComplex random_complex(Rng& rng, const Field& f, int max_degree, std::size_t max_rank);

/// Uniformly drawn chain map source -> target (a random combination of a
/// basis of the space of chain maps).
ChainMap random_chain_map(Rng& rng, const ChainComplex& source, const ChainComplex& target);

/// Product of random unit lower and upper triangular matrices.
Matrix random_invertible(Rng& rng, const Field& f, std::size_t n);

/// A random simplicial module M presented by the isomorphism Gamma(C) -> M,
/// where C is a random complex of degree <= max_degree and M carries
/// Gamma(C)'s structure conjugated by random levelwise isomorphisms.
SimplicialMap random_simplicial_module(Rng& rng, const Field& f, int max_degree, std::size_t max_rank,
                                       int truncation);

}  // namespace dkcat
