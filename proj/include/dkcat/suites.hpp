#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dkcat/enriched.hpp"
#include "dkcat/random.hpp"

namespace dkcat {

// ---- Dold-Kan property suite ---------------------------------------------------

struct DoldKanOptions {
  Field field = Field::prime(7);
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  int max_degree = 4;
  std::size_t max_rank = 3;
  /// unsigned_terms injects a sign fault into the shuffle map.
  ShuffleSigns signs = ShuffleSigns::standard;
};

/// One trial: a random complex C, a random simplicial module M and a second
/// module B for the monoidal checks.
struct DoldKanTrial {
  std::size_t index = 0;
  std::vector<std::size_t> complex_ranks;
  std::vector<std::size_t> module_ranks;
  bool normalize_gamma = false;   ///< N Gamma C = C, bit-exact
  bool gamma_normalize = false;   ///< Gamma N M -> M is an isomorphism of simplicial modules
  bool aw_shuffle = false;        ///< AW o shuffle = id on N M (x) N B
  bool shuffle_chain = false;     ///< the shuffle map commutes with the boundaries
  bool eta = false;               ///< H_0(N M) -> pi_0(U M) is a bijection
  std::size_t h0_classes = 0;
  /// Name of the first failing check, empty when the trial passed.
  std::string failure;

  bool passed() const { return failure.empty(); }
};

struct DoldKanSummary {
  DoldKanOptions options;
  std::vector<DoldKanTrial> trials;
  std::size_t failures = 0;
  std::optional<std::size_t> first_failure;
};

/// Requires F_p (pi_0 enumerates M_1). Trials draw from one Rng seeded once,
/// so a summary is determined by its options.
DoldKanSummary run_dold_kan_suite(const DoldKanOptions& options);

// ---- random enriched functors ------------------------------------------------------

/// A dg-category with at most `max_objects` objects and hom ranks (summed over
/// degrees) at most `max_rank`, drawn from a small family of shapes: unit,
/// terminal, two-object with a random hom, linearized groupoids, preorders and
/// monoids, and dual numbers.
ChainCategory random_chain_category(Rng& rng, const Field& f, std::size_t max_objects, std::size_t max_rank);

/// A functor between categories of that size: identities, full inclusions,
/// functors to the terminal category, 2_i for random chain maps i, linearized
/// finite functors, product projections, and composites of these.
ChainFunctor random_chain_functor(Rng& rng, const Field& f, std::size_t max_objects, std::size_t max_rank);

/// Largest total rank of a hom-complex.
std::size_t max_hom_rank(const ChainCategory& c);

struct CharacterizationSummary {
  std::size_t trials = 0;
  std::size_t agreeing = 0;
  std::size_t both_true = 0;
  std::optional<std::size_t> first_disagreement;
};

/// trivial_fibration_characterization over `trials` random functors.
CharacterizationSummary run_characterization_suite(const Field& f, std::size_t trials, std::uint64_t seed,
                                                   std::size_t max_objects = 3, std::size_t max_rank = 2);

// ---- path-object suite ---------------------------------------------------------------

struct NamedCategory {
  std::string name;
  ChainCategory category;
};

/// The unit category, 2_{D1}, the linearized free isomorphism and the dual
/// numbers k (+) k[1] (one object with H_1 of rank 1).
std::vector<NamedCategory> path_object_suite(const Field& f);

}  // namespace dkcat
