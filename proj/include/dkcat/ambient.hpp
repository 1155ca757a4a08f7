#pragma once

#include <optional>
#include <string>

#include "dkcat/chain.hpp"
#include "dkcat/simplicial.hpp"

namespace dkcat {

// Ambient adapters: the operations an enriched category needs from its
// monoidal model category, behind one interface.

/// Non-negatively graded chain complexes over a field.
struct ChainAmbient {
  using Object = ChainComplex;
  using Map = ChainMap;
  static constexpr const char* tag = "chain";

  Field field;

  Object unit() const { return ChainComplex::unit(field); }
  Object zero() const { return ChainComplex::zero(field); }
  bool is_zero(const Object& x) const { return x.top() < 0; }
  /// k^rank concentrated in degree 0.
  Object discrete(std::size_t rank) const { return ChainComplex(field, {rank}, {}); }
  /// The degree-0 matrix m as a map between discrete objects.
  Map discrete_map(const Object& source, const Object& target, const Matrix& m) const {
    return ChainMap(source, target, {m});
  }

  Object tensor(const Object& a, const Object& b) const { return dkcat::tensor(a, b); }
  Map tensor(const Map& f, const Map& g) const { return dkcat::tensor(f, g); }
  Map compose(const Map& g, const Map& f) const { return dkcat::compose(g, f); }
  Map identity(const Object& x) const { return ChainMap::identity(x); }
  Map zero_map(const Object& s, const Object& t) const { return ChainMap::zero(s, t); }
  Map associator(const Object& a, const Object& b, const Object& c) const { return dkcat::associator(a, b, c); }
  const Object& source(const Map& f) const { return f.source(); }
  const Object& target(const Map& f) const { return f.target(); }
  bool commutes(const Map& f) const { return f.commutes(); }

  /// Points I -> X correspond to degree-0 vectors (all of which are cycles).
  std::size_t points(const Object& x) const { return x.rank(0); }
  Map point(const Object& x, const Vector& v) const { return dkcat::point(x, v); }
  Matrix on_points(const Map& f) const { return f.component(0); }
  /// A complex whose degree-0 part is the point space and whose H_0 is
  /// Hom_{Ho}(I, X).
  ChainComplex homotopy_model(const Object& x) const { return x; }

  struct Sum {
    Object sum;
    Map in1, in2, pr1, pr2;
  };
  Sum direct_sum(const Object& a, const Object& b) const {
    DirectSum d = dkcat::direct_sum(a, b);
    return {d.sum, d.in1, d.in2, d.pr1, d.pr2};
  }
  Map pairing(const Map& f, const Map& g) const { return dkcat::pairing(f, g); }

  bool weak_equivalence(const Map& f) const { return is_quasi_iso(f); }
  bool fibration(const Map& f) const { return is_fibration(f); }
  bool trivial_fibration(const Map& f) const { return is_trivial_fibration(f); }

  /// "degree n entry (r,c)" of the first differing entry.
  std::optional<std::string> difference(const Map& a, const Map& b) const {
    auto d = first_difference(a, b);
    if (!d) return std::nullopt;
    return "degree " + std::to_string(d->degree) + " entry (" + std::to_string(d->row) + "," +
           std::to_string(d->col) + ")";
  }

  bool operator==(const ChainAmbient&) const = default;
};

/// Simplicial modules truncated at a fixed level.
struct SimplicialAmbient {
  using Object = SimplicialModule;
  using Map = SimplicialMap;
  static constexpr const char* tag = "simplicial";

  Field field;
  int truncation = 0;

  Object unit() const { return SimplicialModule::constant(field, truncation); }
  Object zero() const { return SimplicialModule::constant(field, truncation, 0); }
  bool is_zero(const Object& x) const {
    for (std::size_t r : x.ranks())
      if (r != 0) return false;
    return true;
  }
  Object discrete(std::size_t rank) const { return SimplicialModule::constant(field, truncation, rank); }
  Map discrete_map(const Object& source, const Object& target, const Matrix& m) const {
    return SimplicialMap(source, target, std::vector<Matrix>(truncation + 1, m));
  }

  Object tensor(const Object& a, const Object& b) const { return dkcat::tensor(a, b); }
  Map tensor(const Map& f, const Map& g) const { return dkcat::tensor(f, g); }
  Map compose(const Map& g, const Map& f) const { return dkcat::compose(g, f); }
  Map identity(const Object& x) const { return SimplicialMap::identity(x); }
  Map zero_map(const Object& s, const Object& t) const { return SimplicialMap::zero(s, t); }
  /// Levelwise Kronecker products are strictly associative.
  Map associator(const Object& a, const Object& b, const Object& c) const {
    return SimplicialMap::identity(dkcat::tensor(dkcat::tensor(a, b), c));
  }
  const Object& source(const Map& f) const { return f.source(); }
  const Object& target(const Map& f) const { return f.target(); }
  bool commutes(const Map& f) const { return f.commutes(); }

  /// Points ck -> M correspond to vertices v in M_0, sent to s_0^n v in level n.
  std::size_t points(const Object& x) const { return x.rank(0); }
  Map point(const Object& x, const Vector& v) const;
  Matrix on_points(const Map& f) const { return f.component(0); }
  /// N(M); its degree 0 is M_0 with the same coordinates.
  ChainComplex homotopy_model(const Object& x) const { return normalize(x); }

  struct Sum {
    Object sum;
    Map in1, in2, pr1, pr2;
  };
  Sum direct_sum(const Object& a, const Object& b) const {
    SimplicialSum d = dkcat::direct_sum(a, b);
    return {d.sum, d.in1, d.in2, d.pr1, d.pr2};
  }
  Map pairing(const Map& f, const Map& g) const { return dkcat::pairing(f, g); }

  bool weak_equivalence(const Map& f) const { return is_weak_equivalence(f); }
  bool fibration(const Map& f) const { return is_fibration(f); }
  bool trivial_fibration(const Map& f) const { return is_trivial_fibration(f); }

  std::optional<std::string> difference(const Map& a, const Map& b) const;

  bool operator==(const SimplicialAmbient&) const = default;
};

}  // namespace dkcat
