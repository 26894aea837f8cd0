#pragma once

#include "gaussalg/errors.hpp"
#include "gaussalg/int_matrix.hpp"
#include "gaussalg/monomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gaussalg {

/// A monomial subalgebra of K[x_1..x_d]: finitely many distinct generators of
/// one common degree r >= 1. Generator order is preserved (it matters when
/// relations are reported against generator indices); duplicates are dropped
/// keeping the first occurrence.
class MonomialAlgebra {
public:
  MonomialAlgebra(int ambient, MonomialSet generators) : d_(ambient) {
    if (ambient < 1) throw input_error("ambient dimension must be at least 1");
    if (generators.empty()) throw input_error("a monomial algebra needs at least one generator");
    MonomialHashSet seen;
    for (Monomial& m : generators) {
      if (m.ambient() != d_)
        throw input_error("generator has " + std::to_string(m.ambient()) + " variables, expected " +
                          std::to_string(d_));
      if (seen.insert(m).second)
        gens_.push_back(std::move(m));
      else
        ++duplicates_dropped_;
    }
    degree_ = gens_.front().degree();
    if (degree_ < 1) throw input_error("generators must be non-constant monomials");
    for (const Monomial& m : gens_)
      if (m.degree() != degree_)
        throw input_error("generators have mixed degrees (" + std::to_string(degree_) + " and " +
                          std::to_string(m.degree()) + "); the construction needs one common degree");
  }

  int ambient() const { return d_; }
  int degree() const { return degree_; }
  const MonomialSet& generators() const { return gens_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }

  /// How many duplicate generators the constructor dropped (callers warn).
  int duplicates_dropped() const { return duplicates_dropped_; }

  /// The log-matrix: d rows, one column per generator, column j = exponent
  /// vector of generator j.
  IntMatrix log_matrix() const {
    IntMatrix m(d_, generator_count());
    for (int j = 0; j < generator_count(); ++j)
      for (int i = 0; i < d_; ++i) m(i, j) = gens_[static_cast<std::size_t>(j)].exponent(i);
    return m;
  }

private:
  int d_;
  int degree_ = 0;
  MonomialSet gens_;
  int duplicates_dropped_ = 0;
};

/// Log-matrix of an arbitrary equigenerated sequence (columns = monomials).
inline IntMatrix log_matrix_of(const MonomialSet& gens) {
  if (gens.empty()) throw input_error("log matrix of an empty monomial sequence");
  const int d = gens.front().ambient();
  IntMatrix m(d, static_cast<int>(gens.size()));
  for (int j = 0; j < static_cast<int>(gens.size()); ++j) {
    if (gens[static_cast<std::size_t>(j)].ambient() != d)
      throw input_error("monomials live in different ambient dimensions");
    for (int i = 0; i < d; ++i) m(i, j) = gens[static_cast<std::size_t>(j)].exponent(i);
  }
  return m;
}

} // namespace gaussalg
