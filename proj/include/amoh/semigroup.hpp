#pragma once

/**
 * Numerical-semigroup machinery over the degrees of a subalgebra basis:
 * bounded membership by dynamic programming, deterministic factorizations,
 * an Apéry-set presentation used to enumerate tête-à-tête pairs, the
 * δ-sequence with its gcd chain, and constrained representations.
 */

#include <cstddef>
#include <optional>
#include <vector>

namespace amoh {

/// Additive semigroup generated by positive integers (order is preserved).
class DegreeSemigroup {
 public:
  explicit DegreeSemigroup(std::vector<std::size_t> generators);

  const std::vector<std::size_t>& generators() const noexcept { return generators_; }
  /// gcd of the generators; 0 for the trivial semigroup {0}.
  std::size_t gcd() const noexcept { return gcd_; }

  bool contains(std::size_t value) const;
  /// table[d] == true iff d is in the semigroup, for d in [0, bound].
  std::vector<bool> membership_table(std::size_t bound) const;

  /// A pair of distinct exponent vectors (indexed like generators()) with
  /// equal weighted sum `degree`.
  struct Relation {
    std::vector<std::size_t> lhs;
    std::vector<std::size_t> rhs;
    std::size_t degree = 0;
  };

  /// A finite set of relations generating the kernel congruence of
  /// N^r -> N, built from the Apéry set with respect to the smallest
  /// generator. Sorted by degree.
  std::vector<Relation> presentation() const;

 private:
  std::vector<std::size_t> generators_;
  std::size_t gcd_ = 0;
};

/// Factorizes values up to a fixed bound. Among all factorizations the one
/// with the largest multiplicity on the largest generator is chosen, then on
/// the next largest, and so on.
class Factorizer {
 public:
  Factorizer(std::vector<std::size_t> generators, std::size_t bound);

  std::size_t bound() const noexcept { return bound_; }
  /// Multiplicities indexed like the generators, or nullopt when the value
  /// is not in the semigroup. Values above bound() throw std::out_of_range.
  std::optional<std::vector<std::size_t>> factor(std::size_t value) const;

 private:
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> order_;                 // generator indices, largest first
  std::vector<std::vector<bool>> suffix_reach_;    // suffix_reach_[k][d]: d from order_[k..]
  std::size_t bound_;
};

/// The degree sequence (-mu_0, ..., -mu_h) and its gcd chain (d_2, ..., d_{h+1}).
struct DeltaSequence {
  std::vector<std::size_t> deltas;
  std::vector<std::size_t> ds;
  std::size_t h = 0;

  friend bool operator==(const DeltaSequence&, const DeltaSequence&) = default;
};

/// Builds the δ-sequence of a curve with deg g = deg_g, deg f = deg_f whose
/// degree semigroup is `semigroup`. Each further entry is the smallest
/// semigroup element not divisible by the current chain value.
DeltaSequence delta_sequence(std::size_t deg_f, std::size_t deg_g, const DegreeSemigroup& semigroup);

struct SemigroupRepr {
  std::vector<std::size_t> alphas;

  friend bool operator==(const SemigroupRepr&, const SemigroupRepr&) = default;
};

/// Writes `value` as sum alpha_i * deltas[i] with 0 <= alpha_i < d_i / d_{i+1}
/// for i >= 2, fixing alpha_h, ..., alpha_2 by congruences and then choosing
/// the head with alpha_0 as large as possible. Throws NotInSemigroup.
SemigroupRepr semigroup_represent(std::size_t value, const DeltaSequence& delta);

}  // namespace amoh
