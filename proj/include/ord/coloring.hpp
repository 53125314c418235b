#pragma once

#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include "ord/finite_set.hpp"
#include "ord/nat.hpp"

namespace ord {

// Total map from arity-element subsets of a finite ground set to colors
// {0, ..., colors-1}. The table is materialized so exhaustive oracles and
// file fixtures are bit-reproducible.
class Coloring {
 public:
  using SubsetFn = std::function<unsigned(std::span<const Nat>)>;

  Coloring(FiniteSet ground, unsigned arity, unsigned colors, SubsetFn fn);

  static Coloring constant(FiniteSet ground, unsigned arity, unsigned colors,
                           unsigned color);
  static Coloring random(FiniteSet ground, unsigned arity, unsigned colors,
                         std::mt19937_64& rng);

  // Fixture format: header line "arity colors", then one line per subset:
  // "x1 ... xk color". The ground set is the union of the listed elements;
  // totality over it is validated strictly.
  static Coloring read_fixture(std::istream& in);
  void write_fixture(std::ostream& out) const;

  const FiniteSet& ground() const { return ground_; }
  unsigned arity() const { return arity_; }
  unsigned colors() const { return colors_; }
  std::size_t table_size() const { return table_.size(); }

  // Color of an increasing arity-subset of the ground set.
  unsigned color_of(std::span<const Nat> subset) const;
  // Same, with ground-set indices.
  unsigned color_of_indices(std::span<const std::size_t> idx) const;

  // Restriction to a subset of the ground set (same arity and colors).
  Coloring restrict_to(const FiniteSet& subset) const;

 private:
  Coloring() = default;

  FiniteSet ground_;
  unsigned arity_ = 1;
  unsigned colors_ = 1;
  std::vector<unsigned> table_;  // indexed by colex rank of the index subset
};

}  // namespace ord
