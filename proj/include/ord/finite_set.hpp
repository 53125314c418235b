#pragma once

#include <string>
#include <vector>

#include "ord/nat.hpp"

namespace ord {

// Strictly increasing finite sequence of naturals. May be empty.
class FiniteSet {
 public:
  FiniteSet() = default;
  // Validates strict increase; throws PreconditionError otherwise.
  explicit FiniteSet(std::vector<Nat> ascending);

  // {lo, lo+1, ..., hi}; empty when hi < lo.
  static FiniteSet interval(const Nat& lo, const Nat& hi);
  // Accepts "3 5 9", "3,5,9" or "3..14".
  static FiniteSet parse(const std::string& text);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const Nat& operator[](std::size_t i) const { return elems_[i]; }
  const Nat& min() const { return elems_.front(); }  // pre: !empty()
  const Nat& max() const { return elems_.back(); }   // pre: !empty()
  bool contains(const Nat& v) const;
  // Index of v; pre: contains(v).
  std::size_t index_of(const Nat& v) const;

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  const std::vector<Nat>& elements() const { return elems_; }

  std::string to_string() const;

  friend bool operator==(const FiniteSet& a, const FiniteSet& b) {
    return a.elems_ == b.elems_;
  }

 private:
  std::vector<Nat> elems_;
};

}  // namespace ord
