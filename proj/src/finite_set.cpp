#include "ord/finite_set.hpp"

#include <algorithm>
#include <sstream>

#include "ord/errors.hpp"

namespace ord {

FiniteSet::FiniteSet(std::vector<Nat> ascending) : elems_(std::move(ascending)) {
  for (std::size_t i = 0; i + 1 < elems_.size(); ++i) {
    if (!(elems_[i] < elems_[i + 1])) {
      throw PreconditionError("finite set elements must be strictly increasing");
    }
  }
}

FiniteSet FiniteSet::interval(const Nat& lo, const Nat& hi) {
  std::vector<Nat> elems;
  for (Nat v = lo; v <= hi; ++v) elems.push_back(v);
  return FiniteSet(std::move(elems));
}

FiniteSet FiniteSet::parse(const std::string& text) {
  if (auto dots = text.find(".."); dots != std::string::npos) {
    Nat lo, hi;
    try {
      lo = Nat(text.substr(0, dots));
      hi = Nat(text.substr(dots + 2));
    } catch (const std::exception&) {
      throw PreconditionError("invalid interval: " + text);
    }
    return interval(lo, hi);
  }
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::vector<Nat> elems;
  std::string tok;
  while (in >> tok) {
    try {
      elems.emplace_back(tok);
    } catch (const std::exception&) {
      throw PreconditionError("invalid set element: " + tok);
    }
  }
  return FiniteSet(std::move(elems));
}

bool FiniteSet::contains(const Nat& v) const {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

std::size_t FiniteSet::index_of(const Nat& v) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
  if (it == elems_.end() || *it != v) {
    throw PreconditionError("element not in set");
  }
  return static_cast<std::size_t>(it - elems_.begin());
}

std::string FiniteSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ' ';
    out += elems_[i].str();
  }
  return out;
}

}  // namespace ord
