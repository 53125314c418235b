#include "ord/coloring.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "combinatorics.hpp"
#include "ord/errors.hpp"

namespace ord {

using detail::binom;
using detail::for_each_combination;
using detail::subset_rank;

Coloring::Coloring(FiniteSet ground, unsigned arity, unsigned colors, SubsetFn fn)
    : ground_(std::move(ground)), arity_(arity), colors_(colors) {
  if (arity_ < 1) throw PreconditionError("coloring arity must be >= 1");
  if (colors_ < 1) throw PreconditionError("coloring needs at least one color");
  table_.assign(binom(ground_.size(), arity_), 0);
  std::vector<Nat> subset(arity_);
  for_each_combination(ground_.size(), arity_, [&](std::span<const std::size_t> idx) {
    for (std::size_t j = 0; j < idx.size(); ++j) subset[j] = ground_[idx[j]];
    const unsigned color = fn(std::span<const Nat>(subset));
    if (color >= colors_) throw PreconditionError("color value out of range");
    table_[subset_rank(idx)] = color;
  });
}

Coloring Coloring::constant(FiniteSet ground, unsigned arity, unsigned colors,
                            unsigned color) {
  return Coloring(std::move(ground), arity, colors,
                  [color](std::span<const Nat>) { return color; });
}

Coloring Coloring::random(FiniteSet ground, unsigned arity, unsigned colors,
                          std::mt19937_64& rng) {
  return Coloring(std::move(ground), arity, colors,
                  [&rng, colors](std::span<const Nat>) {
                    return static_cast<unsigned>(rng() % colors);
                  });
}

unsigned Coloring::color_of(std::span<const Nat> subset) const {
  if (subset.size() != arity_) {
    throw PreconditionError("subset size does not match coloring arity");
  }
  std::vector<std::size_t> idx(subset.size());
  for (std::size_t j = 0; j < subset.size(); ++j) {
    idx[j] = ground_.index_of(subset[j]);
    if (j > 0 && idx[j] <= idx[j - 1]) {
      throw PreconditionError("subset must be strictly increasing");
    }
  }
  return table_[subset_rank(idx)];
}

unsigned Coloring::color_of_indices(std::span<const std::size_t> idx) const {
  return table_[subset_rank(idx)];
}

Coloring Coloring::restrict_to(const FiniteSet& subset) const {
  return Coloring(subset, arity_, colors_,
                  [this](std::span<const Nat> s) { return color_of(s); });
}

Coloring Coloring::read_fixture(std::istream& in) {
  unsigned arity = 0, colors = 0;
  if (!(in >> arity >> colors)) {
    throw PreconditionError("coloring fixture: bad header");
  }
  if (arity < 1 || colors < 1) {
    throw PreconditionError("coloring fixture: arity and colors must be >= 1");
  }
  std::map<std::vector<Nat>, unsigned> entries;
  std::vector<Nat> ground_elems;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (toks.size() != arity + 1u) {
      throw PreconditionError("coloring fixture: line with wrong field count: " + line);
    }
    std::vector<Nat> subset;
    for (unsigned j = 0; j < arity; ++j) {
      try {
        subset.emplace_back(toks[j]);
      } catch (const std::exception&) {
        throw PreconditionError("coloring fixture: bad element: " + toks[j]);
      }
      if (j > 0 && !(subset[j - 1] < subset[j])) {
        throw PreconditionError("coloring fixture: subset not increasing: " + line);
      }
    }
    unsigned color = 0;
    try {
      color = static_cast<unsigned>(std::stoul(toks[arity]));
    } catch (const std::exception&) {
      throw PreconditionError("coloring fixture: bad color: " + toks[arity]);
    }
    if (color >= colors) {
      throw PreconditionError("coloring fixture: color out of range: " + line);
    }
    if (!entries.emplace(subset, color).second) {
      throw PreconditionError("coloring fixture: duplicate subset: " + line);
    }
    for (const Nat& v : subset) ground_elems.push_back(v);
  }
  std::sort(ground_elems.begin(), ground_elems.end());
  ground_elems.erase(std::unique(ground_elems.begin(), ground_elems.end()),
                     ground_elems.end());
  FiniteSet ground(std::move(ground_elems));
  const std::size_t expected = binom(ground.size(), arity);
  if (entries.size() != expected) {
    throw PreconditionError("coloring fixture: not total over its ground set");
  }
  return Coloring(std::move(ground), arity, colors, [&](std::span<const Nat> s) {
    return entries.at(std::vector<Nat>(s.begin(), s.end()));
  });
}

void Coloring::write_fixture(std::ostream& out) const {
  out << arity_ << ' ' << colors_ << '\n';
  std::vector<Nat> subset(arity_);
  for_each_combination(ground_.size(), arity_, [&](std::span<const std::size_t> idx) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      out << ground_[idx[j]] << ' ';
    }
    out << table_[subset_rank(idx)] << '\n';
  });
}

}  // namespace ord
