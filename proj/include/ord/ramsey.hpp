#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ord/coloring.hpp"
#include "ord/finite_set.hpp"
#include "ord/fundamental.hpp"
#include "ord/limits.hpp"
#include "ord/ordinal.hpp"

namespace ord {

// Y is min_i-homogeneous for C when the color of an arity-tuple from Y
// depends only on its first i elements. pre: 0 < i <= arity, Y within the
// ground set of C.
bool is_min_homogeneous(const FiniteSet& Y, const Coloring& C, unsigned i);

// Pigeonhole step: X is (w*c)-large, C has arity 1. Returns a color class
// that is w-large; classes are tried in order of ascending minimum element.
// Throws PreconditionError if X is not (w*c)-large and FalsificationError if
// no class qualifies despite the precondition.
FiniteSet php_homogeneous(const FiniteSet& X, const Coloring& C,
                          const Limits& limits = default_limits());

// Tree of increasing label sequences grown by the partial-homogeneity
// insertion rule: each element extends the node, leftmost of maximum length,
// whose label set stays min_level-homogeneous with it. The root (empty
// sequence) is always eligible, so construction is total.
struct ErdosRadoTree {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Node {
    std::size_t parent = npos;
    Nat label;                          // undefined for the root
    std::vector<Nat> labels;            // full path labels, root-exclusive
    std::vector<std::size_t> children;  // creation order == label order
    std::size_t created_at = npos;      // insertion step, 0-based
  };

  std::vector<Node> nodes;        // nodes[0] is the root
  std::vector<std::size_t> step_nodes;  // node created at each step
  unsigned level = 0;

  std::size_t branches_at(std::size_t node, std::size_t step) const;
  // Longest root-to-leaf label sequence; ties resolved leftmost.
  std::vector<Nat> deepest_branch() const;
  std::string to_text() const;
};

// pre: level == C.arity() - 1 and C.arity() >= 2; X within ground of C.
ErdosRadoTree build_er_tree(const FiniteSet& X, const Coloring& C, unsigned level);

enum class GammaFlavor { Pairs, General };

// Ordinal-descent certificate attached to tree growth. For the pairs flavor
// the seed is w^c and each nonempty node sigma with (w*c)[labels] = w*d + r
// contributes w^d * ((c+1)^r * (c - #branches)); for the general flavor the
// seed is w^alpha and sigma contributes w^(alpha[labels]) * (c^(2^last) -
// #branches).
struct GammaTrace {
  struct NodeStat {
    std::size_t node = 0;
    Nat d;             // pairs flavor
    Nat r;             // pairs flavor
    Ordinal exponent;  // general flavor: alpha[labels...]
    Nat count;         // n or m for this node at this step
    std::size_t branches = 0;
  };
  struct Step {
    std::size_t inserted_node = 0;
    bool large_branch = false;  // some label set is seed-large after this step
    std::vector<NodeStat> node_stats;
  };

  GammaFlavor flavor = GammaFlavor::Pairs;
  Ordinal seed_power;            // gammas[0]
  std::vector<Ordinal> gammas;   // size |X|+1
  std::vector<Step> steps;       // size |X|
  // Pairs flavor: nodes whose d reached c. Never expected; logged, not assumed.
  std::vector<std::size_t> overflow_nodes;
};

// pre: min X >= 3, C.arity() == 2. The color count is taken from C.
GammaTrace gamma_sequence_pairs(const FiniteSet& X, const Coloring& C,
                                const ErdosRadoTree& tree,
                                const Limits& limits = default_limits());

// pre: min X >= 3, C.arity() >= 2, tree built at level C.arity()-1.
GammaTrace gamma_sequence_general(const FiniteSet& X, const Coloring& C,
                                  const ErdosRadoTree& tree, const Ordinal& alpha,
                                  const Limits& limits = default_limits());

// Per-step certificate: either some branch label set became seed-large, or
// gamma strictly decreased; plus the structural branching bounds.
struct CertificateReport {
  struct Issue {
    std::size_t step;
    std::string what;
  };
  bool holds = true;
  std::vector<Issue> issues;
};

CertificateReport check_descent_certificate(const ErdosRadoTree& tree,
                                            const GammaTrace& trace,
                                            const Coloring& C);

// Brute-force oracle: some homogeneous H within X with |H| > min H and
// |H| >= arity (smaller sets are vacuously monochromatic and not counted),
// searching largest-first (size descending, then lexicographic). Absence is
// a value, not an error.
std::optional<FiniteSet> find_homogeneous_exhaustive(
    const FiniteSet& X, const Coloring& C, const Limits& limits = default_limits());

// Dimension-reduction pipeline: repeatedly builds a tree at the current
// arity, takes the longest branch, induces the one-lower-arity coloring on it
// (padding with the successor along the branch; the last branch element is
// excluded so padding always exists), and finishes with the pigeonhole step.
// Returns a homogeneous H with |H| > min H, or nullopt when the largeness
// prerequisites run out. The returned set is re-verified against the original
// coloring. budget caps the total number of tree insertions.
// pre: min X >= 3, C.arity() >= 1.
std::optional<FiniteSet> run_pipeline(const FiniteSet& X, const Coloring& C,
                                      const Nat& budget,
                                      const Limits& limits = default_limits());

// Whether every `colors`-coloring of the pairs of X has a monochromatic H
// with |H| > min H. Exhaustive DFS over colorings in lexicographic order with
// first-edge color-symmetry pruning; the work is partitioned over `workers`
// threads with a deterministic reduction, so the result is independent of the
// worker count.
bool every_pair_coloring_has_large_homogeneous(const FiniteSet& X, unsigned colors,
                                               unsigned workers = 1,
                                               const Limits& limits = default_limits());

// Least N <= cap such that EVERY coloring of arity-subsets of {min_elt..N}
// with the given colors has a homogeneous H with |H| > min H; nullopt if no
// such N <= cap. Only dimension 0 (pairs) is searchable.
std::optional<Nat> ph_threshold(unsigned dimension, unsigned colors,
                                const Nat& min_elt, const Nat& cap,
                                unsigned workers = 1,
                                const Limits& limits = default_limits());

}  // namespace ord
