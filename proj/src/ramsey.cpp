#include "ord/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "combinatorics.hpp"
#include "ord/errors.hpp"
#include "ord/interrupt.hpp"

namespace ord {

using detail::for_each_combination;

namespace {

std::vector<Nat> subset_values(const FiniteSet& Y, std::span<const std::size_t> idx) {
  std::vector<Nat> out(idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) out[j] = Y[idx[j]];
  return out;
}

// min_{arity-1} homogeneity of an increasing element list: every
// (arity-1)-subset must color all of its extensions alike.
bool min_top_homogeneous(const std::vector<Nat>& elems, const Coloring& C) {
  const unsigned arity = C.arity();
  if (elems.size() < arity) return true;
  bool ok = true;
  std::vector<Nat> tuple(arity);
  for_each_combination(elems.size(), arity - 1, [&](std::span<const std::size_t> idx) {
    if (!ok) return;
    for (std::size_t j = 0; j + 1 < arity; ++j) tuple[j] = elems[idx[j]];
    const std::size_t top = idx.empty() ? 0 : idx.back() + 1;
    bool have_color = false;
    unsigned color = 0;
    for (std::size_t y = top; y < elems.size(); ++y) {
      tuple[arity - 1] = elems[y];
      const unsigned c = C.color_of(tuple);
      if (!have_color) {
        have_color = true;
        color = c;
      } else if (c != color) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

// Color classes of an arity-1 coloring over X, ordered by ascending minimum.
std::vector<FiniteSet> color_classes_by_min(const FiniteSet& X, const Coloring& C) {
  std::vector<std::vector<Nat>> classes(C.colors());
  std::vector<Nat> single(1);
  for (const Nat& v : X) {
    single[0] = v;
    classes[C.color_of(single)].push_back(v);
  }
  std::vector<FiniteSet> out;
  for (auto& cls : classes) {
    if (!cls.empty()) out.emplace_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(),
            [](const FiniteSet& a, const FiniteSet& b) { return a.min() < b.min(); });
  return out;
}

std::optional<FiniteSet> find_omega_large_class(const FiniteSet& X, const Coloring& C,
                                                const Limits& limits) {
  for (const FiniteSet& cls : color_classes_by_min(X, C)) {
    if (is_large(Ordinal::omega(), cls, limits)) return cls;
  }
  return std::nullopt;
}

Nat pow_squared(const Nat& base, std::size_t squarings) {
  Nat out = base;
  for (std::size_t i = 0; i < squarings; ++i) out *= out;
  return out;
}

}  // namespace

bool is_min_homogeneous(const FiniteSet& Y, const Coloring& C, unsigned i) {
  const unsigned arity = C.arity();
  if (i < 1 || i > arity) {
    throw PreconditionError("min-homogeneity index out of range");
  }
  if (Y.size() < arity) return true;
  std::map<std::vector<std::size_t>, unsigned> prefix_color;
  bool ok = true;
  for_each_combination(Y.size(), arity, [&](std::span<const std::size_t> idx) {
    if (!ok) return;
    const unsigned color = C.color_of(subset_values(Y, idx));
    std::vector<std::size_t> key(idx.begin(), idx.begin() + i);
    auto [it, fresh] = prefix_color.emplace(std::move(key), color);
    if (!fresh && it->second != color) ok = false;
  });
  return ok;
}

FiniteSet php_homogeneous(const FiniteSet& X, const Coloring& C, const Limits& limits) {
  if (C.arity() != 1) throw PreconditionError("php step requires an arity-1 coloring");
  const Ordinal wc = multiply(Ordinal::omega(), Ordinal::from_nat(C.colors()));
  if (!is_large(wc, X, limits)) {
    throw PreconditionError("php step requires a (w*c)-large set");
  }
  if (auto cls = find_omega_large_class(X, C, limits)) return *cls;
  throw FalsificationError("php: no w-large color class in a (w*c)-large set");
}

std::size_t ErdosRadoTree::branches_at(std::size_t node, std::size_t step) const {
  std::size_t count = 0;
  for (std::size_t child : nodes[node].children) {
    if (nodes[child].created_at < step) ++count;
  }
  return count;
}

std::vector<Nat> ErdosRadoTree::deepest_branch() const {
  const std::vector<Nat>* best = nullptr;
  for (const Node& node : nodes) {
    if (!best || node.labels.size() > best->size() ||
        (node.labels.size() == best->size() &&
         std::lexicographical_compare(node.labels.begin(), node.labels.end(),
                                      best->begin(), best->end()))) {
      best = &node.labels;
    }
  }
  return best ? *best : std::vector<Nat>{};
}

std::string ErdosRadoTree::to_text() const {
  std::ostringstream out;
  // Preorder walk; children are stored in insertion order.
  struct Frame {
    std::size_t node;
    std::size_t depth;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    auto [id, depth] = stack.back();
    stack.pop_back();
    const Node& node = nodes[id];
    for (std::size_t i = 0; i < depth; ++i) out << "  ";
    if (id == 0) {
      out << "root";
    } else {
      out << node.label.str();
    }
    out << "  children=" << node.children.size() << '\n';
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
      stack.push_back({*it, depth + 1});
    }
  }
  return out.str();
}

ErdosRadoTree build_er_tree(const FiniteSet& X, const Coloring& C, unsigned level) {
  if (C.arity() < 2) throw PreconditionError("tree construction requires arity >= 2");
  if (level != C.arity() - 1) {
    throw PreconditionError("tree level must be arity - 1");
  }
  ErdosRadoTree tree;
  tree.level = level;
  tree.nodes.push_back({});  // root
  std::size_t step = 0;
  for (const Nat& x : X) {
    // Insertion rule: extend the node, leftmost of maximum length, whose
    // label set stays min_level-homogeneous together with x. "Leftmost"
    // among equal lengths is the lexicographically least label sequence,
    // which matches sibling insertion order because elements arrive in
    // increasing order.
    std::size_t best = ErdosRadoTree::npos;
    for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
      const auto& labels = tree.nodes[id].labels;
      if (best != ErdosRadoTree::npos) {
        const auto& bl = tree.nodes[best].labels;
        if (labels.size() < bl.size()) continue;
        if (labels.size() == bl.size() &&
            !std::lexicographical_compare(labels.begin(), labels.end(), bl.begin(),
                                          bl.end())) {
          continue;
        }
      }
      std::vector<Nat> extended = labels;
      extended.push_back(x);
      if (min_top_homogeneous(extended, C)) best = id;
    }
    // The root is always eligible, so best is set.
    ErdosRadoTree::Node node;
    node.parent = best;
    node.label = x;
    node.labels = tree.nodes[best].labels;
    node.labels.push_back(x);
    node.created_at = step;
    tree.nodes.push_back(std::move(node));
    const std::size_t id = tree.nodes.size() - 1;
    tree.nodes[best].children.push_back(id);
    tree.step_nodes.push_back(id);
    ++step;
  }
  return tree;
}

namespace {

// Largeness states of every node's label set under the given seed:
// state(root) = seed, state(child) = state(parent)[label].
std::vector<Ordinal> node_states(const ErdosRadoTree& tree, const Ordinal& seed) {
  std::vector<Ordinal> states(tree.nodes.size());
  states[0] = seed;
  // Nodes are created parents-first, so a single pass suffices.
  for (std::size_t id = 1; id < tree.nodes.size(); ++id) {
    states[id] = fund(states[tree.nodes[id].parent], tree.nodes[id].label);
  }
  return states;
}

void require_theorem_ground(const FiniteSet& X) {
  if (X.empty() || X.min() < 3) {
    throw PreconditionError("theorem-level sets must have min >= 3");
  }
}

}  // namespace

GammaTrace gamma_sequence_pairs(const FiniteSet& X, const Coloring& C,
                                const ErdosRadoTree& tree, const Limits& limits) {
  require_theorem_ground(X);
  if (C.arity() != 2) throw PreconditionError("pairs certificate requires arity 2");
  const Nat c = C.colors();
  const Ordinal wc = multiply(Ordinal::omega(), Ordinal::from_nat(c));

  GammaTrace trace;
  trace.flavor = GammaFlavor::Pairs;
  trace.seed_power = Ordinal::power(Ordinal::from_nat(c));
  trace.gammas.push_back(trace.seed_power);

  const std::vector<Ordinal> states = node_states(tree, wc);

  for (std::size_t step = 1; step <= tree.step_nodes.size(); ++step) {
    GammaTrace::Step st;
    st.inserted_node = tree.step_nodes[step - 1];
    Ordinal gamma;
    for (std::size_t id = 1; id < tree.nodes.size(); ++id) {
      if (tree.nodes[id].created_at >= step) continue;
      const Ordinal& state = states[id];
      if (state.is_zero()) st.large_branch = true;
      GammaTrace::NodeStat ns;
      ns.node = id;
      // state has the shape w*d + r
      for (const auto& t : state.terms()) {
        if (t.exponent.is_zero()) {
          ns.r = t.coefficient;
        } else {
          ns.d = t.coefficient;
        }
      }
      ns.branches = tree.branches_at(id, step);
      if (ns.r > limits.max_nat_bits) {
        throw ResourceLimitError("certificate coefficient exceeds the bignum budget");
      }
      Nat pow = 1;
      const Nat base = c + 1;
      for (Nat k = 0; k < ns.r; ++k) pow *= base;
      ns.count = pow * (c - Nat(ns.branches));
      if (ns.d >= c) {
        // Never expected; logged rather than assumed absent.
        if (std::find(trace.overflow_nodes.begin(), trace.overflow_nodes.end(), id) ==
            trace.overflow_nodes.end()) {
          trace.overflow_nodes.push_back(id);
        }
      } else if (ns.count > 0) {
        gamma = natural_sum(
            gamma, Ordinal::term(Ordinal::from_nat(ns.d), ns.count));
      }
      st.node_stats.push_back(std::move(ns));
    }
    trace.gammas.push_back(std::move(gamma));
    trace.steps.push_back(std::move(st));
  }
  return trace;
}

GammaTrace gamma_sequence_general(const FiniteSet& X, const Coloring& C,
                                  const ErdosRadoTree& tree, const Ordinal& alpha,
                                  const Limits& limits) {
  require_theorem_ground(X);
  if (C.arity() < 2) throw PreconditionError("certificate requires arity >= 2");
  const Nat c = C.colors();

  GammaTrace trace;
  trace.flavor = GammaFlavor::General;
  trace.seed_power = Ordinal::power(alpha);
  trace.gammas.push_back(trace.seed_power);

  const std::vector<Ordinal> states = node_states(tree, alpha);

  // c^(2^label) per node, with the bit cap checked up front.
  std::vector<Nat> caps(tree.nodes.size());
  for (std::size_t id = 1; id < tree.nodes.size(); ++id) {
    const Nat& label = tree.nodes[id].label;
    if (label > 64) throw ResourceLimitError("branch bound exponent exceeds cap");
    const auto lv = static_cast<std::size_t>(label);
    if (c >= 2) {
      const std::size_t bits = lv >= 63 ? ~std::size_t{0} : (std::size_t{1} << lv);
      if (bits > limits.max_nat_bits) {
        throw ResourceLimitError("branch bound exceeds the bignum budget");
      }
    }
    caps[id] = pow_squared(c, lv);
  }

  for (std::size_t step = 1; step <= tree.step_nodes.size(); ++step) {
    GammaTrace::Step st;
    st.inserted_node = tree.step_nodes[step - 1];
    Ordinal gamma;
    for (std::size_t id = 1; id < tree.nodes.size(); ++id) {
      if (tree.nodes[id].created_at >= step) continue;
      const Ordinal& state = states[id];
      if (state.is_zero()) st.large_branch = true;
      GammaTrace::NodeStat ns;
      ns.node = id;
      ns.exponent = state;
      ns.branches = tree.branches_at(id, step);
      if (Nat(ns.branches) > caps[id]) {
        throw FalsificationError("branch count exceeds its structural bound");
      }
      ns.count = caps[id] - Nat(ns.branches);
      if (ns.count > 0) {
        gamma = natural_sum(gamma, Ordinal::term(state, ns.count));
      }
      st.node_stats.push_back(std::move(ns));
    }
    trace.gammas.push_back(std::move(gamma));
    trace.steps.push_back(std::move(st));
  }
  return trace;
}

CertificateReport check_descent_certificate(const ErdosRadoTree& tree,
                                            const GammaTrace& trace,
                                            const Coloring& C) {
  CertificateReport report;
  auto issue = [&](std::size_t step, std::string what) {
    report.holds = false;
    report.issues.push_back({step, std::move(what)});
  };

  for (std::size_t step = 1; step < trace.gammas.size(); ++step) {
    const auto& st = trace.steps[step - 1];
    if (!st.large_branch &&
        compare(trace.gammas[step], trace.gammas[step - 1]) >= 0) {
      issue(step, "gamma failed to decrease without a large branch");
    }
    if (trace.gammas[step].is_zero() && !st.large_branch) {
      issue(step, "gamma vanished without a large branch");
    }
  }

  // Structural branching bounds.
  const Nat c = C.colors();
  for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
    const auto& node = tree.nodes[id];
    if (id == 0) continue;
    if (trace.flavor == GammaFlavor::Pairs) {
      if (Nat(node.children.size()) > c) {
        issue(0, "node exceeds the c-branch bound");
      }
    } else if (node.label <= 64) {
      // children <= c^(2^label); above 64 the bound dwarfs any desk-scale
      // child count.
      const Nat bound_exp = Nat(1) << static_cast<unsigned>(node.label);
      if (!pow_at_least(c, bound_exp, Nat(node.children.size()))) {
        issue(0, "node exceeds the profile-count branch bound");
      }
    }
  }
  return report;
}

std::optional<FiniteSet> find_homogeneous_exhaustive(const FiniteSet& X,
                                                     const Coloring& C,
                                                     const Limits& limits) {
  if (X.size() > limits.max_exhaustive_ground) {
    throw ResourceLimitError("exhaustive homogeneous search ground too large");
  }
  const unsigned arity = C.arity();
  for (std::size_t size = X.size(); size >= std::max<std::size_t>(arity, 1); --size) {
    std::optional<FiniteSet> found;
    for_each_combination(X.size(), size, [&](std::span<const std::size_t> idx) {
      if (found) return;
      // Relatively large: |H| > min H.
      if (Nat(idx.size()) <= X[idx[0]]) return;
      bool homogeneous = true;
      bool have = false;
      unsigned color = 0;
      std::vector<Nat> values = subset_values(X, idx);
      for_each_combination(values.size(), arity, [&](std::span<const std::size_t> sub) {
        if (!homogeneous) return;
        std::vector<Nat> tuple(sub.size());
        for (std::size_t j = 0; j < sub.size(); ++j) tuple[j] = values[sub[j]];
        const unsigned c = C.color_of(tuple);
        if (!have) {
          have = true;
          color = c;
        } else if (c != color) {
          homogeneous = false;
        }
      });
      if (homogeneous) found = FiniteSet(std::move(values));
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<FiniteSet> run_pipeline(const FiniteSet& X, const Coloring& C,
                                      const Nat& budget, const Limits& limits) {
  require_theorem_ground(X);
  if (C.arity() < 1) throw PreconditionError("pipeline requires arity >= 1");

  Nat budget_left = budget;
  FiniteSet cur = X;
  Coloring curC = C.restrict_to(X);

  while (curC.arity() >= 2) {
    if (cur.size() < 2) return std::nullopt;
    if (Nat(cur.size()) > budget_left) {
      throw ResourceLimitError("pipeline budget exhausted");
    }
    budget_left -= cur.size();
    const ErdosRadoTree tree = build_er_tree(cur, curC, curC.arity() - 1);
    const std::vector<Nat> branch = tree.deepest_branch();
    if (branch.size() < 2) return std::nullopt;
    // The branch label set is min_{arity-1}-homogeneous, so colors do not
    // depend on the last coordinate there; padding with the successor along
    // the branch induces a well-defined coloring one arity down. The last
    // branch element is excluded so the pad always exists.
    const FiniteSet Y{std::vector<Nat>(branch.begin(), branch.end())};
    const FiniteSet Yprime{std::vector<Nat>(branch.begin(), branch.end() - 1)};
    const unsigned lower = curC.arity() - 1;
    const Coloring& outer = curC;
    Coloring induced(
        Yprime, lower, outer.colors(), [&outer, &Y](std::span<const Nat> t) {
          std::vector<Nat> tuple(t.begin(), t.end());
          const std::size_t at = Y.index_of(tuple.back());
          tuple.push_back(Y[at + 1]);
          return outer.color_of(tuple);
        });
    cur = Yprime;
    curC = std::move(induced);
  }

  // Pigeonhole stage. When the largeness prerequisite holds a class is
  // guaranteed; otherwise we still return one if it happens to exist.
  std::optional<FiniteSet> cls = find_omega_large_class(cur, curC, limits);
  if (!cls) {
    const Ordinal wc = multiply(Ordinal::omega(), Ordinal::from_nat(curC.colors()));
    if (is_large(wc, cur, limits)) {
      throw FalsificationError("pipeline: pigeonhole failed on a (w*c)-large set");
    }
    return std::nullopt;
  }
  FiniteSet H = std::move(*cls);
  if (!(Nat(H.size()) > H.min())) return std::nullopt;

  // Re-verify against the original coloring.
  bool homogeneous = true;
  bool have = false;
  unsigned color = 0;
  for_each_combination(H.size(), C.arity(), [&](std::span<const std::size_t> idx) {
    if (!homogeneous) return;
    const unsigned c = C.color_of(subset_values(H, idx));
    if (!have) {
      have = true;
      color = c;
    } else if (c != color) {
      homogeneous = false;
    }
  });
  if (!homogeneous) {
    throw FalsificationError("pipeline: result not homogeneous for the input");
  }
  return H;
}

namespace {

// Exhaustive bad-coloring search for pairs: is there a coloring of the pairs
// of X with no monochromatic H, |H| > min H? DFS over edges in lexicographic
// order. A branch is pruned as soon as the assigned edges complete such an H,
// since every extension would contain it too.
class BadColoringSearch {
 public:
  BadColoringSearch(const FiniteSet& X, unsigned colors, const Limits& limits)
      : n_(X.size()), colors_(colors), limits_(limits) {
    values_.reserve(n_);
    for (const Nat& v : X) values_.push_back(v);
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = u + 1; v < n_; ++v) edges_.push_back({u, v});
    }
    color_.assign(edges_.size(), -1);
    adj_.assign(colors_, std::vector<std::uint64_t>(n_, 0));
  }

  // Returns true if a bad coloring exists in the subspace where the first
  // `prefix.size()` edges carry the given colors.
  bool search_with_prefix(const std::vector<unsigned>& prefix,
                          std::atomic<bool>* stop, std::size_t* nodes) {
    nodes_ = nodes;
    stop_ = stop;
    for (std::size_t e = 0; e < prefix.size(); ++e) {
      if (!assign(e, prefix[e])) {
        for (std::size_t k = e + 1; k-- > 0;) unassign(k);
        return false;  // prefix already contains a qualifying set
      }
    }
    const bool found = dfs(prefix.size());
    for (std::size_t e = prefix.size(); e-- > 0;) unassign(e);
    return found;
  }

  std::size_t edge_count() const { return edges_.size(); }

 private:
  struct Edge {
    std::size_t u, v;
  };

  std::size_t n_;
  unsigned colors_;
  const Limits& limits_;
  std::vector<Nat> values_;
  std::vector<Edge> edges_;
  std::vector<int> color_;
  std::vector<std::vector<std::uint64_t>> adj_;  // adj_[c][v]: bitmask
  std::atomic<bool>* stop_ = nullptr;
  std::size_t* nodes_ = nullptr;

  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  // Assigns color k to edge e; returns false (leaving the assignment in
  // place) when that completes a qualifying monochromatic set.
  bool assign(std::size_t e, unsigned k) {
    const auto [u, v] = edges_[e];
    color_[e] = static_cast<int>(k);
    adj_[k][u] |= bit(v);
    adj_[k][v] |= bit(u);
    return !completes_qualifying(u, v, k);
  }

  void unassign(std::size_t e) {
    const auto [u, v] = edges_[e];
    const auto k = static_cast<unsigned>(color_[e]);
    adj_[k][u] &= ~bit(v);
    adj_[k][v] &= ~bit(u);
    color_[e] = -1;
  }

  // Any qualifying monochromatic H fully assigned must contain the edge that
  // was assigned last, so checking around each new edge maintains the
  // invariant that no qualifying H is completed on the current branch.
  bool completes_qualifying(std::size_t u, std::size_t v, unsigned k) {
    // m runs over the candidate minimum of H; H contains m, u, v.
    for (std::size_t m = 0; m <= u; ++m) {
      if (values_[m] + 1 > Nat(n_)) break;  // larger minima need even more room
      const auto size_needed = static_cast<std::size_t>(values_[m] + 1);
      std::size_t base = 3;
      std::uint64_t pool;
      if (m == u) {
        base = 2;
        pool = adj_[k][u] & adj_[k][v];
      } else {
        if ((adj_[k][m] & bit(u)) == 0 || (adj_[k][m] & bit(v)) == 0) continue;
        pool = adj_[k][m] & adj_[k][u] & adj_[k][v];
      }
      // Members beyond m, u, v come from the common neighborhood above m.
      pool &= ~(bit(u) | bit(v));
      pool &= ~((m + 1 < 64 ? bit(m + 1) : 0) - 1);  // keep indices > m
      if (size_needed < base) return true;           // cannot happen with min >= 3
      const std::size_t need = size_needed - base;
      if (extend_clique(pool, need, k)) return true;
    }
    return false;
  }

  bool extend_clique(std::uint64_t pool, std::size_t need, unsigned k) {
    if (need == 0) return true;
    while (pool) {
      const auto w = static_cast<std::size_t>(std::countr_zero(pool));
      pool &= pool - 1;
      if (extend_clique(pool & adj_[k][w], need - 1, k)) return true;
    }
    return false;
  }

  bool dfs(std::size_t e) {
    if (stop_ && stop_->load(std::memory_order_relaxed)) return false;
    if (*nodes_ >= limits_.max_search_nodes) {
      throw ResourceLimitError("coloring search exceeded its node budget");
    }
    if ((*nodes_ & 0xfff) == 0) check_interrupt();
    ++*nodes_;
    if (e == edges_.size()) return true;  // no qualifying set on this branch
    for (unsigned k = 0; k < colors_; ++k) {
      const bool viable = assign(e, k);
      if (viable && dfs(e + 1)) return true;
      unassign(e);
    }
    return false;
  }
};

bool exists_bad_coloring(const FiniteSet& X, unsigned colors, unsigned workers,
                         const Limits& limits) {
  if (X.size() < 2) return true;  // no pairs, no qualifying set
  BadColoringSearch probe(X, colors, limits);

  // Color permutations preserve homogeneity, so every bad coloring can be
  // renamed to one whose first edge has color 0; restricting the first edge
  // is therefore sound for existence. Verified against the unpruned search
  // in the test suite.
  const std::size_t edge_count = probe.edge_count();
  std::size_t split = std::min<std::size_t>(edge_count - 1, workers > 1 ? 8 : 0);
  std::size_t tasks = 1;
  for (std::size_t i = 0; i < split; ++i) {
    if (tasks > 4096 / std::max(1u, colors)) break;
    tasks *= colors;
  }
  // Recompute split to match tasks = colors^split exactly.
  split = 0;
  {
    std::size_t t = 1;
    while (t < tasks) {
      t *= colors;
      ++split;
    }
    tasks = t;
  }

  std::atomic<bool> found{false};
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&]() {
    BadColoringSearch search(X, colors, limits);
    std::size_t nodes = 0;
    try {
      while (!found.load(std::memory_order_relaxed)) {
        const std::size_t task = next.fetch_add(1, std::memory_order_relaxed);
        if (task >= tasks) break;
        std::vector<unsigned> prefix(1 + split);
        prefix[0] = 0;  // first-edge symmetry pruning
        std::size_t t = task;
        for (std::size_t i = 0; i < split; ++i) {
          prefix[1 + i] = static_cast<unsigned>(t % colors);
          t /= colors;
        }
        if (search.search_with_prefix(prefix, &found, &nodes)) {
          found.store(true, std::memory_order_relaxed);
          break;
        }
      }
    } catch (...) {
      std::scoped_lock lock(error_mutex);
      if (!error) error = std::current_exception();
      found.store(true, std::memory_order_relaxed);  // stop the others
    }
  };

  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return found.load();
}

}  // namespace

bool every_pair_coloring_has_large_homogeneous(const FiniteSet& X, unsigned colors,
                                               unsigned workers,
                                               const Limits& limits) {
  if (colors < 1) throw PreconditionError("coloring search needs >= 1 color");
  if (X.size() > 64) throw ResourceLimitError("coloring search ground too large");
  return !exists_bad_coloring(X, colors, workers, limits);
}

std::optional<Nat> ph_threshold(unsigned dimension, unsigned colors,
                                const Nat& min_elt, const Nat& cap, unsigned workers,
                                const Limits& limits) {
  if (dimension != 0) {
    throw PreconditionError("threshold search supports dimension 0 (pairs) only");
  }
  if (colors < 1) throw PreconditionError("threshold search needs >= 1 color");
  if (min_elt < 3) throw PreconditionError("threshold search requires min >= 3");
  for (Nat N = min_elt; N <= cap; ++N) {
    check_interrupt();
    const FiniteSet X = FiniteSet::interval(min_elt, N);
    if (X.size() > 64) throw ResourceLimitError("threshold interval too large");
    if (!exists_bad_coloring(X, colors, workers, limits)) return N;
  }
  return std::nullopt;
}

}  // namespace ord
