#include "iasgl/search.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <limits>
#include <numeric>
#include <random>

#include "iasgl/parallel.hpp"

namespace iasgl {

const char* to_string(SearchStatus status) noexcept {
  switch (status) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::ExhaustedNone: return "ExhaustedNone";
    case SearchStatus::BudgetExceeded: return "BudgetExceeded";
    case SearchStatus::GateRejected: return "GateRejected";
  }
  return "ExhaustedNone";
}

namespace {

using Clock = std::chrono::steady_clock;
using Label = unsigned;  // SubsetMask of a label, < 64

constexpr Label kZero = GroundSet::zero_mask();

inline std::uint64_t bit(Label m) { return std::uint64_t{1} << m; }

// Immutable description of one search instance, shared by all branches.
struct Problem {
  const Graph* graph = nullptr;
  const GroundSet* ground = nullptr;
  std::size_t vertices = 0;
  Label labels = 0;  // largest label mask, 2^n - 1
  std::vector<std::size_t> order;
  std::vector<std::size_t> position;
  std::vector<std::vector<std::size_t>> earlier;  // neighbours placed before v
  std::vector<std::int8_t> sum;                   // (labels+1)^2, -1 = escapes X
  std::uint64_t targets = 0;
  std::uint64_t all_labels = 0;
  std::uint64_t non_summands = 0;
  std::size_t zero_min_degree = 0;
  std::vector<bool> zero_slot_from;  // some vertex at position >= p may take {0}
  // Open edges once positions [0, p) are assigned.
  std::vector<std::vector<std::size_t>> half_open;  // assigned endpoints
  std::vector<bool> fully_open;
  std::vector<Label> candidates;
  PruneRules prune;
  bool find_all = false;
  std::uint64_t node_budget = 0;
  Clock::time_point deadline;

  int sum_of(Label a, Label b) const { return sum[a * (labels + 1) + b]; }
};

Problem make_problem(const Graph& g, const GroundSet& x, const SearchConfig& cfg) {
  Problem p;
  p.graph = &g;
  p.ground = &x;
  p.vertices = g.vertex_count();
  p.labels = x.full_mask();
  p.prune = cfg.prune;
  p.find_all = cfg.find_all;
  p.node_budget = cfg.node_budget;
  p.deadline = Clock::now() + std::chrono::milliseconds(cfg.time_budget_ms);

  p.order.resize(p.vertices);
  std::iota(p.order.begin(), p.order.end(), std::size_t{0});
  std::stable_sort(p.order.begin(), p.order.end(),
                   [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
  p.position.resize(p.vertices);
  for (std::size_t i = 0; i < p.vertices; ++i) p.position[p.order[i]] = i;

  p.earlier.resize(p.vertices);
  for (std::size_t v = 0; v < p.vertices; ++v)
    for (std::size_t w : g.neighbors(v))
      if (p.position[w] < p.position[v]) p.earlier[v].push_back(w);

  const std::size_t stride = p.labels + 1;
  p.sum.assign(stride * stride, -1);
  for (Label a = 1; a <= p.labels; ++a)
    for (Label b = 1; b <= p.labels; ++b)
      if (auto s = x.sum_mask(a, b)) p.sum[a * stride + b] = static_cast<std::int8_t>(*s);

  for (Label m = 1; m <= p.labels; ++m) {
    p.all_labels |= bit(m);
    if (m != kZero) p.targets |= bit(m);
  }

  auto cls = classify_ground_set(x, cfg.mode);
  p.zero_min_degree = cls->non_sumsets.size();
  for (Label m = 1; m <= p.labels; ++m)
    if (m != kZero && !cls->is_summand(m)) p.non_summands |= bit(m);

  p.zero_slot_from.assign(p.vertices + 1, false);
  for (std::size_t pos = p.vertices; pos-- > 0;)
    p.zero_slot_from[pos] = p.zero_slot_from[pos + 1] || g.degree(p.order[pos]) >= p.zero_min_degree;

  p.half_open.resize(p.vertices + 1);
  p.fully_open.assign(p.vertices + 1, false);
  for (std::size_t assigned = 0; assigned <= p.vertices; ++assigned) {
    std::vector<bool> seen(p.vertices, false);
    for (auto [u, v] : g.edges()) {
      std::size_t pu = p.position[u], pv = p.position[v];
      if (std::max(pu, pv) < assigned) continue;
      if (std::min(pu, pv) >= assigned) {
        p.fully_open[assigned] = true;
      } else {
        std::size_t a = pu < pv ? u : v;
        if (!seen[a]) {
          seen[a] = true;
          p.half_open[assigned].push_back(a);
        }
      }
    }
  }

  for (Label m = 1; m <= p.labels; ++m) p.candidates.push_back(m);
  if (cfg.seed != 0) {
    std::mt19937_64 rng(cfg.seed);
    std::shuffle(p.candidates.begin(), p.candidates.end(), rng);
  }
  return p;
}

enum class Step { Continue, Found, Budget, Abort };

struct BranchResult {
  SearchStats stats;
  std::vector<std::vector<Label>> witnesses;  // labels per vertex
  bool found = false;
  bool budget = false;
  bool timed_out = false;
};

// Depth-first search below one root label. Owns its assignment state.
class Branch {
 public:
  Branch(const Problem& p, std::atomic<bool>& timed_out, std::atomic<std::size_t>& first_found,
         std::size_t index)
      : p_(p), timed_out_(timed_out), first_found_(first_found), index_(index), label_(p.vertices, 0) {}

  BranchResult run(Label root) {
    Step s = attempt(0, root);
    result_.found = !result_.witnesses.empty();
    result_.budget = s == Step::Budget;
    return std::move(result_);
  }

 private:
  Step attempt(std::size_t pos, Label lab) {
    auto& stats = result_.stats;
    if (++stats.nodes > p_.node_budget) return Step::Budget;
    if ((stats.nodes & 0xfff) == 0) {
      if (timed_out_.load(std::memory_order_relaxed) || Clock::now() > p_.deadline) {
        timed_out_.store(true, std::memory_order_relaxed);
        result_.timed_out = true;
        return Step::Budget;
      }
      if (!p_.find_all && first_found_.load(std::memory_order_relaxed) < index_) return Step::Abort;
    }

    const std::size_t v = p_.order[pos];
    const std::size_t deg = p_.graph->degree(v);
    if (p_.prune.zero_label_degree && lab == kZero && deg < p_.zero_min_degree) {
      ++stats.pruned_zero_degree;
      return Step::Continue;
    }
    if (p_.prune.non_summand_pendant && (p_.non_summands & bit(lab))) {
      bool ok = deg == 1;
      if (ok) {
        const std::size_t w = p_.graph->neighbors(v)[0];
        ok = label_[w] == 0 || label_[w] == kZero;
      }
      if (!ok) {
        ++stats.pruned_non_summand;
        return Step::Continue;
      }
    }

    apply(v, lab);
    Step out = Step::Continue;
    if (p_.prune.incremental_edges && bad_ > 0) {
      ++stats.pruned_edges;
    } else if (pos + 1 == p_.vertices) {
      if (bad_ == 0 && realised_ == p_.targets) {
        result_.witnesses.push_back(label_);
        if (!p_.find_all) {
          out = Step::Found;
          std::size_t cur = first_found_.load();
          while (index_ < cur && !first_found_.compare_exchange_weak(cur, index_)) {
          }
        }
      }
    } else if (p_.prune.zero_label_degree && !(used_ & bit(kZero)) && !p_.zero_slot_from[pos + 1]) {
      ++stats.pruned_zero_degree;
    } else if (p_.prune.target_coverage && !coverable(pos + 1)) {
      ++stats.pruned_coverage;
    } else {
      for (Label next : p_.candidates) {
        if (used_ & bit(next)) continue;
        Step s = attempt(pos + 1, next);
        if (s != Step::Continue) {
          out = s;
          break;
        }
      }
    }
    undo(v, lab);
    return out;
  }

  void apply(std::size_t v, Label lab) {
    label_[v] = lab;
    used_ |= bit(lab);
    for (std::size_t u : p_.earlier[v]) {
      const int s = p_.sum_of(lab, label_[u]);
      if (s < 0 || s == static_cast<int>(kZero)) {
        ++bad_;
      } else if (count_[s]++ > 0) {
        ++bad_;
      } else {
        realised_ |= bit(static_cast<Label>(s));
      }
    }
  }

  void undo(std::size_t v, Label lab) {
    const auto& earlier = p_.earlier[v];
    for (auto it = earlier.rbegin(); it != earlier.rend(); ++it) {
      const int s = p_.sum_of(lab, label_[*it]);
      if (s < 0 || s == static_cast<int>(kZero)) {
        --bad_;
      } else if (--count_[s] > 0) {
        --bad_;
      } else {
        realised_ &= ~bit(static_cast<Label>(s));
      }
    }
    used_ &= ~bit(lab);
    label_[v] = 0;
  }

  // Can every unrealised target still be produced by an open edge?
  bool coverable(std::size_t assigned) const {
    const std::uint64_t need = p_.targets & ~realised_;
    if (need == 0) return true;
    const std::uint64_t unused = p_.all_labels & ~used_;
    std::uint64_t reach = 0;
    for (std::size_t a : p_.half_open[assigned]) {
      const Label la = label_[a];
      for (std::uint64_t r = unused; r; r &= r - 1) {
        const int s = p_.sum_of(la, static_cast<Label>(std::countr_zero(r)));
        if (s > static_cast<int>(kZero)) reach |= bit(static_cast<Label>(s));
      }
    }
    if (p_.fully_open[assigned] && (need & ~reach)) {
      for (std::uint64_t ra = unused; ra; ra &= ra - 1) {
        const Label a = static_cast<Label>(std::countr_zero(ra));
        for (std::uint64_t rb = ra & (ra - 1); rb; rb &= rb - 1) {
          const int s = p_.sum_of(a, static_cast<Label>(std::countr_zero(rb)));
          if (s > static_cast<int>(kZero)) reach |= bit(static_cast<Label>(s));
        }
      }
    }
    return (need & ~reach) == 0;
  }

  const Problem& p_;
  std::atomic<bool>& timed_out_;
  std::atomic<std::size_t>& first_found_;
  std::size_t index_;
  std::vector<Label> label_;
  std::uint64_t used_ = 0;
  std::uint64_t realised_ = 0;
  std::array<std::uint8_t, 64> count_{};
  std::size_t bad_ = 0;
  BranchResult result_;
};

void add_stats(SearchStats& into, const SearchStats& s) {
  into.nodes += s.nodes;
  into.pruned_zero_degree += s.pruned_zero_degree;
  into.pruned_non_summand += s.pruned_non_summand;
  into.pruned_edges += s.pruned_edges;
  into.pruned_coverage += s.pruned_coverage;
}

Labeling to_labeling(const Problem& p, const std::vector<Label>& labels) {
  std::map<VertexId, IntegerSet> assignment;
  for (std::size_t v = 0; v < p.vertices; ++v) assignment.emplace(p.graph->id(v), p.ground->subset(labels[v]));
  return Labeling(*p.ground, std::move(assignment));
}

// Branch-order reduce shared by both runners.
SearchOutcome merge(const Problem& p, std::vector<BranchResult>& branches, GateReport gate) {
  SearchOutcome out;
  out.gate = std::move(gate);
  out.status = SearchStatus::ExhaustedNone;
  bool stopped = false;
  for (auto& b : branches) {
    add_stats(out.stats, b.stats);
    if (out.stats.nodes > p.node_budget || b.budget || b.timed_out) {
      out.status = SearchStatus::BudgetExceeded;
      stopped = true;
      break;
    }
    for (auto& w : b.witnesses) out.witnesses.push_back(to_labeling(p, w));
    if (b.found && !p.find_all) {
      out.status = SearchStatus::Found;
      stopped = true;
      break;
    }
  }
  if (!stopped && !out.witnesses.empty()) out.status = SearchStatus::Found;

  for (const auto& w : out.witnesses)
    if (!verify_iasgl(*p.graph, w).passed)
      throw std::logic_error("search produced a labeling that fails verify_iasgl");
  return out;
}

GateReport preflight(const Graph& g, const GroundSet& x, const SearchConfig& cfg) {
  if (!x.contains_zero()) throw Error("graceful ground set must contain 0");
  if (x.n() > kMaxSearchGroundSet) throw Error("ground set too large for search");
  if (cfg.node_budget == 0 || cfg.time_budget_ms == 0) throw Error("search budgets must be positive");
  return structural_gate(g, x, cfg.mode);
}

SearchOutcome gate_rejected(GateReport gate) {
  SearchOutcome out;
  out.status = SearchStatus::GateRejected;
  out.gate = std::move(gate);
  return out;
}

}  // namespace

namespace kernels {

SearchOutcome search_iasgl_serial(const Graph& g, const GroundSet& x, const SearchConfig& cfg) {
  GateReport gate = preflight(g, x, cfg);
  if (gate.violates("R1")) return gate_rejected(std::move(gate));
  const Problem p = make_problem(g, x, cfg);
  std::atomic<bool> timed_out{false};
  std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};

  std::vector<BranchResult> branches;
  std::uint64_t cumulative = 0;
  for (std::size_t i = 0; i < p.candidates.size(); ++i) {
    branches.push_back(Branch(p, timed_out, first_found, i).run(p.candidates[i]));
    const auto& b = branches.back();
    cumulative += b.stats.nodes;
    if ((b.found && !p.find_all) || b.budget || b.timed_out || cumulative > p.node_budget) break;
  }
  return merge(p, branches, std::move(gate));
}

SearchOutcome search_iasgl_parallel(const Graph& g, const GroundSet& x, const SearchConfig& cfg,
                                    std::size_t threads) {
  GateReport gate = preflight(g, x, cfg);
  if (gate.violates("R1")) return gate_rejected(std::move(gate));
  const Problem p = make_problem(g, x, cfg);
  std::atomic<bool> timed_out{false};
  std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};

  const long long count = static_cast<long long>(p.candidates.size());
  std::vector<BranchResult> branches(p.candidates.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(threads))
  for (long long i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (!p.find_all && first_found.load() < idx) continue;
    try {
      branches[idx] = Branch(p, timed_out, first_found, idx).run(p.candidates[idx]);
    } catch (...) {
#pragma omp critical(iasgl_search_error)
      error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return merge(p, branches, std::move(gate));
}

}  // namespace kernels

SearchOutcome search_iasgl(const Graph& g, const GroundSet& x, const SearchConfig& cfg) {
  const std::size_t threads = worker_count(cfg.threads);
  if (threads <= 1) return kernels::search_iasgl_serial(g, x, cfg);
  return kernels::search_iasgl_parallel(g, x, cfg, threads);
}

std::vector<SweepEntry> sweep_ground_sets(const Graph& g, std::size_t n, Element max_element,
                                          const SearchConfig& cfg) {
  if (n < 2) throw Error("sweep needs n >= 2");
  if (max_element + 1 < n) throw Error("sweep needs max_element >= n - 1");
  std::vector<GroundSet> family = canonical_ground_sets(n, max_element);
  if (family.empty()) throw Error("empty ground-set family");

  SearchConfig inner = cfg;
  inner.threads = 1;
  std::vector<std::optional<SearchOutcome>> outcomes(family.size());
  std::exception_ptr error;
  const long long count = static_cast<long long>(family.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(worker_count(cfg.threads)))
  for (long long i = 0; i < count; ++i) {
    try {
      outcomes[static_cast<std::size_t>(i)] = search_iasgl(g, family[static_cast<std::size_t>(i)], inner);
    } catch (...) {
#pragma omp critical(iasgl_sweep_error)
      error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  std::vector<SweepEntry> out;
  out.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) out.push_back({family[i], std::move(*outcomes[i])});
  return out;
}

}  // namespace iasgl
