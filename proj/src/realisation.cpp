#include "iasgl/realisation.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace iasgl {

namespace {

struct Candidate {
  SubsetMask a;
  SubsetMask b;
};

class Assigner {
 public:
  Assigner(const GroundSet& x, const AssignOptions& opts) : x_(x), opts_(opts) {
    const std::size_t size = std::size_t{x.full_mask()} + 1;
    present_.assign(size, 0);
    degree_.assign(size, 0);
  }

  void add_pool(SubsetMask m) {
    present_[m] = kPool;
    pool_.push_back(m);
  }

  void add_fixed(SubsetMask a, SubsetMask b) {
    edges_.push_back({a, b});
    ++degree_[a];
    ++degree_[b];
  }

  void add_target(SubsetMask t, std::vector<Candidate> candidates) {
    targets_.push_back(t);
    candidates_.push_back(std::move(candidates));
  }

  std::vector<SubsetMask> empty_targets() const {
    std::vector<SubsetMask> out;
    for (std::size_t i = 0; i < targets_.size(); ++i)
      if (candidates_[i].empty()) out.push_back(targets_[i]);
    return out;
  }

  bool solve() {
    order_.resize(targets_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t l, std::size_t r) {
      return candidates_[l].size() < candidates_[r].size();
    });
    chosen_.assign(targets_.size(), Candidate{0, 0});
    dfs(0);
    return best_.has_value();
  }

  const std::vector<Candidate>& solution() const { return best_->chosen; }
  const std::vector<SubsetMask>& solution_added() const { return best_->added; }
  bool solution_odd() const { return best_->odd; }
  bool complete() const { return !budget_hit_; }
  const std::vector<SubsetMask>& targets() const { return targets_; }

 private:
  static constexpr std::uint8_t kPool = 1;
  static constexpr std::uint8_t kAdded = 2;

  struct Solution {
    std::vector<Candidate> chosen;
    std::vector<SubsetMask> added;
    bool odd = false;
  };

  // Lower rank is tried first.
  int rank(const Candidate& c) const {
    const int fresh = (present_[c.a] ? 0 : 1) + (present_[c.b] ? 0 : 1);
    if (opts_.order == PairOrder::StarFirst && x_.contains_zero() &&
        (c.a == GroundSet::zero_mask() || c.b == GroundSet::zero_mask()))
      return -1;
    return fresh;
  }

  // Returns true to stop the search.
  bool dfs(std::size_t depth) {
    if (++nodes_ > opts_.node_budget) {
      budget_hit_ = true;
      return true;
    }
    if (depth == order_.size()) return leaf();

    const std::size_t ti = order_[depth];
    std::vector<Candidate> options = candidates_[ti];
    std::stable_sort(options.begin(), options.end(), [&](const Candidate& l, const Candidate& r) {
      return rank(l) < rank(r);
    });
    for (const Candidate& c : options) {
      const bool add_a = !present_[c.a];
      const bool add_b = !present_[c.b];
      if (add_a) present_[c.a] = kAdded;
      if (add_b) present_[c.b] = kAdded;
      ++degree_[c.a];
      ++degree_[c.b];
      chosen_[ti] = c;
      const bool stop = dfs(depth + 1);
      --degree_[c.a];
      --degree_[c.b];
      if (add_a) present_[c.a] = 0;
      if (add_b) present_[c.b] = 0;
      if (stop) return true;
    }
    return false;
  }

  bool leaf() {
    for (SubsetMask m : pool_)
      if (degree_[m] == 0) return false;
    const bool odd = has_odd_cycle();
    if (!best_ || (odd && !best_->odd)) {
      Solution s{chosen_, {}, odd};
      for (SubsetMask m = 1; m < present_.size(); ++m)
        if (present_[m] == kAdded) s.added.push_back(m);
      best_ = std::move(s);
    }
    return !opts_.prefer_odd_cycle || odd;
  }

  bool has_odd_cycle() const {
    std::map<SubsetMask, std::vector<SubsetMask>> adj;
    auto link = [&](SubsetMask a, SubsetMask b) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    };
    for (const auto& e : edges_) link(e.a, e.b);
    for (const auto& c : chosen_) link(c.a, c.b);
    std::map<SubsetMask, int> colour;
    for (const auto& [start, _] : adj) {
      if (colour.contains(start)) continue;
      colour[start] = 0;
      std::queue<SubsetMask> q;
      q.push(start);
      while (!q.empty()) {
        SubsetMask u = q.front();
        q.pop();
        for (SubsetMask w : adj[u]) {
          auto it = colour.find(w);
          if (it == colour.end()) {
            colour[w] = 1 - colour[u];
            q.push(w);
          } else if (it->second == colour[u]) {
            return true;
          }
        }
      }
    }
    return false;
  }

  const GroundSet& x_;
  AssignOptions opts_;
  std::vector<std::uint8_t> present_;
  std::vector<int> degree_;
  std::vector<SubsetMask> pool_;
  std::vector<Candidate> edges_;
  std::vector<SubsetMask> targets_;
  std::vector<std::vector<Candidate>> candidates_;
  std::vector<std::size_t> order_;
  std::vector<Candidate> chosen_;
  std::optional<Solution> best_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

SubsetMask mask_in(const GroundSet& x, const IntegerSet& s, const char* what) {
  auto m = x.mask_of(s);
  if (!m || s.empty()) throw Error(std::string(what) + " " + s.to_string() + " is not a non-empty subset of X");
  return *m;
}

std::vector<IntegerSet> to_sets(const GroundSet& x, const std::vector<SubsetMask>& masks) {
  std::vector<IntegerSet> out;
  for (SubsetMask m : masks) out.push_back(x.subset(m));
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

}  // namespace

EdgeAssignment assign_edge_labels(const std::vector<IntegerSet>& targets,
                                  const std::vector<IntegerSet>& vertex_pool,
                                  const std::vector<Decomposition>& fixed_edges, const GroundSet& x,
                                  const AssignOptions& opts) {
  if (x.n() > kMaxRealisationGroundSet) throw Error("ground set too large for realisation");
  Assigner assigner(x, opts);

  std::set<SubsetMask> pool;
  for (const auto& v : vertex_pool) {
    SubsetMask m = mask_in(x, v, "pool label");
    if (pool.insert(m).second) assigner.add_pool(m);
  }

  std::set<SubsetMask> wanted;
  for (const auto& t : targets) wanted.insert(mask_in(x, t, "target"));

  EdgeAssignment out;
  std::set<SubsetMask> fixed_targets;
  for (const auto& [a, b] : fixed_edges) {
    SubsetMask ma = mask_in(x, a, "fixed endpoint");
    SubsetMask mb = mask_in(x, b, "fixed endpoint");
    if (!pool.contains(ma) || !pool.contains(mb)) throw Error("fixed edge endpoint missing from the vertex pool");
    if (ma == mb) throw Error("fixed edge joins a label to itself");
    auto s = x.sum_mask(ma, mb);
    if (!s || !wanted.contains(*s)) throw Error("fixed edge label is not a target");
    if (!fixed_targets.insert(*s).second) throw Error("fixed edges repeat label " + x.subset(*s).to_string());
    assigner.add_fixed(ma, mb);
    out.pairs.emplace(x.subset(*s), Decomposition{a, b});
  }

  // Bucket every pair A < B by its sum.
  std::map<SubsetMask, std::vector<Candidate>> by_sum;
  for (SubsetMask t : wanted)
    if (!fixed_targets.contains(t)) by_sum[t];
  for (SubsetMask a = 1; a <= x.full_mask(); ++a)
    for (SubsetMask b = a + 1; b <= x.full_mask(); ++b)
      if (auto s = x.sum_mask(a, b)) {
        auto it = by_sum.find(*s);
        if (it != by_sum.end()) it->second.push_back({a, b});
      }

  std::vector<SubsetMask> ordered;
  for (const auto& t : targets) {
    SubsetMask m = *x.mask_of(t);
    if (!fixed_targets.contains(m) && std::find(ordered.begin(), ordered.end(), m) == ordered.end())
      ordered.push_back(m);
  }
  for (SubsetMask t : ordered) assigner.add_target(t, by_sum[t]);

  if (auto empty = assigner.empty_targets(); !empty.empty())
    throw AssignmentError("realisation infeasible: targets without any realising pair", to_sets(x, empty));
  if (!assigner.solve()) {
    if (!assigner.complete())
      throw AssignmentError("realisation search exhausted its node budget", to_sets(x, ordered));
    throw AssignmentError("realisation infeasible: no consistent assignment", to_sets(x, ordered));
  }

  const auto& chosen = assigner.solution();
  for (std::size_t i = 0; i < ordered.size(); ++i)
    out.pairs.emplace(x.subset(ordered[i]), Decomposition{x.subset(chosen[i].a), x.subset(chosen[i].b)});
  out.added_vertices = to_sets(x, assigner.solution_added());
  out.has_odd_cycle = assigner.solution_odd();
  out.search_complete = assigner.complete();
  return out;
}

RealisationResult build_realisation(const GroundSet& x, bool prefer_nonbipartite, SummandMode mode) {
  if (!x.contains_zero()) throw Error("graceful ground set must contain 0");
  if (x.n() < 2) throw Error("ground set needs at least 2 elements");
  if (x.n() > kMaxRealisationGroundSet) throw Error("ground set too large for realisation");
  auto cls = classify_ground_set(x, mode);
  const IntegerSet zero{0};

  std::vector<IntegerSet> pool{zero};
  std::vector<Decomposition> fixed;
  for (const auto& c : cls->non_sumsets) {
    pool.push_back(c);
    fixed.emplace_back(zero, c);
  }
  std::vector<IntegerSet> targets;
  for (auto& s : enumerate_nonempty_subsets(x))
    if (s != zero) targets.push_back(std::move(s));
  std::sort(targets.begin(), targets.end(), shortlex_less);

  AssignOptions opts;
  opts.order = prefer_nonbipartite ? PairOrder::ExistingFirst : PairOrder::StarFirst;
  opts.prefer_odd_cycle = prefer_nonbipartite;
  EdgeAssignment assignment = assign_edge_labels(targets, pool, fixed, x, opts);

  std::vector<IntegerSet> labels = pool;
  labels.insert(labels.end(), assignment.added_vertices.begin(), assignment.added_vertices.end());
  std::map<IntegerSet, VertexId> id_of;
  std::vector<VertexId> ids;
  std::map<VertexId, IntegerSet> assignment_map;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    VertexId id = "v" + std::to_string(i);
    id_of.emplace(labels[i], id);
    ids.push_back(id);
    assignment_map.emplace(id, labels[i]);
  }

  std::set<IntegerSet> fixed_labels(cls->non_sumsets.begin(), cls->non_sumsets.end());
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<TraceEntry> trace;
  for (const auto& t : targets) {
    const auto& [a, b] = assignment.pairs.at(t);
    edges.emplace_back(id_of.at(a), id_of.at(b));
    trace.push_back({t, id_of.at(a), id_of.at(b), fixed_labels.contains(t)});
  }

  Graph graph = Graph::create(std::move(ids), edges);
  Labeling labeling(x, std::move(assignment_map));
  if (!verify_iasgl(graph, labeling).passed)
    throw std::logic_error("realisation failed independent IASGL verification");

  RealisationResult result{std::move(graph), std::move(labeling), false, std::move(trace), true, ""};
  result.non_bipartite = !is_bipartite(result.graph);
  if (prefer_nonbipartite && !result.non_bipartite) {
    result.nonbipartite_search_complete = assignment.search_complete;
    result.note = assignment.search_complete
                      ? "no non-bipartite realisation exists in the builder's assignment space for X = " +
                            x.base().to_string()
                      : "odd-cycle search hit its node budget; returning a bipartite realisation";
  }
  return result;
}

}  // namespace iasgl
