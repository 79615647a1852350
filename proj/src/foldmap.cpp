#include "prem/foldmap.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace prem {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

FoldModel FoldModel::validate(const DiskArrangement& arr) {
  std::vector<std::string> problems;
  FoldModel m;
  m.arr_ = arr;

  if (arr.kind == DiskArrangement::Standard) {
    if (arr.degree < 1) problems.push_back("standard model needs degree >= 1");
    if (!arr.circles.empty())
      problems.push_back("standard model carries no explicit circles");
    if (arr.basepoint < 0 || arr.basepoint > arr.degree)
      problems.push_back("basepoint must name one of the disks 0..degree");
    if (problems.empty()) {
      for (int i = 0; i <= arr.degree; ++i) m.fiber_[i] = arr.degree;
      m.fiber_[arr.degree + 1] = arr.degree + 2;
      for (const auto& [region, size] : arr.fibers) {
        auto it = m.fiber_.find(region);
        if (it == m.fiber_.end())
          problems.push_back("fiber given for unknown region " +
                             std::to_string(region));
        else if (it->second != size)
          problems.push_back("fiber of region " + std::to_string(region) +
                             " must be " + std::to_string(it->second));
      }
    }
  } else {
    if (arr.degree == 0) problems.push_back("degree must be nonzero");
    if (arr.basepoint != 0)
      problems.push_back("basepoint of a nested model lies in region 0");
    for (const auto& c : arr.circles) {
      if (c.id <= 0) problems.push_back("circle ids must be positive");
      if (!m.circle_.emplace(c.id, c).second)
        problems.push_back("duplicate circle id " + std::to_string(c.id));
    }
    for (const auto& c : arr.circles) {
      if (c.parent != 0 && !m.circle_.count(c.parent))
        problems.push_back("circle " + std::to_string(c.id) +
                           " has unknown parent");
      if (!m.circle_.count(c.rho))
        problems.push_back("circle " + std::to_string(c.id) +
                           " has unknown rho image");
    }
    if (problems.empty()) {
      // Forest check plus ancestor lists.
      std::map<int, std::vector<int>> ancestors;  // id -> chain up to root
      for (const auto& c : arr.circles) {
        std::vector<int> chain;
        int cur = c.id;
        bool ok = true;
        while (cur != 0) {
          if (static_cast<int>(chain.size()) > static_cast<int>(arr.circles.size())) {
            problems.push_back("parent relation has a cycle at circle " +
                               std::to_string(c.id));
            ok = false;
            break;
          }
          chain.push_back(cur);
          cur = m.circle_.at(cur).parent;
        }
        if (ok) ancestors[c.id] = chain;
      }
      for (const auto& c : arr.circles) {
        const int r = c.rho;
        if (m.circle_.count(r)) {
          if (m.circle_.at(r).rho != r)
            problems.push_back("rho is not idempotent at circle " +
                               std::to_string(c.id));
          if (ancestors.count(c.id) &&
              std::find(ancestors[c.id].begin(), ancestors[c.id].end(), r) ==
                  ancestors[c.id].end())
            problems.push_back("rho image of circle " + std::to_string(c.id) +
                               " does not contain it");
          if (!m.circle_.at(r).outer)
            problems.push_back("rho image circle " + std::to_string(r) +
                               " must be outer");
        }
      }
    }
    if (problems.empty()) {
      // The basepoint sits in a region whose fiber realizes the degree, so
      // pullbacks of based loops never carry negative arcs.
      const int root_fiber = arr.fibers.count(0)
                                 ? arr.fibers.at(0)
                                 : std::abs(arr.degree);
      if (root_fiber != std::abs(arr.degree))
        problems.push_back("basepoint region fiber must equal |degree|");
      m.fiber_[0] = root_fiber;
      // Propagate fibers outermost-in.
      std::vector<int> order;
      for (const auto& c : arr.circles) order.push_back(c.id);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = 0, db = 0;
        for (int x = a; x != 0; x = m.circle_.at(x).parent) ++da;
        for (int x = b; x != 0; x = m.circle_.at(x).parent) ++db;
        return da < db;
      });
      for (int id : order) {
        const auto& c = m.circle_.at(id);
        const int outside = m.fiber_.at(c.parent);
        const int inside = outside + (c.outer ? 2 : -2);
        if (inside < 0)
          problems.push_back("negative fiber inside circle " +
                             std::to_string(id));
        m.fiber_[id] = inside;
      }
      for (const auto& [region, size] : arr.fibers) {
        auto it = m.fiber_.find(region);
        if (it == m.fiber_.end())
          problems.push_back("fiber given for unknown region " +
                             std::to_string(region));
        else if (it->second != size)
          problems.push_back("fiber of region " + std::to_string(region) +
                             " propagates to " + std::to_string(it->second) +
                             ", not " + std::to_string(size));
      }
    }
  }

  if (!problems.empty())
    throw std::invalid_argument("invalid arrangement: " + join(problems));
  return m;
}

int FoldModel::exterior_region() const {
  if (!standard())
    throw std::logic_error("exterior_region: standard models only");
  return arr_.degree + 1;
}

std::vector<int> FoldModel::regions() const {
  std::vector<int> out;
  for (const auto& [region, size] : fiber_) out.push_back(region);
  return out;
}

int FoldModel::fiber(int region) const {
  auto it = fiber_.find(region);
  if (it == fiber_.end())
    throw std::out_of_range("fiber: unknown region " + std::to_string(region));
  return it->second;
}

std::vector<int> FoldModel::sheets(int region) const {
  std::vector<int> out;
  if (standard()) {
    if (region == exterior_region()) {
      for (int i = 0; i <= arr_.degree + 1; ++i) out.push_back(i);
    } else {
      fiber(region);
      for (int i = 0; i <= arr_.degree; ++i)
        if (i != region) out.push_back(i);
    }
  } else {
    out.resize(fiber(region));
    std::iota(out.begin(), out.end(), 0);
  }
  return out;
}

const FoldCircle& FoldModel::circle(int id) const {
  auto it = circle_.find(id);
  if (it == circle_.end())
    throw std::out_of_range("circle: unknown id " + std::to_string(id));
  return it->second;
}

bool FoldModel::has_circle(int id) const { return circle_.count(id) != 0; }

namespace {

struct StrandRec {
  int born_circle;        // -1 when part of the initial fiber
  int left_node, right_node;
};

struct FoldRec {
  int crossing_index;
  int circle;
  bool birth;
  int strand_a, strand_b;
};

struct Trace {
  std::vector<StrandRec> strands;
  std::vector<FoldRec> folds;
  std::vector<int> start_stack, end_stack;  // strand ids
  int start_region, end_region;
};

// Runs the fiber through every crossing of the word.  Node ids are assigned
// later; lefts/rights hold fold ids (>= 0) or -1 for boundary ends.
Trace run_trace(const FoldModel& model, const CrossingWord& word) {
  Trace tr;
  tr.start_region = word.base;
  int region = word.base;
  const int start_fiber = model.fiber(region);

  std::vector<int> stack(start_fiber);
  for (int s = 0; s < start_fiber; ++s) {
    stack[s] = s;
    tr.strands.push_back(StrandRec{-1, -1, -1});
  }
  tr.start_stack = stack;

  for (std::size_t t = 0; t < word.crossings.size(); ++t) {
    const Crossing& cr = word.crossings[t];
    int next_region;
    bool birth;
    int q1, q2;

    if (model.standard()) {
      const int d = model.degree();
      if (cr.circle < 0 || cr.circle > d)
        throw std::invalid_argument("crossing names unknown disk " +
                                    std::to_string(cr.circle));
      if (cr.pair_slot)
        throw std::invalid_argument(
            "standard models admit no fold-pair overrides");
      if (cr.inward) {
        if (region != model.exterior_region())
          throw std::invalid_argument(
              "crossing " + std::to_string(t) +
              " enters a disk without being in the exterior");
        next_region = cr.circle;
        birth = false;
      } else {
        if (region != cr.circle)
          throw std::invalid_argument("crossing " + std::to_string(t) +
                                      " leaves a disk it is not in");
        next_region = model.exterior_region();
        birth = true;
      }
      q1 = cr.circle;  // sheet of the crossed disk
      q2 = d + 1;      // folded-back sheet
    } else {
      if (!model.has_circle(cr.circle))
        throw std::invalid_argument("crossing names unknown circle " +
                                    std::to_string(cr.circle));
      const FoldCircle& c = model.circle(cr.circle);
      const int outside = c.parent;  // region id outside this circle
      if (cr.inward) {
        if (region != outside)
          throw std::invalid_argument("crossing " + std::to_string(t) +
                                      " inconsistent with the region walk");
        next_region = c.id;
      } else {
        if (region != c.id)
          throw std::invalid_argument("crossing " + std::to_string(t) +
                                      " inconsistent with the region walk");
        next_region = outside;
      }
      // The fiber grows towards the inside of an outer circle and towards
      // the outside of an inner one.
      birth = (c.outer == cr.inward);
      const int bigger = std::max(model.fiber(region), model.fiber(next_region));
      // Canonical fold pair: an outer circle folds its own bottom pair; an
      // inner circle folds the top member of that pair onto the sheet above
      // it, when one exists.
      q1 = cr.pair_slot ? *cr.pair_slot : (c.outer ? 0 : (bigger >= 3 ? 1 : 0));
      q2 = q1 + 1;
      if (q1 < 0 || q2 >= bigger)
        throw std::invalid_argument("fold-pair slot out of range at crossing " +
                                    std::to_string(t));
    }

    if (birth) {
      const int s1 = static_cast<int>(tr.strands.size());
      tr.strands.push_back(StrandRec{cr.circle, -1, -1});
      const int s2 = static_cast<int>(tr.strands.size());
      tr.strands.push_back(StrandRec{cr.circle, -1, -1});
      const int fold = static_cast<int>(tr.folds.size());
      tr.folds.push_back(
          FoldRec{static_cast<int>(t), cr.circle, true, s1, s2});
      tr.strands[s1].left_node = fold;
      tr.strands[s2].left_node = fold;
      stack.insert(stack.begin() + q1, s1);
      stack.insert(stack.begin() + q2, s2);
    } else {
      if (q2 >= static_cast<int>(stack.size()))
        throw std::invalid_argument("fold pair out of range at crossing " +
                                    std::to_string(t));
      const int a = stack[q1], b = stack[q2];
      const int fold = static_cast<int>(tr.folds.size());
      tr.folds.push_back(
          FoldRec{static_cast<int>(t), cr.circle, false, a, b});
      tr.strands[a].right_node = fold;
      tr.strands[b].right_node = fold;
      stack.erase(stack.begin() + q2);
      stack.erase(stack.begin() + q1);
    }
    region = next_region;
  }

  tr.end_region = region;
  tr.end_stack = stack;
  return tr;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

PullbackGraph assemble(const FoldModel& model, const Trace& tr, bool glue) {
  // Node layout: folds, then start-boundary slots, then end-boundary slots.
  const int F = static_cast<int>(tr.folds.size());
  const int S = static_cast<int>(tr.start_stack.size());
  const int E = static_cast<int>(tr.end_stack.size());
  auto start_node = [&](int slot) { return F + slot; };
  auto end_node = [&](int slot) { return F + S + slot; };

  std::vector<StrandRec> strands = tr.strands;
  for (int slot = 0; slot < S; ++slot)
    strands[tr.start_stack[slot]].left_node = start_node(slot);
  for (int slot = 0; slot < E; ++slot)
    strands[tr.end_stack[slot]].right_node = end_node(slot);

  UnionFind uf(F + S + E);
  for (const auto& s : strands) uf.unite(s.left_node, s.right_node);
  if (glue) {
    if (tr.end_region != tr.start_region || E != S)
      throw std::invalid_argument("loop does not return to its base region");
    for (int slot = 0; slot < S; ++slot)
      uf.unite(end_node(slot), start_node(slot));
  }

  const std::vector<int> start_sheets = model.sheets(tr.start_region);
  const std::vector<int> end_sheets = model.sheets(tr.end_region);

  std::map<int, int> comp_index;
  PullbackGraph out;
  out.base_fiber = S;
  out.loop_glued = glue;
  auto comp_of = [&](int node) -> PullbackComponent& {
    const int root = uf.find(node);
    auto [it, fresh] = comp_index.try_emplace(root, out.components.size());
    if (fresh) out.components.push_back(PullbackComponent{});
    return out.components[it->second];
  };

  for (const auto& s : strands) {
    PullbackComponent& c = comp_of(s.left_node);
    c.strand_count++;
    c.birth_circles.push_back(s.born_circle);
  }
  for (int k = 0; k < F; ++k) {
    PullbackComponent& c = comp_of(k);
    c.folds.push_back(
        FoldPoint{tr.folds[k].crossing_index, tr.folds[k].circle,
                  tr.folds[k].birth});
  }

  if (glue) {
    for (auto& c : out.components) {
      c.closed = true;
      c.sign = PullbackComponent::Closed;
    }
    if (S == 1) comp_of(start_node(0)).marked = true;
  } else {
    // Boundary bookkeeping: walk each boundary-to-boundary arc.
    std::vector<std::vector<std::pair<int, int>>> incident(F + S + E);
    for (std::size_t i = 0; i < strands.size(); ++i) {
      incident[strands[i].left_node].push_back(
          {static_cast<int>(i), strands[i].right_node});
      incident[strands[i].right_node].push_back(
          {static_cast<int>(i), strands[i].left_node});
    }
    for (auto& c : out.components) c.closed = true;

    std::vector<char> done(F + S + E, 0);
    auto walk = [&](int boundary) -> int {
      int prev_strand = -1, node = boundary;
      for (;;) {
        int next_strand = -1, next_node = -1;
        for (const auto& [strand, other] : incident[node]) {
          if (strand != prev_strand) {
            next_strand = strand;
            next_node = other;
            break;
          }
        }
        node = next_node;
        prev_strand = next_strand;
        if (node >= F) return node;  // reached a boundary node
      }
    };

    for (int slot = 0; slot < S + E; ++slot) {
      const int node = F + slot;
      if (done[node]) continue;
      done[node] = 1;
      const int other = walk(node);
      done[other] = 1;
      PullbackComponent& c = comp_of(node);
      c.closed = false;
      const bool from_start = node < F + S;
      const bool to_start = other < F + S;
      if (from_start != to_start) {
        c.sign = PullbackComponent::Positive;
        const int a = from_start ? node : other;
        const int b = from_start ? other : node;
        c.start_sheet = start_sheets[a - F];
        c.end_sheet = end_sheets[b - F - S];
        out.endpoint_matching[c.start_sheet] = c.end_sheet;
        out.positive_arcs++;
      } else {
        c.sign = PullbackComponent::Returning;
      }
    }
  }
  return out;
}

}  // namespace

PullbackGraph pullback(const FoldModel& model, const CrossingWord& loop) {
  return assemble(model, run_trace(model, loop), true);
}

PullbackGraph pullback_interval(const FoldModel& model,
                                const CrossingWord& path) {
  return assemble(model, run_trace(model, path), false);
}

BasepointFrame BasepointFrame::natural(const FoldModel& model, int region) {
  return BasepointFrame{model.sheets(region)};
}

namespace {

void check_frame(const FoldModel& model, int region, const BasepointFrame& f) {
  std::vector<int> a = f.sheets, b = model.sheets(region);
  std::sort(a.begin(), a.end());
  if (a != b)
    throw std::invalid_argument("frame does not enumerate the fiber sheets");
}

Permutation matching_to_perm(const std::map<int, int>& matching,
                             const BasepointFrame& from,
                             const BasepointFrame& to) {
  const int d = static_cast<int>(from.sheets.size());
  std::vector<int> images(d);
  for (int k = 0; k < d; ++k) {
    const int sheet = matching.at(from.sheets[k]);
    const auto it = std::find(to.sheets.begin(), to.sheets.end(), sheet);
    images[k] = static_cast<int>(it - to.sheets.begin());
  }
  return Permutation::from_images(images);
}

}  // namespace

Permutation monodromy(const FoldModel& model, const CrossingWord& loop,
                      const BasepointFrame& frame) {
  const int d = std::abs(model.degree());
  if (model.fiber(loop.base) != d)
    throw std::invalid_argument(
        "monodromy: basepoint region fiber must equal the degree");
  check_frame(model, loop.base, frame);
  const Trace tr = run_trace(model, loop);
  if (tr.end_region != loop.base)
    throw std::invalid_argument("monodromy: word is not a loop");
  const PullbackGraph pg = assemble(model, tr, false);
  if (pg.positive_arcs != d)
    throw std::invalid_argument("monodromy: fiber does not return intact");
  return matching_to_perm(pg.endpoint_matching, frame, frame);
}

Permutation basepoint_transport(const FoldModel& model, const CrossingWord& path,
                                const BasepointFrame& frame_at_end,
                                const BasepointFrame& frame_at_start) {
  const int d = std::abs(model.degree());
  if (model.fiber(path.base) != d)
    throw std::invalid_argument("transport: start region fiber must equal degree");
  check_frame(model, path.base, frame_at_start);
  const Trace tr = run_trace(model, path);
  if (model.fiber(tr.end_region) != d)
    throw std::invalid_argument("transport: end region fiber must equal degree");
  check_frame(model, tr.end_region, frame_at_end);
  const PullbackGraph pg = assemble(model, tr, false);
  if (pg.positive_arcs != d)
    throw std::invalid_argument("transport: fiber does not carry across");
  return matching_to_perm(pg.endpoint_matching, frame_at_start, frame_at_end);
}

CrossingWord reversed(const CrossingWord& path, const FoldModel& model) {
  const Trace tr = run_trace(model, path);
  CrossingWord out;
  out.base = tr.end_region;
  for (auto it = path.crossings.rbegin(); it != path.crossings.rend(); ++it)
    out.crossings.push_back(Crossing{it->circle, !it->inward, it->pair_slot});
  return out;
}

CrossingWord concatenated(const CrossingWord& first, const CrossingWord& second) {
  CrossingWord out = first;
  out.crossings.insert(out.crossings.end(), second.crossings.begin(),
                       second.crossings.end());
  return out;
}

int winding_invariant(const std::string& word) {
  if (word.empty() || word.front() != 'B' || word.back() != 'B')
    throw std::invalid_argument(
        "winding_invariant: word must start and end with B");
  for (char ch : word)
    if (ch != 'A' && ch != 'B' && ch != 'C')
      throw std::invalid_argument("winding_invariant: letter outside A,B,C");
  auto height = [](char ch) { return ch - 'A'; };  // A=0, B=1, C=2
  int sum = 0;
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    const int step = height(word[k + 1]) - height(word[k]);
    if (step == 1 || step == -2) sum += 1;        // A->B, B->C, C->A
    else if (step == -1 || step == 2) sum -= 1;   // their reverses
  }
  if (sum % 3 != 0)
    throw std::logic_error("winding_invariant: walk fails to close up");
  return sum / 3;
}

FreeWord simplicial_class(const std::string& word, int d) {
  if (d < 2) throw std::invalid_argument("simplicial_class: need d >= 2");
  if (word.empty() || word.front() != word.back())
    throw std::invalid_argument("simplicial_class: word must close up");
  const int labels = d + 1;
  for (char ch : word)
    if (ch < 'A' || ch >= 'A' + labels)
      throw std::out_of_range("simplicial_class: letter out of range");
  const int base = word.front() - 'A';

  // Non-tree edges of the star spanning tree: pairs of non-base vertices.
  std::map<std::pair<int, int>, int> edge_index;
  for (int u = 0; u < labels; ++u) {
    if (u == base) continue;
    for (int v = u + 1; v < labels; ++v) {
      if (v == base) continue;
      const int idx = static_cast<int>(edge_index.size()) + 1;
      edge_index[{u, v}] = idx;
    }
  }
  const int rank = d * (d - 1) / 2;

  std::vector<int> letters;
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    const int u = word[k] - 'A', v = word[k + 1] - 'A';
    if (u == v || u == base || v == base) continue;
    if (u < v)
      letters.push_back(edge_index.at({u, v}));
    else
      letters.push_back(-edge_index.at({v, u}));
  }
  return FreeWord(rank, letters);
}

AlternationCertificate alternation_certificate(const FoldModel& model,
                                               const CrossingWord& loop) {
  AlternationCertificate cert{AlternationCertificate::Inconclusive, {}, {}};
  if (model.standard()) {
    cert.diagnostics.push_back("certificate applies to nested models only");
    return cert;
  }

  const PullbackGraph pg = pullback(model, loop);
  if (pg.components.size() < 2) {
    cert.diagnostics.push_back("pullback has fewer than two components");
    return cert;
  }
  if (pg.base_fiber != 1) {
    cert.diagnostics.push_back(
        "marked component undefined: basepoint fiber exceeds one");
    return cert;
  }

  // Arcs of each inner disk: (enter index, exit index) pairs.
  std::map<int, std::vector<std::pair<int, int>>> arcs;
  std::map<int, int> open;
  for (std::size_t t = 0; t < loop.crossings.size(); ++t) {
    const Crossing& cr = loop.crossings[t];
    if (!model.circle(cr.circle).outer) {
      if (cr.inward)
        open[cr.circle] = static_cast<int>(t);
      else
        arcs[cr.circle].push_back({open[cr.circle], static_cast<int>(t)});
    }
  }

  std::vector<int> designated;
  for (const auto& [circle, list] : arcs) {
    if (list.size() == 2)
      designated.push_back(circle);
    else
      cert.diagnostics.push_back("inner disk " + std::to_string(circle) +
                                 " is met in " + std::to_string(list.size()) +
                                 " arcs, not two");
  }
  if (designated.size() < 2) {
    cert.diagnostics.push_back("fewer than two inner disks are met twice");
    return cert;
  }
  for (std::size_t a = 0; a < designated.size(); ++a)
    for (std::size_t b = a + 1; b < designated.size(); ++b) {
      // The interleaving pattern presumes disjoint disks.
      for (int x = designated[a]; x != 0; x = model.circle(x).parent)
        if (x == designated[b])
          cert.diagnostics.push_back("designated disks are nested");
      for (int x = designated[b]; x != 0; x = model.circle(x).parent)
        if (x == designated[a])
          cert.diagnostics.push_back("designated disks are nested");
    }

  bool all_interleaved = true;
  for (std::size_t a = 0; a < designated.size(); ++a) {
    for (std::size_t b = a + 1; b < designated.size(); ++b) {
      const auto& A = arcs[designated[a]];
      const auto& B = arcs[designated[b]];
      const int lo = std::min(A[0].first, A[1].first);
      const int hi = std::max(A[0].first, A[1].first);
      int inside = 0;
      for (const auto& arc : B)
        if (arc.first > lo && arc.first < hi) ++inside;
      if (inside == 1)
        cert.interleaved_pairs.push_back({designated[a], designated[b]});
      else
        all_interleaved = false;
    }
  }

  // Component of the fold at each crossing index.
  std::map<int, int> fold_component;
  for (std::size_t c = 0; c < pg.components.size(); ++c)
    for (const auto& f : pg.components[c].folds)
      fold_component[f.crossing_index] = static_cast<int>(c);
  int marked = -1;
  for (std::size_t c = 0; c < pg.components.size(); ++c)
    if (pg.components[c].marked) marked = static_cast<int>(c);

  bool split_ok = true;
  std::set<int> partners;
  for (int circle : designated) {
    for (const auto& [enter, exit] : arcs[circle]) {
      const int ce = fold_component.at(enter);
      const int cx = fold_component.at(exit);
      if (ce == cx || (ce != marked && cx != marked)) {
        split_ok = false;
        continue;
      }
      partners.insert(ce == marked ? cx : ce);
    }
  }
  if (partners.size() != 1) split_ok = false;

  if (all_interleaved && split_ok && cert.diagnostics.empty())
    cert.verdict = AlternationCertificate::Obstructed;
  return cert;
}

}  // namespace prem
