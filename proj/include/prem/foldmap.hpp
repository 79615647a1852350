#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prem/perm.hpp"
#include "prem/word.hpp"

namespace prem {

// Fold circle of a nested arrangement.  `parent` is the circle whose disk
// immediately contains this one, 0 for the outermost level.  `rho` names the
// ancestor-or-self circle whose disk is the image of the ball this circle
// bounds in the source; it is idempotent as a map of circle ids.
struct FoldCircle {
  int id = 0;
  int parent = 0;
  int rho = 0;
  bool outer = false;
};

// Combinatorial model of a generic fold map with embedded fold spheres.
//  - Standard: the degree-d map built from d+1 disjoint disks, each sent
//    homeomorphically onto its own exterior.  Disks are numbered 0..d and
//    the basepoint names the disk containing it.
//  - Nested: fold-image circles with nesting forest, rho and inner/outer
//    flags; the basepoint sits in the outermost region (id 0).
struct DiskArrangement {
  enum Kind { Standard, Nested } kind = Standard;
  int degree = 1;
  int basepoint = 0;                  // region id
  std::vector<FoldCircle> circles;    // nested only
  std::map<int, int> fibers;          // optional expected fiber sizes by region
};

// One transverse crossing of a fold-image circle.  `pair_slot`, when given,
// overrides the canonical choice of which adjacent sheet pair folds: the
// pair occupies slots (pair_slot, pair_slot+1) of the larger fiber's stack.
struct Crossing {
  int circle = 0;
  bool inward = true;
  std::optional<int> pair_slot;
};

struct CrossingWord {
  int base = 0;  // starting region
  std::vector<Crossing> crossings;
};

// Region walk + fiber bookkeeping after validation.
class FoldModel {
public:
  static FoldModel validate(const DiskArrangement& arr);

  const DiskArrangement& arrangement() const { return arr_; }
  bool standard() const { return arr_.kind == DiskArrangement::Standard; }
  int degree() const { return arr_.degree; }
  int base_region() const { return arr_.basepoint; }
  int exterior_region() const;           // standard only
  std::vector<int> regions() const;
  int fiber(int region) const;
  // Sheet names of a region's fiber, bottom to top.  Standard models name
  // sheets after disks (with d+1 for the folded-back sheet); nested models
  // use stack slots.
  std::vector<int> sheets(int region) const;
  const FoldCircle& circle(int id) const;
  bool has_circle(int id) const;

private:
  DiskArrangement arr_;
  std::map<int, int> fiber_;
  std::map<int, FoldCircle> circle_;
};

struct FoldPoint {
  int crossing_index;
  int circle;
  bool birth;  // birth of a sheet pair, else merge
};

struct PullbackComponent {
  bool closed;                     // circle, else arc
  bool marked = false;             // contains the basepoint sheet (fiber-1 base)
  int strand_count = 0;
  std::vector<FoldPoint> folds;
  std::vector<int> birth_circles;  // circles whose crossings created strands; -1 = base fiber
  // Arc data (interval pullbacks only):
  enum Sign { Positive, Negative, Returning, Closed } sign = Closed;
  int start_sheet = -1;
  int end_sheet = -1;
};

struct PullbackGraph {
  int base_fiber = 0;
  bool loop_glued = false;
  int positive_arcs = 0;
  int negative_arcs = 0;
  std::vector<PullbackComponent> components;
  // Interval pullbacks: sheet over the start matched to the sheet over the
  // end along each boundary-to-boundary arc.
  std::map<int, int> endpoint_matching;
};

// Pullback of the fold map along a loop: the fiber traced through every
// crossing and glued end-to-start.
PullbackGraph pullback(const FoldModel& model, const CrossingWord& loop);

// Same trace left unglued, giving arcs over the interval.
PullbackGraph pullback_interval(const FoldModel& model, const CrossingWord& path);

struct BasepointFrame {
  std::vector<int> sheets;  // position k -> sheet name

  static BasepointFrame natural(const FoldModel& model, int region);
};

// Permutation of the frame positions induced by matching positive-arc
// endpoints along the loop.
Permutation monodromy(const FoldModel& model, const CrossingWord& loop,
                      const BasepointFrame& frame);

// Frame-change permutation h carried by a path p from b' to b; satisfies
// monodromy(p.j.p~, D') = h . monodromy(j, D) . h^-1 with diagrammatic
// products, j any loop at b and p~ the reversed path.
Permutation basepoint_transport(const FoldModel& model, const CrossingWord& path,
                                const BasepointFrame& frame_at_end,
                                const BasepointFrame& frame_at_start);

CrossingWord reversed(const CrossingWord& path, const FoldModel& model);
CrossingWord concatenated(const CrossingWord& first, const CrossingWord& second);

// Degree of a closed region-label walk on the three-disk model, the complete
// invariant of such walks modulo the rewrites XX -> X and XYX -> X.  Words
// use letters A, B, C and must start and end with B.
int winding_invariant(const std::string& word);

// Class of a closed region-label walk in the free fundamental group of the
// complete graph on the d+1 disk labels, via the star spanning tree at the
// walk's base vertex.  Labels are the first d+1 uppercase letters.
FreeWord simplicial_class(const std::string& word, int d);

struct AlternationCertificate {
  enum Verdict { Obstructed, Inconclusive } verdict;
  // Pairs of inner circles whose two loop arcs interleave cyclically.
  std::vector<std::pair<int, int>> interleaved_pairs;
  std::vector<std::string> diagnostics;
};

// Certificate that no coherent null-homotopy exists: every pair of inner
// disks met twice by the loop interleaves, and each such arc has one
// endpoint fold on the marked component and the other on a single common
// unmarked component, so eliminating any arc would join the two.
AlternationCertificate alternation_certificate(const FoldModel& model,
                                               const CrossingWord& loop);

}  // namespace prem
