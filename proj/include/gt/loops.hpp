#pragma once

#include <cstddef>
#include <vector>

#include "gt/surface.hpp"
#include "gt/word.hpp"

namespace gt {

// Edge twists over the blackboard framing of the standard drawing.
class Framing {
 public:
  explicit Framing(Surface s) : surface_(std::move(s)), twists_(surface_.rank(), 0) {}
  Framing(Surface s, std::vector<long long> twists);

  const Surface& surface() const { return surface_; }
  const std::vector<long long>& twists() const { return twists_; }
  long long twist(int gen) const { return twists_.at(gen); }
  Framing with_twist(int gen, long long t) const;

  bool operator==(const Framing& o) const {
    return surface_ == o.surface_ && twists_ == o.twists_;
  }

 private:
  Surface surface_;
  std::vector<long long> twists_;
};

std::vector<int> homology_class(const Surface& s, const CyclicWord& w);

// A small explicit loop inserted at corner `corner` (between letters corner and
// corner+1); sign +1 turns left (rot +1).
struct Kink {
  std::size_t corner = 0;
  int sign = 1;
};

struct KinkedLoop {
  CyclicWord word;
  std::vector<Kink> kinks;
};

long long rotation_number(const Framing& xi, const CyclicWord& w);
long long rotation_number(const Framing& xi, const KinkedLoop& w);
// Same, on a cyclically reduced sequence in any rotation.
long long rotation_number_raw(const Framing& xi, std::span<const Letter> w);

struct DoublePoint {
  std::size_t first = 0;   // corner index in the first word
  std::size_t second = 0;  // corner index in the second word (or the same word)
  int sign = 0;            // intersection number of (first branch, second branch)
  CyclicWord split_first;  // self case: loop from first to second occurrence
  CyclicWord split_second;
  CyclicWord merged;       // mixed case
};

std::vector<DoublePoint> self_intersections(const Surface& s, const CyclicWord& w);
std::vector<DoublePoint> self_intersections(const Surface& s, const KinkedLoop& w);
std::vector<DoublePoint> intersections(const Surface& s, const CyclicWord& u, const CyclicWord& v);

// Variants on raw cyclically reduced sequences (corner k sits after letter k).
std::vector<DoublePoint> self_intersections_raw(const Surface& s, std::span<const Letter> w);
std::vector<DoublePoint> intersections_raw(const Surface& s, std::span<const Letter> u,
                                           std::span<const Letter> v);

}  // namespace gt
