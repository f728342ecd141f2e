#pragma once

#include <vector>

#include "gt/surface.hpp"
#include "gt/word.hpp"

namespace gt {

// Automorphism of the free group on the surface generators, stored with its
// inverse.  Composition: (a * b)(g) = a(b(g)).
class FreeGroupAuto {
 public:
  static FreeGroupAuto identity(const Surface& s);
  // Throws NotMappingClass if the images do not form a basis.
  static FreeGroupAuto from_images(const Surface& s, std::vector<Word> images);
  // Checks that the two lists invert each other.
  static FreeGroupAuto with_inverse(const Surface& s, std::vector<Word> images,
                                    std::vector<Word> inverse);

  const Surface& surface() const { return surface_; }
  const std::vector<Word>& images() const { return images_; }
  const std::vector<Word>& inverse_images() const { return inverse_; }

  Word apply(std::span<const Letter> w) const;
  CyclicWord apply(const CyclicWord& w) const;
  FreeGroupAuto inverse() const;
  friend FreeGroupAuto operator*(const FreeGroupAuto& a, const FreeGroupAuto& b);

  // Every boundary class goes to itself up to conjugacy.
  bool preserves_boundary() const;
  // Integer matrix of the induced map on H1: column k is the class of image k.
  std::vector<std::vector<long long>> abelianization() const;

  bool operator==(const FreeGroupAuto& o) const { return images_ == o.images_; }

 private:
  FreeGroupAuto(Surface s, std::vector<Word> images, std::vector<Word> inverse)
      : surface_(std::move(s)), images_(std::move(images)), inverse_(std::move(inverse)) {}

  Surface surface_;
  std::vector<Word> images_;
  std::vector<Word> inverse_;
};

Word substitute(std::span<const Word> images, std::span<const Letter> w);

// Inverse images of a basis, by Whitehead reduction; empty if not a basis.
std::vector<Word> basis_inverse(int rank, std::span<const Word> images);

// Elementary mapping classes: twist along x_i (y_i ↦ y_i x_i) and along y_i
// (x_i ↦ x_i y_i).
FreeGroupAuto twist_x(const Surface& s, int i);
FreeGroupAuto twist_y(const Surface& s, int i);

// Drags puncture j (1 ≤ j ≤ n) once around the based loop alpha, which must
// avoid z_j.  Pushing around a product is the composite of the pushes.
FreeGroupAuto point_push_automorphism(const Surface& s, int j, std::span<const Letter> alpha);

// Throws NotMappingClass unless psi fixes every boundary class.
void require_mapping_class(const FreeGroupAuto& psi);

// Handle twists and pushes of each puncture around every other generator.
std::vector<FreeGroupAuto> elementary_moves(const Surface& s);

}  // namespace gt
