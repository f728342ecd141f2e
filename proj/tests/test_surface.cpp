#include <numeric>

#include "doctest.h"
#include "gt/error.hpp"
#include "gt/loops.hpp"
#include "gt/surface.hpp"

using namespace gt;

namespace {

std::vector<std::string> formatted_boundary(const Surface& s) {
  std::vector<std::string> out;
  for (const auto& w : s.boundary_words()) out.push_back(s.format(w));
  return out;
}

bool conjugate(const CyclicWord& a, const Word& b) { return a == CyclicWord::from_letters(b); }

}  // namespace

TEST_CASE("punctured torus has one commutator face") {
  const Surface s = build_surface(1, 0);
  CHECK(s.generator_names() == std::vector<std::string>{"x1", "y1"});
  REQUIRE(s.boundary_words().size() == 1);
  CHECK(conjugate(s.boundary_words()[0], s.parse_word("x1 y1 X1 Y1")));
  CHECK(s.format_word(s.boundary_based(0)) == "x1 y1 X1 Y1");
}

TEST_CASE("pair of pants faces") {
  const Surface s = build_surface(0, 2);
  CHECK(s.generator_names() == std::vector<std::string>{"z1", "z2"});
  const auto b = s.boundary_words();
  REQUIRE(b.size() == 3);
  CHECK(conjugate(b[0], s.parse_word("z1 z2")));
  CHECK(conjugate(b[1], s.parse_word("Z1")));
  CHECK(conjugate(b[2], s.parse_word("Z2")));
}

TEST_CASE("genus two relator") {
  const Surface s = build_surface(2, 0);
  REQUIRE(s.boundary_words().size() == 1);
  CHECK(s.boundary_words()[0].size() == 8);
  CHECK(s.format_word(s.boundary_based(0)) == "x1 y1 X1 Y1 x2 y2 X2 Y2");
}

TEST_CASE("non hyperbolic surfaces are rejected") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 0}, {0, 1}}) {
    try {
      build_surface(g, n);
      FAIL("expected NonHyperbolic");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonHyperbolic);
    }
  }
  CHECK_NOTHROW(build_surface(0, 2));
  CHECK_NOTHROW(build_surface(1, 0));
}

TEST_CASE("face count, Euler characteristic and boundary homology up to g,n = 4") {
  for (int g = 0; g <= 4; ++g)
    for (int n = 0; n <= 4; ++n) {
      if (2 * g - 1 + n <= 0) continue;
      const Surface s = build_surface(g, n);
      CAPTURE(g);
      CAPTURE(n);
      CHECK(static_cast<int>(s.boundary_words().size()) == n + 1);
      CHECK(1 - s.rank() + (n + 1) == 2 - 2 * g);
      std::vector<int> sum(s.rank(), 0);
      for (const auto& w : s.boundary_words()) {
        const auto h = homology_class(s, w);
        for (int k = 0; k < s.rank(); ++k) sum[k] += h[k];
      }
      CHECK(std::all_of(sum.begin(), sum.end(), [](int v) { return v == 0; }));
      CHECK(static_cast<int>(s.half_edge_order().size()) == s.slot_count());
      // relator and inverse punctures
      Word rel;
      for (int i = 1; i <= g; ++i)
        for (Letter l : {Letter{s.x(i), false}, Letter{s.y(i), false}, Letter{s.x(i), true},
                         Letter{s.y(i), true}})
          rel.push_back(l);
      for (int j = 1; j <= n; ++j) rel.push_back({s.z(j), false});
      CHECK(conjugate(s.boundary_words()[0], rel));
      for (int j = 1; j <= n; ++j) CHECK(conjugate(s.boundary_words()[j], Word{Letter{s.z(j), true}}));
    }
}

TEST_CASE("boundary words are deterministic") {
  CHECK(formatted_boundary(build_surface(2, 3)) == formatted_boundary(build_surface(2, 3)));
}

TEST_CASE("drawing angles") {
  const Surface s = build_surface(1, 1);
  CHECK(s.slot_count() == 6);
  CHECK(s.drawing_angle(0) == 0);
  CHECK(s.drawing_angle(3) == Rational(1, 2));
}

TEST_CASE("word syntax and cyclic reduction") {
  const Surface s = build_surface(1, 0);
  CHECK(s.format(s.parse_cyclic("x y Y x")) == "x1 x1");
  CHECK(s.format(s.parse_cyclic("x y X")) == "y1");
  CHECK(s.parse_cyclic("").empty());
  CHECK(s.parse_cyclic("1").empty());
  CHECK(s.format(s.parse_cyclic("")) == "1");
  CHECK(s.parse_cyclic("x1 y1") == s.parse_cyclic("y x"));
  CHECK(s.parse_letter("X1").inverse);
  CHECK_FALSE(s.parse_letter("x").inverse);
}

TEST_CASE("unknown generators") {
  const Surface s = build_surface(1, 0);
  for (const char* bad : {"w", "x2", "z1", "x0"}) {
    CAPTURE(bad);
    try {
      s.parse_word(bad);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK((e.code() == ErrorCode::UnknownGenerator || e.code() == ErrorCode::ParseError));
    }
  }
}

TEST_CASE("least rotation is shared by every rotation") {
  const Surface s = build_surface(2, 1);
  const Word w = s.parse_word("x1 y2 Z1 x2 x2 Y1 y1");
  const CyclicWord c = CyclicWord::from_letters(w);
  for (std::size_t r = 0; r < w.size(); ++r) {
    Word v(w.begin() + r, w.end());
    v.insert(v.end(), w.begin(), w.begin() + r);
    CHECK(CyclicWord::from_letters(v) == c);
  }
}

TEST_CASE("surface mismatch") {
  CHECK_THROWS_AS(require_same_surface(build_surface(1, 0), build_surface(0, 2)), Error);
  CHECK_NOTHROW(require_same_surface(build_surface(1, 1), build_surface(1, 1)));
}
