#include "gt/surface.hpp"

#include <cctype>
#include <sstream>

#include "gt/error.hpp"

namespace gt {

namespace {

// Follow the face starting with arrival at slot h0; returns the letters read.
Word trace_face(const Surface& s, int h0, std::vector<char>& used) {
  const int N = s.slot_count();
  Word face;
  int h = h0;
  do {
    used[h] = 1;
    const int leave = (h - 1 + N) % N;
    const HalfEdge he = s.half_edge_order()[leave];
    const Letter l{he.gen, he.end == EdgeEnd::End};
    face.push_back(l);
    h = s.in_slot(l);
    if (face.size() > static_cast<std::size_t>(N)) throw InternalError("face tracing did not close");
  } while (h != h0);
  return face;
}

}  // namespace

Surface Surface::build(int g, int n) {
  if (g < 0 || n < 0 || 2 * g - 1 + n <= 0)
    throw Error(ErrorCode::NonHyperbolic,
                "surface (" + std::to_string(g) + "," + std::to_string(n) +
                    ") is not hyperbolic: need 2g-1+n > 0");
  Surface s;
  s.g_ = g;
  s.n_ = n;
  for (int i = 1; i <= g; ++i) {
    s.names_.push_back("x" + std::to_string(i));
    s.names_.push_back("y" + std::to_string(i));
  }
  for (int j = 1; j <= n; ++j) s.names_.push_back("z" + std::to_string(j));

  for (int j = n; j >= 1; --j) {
    s.order_.push_back({s.z(j), EdgeEnd::End});
    s.order_.push_back({s.z(j), EdgeEnd::Start});
  }
  for (int i = g; i >= 1; --i) {
    s.order_.push_back({s.y(i), EdgeEnd::Start});
    s.order_.push_back({s.x(i), EdgeEnd::End});
    s.order_.push_back({s.y(i), EdgeEnd::End});
    s.order_.push_back({s.x(i), EdgeEnd::Start});
  }
  s.start_.assign(s.rank(), -1);
  s.end_.assign(s.rank(), -1);
  for (int k = 0; k < s.slot_count(); ++k) {
    const HalfEdge& he = s.order_[k];
    (he.end == EdgeEnd::Start ? s.start_ : s.end_)[he.gen] = k;
  }

  const int N = s.slot_count();
  std::vector<char> used(N, 0);
  std::vector<Word> faces;
  faces.push_back(trace_face(s, 0, used));
  for (int h = 1; h < N; ++h)
    if (!used[h]) faces.push_back(trace_face(s, h, used));
  if (static_cast<int>(faces.size()) != n + 1)
    throw InternalError("face count " + std::to_string(faces.size()) + " != n+1");

  s.boundary_based_.assign(n + 1, Word{});
  s.boundary_based_[0] = faces[0];
  std::vector<char> seen(n + 1, 0);
  seen[0] = 1;
  for (std::size_t f = 1; f < faces.size(); ++f) {
    if (faces[f].size() != 1 || !faces[f][0].inverse || s.is_handle(faces[f][0].gen))
      throw InternalError("unexpected puncture face");
    const int j = faces[f][0].gen - 2 * g + 1;
    if (seen[j]) throw InternalError("duplicate puncture face");
    seen[j] = 1;
    s.boundary_based_[j] = faces[f];
  }
  for (const Word& w : s.boundary_based_) s.boundary_.push_back(CyclicWord::from_letters(w));

  Word relator;
  for (int i = 1; i <= g; ++i) {
    relator.push_back({s.x(i), false});
    relator.push_back({s.y(i), false});
    relator.push_back({s.x(i), true});
    relator.push_back({s.y(i), true});
  }
  for (int j = 1; j <= n; ++j) relator.push_back({s.z(j), false});
  if (CyclicWord::from_letters(relator) != s.boundary_[0])
    throw InternalError("outer face is not the surface relator");
  return s;
}

Letter Surface::parse_letter(std::string_view token) const {
  auto bad = [&] {
    return Error(ErrorCode::UnknownGenerator, "unknown generator '" + std::string(token) + "'");
  };
  if (token.empty()) throw bad();
  const char c = token[0];
  const char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lc != 'x' && lc != 'y' && lc != 'z') throw bad();
  int idx = 1;
  if (token.size() > 1) {
    idx = 0;
    for (char d : token.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(d))) throw bad();
      idx = idx * 10 + (d - '0');
      if (idx > 100000) throw bad();
    }
  }
  int gen = -1;
  if (lc == 'z') {
    if (idx >= 1 && idx <= n_) gen = z(idx);
  } else if (idx >= 1 && idx <= g_) {
    gen = lc == 'x' ? x(idx) : y(idx);
  }
  if (gen < 0) throw bad();
  return Letter{gen, c != lc};
}

Word Surface::parse_word(std::string_view text) const {
  std::istringstream in{std::string(text)};
  Word w;
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    w.push_back(parse_letter(tok));
  }
  return w;
}

std::string Surface::format_letter(Letter l) const {
  std::string s = names_.at(l.gen);
  if (l.inverse) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string Surface::format_word(std::span<const Letter> w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += format_letter(l);
  }
  return out;
}

void require_same_surface(const Surface& a, const Surface& b) {
  if (!(a == b))
    throw Error(ErrorCode::SurfaceMismatch,
                "surfaces differ: (" + std::to_string(a.genus()) + "," + std::to_string(a.n()) +
                    ") vs (" + std::to_string(b.genus()) + "," + std::to_string(b.n()) + ")");
}

}  // namespace gt
