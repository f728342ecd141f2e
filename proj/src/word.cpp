#include "gt/word.hpp"

#include <algorithm>

namespace gt {

Word free_reduce(std::span<const Letter> letters) {
  Word out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back() == l.inv())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse_word(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inv());
  return out;
}

Word concat(std::span<const Letter> a, std::span<const Letter> b) {
  Word out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

Word power(std::span<const Letter> w, int k) {
  Word base = k < 0 ? inverse_word(w) : Word(w.begin(), w.end());
  Word out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
  return free_reduce(out);
}

std::size_t primitive_period(std::span<const Letter> w) {
  const std::size_t m = w.size();
  for (std::size_t p = 1; p < m; ++p) {
    if (m % p != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i + p < m && ok; ++i) ok = w[i] == w[i + p];
    if (ok) return p;
  }
  return m;
}

// Booth's algorithm.
std::size_t least_rotation(std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Letter sj = w[j % n];
    long i = f[j - k - 1];
    while (i != -1 && sj != w[(k + i + 1) % n]) {
      if (sj < w[(k + i + 1) % n]) k = j - i - 1;
      i = f[i];
    }
    if (i == -1 && sj != w[(k + i + 1) % n]) {
      if (sj < w[(k + i + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

Word cyclic_reduce_raw(std::span<const Letter> letters) {
  Word w = free_reduce(letters);
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == w[hi - 1].inv()) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + lo, w.begin() + hi);
}

CyclicWord CyclicWord::from_letters(std::span<const Letter> letters) {
  Word w = cyclic_reduce_raw(letters);
  CyclicWord c;
  std::size_t r = least_rotation(w);
  c.letters_.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) c.letters_.push_back(w[(r + i) % w.size()]);
  return c;
}

CyclicWord CyclicWord::inverse() const { return from_letters(inverse_word(letters_)); }

CyclicWord CyclicWord::pow(int k) const { return from_letters(power(letters_, k)); }

std::vector<int> homology_vector(int rank, std::span<const Letter> w) {
  std::vector<int> h(rank, 0);
  for (const Letter& l : w) h[l.gen] += l.sign();
  return h;
}

std::size_t CyclicWordHash::operator()(const CyclicWord& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (const Letter& l : w.letters()) {
    h ^= static_cast<std::size_t>(l.key() + 1);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace gt
