#pragma once

// Test-only series engine: a monomial is a string of generator codes, no
// weight buckets.  Kept deliberately simple so it shares nothing with Series.

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace naive {

using Poly = std::map<std::string, mpq_class>;

struct Ring {
  std::vector<int> weight;  // per generator
  int N;

  int w(const std::string& m) const {
    int t = 0;
    for (char c : m) t += weight[c - 'a'];
    return t;
  }

  void clean(Poly& p) const {
    for (auto it = p.begin(); it != p.end();)
      it = (it->second == 0 || w(it->first) > N) ? p.erase(it) : std::next(it);
  }

  Poly mul(const Poly& a, const Poly& b) const {
    Poly out;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b)
        if (w(ma) + w(mb) <= N) out[ma + mb] += ca * cb;
    clean(out);
    return out;
  }

  Poly add(Poly a, const Poly& b, const mpq_class& s = 1) const {
    for (const auto& [m, c] : b) a[m] += s * c;
    clean(a);
    return a;
  }

  // exp(±letter) by explicit powers
  Poly exp_letter(int gen, int sign) const {
    Poly out{{"", 1}};
    std::string m;
    mpq_class c = 1;
    for (int k = 1; w(m + char('a' + gen)) <= N; ++k) {
      m += char('a' + gen);
      c = c * sign / k;
      out[m] = c;
    }
    return out;
  }

  Poly log(const Poly& p) const {
    Poly x = add(p, Poly{{"", 1}}, -1);
    Poly out, pw{{"", 1}};
    for (int k = 1; k <= N; ++k) {
      pw = mul(pw, x);
      out = add(out, pw, mpq_class(k % 2 ? 1 : -1, k));
    }
    return out;
  }
};

}  // namespace naive
