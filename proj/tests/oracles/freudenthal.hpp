#pragma once

// Independent oracle: weight multiplicities by Freudenthal's formula, worked
// in doubled epsilon coordinates with the standard inner product. Positive
// roots are enumerated here from scratch.

#include <map>
#include <vector>

namespace oracle {

using Vec = std::vector<long>;  // 2 * epsilon coordinates

inline long dot(const Vec& a, const Vec& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::vector<Vec> positive_roots(int l, bool b_type) {
  std::vector<Vec> roots;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      for (int s : {-1, 1}) {
        Vec v(l, 0);
        v[i] = 2;
        v[j] = 2 * s;
        roots.push_back(v);
      }
  if (b_type)
    for (int i = 0; i < l; ++i) {
      Vec v(l, 0);
      v[i] = 2;
      roots.push_back(v);
    }
  return roots;
}

/// Simple roots e_i - e_{i+1}, then e_{l-1}+e_l (D) or e_l (B).
inline std::vector<Vec> simple_roots(int l, bool b_type) {
  std::vector<Vec> s;
  for (int i = 0; i + 1 < l; ++i) {
    Vec v(l, 0);
    v[i] = 2;
    v[i + 1] = -2;
    s.push_back(v);
  }
  Vec last(l, 0);
  if (b_type) {
    last[l - 1] = 2;
  } else {
    last[l - 2] = 2;
    last[l - 1] = 2;
  }
  s.push_back(last);
  return s;
}

/// Multiplicity of weight mu in V(lambda), both in doubled epsilon coordinates.
inline long freudenthal_multiplicity(int l, bool b_type, const Vec& lambda, const Vec& mu) {
  const auto pos = positive_roots(l, b_type);
  Vec rho2(l, 0);  // 2 rho in doubled coordinates
  for (const auto& a : pos)
    for (int i = 0; i < l; ++i) rho2[i] += a[i];
  auto shifted_norm = [&](const Vec& v) {
    Vec s(l);
    for (int i = 0; i < l; ++i) s[i] = 2 * v[i] + rho2[i];
    return dot(s, s);  // 4 * (v + rho, v + rho) in doubled units
  };
  const auto simple = simple_roots(l, b_type);
  const long top = dot(lambda, lambda);
  std::map<Vec, long> mult;
  mult[lambda] = 1;
  // Process weights lambda - sum n_i alpha_i by increasing depth.
  std::vector<Vec> layer{lambda};
  while (!layer.empty()) {
    std::map<Vec, bool> next;
    for (const auto& w : layer)
      for (const auto& a : simple) {
        Vec v(l);
        for (int i = 0; i < l; ++i) v[i] = w[i] - a[i];
        if (dot(v, v) > top || mult.count(v) || next.count(v)) continue;
        next[v] = true;
      }
    std::vector<Vec> nl;
    for (const auto& [v, unused] : next) {
      long num = 0;
      for (const auto& a : pos) {
        Vec u = v;
        for (int k = 1;; ++k) {
          for (int i = 0; i < l; ++i) u[i] += a[i];
          auto it = mult.find(u);
          if (it == mult.end()) {
            if (dot(u, u) > top) break;
            continue;
          }
          num += 2 * dot(u, a) * it->second;
        }
      }
      const long den = shifted_norm(lambda) - shifted_norm(v);
      // num is in doubled^2 units, den in 4x doubled^2 units.
      const long m = den == 0 ? 0 : 4 * num / den;
      mult[v] = m;
      nl.push_back(v);
    }
    layer = std::move(nl);
  }
  auto it = mult.find(mu);
  return it == mult.end() ? 0 : it->second;
}

}  // namespace oracle
