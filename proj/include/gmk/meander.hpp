#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gmk/bit_matrix.hpp"
#include "gmk/error.hpp"
#include "gmk/gauss_code.hpp"
#include "gmk/limits.hpp"
#include "gmk/meander_builder.hpp"
#include "gmk/meander_matrix.hpp"
#include "gmk/rotation_oracle.hpp"

namespace gmk {

using arc = std::pair<int, int>;

/// A closed meander read back from its matrix.
///
/// The line carries points 1..N in order; the curve visits them in the order
/// `visitation`. The Gauss code is r 1 2 ... N r w1 ... wN with r written "0".
/// Arcs (w1,w2), (w3,w4), ... lie above the line and (w2,w3), ..., (wN,w1)
/// below it; (wN, w1) is the arc that passes the r crossing.
struct meander_reconstruction {
  std::size_t points = 0;
  /// Index of the full row in the source matrix (0 when built from a visitation).
  std::size_t full_row = 0;
  std::vector<int> visitation;
  gauss_code code;
  std::vector<arc> upper;
  std::vector<arc> lower;

  friend bool operator==(const meander_reconstruction& a, const meander_reconstruction& b) {
    return a.points == b.points && a.full_row == b.full_row && a.visitation == b.visitation && a.code == b.code &&
           a.upper == b.upper && a.lower == b.lower;
  }
};

inline gauss_code meander_code(const std::vector<int>& visitation) {
  std::vector<std::string> word{"0"};
  for (std::size_t i = 1; i <= visitation.size(); ++i) word.push_back(std::to_string(i));
  word.emplace_back("0");
  for (int w : visitation) word.push_back(std::to_string(w));
  return gauss_code(std::move(word));
}

/// Builds the code and both matchings from a visitation order, unchecked.
inline meander_reconstruction reconstruction_from_visitation(std::vector<int> visitation) {
  meander_reconstruction rec;
  rec.points = visitation.size();
  rec.code = meander_code(visitation);
  const std::size_t n = visitation.size();
  for (std::size_t k = 0; k < n; ++k) {
    const int a = visitation[k];
    const int b = visitation[(k + 1) % n];
    (k % 2 == 0 ? rec.upper : rec.lower).emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(rec.upper.begin(), rec.upper.end());
  std::sort(rec.lower.begin(), rec.lower.end());
  rec.visitation = std::move(visitation);
  return rec;
}

inline bool noncrossing(const std::vector<arc>& arcs) {
  for (std::size_t x = 0; x < arcs.size(); ++x)
    for (std::size_t y = x + 1; y < arcs.size(); ++y) {
      auto [a, b] = arcs[x];
      auto [c, d] = arcs[y];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  return true;
}

/// Upper and lower arcs, followed alternately from point w1, pass through all
/// N points before closing.
inline bool single_cycle(const meander_reconstruction& rec) {
  const std::size_t n = rec.points;
  if (n == 0) return false;
  std::vector<int> up(n + 1, 0), down(n + 1, 0);
  for (auto [a, b] : rec.upper) up[static_cast<std::size_t>(a)] = b, up[static_cast<std::size_t>(b)] = a;
  for (auto [a, b] : rec.lower) down[static_cast<std::size_t>(a)] = b, down[static_cast<std::size_t>(b)] = a;
  const int start = rec.visitation.front();
  int at = start;
  std::size_t steps = 0;
  bool use_upper = true;
  do {
    at = use_upper ? up[static_cast<std::size_t>(at)] : down[static_cast<std::size_t>(at)];
    if (at == 0) return false;
    use_upper = !use_upper;
    ++steps;
  } while (at != start && steps <= n);
  return at == start && steps == n;
}

/// Problems with a reconstruction; empty when all invariants hold.
inline std::vector<std::string> meander_problems(const meander_reconstruction& rec) {
  std::vector<std::string> out;
  const std::size_t n = rec.points;
  std::vector<bool> seen(n + 1, false);
  bool perm = rec.visitation.size() == n;
  for (int w : rec.visitation) {
    if (w < 1 || static_cast<std::size_t>(w) > n || seen[static_cast<std::size_t>(w)]) {
      perm = false;
      break;
    }
    seen[static_cast<std::size_t>(w)] = true;
  }
  if (!perm) {
    out.emplace_back("visitation is not a permutation of 1..N");
    return out;
  }
  if (rec.visitation.front() % 2 == 0) out.emplace_back("visitation starts at an even point");
  for (std::size_t k = 0; k + 1 < n; ++k)
    if ((rec.visitation[k] + rec.visitation[k + 1]) % 2 == 0) {
      out.emplace_back("consecutive points " + std::to_string(rec.visitation[k]) + ", " +
                       std::to_string(rec.visitation[k + 1]) + " share parity");
      break;
    }
  if (!noncrossing(rec.upper)) out.emplace_back("upper arcs cross");
  if (!noncrossing(rec.lower)) out.emplace_back("lower arcs cross");
  if (!single_cycle(rec)) out.emplace_back("arcs do not form a single cycle");
  if (!oracle_realizable(rec.code, n + 1).realizable) out.emplace_back("reconstructed Gauss code has positive genus");
  return out;
}

/// Reads the meander off a meander matrix. The smallest full row becomes r;
/// the remaining rows, relabelled 1..N in order, give the visitation order by
/// "i comes before j exactly when i < j and m_ij = 1, or i > j and m_ji = 0".
inline meander_reconstruction reconstruct_meander(const bit_matrix& m) {
  const auto verdict = is_meander_matrix(m);
  if (!verdict.is_meander()) {
    throw error(errc::not_meander_matrix,
                verdict.violations.empty() ? std::string("not a meander matrix") : verdict.violations.front());
  }
  const std::size_t r = *full_row(m);
  const auto order = full_row_first(m.size(), r);
  const bit_matrix a = m.permuted(order);
  const std::size_t n = m.size() - 1;

  const auto before = [&](std::size_t i, std::size_t j) { return i < j ? a.get(i, j) : !a.get(j, i); };
  std::vector<int> visitation(n, 0);
  std::vector<bool> used(n, false);
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t rank = 0;
    for (std::size_t j = 1; j <= n; ++j)
      if (j != i && before(j, i)) ++rank;
    if (used[rank]) throw error(errc::reconstruction_inconsistent, "matrix does not induce a total order");
    used[rank] = true;
    visitation[rank] = static_cast<int>(i);
  }
  auto rec = reconstruction_from_visitation(std::move(visitation));
  rec.full_row = r;
  const auto problems = meander_problems(rec);
  if (!problems.empty()) throw error(errc::reconstruction_inconsistent, problems.front());
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      const auto pi = std::find(rec.visitation.begin(), rec.visitation.end(), static_cast<int>(i));
      const auto pj = std::find(rec.visitation.begin(), rec.visitation.end(), static_cast<int>(j));
      if (a.get(i, j) != (pi < pj)) throw error(errc::reconstruction_inconsistent, "order does not re-encode");
    }
  return rec;
}

/// Interlacement matrix of r 1 ... N r w1 ... wN with r as row 0.
inline bit_matrix encode_meander(const meander_reconstruction& rec) { return chord_diagram(rec.code).interlacement(); }

/// Brute force: every parity-alternating visitation order starting odd, in
/// lexicographic order, kept when its Gauss code has genus 0.
inline void oracle_enumerate_meanders(std::size_t points,
                                      const std::function<void(const meander_reconstruction&)>& visit,
                                      std::size_t max_points = limits::current().max_meander_points) {
  if (points < 2 || points % 2 != 0) throw error(errc::invalid_n, "N must be even and at least 2");
  require_within(points, max_points, "meander size");
  std::vector<int> w;
  std::vector<bool> used(points + 1, false);
  const std::function<void()> rec = [&]() {
    if (w.size() == points) {
      if (oracle_realizable(meander_code(w), points + 1).realizable) visit(reconstruction_from_visitation(w));
      return;
    }
    const int parity = w.empty() ? 1 : 1 - w.back() % 2;
    for (int p = 1; p <= static_cast<int>(points); ++p) {
      if (used[static_cast<std::size_t>(p)] || p % 2 != parity) continue;
      used[static_cast<std::size_t>(p)] = true;
      w.push_back(p);
      rec();
      w.pop_back();
      used[static_cast<std::size_t>(p)] = false;
    }
  };
  rec();
}

inline std::vector<meander_reconstruction> oracle_enumerate_meanders(
    std::size_t points, std::size_t max_points = limits::current().max_meander_points) {
  std::vector<meander_reconstruction> out;
  oracle_enumerate_meanders(points, [&](const meander_reconstruction& r) { out.push_back(r); }, max_points);
  return out;
}

/// Images of a visitation under travel reversal and line reflection
/// (i -> N + 1 - i): {reversed, reflected, reversed and reflected}.
inline std::vector<std::vector<int>> visitation_images(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> rev(w.rbegin(), w.rend());
  std::vector<int> refl(w.size()), both(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    refl[k] = n + 1 - w[k];
    both[k] = n + 1 - rev[k];
  }
  return {rev, refl, both};
}

struct meander_orbit {
  /// Least odd-start member of the orbit.
  std::vector<int> representative;
  /// Even-start members (they start on the other parity and are not emitted by the builder).
  std::vector<std::vector<int>> duals;
  std::size_t size = 1;
};

/// Groups odd-start visitations into orbits under reversal + reflection.
/// `key` is the least member of the whole orbit and identifies it.
inline meander_orbit orbit_of(const std::vector<int>& w) {
  std::vector<std::vector<int>> members{w};
  for (auto& img : visitation_images(w))
    if (std::find(members.begin(), members.end(), img) == members.end()) members.push_back(std::move(img));
  std::sort(members.begin(), members.end());
  meander_orbit o;
  o.size = members.size();
  for (const auto& m : members) {
    if (m.front() % 2 == 1) {
      if (o.representative.empty()) o.representative = m;
    } else {
      o.duals.push_back(m);
    }
  }
  return o;
}

}  // namespace gmk
