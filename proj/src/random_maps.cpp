#include "raag1d/random_maps.hpp"

#include <algorithm>
#include <set>

namespace raag1d {

std::uint64_t MapSampler::below(std::uint64_t n) {
  // Rejection sampling keeps this portable across standard libraries, unlike
  // std::uniform_int_distribution.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v;
  do v = rng_();
  while (v >= limit);
  return v % n;
}

std::vector<Rational> MapSampler::sorted_grid(std::size_t count, long den, const Rational& lo, const Rational& hi) {
  std::set<long> picked;
  while (picked.size() < count) picked.insert(1 + static_cast<long>(below(static_cast<std::uint64_t>(den - 1))));
  std::vector<Rational> out;
  for (long k : picked) out.push_back(lo + (hi - lo) * ratio(k, den));
  return out;
}

std::vector<std::pair<Rational, Rational>> MapSampler::random_windows(std::size_t count) {
  auto ends = sorted_grid(2 * count, 32, 0, 1);
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(ends[2 * i], ends[2 * i + 1]);
  return out;
}

PLMap MapSampler::supported_in(const std::vector<std::pair<Rational, Rational>>& windows) {
  std::vector<Breakpoint> pts{{0, 0}};
  for (const auto& [lo, hi] : windows) {
    const std::size_t m = 1 + below(3);
    auto xs = sorted_grid(m, 16, lo, hi);
    auto ys = sorted_grid(m, 16, lo, hi);
    if (lo > pts.back().x) pts.push_back({lo, lo});
    for (std::size_t i = 0; i < m; ++i) pts.push_back({xs[i], ys[i]});
    pts.push_back({hi, hi});
  }
  if (pts.back().x < 1) pts.push_back({1, 1});
  return PLMap(Domain::Interval, std::move(pts));
}

PLMap MapSampler::interval_map() { return supported_in(random_windows(1 + below(3))); }

std::pair<PLMap, PLMap> MapSampler::disjoint_pair() {
  auto windows = random_windows(2 + below(3));
  std::vector<std::pair<Rational, Rational>> first, second;
  for (std::size_t i = 0; i < windows.size(); ++i) (i % 2 ? second : first).push_back(windows[i]);
  return {supported_in(first), supported_in(second)};
}

PLMap MapSampler::circle_map() {
  const Rational y0 = ratio(static_cast<long>(below(16)), 16);
  const std::size_t m = 1 + below(3);
  auto xs = sorted_grid(m, 16, 0, 1);
  auto ys = sorted_grid(m, 16, y0, y0 + 1);
  std::vector<Breakpoint> pts{{0, y0}};
  for (std::size_t i = 0; i < m; ++i) pts.push_back({xs[i], ys[i]});
  pts.push_back({1, y0 + 1});
  return PLMap(Domain::Circle, std::move(pts));
}

PLMap MapSampler::conjugated_rotation(unsigned max_q) {
  const long q = 1 + static_cast<long>(below(max_q));
  const long p = static_cast<long>(below(static_cast<std::uint64_t>(q)));
  return conjugate(circle_map(), PLMap::rotation(ratio(p, q)));
}

}  // namespace raag1d
