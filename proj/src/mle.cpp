#include "modnet/mle.hpp"

#include <stdexcept>

#include "modnet/kernels.hpp"

namespace modnet {

double mle_point(const ClusterScore& s, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != s.n()) throw std::invalid_argument("mle_point: size mismatch");
  for (double xi : x)
    if (xi < 0.0 || xi > 1.0) throw std::out_of_range("mle_point: coordinate outside [0,1]");
  int n = s.n();
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += x[static_cast<std::size_t>(i)] * s.mu1(i);
  for (int i = 0; i < n; ++i) {
    double xi = x[static_cast<std::size_t>(i)];
    if (xi == 0.0) continue;
    for (int j = i + 1; j < n; ++j) {
      double xj = x[static_cast<std::size_t>(j)];
      if (xj != 0.0) sum += xi * xj * s.mu2(i, j);
    }
  }
  if (s.degree() == 3)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          double p = x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)] *
                     x[static_cast<std::size_t>(k)];
          if (p != 0.0) sum += p * s.mu3(i, j, k);
        }
  return sum;
}

double mle_on_entry(const ClusterScore& s, const SupportEntry& entry) {
  double sum = 0.0;
  for (const auto& [i, m] : entry) sum += m * s.mu1(i);
  for (std::size_t x = 0; x < entry.size(); ++x)
    for (std::size_t y = x + 1; y < entry.size(); ++y)
      sum += entry[x].second * entry[y].second * s.mu2(entry[x].first, entry[y].first);
  if (s.degree() == 3)
    for (std::size_t x = 0; x < entry.size(); ++x)
      for (std::size_t y = x + 1; y < entry.size(); ++y)
        for (std::size_t z = y + 1; z < entry.size(); ++z)
          sum += entry[x].second * entry[y].second * entry[z].second *
                 s.mu3(entry[x].first, entry[y].first, entry[z].first);
  return sum;
}

double big_f(const ClusterScore& s, const FuzzyCover& q) {
  if (s.n() != q.n()) throw std::invalid_argument("big_f: size mismatch");
  SupportMap sup = q.support();
  std::vector<const SupportEntry*> entries;
  entries.reserve(sup.size());
  for (const auto& [a, entry] : sup) entries.push_back(&entry);
  return kernels::support_sum(s, entries);
}

double big_f_pairwise(const ClusterScore& s, const FuzzyCover& q) {
  if (s.n() != q.n()) throw std::invalid_argument("big_f_pairwise: size mismatch");
  if (s.degree() > 2)
    throw std::invalid_argument("big_f_pairwise: defined for quadratic scores");
  double sum = 0.0;
  for (int i = 0; i < s.n(); ++i) sum += s.mu1(i);
  for (const auto& [a, entry] : q.support())
    for (std::size_t x = 0; x < entry.size(); ++x)
      for (std::size_t y = x + 1; y < entry.size(); ++y)
        sum += entry[x].second * entry[y].second * s.mu2(entry[x].first, entry[y].first);
  return sum;
}

double conditional_on_entry(const ClusterScore& s, int i, const NodeSet& a,
                            const SupportEntry& entry) {
  double sum = s.mu1(i);
  for (const auto& [j, m] : entry)
    if (j != i) sum += m * s.mu2(i, j);
  if (s.degree() == 3)
    for (std::size_t x = 0; x < entry.size(); ++x) {
      if (entry[x].first == i) continue;
      for (std::size_t y = x + 1; y < entry.size(); ++y) {
        if (entry[y].first == i) continue;
        sum += entry[x].second * entry[y].second * s.mu3(i, entry[x].first, entry[y].first);
      }
    }
  (void)a;
  return sum;
}

double conditional_score(const ClusterScore& s, const FuzzyCover& q, int i, const NodeSet& a) {
  if (!a.contains(i)) throw std::invalid_argument("conditional_score: i not in A");
  if (a.back() >= s.n()) throw std::out_of_range("conditional_score: member out of range");
  SupportEntry entry;
  a.for_each([&](int j) {
    double m = q.dist(j).mass_on(a);
    if (m > 0.0) entry.emplace_back(j, m);
  });
  return conditional_on_entry(s, i, a, entry);
}

double derivative_iA(const ClusterScore& s, const FuzzyCover& q, int i, const NodeSet& a) {
  return conditional_score(s, q, i, a);
}

double average_derivative_on_entry(const ClusterScore& s, const NodeSet& a,
                                   const SupportEntry& entry) {
  double sum = 0.0;
  a.for_each([&](int i) { sum += conditional_on_entry(s, i, a, entry); });
  return sum / a.size();
}

double average_derivative(const ClusterScore& s, const FuzzyCover& q, const NodeSet& a) {
  if (a.empty()) throw std::invalid_argument("average_derivative: empty subset");
  if (a.back() >= s.n()) throw std::out_of_range("average_derivative: member out of range");
  SupportEntry entry;
  a.for_each([&](int j) {
    double m = q.dist(j).mass_on(a);
    if (m > 0.0) entry.emplace_back(j, m);
  });
  return average_derivative_on_entry(s, a, entry);
}

}  // namespace modnet
