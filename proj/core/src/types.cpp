#include "nfw/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nfw {

SparseVector make_sparse(int dim, std::vector<SparseEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  SparseVector v;
  v.dim = dim;
  v.entries.reserve(entries.size());
  for (const auto& e : entries) {
    if (e.index < 0 || e.index >= dim) throw std::invalid_argument("sparse index out of range");
    if (!v.entries.empty() && v.entries.back().index == e.index)
      throw std::invalid_argument("duplicate sparse index");
    if (!std::isfinite(e.value)) throw std::invalid_argument("non-finite sparse value");
    if (e.value != 0.0) v.entries.push_back(e);
  }
  return v;
}

DenseVector to_dense(const SparseVector& v) {
  DenseVector d(static_cast<std::size_t>(v.dim), 0.0);
  for (const auto& e : v.entries) d[static_cast<std::size_t>(e.index)] = e.value;
  return d;
}

double dot(const DenseVector& a, const DenseVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot: " + format_lengths(a.size(), b.size()));
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double dot(const SparseVector& a, const DenseVector& b) {
  double s = 0.0;
  for (const auto& e : a.entries) s += e.value * b[static_cast<std::size_t>(e.index)];
  return s;
}

double inf_norm(const DenseVector& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double l1_norm(const DenseVector& v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

double l2_norm(const DenseVector& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

bool all_finite(const DenseVector& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

void blend_into(DenseVector& out, const SparseVector& s, double alpha) {
  const double keep = 1.0 - alpha;
  for (double& x : out) x *= keep;
  for (const auto& e : s.entries) out[static_cast<std::size_t>(e.index)] += alpha * e.value;
}

std::string format_lengths(std::size_t got, std::size_t want) {
  return "length " + std::to_string(got) + " vs " + std::to_string(want);
}

}  // namespace nfw
