#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nfw {

using DenseVector = std::vector<double>;

struct SparseEntry {
  int index = 0;
  double value = 0.0;
};

// Sparse vector with strictly increasing indices and nonzero values.
struct SparseVector {
  int dim = 0;
  std::vector<SparseEntry> entries;

  std::vector<int> support() const {
    std::vector<int> s;
    s.reserve(entries.size());
    for (const auto& e : entries) s.push_back(e.index);
    return s;
  }
};

SparseVector make_sparse(int dim, std::vector<SparseEntry> entries);
DenseVector to_dense(const SparseVector& v);

double dot(const DenseVector& a, const DenseVector& b);
double dot(const SparseVector& a, const DenseVector& b);
double inf_norm(const DenseVector& v);
double l1_norm(const DenseVector& v);
double l2_norm(const DenseVector& v);
bool all_finite(const DenseVector& v);

// out = (1 - alpha) * out + alpha * s, with s sparse.
void blend_into(DenseVector& out, const SparseVector& s, double alpha);

std::string format_lengths(std::size_t got, std::size_t want);

}  // namespace nfw
