#include <algorithm>
#include <cmath>
#include <vector>

#include "commbench/error.hpp"
#include "commbench/metrics.hpp"

namespace commbench {

ConfusionMatrix confusion(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw DataError("partitions cover different node sets (" + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()) + " nodes)");
  }
  ConfusionMatrix out;
  std::vector<Eigen::Triplet<std::int64_t>> entries;
  entries.reserve(static_cast<std::size_t>(a.size()));
  out.row_sums = ConfusionMatrix::Sums::Zero(a.num_communities());
  out.col_sums = ConfusionMatrix::Sums::Zero(b.num_communities());
  for (NodeId u = 0; u < a.size(); ++u) {
    entries.emplace_back(a[u], b[u], 1);
    ++out.row_sums[a[u]];
    ++out.col_sums[b[u]];
  }
  out.counts.resize(a.num_communities(), b.num_communities());
  out.counts.setFromTriplets(entries.begin(), entries.end());
  out.total = a.size();
  return out;
}

double nmi(const Partition& a, const Partition& b) {
  const ConfusionMatrix c = confusion(a, b);
  if (a == b) return 1.0;
  const double n = static_cast<double>(c.total);

  double numerator = 0.0;
  for (Eigen::Index j = 0; j < c.counts.outerSize(); ++j) {
    for (ConfusionMatrix::Counts::InnerIterator it(c.counts, j); it; ++it) {
      const double nij = static_cast<double>(it.value());
      const double ni = static_cast<double>(c.row_sums[it.row()]);
      const double nj = static_cast<double>(c.col_sums[it.col()]);
      numerator += nij * std::log(nij * n / (ni * nj));
    }
  }
  numerator *= -2.0;

  auto entropy_term = [n](const ConfusionMatrix::Sums& sums) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < sums.size(); ++i) {
      if (sums[i] > 0) s += sums[i] * std::log(sums[i] / n);
    }
    return s;
  };
  const double denominator = entropy_term(c.row_sums) + entropy_term(c.col_sums);
  // Both single-cluster: identical, handled above.
  if (denominator == 0.0) return 0.0;
  return std::clamp(numerator / denominator, 0.0, 1.0);
}

}  // namespace commbench
