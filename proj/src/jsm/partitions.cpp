#include "jointspec/jsm/partitions.hpp"

namespace jointspec::jsm {

std::vector<SetPartition> set_partitions(std::span<const int> ground) {
  std::vector<SetPartition> out;
  const std::size_t n = ground.size();
  if (n == 0) {
    out.push_back({});
    return out;
  }
  // growth[i] = block of element i; growth[0] = 0 and growth[i] <= 1 + max(growth[0..i-1]).
  std::vector<std::size_t> growth(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    SetPartition pi;
    pi.blocks.resize(prefix_max[n - 1] + 1);
    for (std::size_t i = 0; i < n; ++i) pi.blocks[growth[i]].push_back(ground[i]);
    out.push_back(std::move(pi));

    std::size_t i = n - 1;
    while (i > 0 && growth[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++growth[i];
    prefix_max[i] = std::max(prefix_max[i - 1], growth[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      growth[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

}  // namespace jointspec::jsm
