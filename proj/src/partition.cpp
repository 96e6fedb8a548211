#include "polyexp/partition.hpp"

#include <stdexcept>

namespace polyexp {

Int PartitionTable::operator()(const RootVector& gamma) const {
  if (!gamma.is_nonnegative()) return 0;
  if (gamma.height() > height_bound)
    throw std::out_of_range("partition table queried at height " + std::to_string(gamma.height()) +
                            " above its bound " + std::to_string(height_bound));
  auto it = values.find(gamma);
  return it == values.end() ? 0 : it->second;
}

Int FTable::operator()(const RootVector& beta) const {
  if (!beta.is_nonnegative()) return 0;
  if (beta.height() > height_bound)
    throw std::out_of_range("F table queried above its height bound");
  auto it = values.find(beta);
  return it == values.end() ? 0 : it->second;
}

PartitionTable kostant_table(const RootSystemData& rs, const std::vector<RootVector>& subset,
                             Int height_bound) {
  if (height_bound < 0) throw std::invalid_argument("negative height bound");
  for (const auto& u : subset)
    if (!rs.is_positive_root(u))
      throw std::invalid_argument("partition subset contains " + u.str() + ", not a positive root");

  PartitionTable t{subset, height_bound, {}};
  t.values.emplace(RootVector(rs.rank()), 1);
  // Multiply by the geometric series 1/(1 - e^u) one root at a time.
  for (const auto& u : subset) {
    const Int hu = u.height();
    std::map<RootVector, Int> next;
    for (const auto& [gamma, v] : t.values) {
      RootVector g = gamma;
      for (Int h = gamma.height(); h <= height_bound; h += hu) {
        auto& slot = next[g];
        slot = checked_add(slot, v);
        g += u;
      }
    }
    t.values = std::move(next);
  }
  return t;
}

PartitionTable kostant_table(const RootSystemData& rs, Int height_bound) {
  return kostant_table(rs, rs.positive_roots(), height_bound);
}

std::vector<RootVector> non_simple_positive_roots(const RootSystemData& rs) {
  std::vector<RootVector> out;
  for (const auto& a : rs.positive_roots())
    if (a.height() > 1) out.push_back(a);
  return out;
}

FTable f_table(const RootSystemData& rs, Int height_bound) {
  if (height_bound < 0) throw std::invalid_argument("negative height bound");
  FTable t{height_bound, {}};
  t.values.emplace(RootVector(rs.rank()), 1);
  for (const auto& gamma : non_simple_positive_roots(rs)) {
    std::map<RootVector, Int> next = t.values;
    for (const auto& [beta, v] : t.values) {
      if (beta.height() + gamma.height() > height_bound) continue;
      auto& slot = next[beta + gamma];
      slot = checked_sub(slot, v);
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    t.values = std::move(next);
  }
  return t;
}

FTable f_table(const RootSystemData& rs) {
  Int total = 0;
  for (const auto& gamma : non_simple_positive_roots(rs)) total = checked_add(total, gamma.height());
  return f_table(rs, total);
}

}  // namespace polyexp
