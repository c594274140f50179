#include "liecheck/contract.hpp"

#include <utility>
#include <vector>

namespace liecheck {

BracketTable rescale_table(const BracketTable& t, const ContractionSpec& spec) {
  std::vector<int> w(t.size());
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    const std::string d = t.generator(i).display();
    auto it = spec.weight_u.find(d);
    if (it == spec.weight_u.end())
      throw MissingWeight("rescale_table: no weight for generator " + d +
                          (spec.label.empty() ? "" : " in spec " + spec.label));
    w[i] = it->second;
  }
  BracketTable out = t;
  for (std::uint32_t i = 0; i < t.size(); ++i)
    out.generator_mut(i).weight = w[i];
  for (const auto& [key, val] : t.entries()) {
    const std::uint32_t i = BracketTable::key_i(key);
    const std::uint32_t j = BracketTable::key_j(key);
    LinComb nv;
    for (const auto& [g, c] : val.terms())
      nv.add(g, c.u_shift(w[i] + w[j] - w[g]));
    out.set_bracket(i, j, std::move(nv));
  }
  out.finalize();
  return out;
}

ContractionOutcome contract_limit(const BracketTable& t_param) {
  ContractionOutcome out;
  out.table = t_param;
  for (const auto& [key, val] : t_param.entries()) {
    const std::uint32_t i = BracketTable::key_i(key);
    const std::uint32_t j = BracketTable::key_j(key);
    LinComb keep;
    for (const auto& [g, c] : val.terms()) {
      const Scalar pos = c.part_upow_positive();
      const Scalar zer = c.part_upow_zero();
      const Scalar neg = c.part_upow_negative();
      if (!pos.is_zero()) {
        out.offenders.push_back({t_param.generator(i).display(),
                                 t_param.generator(j).display(),
                                 t_param.generator(g).display(),
                                 pos.max_upow()});
        out.valid = false;
      }
      if (!neg.is_zero())
        out.dropped.push_back({t_param.generator(i).display(),
                               t_param.generator(j).display(),
                               t_param.generator(g).display(), neg.max_upow()});
      if (!zer.is_zero()) keep.add(g, zer);
    }
    out.table.set_bracket(i, j, std::move(keep));
  }
  out.table.finalize();
  return out;
}

}  // namespace liecheck
