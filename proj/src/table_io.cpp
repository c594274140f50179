#include "liecheck/table_io.hpp"

namespace liecheck {

std::string serialize_table(const BracketTable& t) {
  std::string out;
  out += "table " + t.family() + "\n";
  out += "gens " + std::to_string(t.size()) + "\n";
  for (const auto& g : t.generators()) {
    out += "gen " + g.display();
    out += g.parity == Parity::odd ? " odd" : " even";
    if (g.weight) out += " weight=" + std::to_string(*g.weight);
    out += "\n";
  }
  for (const auto& [key, value] : t.entries()) {
    const auto i = BracketTable::key_i(key);
    const auto j = BracketTable::key_j(key);
    out += "bracket " + t.generator(i).display() + " ; " +
           t.generator(j).display() + " -> " + t.render(value) + "\n";
  }
  return out;
}

}  // namespace liecheck
