#include "liecheck/bracket_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace liecheck {

// ------------------------------------------------------------------ LinComb

void LinComb::add(std::uint32_t gen, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto it = std::lower_bound(
      t_.begin(), t_.end(), gen,
      [](const auto& entry, std::uint32_t g) { return entry.first < g; });
  if (it != t_.end() && it->first == gen) {
    it->second += coeff;
    if (it->second.is_zero()) t_.erase(it);
  } else {
    t_.insert(it, {gen, coeff});
  }
}

LinComb LinComb::operator-() const {
  LinComb out;
  out.t_.reserve(t_.size());
  for (const auto& [g, c] : t_) out.t_.push_back({g, -c});
  return out;
}

LinComb operator+(const LinComb& a, const LinComb& b) {
  LinComb out = a;
  out += b;
  return out;
}

LinComb operator-(const LinComb& a, const LinComb& b) { return a + (-b); }

LinComb& LinComb::operator+=(const LinComb& o) {
  for (const auto& [g, c] : o.t_) add(g, c);
  return *this;
}

LinComb LinComb::scaled(const Scalar& s) const {
  if (s.is_zero()) return LinComb();
  LinComb out;
  for (const auto& [g, c] : t_) out.add(g, c * s);
  return out;
}

// ------------------------------------------------------------- BracketTable

std::uint32_t BracketTable::add_generator(Generator g) {
  std::string d = g.display();
  if (index_.count(d))
    throw std::invalid_argument("duplicate generator: " + d);
  gens_.push_back(std::move(g));
  std::uint32_t id = static_cast<std::uint32_t>(gens_.size() - 1);
  index_[d] = id;
  return id;
}

std::uint32_t BracketTable::index_of(const std::string& display) const {
  auto it = index_.find(display);
  if (it == index_.end())
    throw unknown_generator_error("unknown generator '" + display +
                                  "' in table " + family_);
  return it->second;
}

std::optional<std::uint32_t> BracketTable::find_index(
    const std::string& display) const {
  auto it = index_.find(display);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void BracketTable::set_bracket(std::uint32_t i, std::uint32_t j, LinComb value) {
  if (i >= gens_.size() || j >= gens_.size())
    throw unknown_generator_error("generator id out of range");
  if (i > j) {
    // [g_i,g_j} = -(-1)^{p_i p_j}[g_j,g_i}
    bool both_odd = is_odd(i) && is_odd(j);
    std::swap(i, j);
    if (!both_odd) value = -value;
  }
  if (value.is_zero())
    entries_.erase(key(i, j));
  else
    entries_[key(i, j)] = std::move(value);
}

void BracketTable::add_term(std::uint32_t i, std::uint32_t j, std::uint32_t k,
                            const Scalar& coeff) {
  if (i >= gens_.size() || j >= gens_.size() || k >= gens_.size())
    throw unknown_generator_error("generator id out of range");
  if (coeff.is_zero()) return;
  Scalar c = coeff;
  if (i > j) {
    bool both_odd = is_odd(i) && is_odd(j);
    std::swap(i, j);
    if (!both_odd) c = -c;
  }
  entries_[key(i, j)].add(k, c);
}

LinComb BracketTable::bracket(std::uint32_t i, std::uint32_t j) const {
  bool swapped = i > j;
  if (swapped) std::swap(i, j);
  auto it = entries_.find(key(i, j));
  if (it == entries_.end()) return LinComb();
  if (!swapped) return it->second;
  bool both_odd = is_odd(i) && is_odd(j);
  return both_odd ? it->second : -it->second;
}

LinComb BracketTable::bracket(const LinComb& a, const LinComb& b) const {
  LinComb acc;
  for (const auto& [ga, ca] : a.terms()) {
    for (const auto& [gb, cb] : b.terms()) {
      std::uint32_t i = ga, j = gb;
      bool swapped = i > j;
      if (swapped) std::swap(i, j);
      auto it = entries_.find(key(i, j));
      if (it == entries_.end()) continue;
      Scalar f = ca * cb;
      if (swapped && !(is_odd(i) && is_odd(j))) f = -f;
      for (const auto& [gk, ck] : it->second.terms()) acc.add(gk, ck * f);
    }
  }
  return acc;
}

void BracketTable::finalize() {
  for (auto it = entries_.begin(); it != entries_.end();) {
    std::uint32_t i = key_i(it->first), j = key_j(it->first);
    if (i == j && !is_odd(i) && !it->second.is_zero())
      throw std::logic_error("nonzero bracket of an even generator with itself: " +
                             gens_[i].display());
    for (const auto& [g, c] : it->second.terms()) {
      (void)c;
      if (g >= gens_.size())
        throw unknown_generator_error("entry references missing generator id");
    }
    if (it->second.is_zero())
      it = entries_.erase(it);
    else
      ++it;
  }
}

BracketTable BracketTable::substituted(const std::map<Param, Scalar>& values) const {
  BracketTable out = *this;
  for (auto& [k, v] : out.entries_) {
    (void)k;
    v = v.map_coeffs([&](const Scalar& c) { return c.substitute(values); });
  }
  out.finalize();
  return out;
}

std::string BracketTable::render(const LinComb& l) const {
  if (l.is_zero()) return "0";
  std::string out;
  for (const auto& [g, c] : l.terms()) {
    if (!out.empty()) out += " + ";
    // single-term scalars are already parenthesized by Scalar::to_string
    std::string cs = c.to_string();
    if (c.terms().size() > 1) cs = "(" + cs + ")";
    out += cs + "*" + gens_.at(g).display();
  }
  return out;
}

// -------------------------------------------------------------- change_basis

ChangeBasisResult change_basis(const BracketTable& t,
                               const std::vector<Generator>& new_gens,
                               const std::vector<LinComb>& old_in_new) {
  const std::size_t n = t.size();
  if (new_gens.size() != n || old_in_new.size() != n)
    throw std::invalid_argument("change_basis requires a square map");

  BMat m(n, BVec(n));  // row i: old_i over new basis
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [a, c] : old_in_new[i].terms()) {
      auto b = c.as_base();
      if (!b)
        throw std::invalid_argument(
            "change_basis coefficients must be parameter- and u-free");
      if (t.generator(static_cast<std::uint32_t>(i)).parity !=
          new_gens.at(a).parity)
        throw parity_violation_error(
            "basis change mixes parities: " +
            t.generator(static_cast<std::uint32_t>(i)).display() + " -> " +
            new_gens.at(a).display());
      m[i][a] = *b;
    }
  }

  auto minv = invert(m);
  if (!minv)
    throw singular_map_error("change_basis map is singular for table " +
                             t.family());

  BracketTable out(t.family());
  for (const auto& g : new_gens) out.add_generator(g);

  // new_a = sum_i minv[a][i] old_i
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a; b < n; ++b) {
      LinComb in_old;  // [new_a, new_b} expressed over the old basis
      for (std::size_t i = 0; i < n; ++i) {
        if ((*minv)[a][i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if ((*minv)[b][j].is_zero()) continue;
          LinComb br = t.bracket(static_cast<std::uint32_t>(i),
                                 static_cast<std::uint32_t>(j));
          if (br.is_zero()) continue;
          in_old += br.scaled(Scalar((*minv)[a][i] * (*minv)[b][j]));
        }
      }
      if (in_old.is_zero()) continue;
      LinComb in_new;
      for (const auto& [k, c] : in_old.terms())
        for (std::size_t l = 0; l < n; ++l)
          if (!m[k][l].is_zero())
            in_new.add(static_cast<std::uint32_t>(l), c * Scalar(m[k][l]));
      out.set_bracket(a, b, std::move(in_new));
    }
  }
  out.finalize();
  return ChangeBasisResult{std::move(out), std::move(m), std::move(*minv)};
}

StarStructure change_basis_star(const StarStructure& star,
                                const ChangeBasisResult& cb) {
  const std::size_t n = cb.old_to_new.size();
  StarStructure out;
  out.image.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    // star(new_a) = sum_i conj(new_to_old[a][i]) star(old_i), mapped to new.
    LinComb in_old;
    for (std::size_t i = 0; i < n; ++i) {
      const BaseNumber& c = cb.new_to_old[a][i];
      if (c.is_zero()) continue;
      in_old += star.image.at(i).scaled(Scalar(c.conjugate()));
    }
    LinComb in_new;
    for (const auto& [k, c] : in_old.terms())
      for (std::size_t l = 0; l < n; ++l)
        if (!cb.old_to_new[k][l].is_zero())
          in_new.add(static_cast<std::uint32_t>(l),
                     c * Scalar(cb.old_to_new[k][l]));
    out.image[a] = std::move(in_new);
  }
  return out;
}

// ---------------------------------------------------------------- direct_sum

BracketTable direct_sum(const BracketTable& a, const BracketTable& b,
                        const std::string& suffix_a, const std::string& suffix_b) {
  BracketTable out(a.family() + suffix_a + b.family() + suffix_b);
  for (const auto& g : a.generators()) {
    Generator h = g;
    h.name += suffix_a;
    out.add_generator(h);
  }
  const std::uint32_t off = static_cast<std::uint32_t>(a.size());
  for (const auto& g : b.generators()) {
    Generator h = g;
    h.name += suffix_b;
    out.add_generator(h);
  }
  for (const auto& [k, v] : a.entries())
    out.set_bracket(BracketTable::key_i(k), BracketTable::key_j(k), v);
  for (const auto& [k, v] : b.entries()) {
    LinComb shifted;
    for (const auto& [g, c] : v.terms()) shifted.add(g + off, c);
    out.set_bracket(BracketTable::key_i(k) + off, BracketTable::key_j(k) + off,
                    std::move(shifted));
  }
  out.finalize();
  return out;
}

// ------------------------------------------------------------------ subtable

BracketTable subtable(const BracketTable& t,
                      const std::vector<std::uint32_t>& keep) {
  std::map<std::uint32_t, std::uint32_t> remap;
  BracketTable out(t.family() + ":sub");
  for (auto i : keep) remap[i] = out.add_generator(t.generator(i));
  for (std::size_t x = 0; x < keep.size(); ++x) {
    for (std::size_t y = x; y < keep.size(); ++y) {
      LinComb v = t.bracket(keep[x], keep[y]);
      if (v.is_zero()) continue;
      LinComb mapped;
      for (const auto& [g, c] : v.terms()) {
        auto it = remap.find(g);
        if (it == remap.end())
          throw std::invalid_argument(
              "subtable is not closed: [" + t.generator(keep[x]).display() +
              ", " + t.generator(keep[y]).display() + "} hits " +
              t.generator(g).display());
        mapped.add(it->second, c);
      }
      out.set_bracket(remap[keep[x]], remap[keep[y]], std::move(mapped));
    }
  }
  out.finalize();
  return out;
}

// --------------------------------------------------------- rename_generators

BracketTable rename_generators(
    const BracketTable& t, const std::map<std::string, Generator>& new_identity) {
  BracketTable out(t.family());
  for (const auto& g : t.generators()) {
    auto it = new_identity.find(g.display());
    if (it == new_identity.end()) {
      out.add_generator(g);
    } else {
      Generator h = it->second;
      h.parity = g.parity;  // renames never change the grading
      if (!h.weight) h.weight = g.weight;
      out.add_generator(h);
    }
  }
  for (const auto& [k, v] : t.entries())
    out.set_bracket(BracketTable::key_i(k), BracketTable::key_j(k), v);
  out.finalize();
  return out;
}

}  // namespace liecheck
