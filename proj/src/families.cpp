#include "hn/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hn/errors.hpp"
#include "hn/oracle.hpp"
#include "hn/random.hpp"

namespace hn {

std::string to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::c_star: return "c_star";
    case Provenance::c_star_star: return "c_star_star";
    case Provenance::c_simple: return "c_simple";
    case Provenance::c_simple_sampled: return "c_simple_sampled";
    case Provenance::custom: return "custom";
  }
  return "custom";
}

bool PairFamily::contains(const SimplePair& pair) const {
  return std::find(pairs.begin(), pairs.end(), pair) != pairs.end();
}

PairFamily build_c_star(const SetCoverInstance& inst) {
  PairFamily family{{}, Provenance::c_star};
  const std::size_t n = inst.n_players();
  for (std::size_t t = 0; t < inst.n_sets(); ++t) {
    const auto& members = inst.set(t).members;
    if (members.size() != n) family.pairs.push_back({members, t});
    if (members.size() < 2) continue;  // removing the only member leaves the empty coalition
    for (std::size_t skip = 0; skip < members.size(); ++skip) {
      Coalition s;
      s.reserve(members.size() - 1);
      for (std::size_t k = 0; k < members.size(); ++k) {
        if (k != skip) s.push_back(members[k]);
      }
      family.pairs.push_back({std::move(s), t});
    }
  }
  return family;
}

PairFamily build_c_star_star(const SetCoverInstance& inst) {
  if (inst.n_players() > kMaxCoverPlayers) {
    throw CapacityError("exact cover search supports at most " + std::to_string(kMaxCoverPlayers) + " players");
  }
  PairFamily star = build_c_star(inst);
  PairFamily family{{}, Provenance::c_star_star};
  std::map<Coalition, Rational> best;
  for (auto& pair : star.pairs) {
    auto it = best.find(pair.coalition);
    if (it == best.end()) it = best.emplace(pair.coalition, min_cover(inst, pair.coalition).cost).first;
    if (inst.set(pair.set_index).cost == it->second) family.pairs.push_back(std::move(pair));
  }
  return family;
}

PairFamily build_c_simple(const SetCoverInstance& inst) {
  PairFamily family{{}, Provenance::c_simple};
  for (std::size_t t = 0; t < inst.n_sets(); ++t) {
    const auto& members = inst.set(t).members;
    if (members.size() > kMaxCoverPlayers) {
      throw CapacityError("set " + std::to_string(t) + " is too large to enumerate its subsets");
    }
    const std::uint32_t full = (1u << members.size()) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      Coalition s;
      for (std::size_t k = 0; k < members.size(); ++k) {
        if (mask & (1u << k)) s.push_back(members[k]);
      }
      family.pairs.push_back({std::move(s), t});
    }
  }
  return family;
}

PairFamily sample_simple_pairs(const SetCoverInstance& inst, std::size_t count, std::uint64_t seed) {
  PairFamily family{{}, Provenance::c_simple_sampled};
  if (count == 0 || inst.n_sets() == 0) return family;
  Rng rng(seed);
  std::set<SimplePair> seen;
  // bounded number of draws so that small instances with few distinct pairs terminate
  const std::size_t max_draws = 64 * count + 64;
  for (std::size_t draw = 0; draw < max_draws && family.size() < count; ++draw) {
    const std::size_t t = rng.uniform(0, inst.n_sets() - 1);
    const auto& members = inst.set(t).members;
    Coalition s;
    while (s.empty()) {
      for (PlayerId p : members) {
        if (rng.coin()) s.push_back(p);
      }
    }
    SimplePair pair{std::move(s), t};
    if (seen.insert(pair).second) family.pairs.push_back(std::move(pair));
  }
  return family;
}

PairFamily merged(const PairFamily& base, const PairFamily& extra) {
  PairFamily out = base;
  std::set<SimplePair> seen(base.pairs.begin(), base.pairs.end());
  for (const auto& pair : extra.pairs) {
    if (seen.insert(pair).second) out.pairs.push_back(pair);
  }
  if (out.size() != base.size()) out.provenance = Provenance::custom;
  return out;
}

PairFamily without(const PairFamily& family, const SimplePair& pair) {
  PairFamily out{{}, Provenance::custom};
  for (const auto& p : family.pairs) {
    if (!(p == pair)) out.pairs.push_back(p);
  }
  return out;
}

void check_family(const SetCoverInstance& inst, const PairFamily& family) {
  std::set<SimplePair> seen;
  for (const auto& pair : family.pairs) {
    check_pair(inst, pair);
    if (!seen.insert(pair).second) throw std::invalid_argument("family repeats a pair");
  }
}

}  // namespace hn
