#include "hn/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "hn/errors.hpp"
#include "hn/lp.hpp"

namespace hn {

namespace {

std::size_t env_capacity() {
  const char* raw = std::getenv("HN_MAX_ORACLE_N");
  if (!raw || !*raw) return 0;
  char* end = nullptr;
  const unsigned long value = std::strtoul(raw, &end, 10);
  if (*end != '\0' || value == 0) return 0;
  return std::min<std::size_t>(value, kMaxCoverPlayers);
}

void require_players(const SetCoverInstance& inst, std::size_t limit, const char* what) {
  if (inst.n_players() > limit) {
    throw CapacityError(std::string(what) + " supports at most " + std::to_string(limit) + " players, got " +
                        std::to_string(inst.n_players()));
  }
}

std::size_t unhappy_capacity() {
  const std::size_t env = env_capacity();
  return env ? env : kDefaultUnhappyCapacity;
}

class CoverSearch {
 public:
  CoverSearch(const SetCoverInstance& inst, std::uint32_t target) : inst_(inst), target_(target) {
    masks_.reserve(inst.n_sets());
    for (const auto& set : inst.sets()) masks_.push_back(to_mask(set.members) & target);
  }

  CoverResult run() {
    std::vector<std::size_t> chosen;
    descend(0, Rational(0), chosen);
    if (!best_) throw InstanceError("coalition cannot be covered");
    std::sort(best_->cover.begin(), best_->cover.end());
    return *best_;
  }

 private:
  void descend(std::uint32_t covered, const Rational& cost, std::vector<std::size_t>& chosen) {
    if (best_ && cost > best_->cost) return;
    if (covered == target_) {
      auto sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      if (!best_ || cost < best_->cost || sorted < best_->cover) best_ = CoverResult{cost, std::move(sorted)};
      return;
    }
    const auto lowest = static_cast<PlayerId>(std::countr_zero(target_ & ~covered));
    for (std::size_t t : inst_.sets_containing(lowest)) {
      chosen.push_back(t);
      descend(covered | masks_[t], cost + inst_.set(t).cost, chosen);
      chosen.pop_back();
    }
  }

  const SetCoverInstance& inst_;
  std::uint32_t target_;
  std::vector<std::uint32_t> masks_;
  std::optional<CoverResult> best_;
};

bool lex_less_coalition(const Coalition& a, const Coalition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

RowSystem rows_from_table(const CoalitionTable& table) {
  RowSystem rows;
  rows.n_players = table.n_players();
  const std::uint32_t full = table.full_mask();
  rows.rows.reserve(full);
  for (std::uint32_t mask = 1; mask < full; ++mask) rows.rows.push_back({from_mask(mask), table.cost(mask)});
  return rows;
}

}  // namespace

std::size_t oracle_capacity() {
  const std::size_t env = env_capacity();
  return env ? env : kDefaultOracleCapacity;
}

std::uint32_t to_mask(const Coalition& coalition) {
  std::uint32_t mask = 0;
  for (PlayerId p : coalition) {
    if (p >= 32) throw CapacityError("bitmask coalitions hold at most 32 players");
    mask |= 1u << p;
  }
  return mask;
}

Coalition from_mask(std::uint32_t mask) {
  Coalition out;
  while (mask) {
    out.push_back(static_cast<PlayerId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

CoverResult min_cover(const SetCoverInstance& inst, const Coalition& coalition) {
  require_players(inst, kMaxCoverPlayers, "exact cover search");
  if (coalition.empty()) throw std::invalid_argument("cannot cover the empty coalition");
  for (PlayerId p : coalition) {
    if (p >= inst.n_players()) throw std::invalid_argument("coalition references unknown player");
  }
  return CoverSearch(inst, to_mask(coalition)).run();
}

CoalitionTable::CoalitionTable(const SetCoverInstance& inst) : n_(inst.n_players()) {
  require_players(inst, kMaxCoverPlayers, "coalition table");
  const std::size_t size = std::size_t{1} << n_;
  set_masks_.reserve(inst.n_sets());
  for (const auto& set : inst.sets()) set_masks_.push_back(to_mask(set.members));
  cost_.assign(size, Rational(0));
  choice_.assign(size, 0);
  std::vector<bool> reachable(size, false);
  reachable[0] = true;
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    const auto lowest = static_cast<PlayerId>(std::countr_zero(mask));
    bool found = false;
    for (std::size_t t : inst.sets_containing(lowest)) {
      const std::uint32_t rest = mask & ~set_masks_[t];
      if (!reachable[rest]) continue;
      Rational candidate = inst.set(t).cost + cost_[rest];
      if (!found || candidate < cost_[mask]) {
        cost_[mask] = std::move(candidate);
        choice_[mask] = static_cast<std::uint32_t>(t);
        found = true;
      }
    }
    reachable[mask] = found;
    if (!found) throw InstanceError("coalition " + inst.format(from_mask(mask)) + " cannot be covered");
  }
}

std::vector<std::size_t> CoalitionTable::cover(std::uint32_t mask) const {
  std::vector<std::size_t> out;
  while (mask) {
    const std::uint32_t t = choice_.at(mask);
    out.push_back(t);
    mask &= ~set_masks_[t];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational integral_cover_value(const SetCoverInstance& inst) {
  Coalition everyone(inst.n_players());
  for (PlayerId p = 0; p < inst.n_players(); ++p) everyone[p] = p;
  return min_cover(inst, everyone).cost;
}

RowSystem all_coalition_rows(const SetCoverInstance& inst) {
  require_players(inst, oracle_capacity(), "the coalition oracle");
  return rows_from_table(CoalitionTable(inst));
}

Allocation happy_nucleolus_bruteforce(const SetCoverInstance& inst) {
  auto rows = all_coalition_rows(inst);
  return lexmax(rows, lp::fractional_cover_value(inst)).allocation;
}

UnhappyResult unhappy_nucleolus_bruteforce(const SetCoverInstance& inst) {
  require_players(inst, unhappy_capacity(), "the unhappy nucleolus oracle");
  CoalitionTable table(inst);
  const RowSystem rows = rows_from_table(table);
  UnhappyResult result{lexmax(rows, table.cost(table.full_mask())).allocation, table.cost(table.full_mask()), false};
  try {
    const auto free = lexmax_unbounded(rows, result.integral_cost);
    result.nonnegativity_binding = free != result.allocation.values();
  } catch (const UnderdeterminedError&) {
    result.nonnegativity_binding = true;
  }
  return result;
}

std::vector<CoalitionExcess> excess_table(const SetCoverInstance& inst, const Allocation& y) {
  require_players(inst, oracle_capacity(), "the excess table");
  if (y.size() != inst.n_players()) throw std::invalid_argument("allocation size differs from player count");
  CoalitionTable table(inst);
  std::vector<CoalitionExcess> rows;
  rows.reserve(table.full_mask());
  for (std::uint32_t mask = 1; mask <= table.full_mask() && mask != 0; ++mask) {
    Coalition s = from_mask(mask);
    Rational excess = table.cost(mask) - y.sum(s);
    rows.push_back({std::move(s), table.cost(mask), std::move(excess)});
  }
  std::sort(rows.begin(), rows.end(),
            [](const CoalitionExcess& a, const CoalitionExcess& b) { return lex_less_coalition(a.coalition, b.coalition); });
  return rows;
}

std::vector<Rational> full_excess_vector(const SetCoverInstance& inst, const Allocation& y) {
  std::vector<Rational> out;
  for (auto& row : excess_table(inst, y)) out.push_back(std::move(row.excess));
  std::sort(out.begin(), out.end());
  return out;
}

std::string excess_table_csv(const SetCoverInstance& inst, const std::vector<CoalitionExcess>& rows) {
  std::ostringstream out;
  out << "coalition,cover_cost,excess\n";
  for (const auto& row : rows) {
    out << '"' << inst.format(row.coalition) << "\"," << to_string(row.cover_cost) << ',' << to_string(row.excess)
        << '\n';
  }
  return out.str();
}

}  // namespace hn
