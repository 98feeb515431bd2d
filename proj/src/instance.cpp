#include "hn/instance.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hn/errors.hpp"

namespace hn {

std::string ValidationReport::summary() const {
  std::ostringstream out;
  if (ok()) {
    out << "ok";
  } else {
    out << violations.size() << " violation(s):";
    for (const auto& v : violations) out << "\n  " << v.message;
  }
  for (const auto& m : merged) {
    out << "\n  set " << m.dropped_index << " duplicates set " << m.kept_index << "; keeping cost "
        << to_string(m.surviving_cost);
  }
  return out.str();
}

ValidationReport validate_instance(const InstanceData& data) {
  ValidationReport report;
  const std::size_t n = data.players.size();
  std::vector<bool> covered(n, false);
  std::map<Coalition, std::size_t> first_seen;

  for (std::size_t i = 0; i < data.sets.size(); ++i) {
    const auto& set = data.sets[i];
    if (set.members.empty()) {
      report.violations.push_back({Violation::Kind::empty_set, i, "set " + std::to_string(i) + " is empty"});
    }
    if (set.cost < 0) {
      report.violations.push_back(
          {Violation::Kind::negative_cost, i, "set " + std::to_string(i) + " has negative cost " + to_string(set.cost)});
    }
    Coalition sorted = set.members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      report.violations.push_back(
          {Violation::Kind::duplicate_member, i, "set " + std::to_string(i) + " lists a member twice"});
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    }
    bool in_range = true;
    for (PlayerId p : sorted) {
      if (p >= n) {
        in_range = false;
        report.violations.push_back({Violation::Kind::member_out_of_range, i,
                                     "set " + std::to_string(i) + " references unknown player " + std::to_string(p)});
      } else {
        covered[p] = true;
      }
    }
    if (!in_range || sorted.empty()) continue;
    auto [it, inserted] = first_seen.emplace(sorted, i);
    if (!inserted) {
      // surviving cost is the minimum over all copies seen so far
      Rational best = data.sets[it->second].cost;
      for (const auto& m : report.merged) {
        if (m.kept_index == it->second) best = std::min(best, m.surviving_cost);
      }
      best = std::min(best, set.cost);
      report.merged.push_back({it->second, i, best});
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (!covered[p]) {
      report.violations.push_back(
          {Violation::Kind::uncovered_player, p, "player " + data.players[p] + " uncovered"});
    }
  }
  return report;
}

SetCoverInstance SetCoverInstance::build(InstanceData data) {
  auto report = validate_instance(data);
  if (!report.ok()) throw InstanceError(report.summary());

  SetCoverInstance inst;
  inst.labels_ = std::move(data.players);
  std::map<Coalition, std::size_t> position;
  for (auto& set : data.sets) {
    std::sort(set.members.begin(), set.members.end());
    auto [it, inserted] = position.emplace(set.members, inst.sets_.size());
    if (inserted) {
      inst.sets_.push_back(std::move(set));
    } else if (set.cost < inst.sets_[it->second].cost) {
      inst.sets_[it->second].cost = set.cost;
    }
  }
  inst.incidence_.assign(inst.labels_.size(), {});
  for (std::size_t i = 0; i < inst.sets_.size(); ++i) {
    for (PlayerId p : inst.sets_[i].members) inst.incidence_[p].push_back(i);
  }
  return inst;
}

SetCoverInstance SetCoverInstance::build(std::size_t n_players, std::vector<CoverSet> sets) {
  InstanceData data;
  for (std::size_t p = 0; p < n_players; ++p) data.players.push_back("p" + std::to_string(p + 1));
  data.sets = std::move(sets);
  return build(std::move(data));
}

std::size_t SetCoverInstance::find_set(const Coalition& members) const {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (sets_[i].members == members) return i;
  }
  return sets_.size();
}

std::string SetCoverInstance::format(const Coalition& coalition) const {
  std::string out = "{";
  for (std::size_t i = 0; i < coalition.size(); ++i) {
    if (i) out += ",";
    out += label(coalition[i]);
  }
  return out + "}";
}

Allocation::Allocation(std::vector<Rational> values) : values_(std::move(values)) {
  for (const auto& v : values_) {
    if (v < 0) throw std::invalid_argument("allocation entries must be nonnegative, got " + to_string(v));
  }
}

Allocation Allocation::zeros(std::size_t n) { return Allocation(std::vector<Rational>(n, Rational(0))); }

Rational Allocation::sum(const Coalition& coalition) const {
  Rational total = 0;
  for (PlayerId p : coalition) total += values_.at(p);
  return total;
}

Rational Allocation::total() const { return hn::sum(values_); }

Allocation Allocation::restricted(PlayerId first, std::size_t count) const {
  if (first + count > values_.size()) throw std::out_of_range("Allocation::restricted");
  return Allocation(std::vector<Rational>(values_.begin() + static_cast<std::ptrdiff_t>(first),
                                          values_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

Coalition make_coalition(std::vector<PlayerId> players) {
  std::sort(players.begin(), players.end());
  players.erase(std::unique(players.begin(), players.end()), players.end());
  return players;
}

bool is_subset(const Coalition& inner, const Coalition& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

void check_pair(const SetCoverInstance& inst, const SimplePair& pair) {
  if (pair.set_index >= inst.n_sets()) throw std::invalid_argument("pair references unknown set index");
  if (pair.coalition.empty()) throw std::invalid_argument("pair coalition is empty");
  if (!std::is_sorted(pair.coalition.begin(), pair.coalition.end())) {
    throw std::invalid_argument("pair coalition is not sorted");
  }
  if (!is_subset(pair.coalition, inst.set(pair.set_index).members)) {
    throw std::invalid_argument("pair coalition is not contained in its set");
  }
}

void check_pair(const SetCoverInstance& inst, const GeneralPair& pair) {
  if (pair.coalition.empty()) throw std::invalid_argument("pair coalition is empty");
  std::vector<bool> covered(inst.n_players(), false);
  for (std::size_t t : pair.cover) {
    if (t >= inst.n_sets()) throw std::invalid_argument("pair references unknown set index");
    for (PlayerId p : inst.set(t).members) covered[p] = true;
  }
  for (PlayerId p : pair.coalition) {
    if (p >= inst.n_players()) throw std::invalid_argument("pair references unknown player");
    if (!covered[p]) throw std::invalid_argument("cover does not contain player " + inst.label(p));
  }
}

Rational pair_excess(const SetCoverInstance& inst, const Allocation& y, const GeneralPair& pair) {
  check_pair(inst, pair);
  if (y.size() != inst.n_players()) throw std::invalid_argument("allocation size mismatch");
  Rational cost = 0;
  for (std::size_t t : pair.cover) cost += inst.set(t).cost;
  return cost - y.sum(pair.coalition);
}

Rational pair_excess(const SetCoverInstance& inst, const Allocation& y, const SimplePair& pair) {
  check_pair(inst, pair);
  if (y.size() != inst.n_players()) throw std::invalid_argument("allocation size mismatch");
  return inst.set(pair.set_index).cost - y.sum(pair.coalition);
}

bool group_rationality_on_sets(const SetCoverInstance& inst, const Allocation& y) {
  if (y.size() != inst.n_players()) throw std::invalid_argument("allocation size mismatch");
  return std::all_of(inst.sets().begin(), inst.sets().end(),
                     [&](const CoverSet& t) { return y.sum(t.members) <= t.cost; });
}

SetCoverInstance disjoint_union(const SetCoverInstance& first, const SetCoverInstance& second) {
  InstanceData data;
  const std::size_t offset = first.n_players();
  for (const auto& label : first.labels()) data.players.push_back(label);
  for (const auto& label : second.labels()) {
    std::string candidate = label;
    // keep labels unique so the JSON form stays readable
    while (std::find(data.players.begin(), data.players.end(), candidate) != data.players.end()) candidate += "'";
    data.players.push_back(candidate);
  }
  data.sets = first.sets();
  for (auto set : second.sets()) {
    for (auto& p : set.members) p += offset;
    data.sets.push_back(std::move(set));
  }
  return SetCoverInstance::build(std::move(data));
}

}  // namespace hn
