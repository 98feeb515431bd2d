#include "hn/generators.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "hn/errors.hpp"
#include "hn/random.hpp"

namespace hn {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Row/column 0 is the depot, customer i sits at i + 1.
Matrix euclidean_matrix(const VrpSpec& spec) {
  std::vector<VrpSpec::Point> points{spec.depot_point};
  points.insert(points.end(), spec.coords.begin(), spec.coords.end());
  Matrix dist(points.size(), std::vector<Rational>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Rational dx = points[i].x - points[j].x;
      const Rational dy = points[i].y - points[j].y;
      dist[i][j] = dist[j][i] = rounded_sqrt(dx * dx + dy * dy, spec.round_denom);
    }
  }
  return dist;
}

Matrix graph_matrix(const VrpSpec& spec) {
  std::map<std::string, std::size_t> index;
  auto vertex = [&](const std::string& name) {
    return index.emplace(name, index.size()).first->second;
  };
  vertex(spec.depot_vertex);
  for (const auto& c : spec.customers) {
    if (c == spec.depot_vertex) throw InstanceError("customer '" + c + "' coincides with the depot");
    vertex(c);
  }
  for (const auto& e : spec.edges) {
    if (e.weight < 0) throw InstanceError("edge " + e.from + "-" + e.to + " has negative weight");
    vertex(e.from);
    vertex(e.to);
  }

  const std::size_t v = index.size();
  std::vector<std::vector<std::optional<Rational>>> d(v, std::vector<std::optional<Rational>>(v));
  for (std::size_t i = 0; i < v; ++i) d[i][i] = Rational(0);
  for (const auto& e : spec.edges) {
    const std::size_t a = index.at(e.from), b = index.at(e.to);
    if (!d[a][b] || e.weight < *d[a][b]) d[a][b] = d[b][a] = e.weight;
  }
  for (std::size_t k = 0; k < v; ++k) {
    for (std::size_t i = 0; i < v; ++i) {
      if (!d[i][k]) continue;
      for (std::size_t j = 0; j < v; ++j) {
        if (!d[k][j]) continue;
        Rational through = *d[i][k] + *d[k][j];
        if (!d[i][j] || through < *d[i][j]) d[i][j] = std::move(through);
      }
    }
  }

  const std::size_t n = spec.customers.size();
  Matrix dist(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      // vertices 0..n were registered first, so index order matches matrix order
      if (!d[i][j]) throw InstanceError("customer graph is disconnected");
      dist[i][j] = *d[i][j];
    }
  }
  return dist;
}

std::vector<Coalition> subsets_up_to(std::size_t n, std::size_t max_size) {
  std::vector<Coalition> out;
  Coalition current;
  auto extend = [&](auto&& self, std::size_t next) -> void {
    if (!current.empty()) out.push_back(current);
    if (current.size() == max_size) return;
    for (std::size_t p = next; p < n; ++p) {
      current.push_back(p);
      self(self, p + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  std::stable_sort(out.begin(), out.end(),
                   [](const Coalition& a, const Coalition& b) { return a.size() < b.size(); });
  return out;
}

}  // namespace

Rational tour_cost(const Matrix& dist, const std::vector<std::size_t>& members) {
  if (members.empty()) return 0;
  std::vector<std::size_t> order(members.begin(), members.end());
  std::sort(order.begin(), order.end());
  std::optional<Rational> best;
  do {
    // each cycle is seen in both directions; keep only one of them
    if (order.size() > 2 && order.front() > order.back()) continue;
    Rational length = dist[0][order.front()] + dist[order.back()][0];
    for (std::size_t k = 1; k < order.size(); ++k) length += dist[order[k - 1]][order[k]];
    if (!best || length < *best) best = std::move(length);
  } while (std::next_permutation(order.begin(), order.end()));
  return *best;
}

SetCoverInstance vrp_to_setcover(const VrpSpec& spec) {
  const std::size_t n = spec.customers.size();
  if (n == 0) throw InstanceError("no customers");
  if (n > kMaxVrpCustomers) {
    throw CapacityError("at most " + std::to_string(kMaxVrpCustomers) + " customers, got " + std::to_string(n));
  }
  if (spec.capacity && *spec.capacity == 0) throw InstanceError("capacity must be at least 1");
  if (spec.round_denom < 1) throw InstanceError("rounding denominator must be at least 1");
  const std::size_t longest = std::min(n, spec.capacity.value_or(n));
  if (longest > kMaxTourLength) {
    throw CapacityError("tours visit at most " + std::to_string(kMaxTourLength) + " customers, got " +
                        std::to_string(longest));
  }

  Matrix dist;
  if (spec.mode == VrpSpec::Mode::coords) {
    if (spec.coords.size() != n) throw InstanceError("need one coordinate pair per customer");
    dist = euclidean_matrix(spec);
  } else {
    dist = graph_matrix(spec);
  }

  InstanceData data;
  data.players = spec.customers;
  for (auto& s : subsets_up_to(n, longest)) {
    std::vector<std::size_t> rows(s.size());
    std::transform(s.begin(), s.end(), rows.begin(), [](PlayerId p) { return p + 1; });
    data.sets.push_back({std::move(s), tour_cost(dist, rows)});
  }
  for (const auto& [label, penalty] : spec.penalties) {
    auto it = std::find(spec.customers.begin(), spec.customers.end(), label);
    if (it == spec.customers.end()) throw InstanceError("penalty for unknown customer '" + label + "'");
    if (penalty < 0) throw InstanceError("negative penalty for '" + label + "'");
    data.sets.push_back({{static_cast<PlayerId>(it - spec.customers.begin())}, penalty});
  }
  return SetCoverInstance::build(std::move(data));
}

SetCoverInstance chain_instance(std::size_t n) {
  if (n == 0) throw std::invalid_argument("chain needs at least one player");
  std::vector<CoverSet> sets;
  Coalition prefix;
  for (std::size_t i = 0; i < n; ++i) {
    prefix.push_back(i);
    sets.push_back({prefix, Rational(static_cast<long>(i + 1))});
  }
  return SetCoverInstance::build(n, std::move(sets));
}

Allocation chain_allocation(std::size_t n) {
  if (n == 0) throw std::invalid_argument("chain needs at least one player");
  std::vector<Rational> y;
  Rational half_power = 1;  // 2^-i
  for (std::size_t i = 1; i < n; ++i) {
    half_power /= 2;
    y.push_back(1 - half_power);
  }
  y.push_back(n == 1 ? Rational(1) : Rational(2 - half_power));
  return Allocation(std::move(y));
}

SetCoverInstance triangle_instance(const Rational& c1, const Rational& c2, const Rational& c3) {
  if (c1 < 0 || c1 > c2 || c2 > c3) throw std::invalid_argument("triangle costs must satisfy 0 <= c1 <= c2 <= c3");
  return SetCoverInstance::build(3, {{{0, 1}, c1}, {{0, 2}, c2}, {{1, 2}, c3}});
}

Allocation triangle_allocation(const Rational& c1, const Rational& c2, const Rational& c3) {
  Rational y1 = (c1 + c2 - c3) / 2;
  if (y1 < 0) y1 = 0;
  return Allocation({y1, c1 - y1, c2 - y1});
}

bool complement_condition(const SetCoverInstance& inst) {
  for (const auto& t : inst.sets()) {
    std::vector<bool> reached(inst.n_players(), false);
    for (PlayerId p : t.members) reached[p] = true;
    for (const auto& other : inst.sets()) {
      if (std::none_of(other.members.begin(), other.members.end(), [&](PlayerId p) {
            return std::binary_search(t.members.begin(), t.members.end(), p);
          })) {
        for (PlayerId p : other.members) reached[p] = true;
      }
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end()) return false;
  }
  return true;
}

AdversaryCase adversarial_costs(const SetCoverInstance& inst, const SimplePair& pair) {
  check_pair(inst, pair);
  if (!complement_condition(inst)) throw std::invalid_argument("the complement condition does not hold");
  const Coalition& target = inst.set(pair.set_index).members;
  const std::size_t n = inst.n_players();
  const std::size_t k = target.size();

  AdversaryCase result;
  if (pair.coalition == target) {
    if (k == n) throw std::invalid_argument("pair covers every player and is not in the explicit family");
    result.full_set = true;
    for (PlayerId p = 0; p < n; ++p) {
      if (!std::binary_search(target.begin(), target.end(), p)) {
        result.special_player = p;
        break;
      }
    }
  } else if (pair.coalition.size() + 1 == k) {
    result.full_set = false;
    result.special_player = k - 1;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (target[i] != pair.coalition[i]) {
        result.special_player = i;
        break;
      }
    }
    result.special_player = target[result.special_player];
  } else {
    throw std::invalid_argument("pair is not in the explicit family");
  }

  const Rational big = Rational(static_cast<long>(k + 2));
  for (std::size_t t = 0; t < inst.n_sets(); ++t) {
    const auto& members = inst.set(t).members;
    const bool disjoint = std::none_of(members.begin(), members.end(), [&](PlayerId p) {
      return std::binary_search(target.begin(), target.end(), p);
    });
    if (t == pair.set_index) {
      result.costs.push_back(Rational(static_cast<long>(k)));
    } else if (!disjoint) {
      result.costs.push_back(big);
    } else if (result.full_set && std::binary_search(members.begin(), members.end(), result.special_player)) {
      result.costs.push_back(make_rational(1, static_cast<std::int64_t>(n)));
    } else {
      result.costs.push_back(Rational(0));
    }
  }
  return result;
}

SetCoverInstance with_costs(const SetCoverInstance& inst, const std::vector<Rational>& costs) {
  if (costs.size() != inst.n_sets()) throw std::invalid_argument("one cost per set required");
  InstanceData data = inst.data();
  for (std::size_t t = 0; t < costs.size(); ++t) data.sets[t].cost = costs[t];
  return SetCoverInstance::build(std::move(data));
}

SetCoverInstance random_instance(const RandomSpec& spec) {
  if (spec.n_players == 0 || spec.n_sets == 0) throw std::invalid_argument("need players and sets");
  if (spec.max_cost < 0 || spec.max_denominator < 1) throw std::invalid_argument("bad cost range");
  Rng rng(spec.seed);
  std::vector<Coalition> members(spec.n_sets);
  for (auto& set : members) {
    while (set.empty()) {
      for (PlayerId p = 0; p < spec.n_players; ++p) {
        if (rng.coin()) set.push_back(p);
      }
    }
  }
  for (PlayerId p = 0; p < spec.n_players; ++p) {
    const bool covered = std::any_of(members.begin(), members.end(), [&](const Coalition& s) {
      return std::binary_search(s.begin(), s.end(), p);
    });
    if (covered) continue;
    auto& host = members[rng.uniform(0, spec.n_sets - 1)];
    host.insert(std::upper_bound(host.begin(), host.end(), p), p);
  }
  std::vector<CoverSet> sets;
  for (auto& s : members) {
    const auto den = static_cast<std::int64_t>(rng.uniform(1, static_cast<std::uint64_t>(spec.max_denominator)));
    const auto num = static_cast<std::int64_t>(rng.uniform(0, static_cast<std::uint64_t>(spec.max_cost * den)));
    sets.push_back({std::move(s), make_rational(num, den)});
  }
  return SetCoverInstance::build(spec.n_players, std::move(sets));
}

}  // namespace hn
