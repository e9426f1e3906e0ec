#include "raypf/lgv_network.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace raypf {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::int64_t floor_div(std::int64_t x, std::int64_t d) {
  std::int64_t q = x / d;
  if ((x % d != 0) && ((x < 0) != (d < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t x, std::int64_t d) { return -floor_div(-x, d); }

struct StateHash {
  std::size_t operator()(const std::vector<std::int32_t>& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto v : s) h ^= std::hash<std::int32_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

constexpr std::int32_t kNotStarted = -1;
constexpr std::int32_t kFinished = -2;

}  // namespace

LatticePoint LatticeNetwork::source_point(const RayParams& p, std::int64_t r) {
  return {p.b() * r, (p.a() - p.b()) * r};
}

LatticePoint LatticeNetwork::sink_point(const RayParams& p, std::int64_t r) {
  return {p.k() + p.b() * r, p.n() - p.k() + (p.a() - p.b()) * r};
}

bool LatticeNetwork::in_band(std::int64_t i, std::int64_t j) const noexcept {
  const std::int64_t a = params_.a(), b = params_.b();
  const std::int64_t f = (b - a) * i + b * j;
  return i >= 0 && f >= 0 && f <= b * params_.n() - a * params_.k();
}

std::optional<std::size_t> LatticeNetwork::index_of(std::int64_t i, std::int64_t j) const {
  if (i < i_min_ || i > i_max_ || j < j_min_ || j >= j_min_ + j_span_) return std::nullopt;
  const std::size_t idx = lookup_[static_cast<std::size_t>((i - i_min_) * j_span_ + (j - j_min_))];
  if (idx == kNone) return std::nullopt;
  return idx;
}

std::size_t LatticeNetwork::edge_count() const noexcept {
  std::size_t e = 0;
  for (const auto& s : succ_) e += s.size();
  return e;
}

LatticeNetwork build_network(const RayParams& params, int source_count, bool delannoy_mode) {
  if (params.regime() != Regime::PolyaFrequency)
    throw std::invalid_argument("the lattice network exists only in the PF regime");
  if (source_count < 0) throw std::invalid_argument("source count must be nonnegative");

  LatticeNetwork net(params);
  net.delannoy_ = delannoy_mode;
  if (source_count == 0) return net;

  const std::int64_t a = params.a(), b = params.b();
  const std::int64_t top = b * params.n() - a * params.k();
  net.i_min_ = 0;
  net.i_max_ = LatticeNetwork::sink_point(params, source_count - 1).i;

  // Band rows: for fixed i, (b-a)i + bj in [0, top].
  auto j_lo = [&](std::int64_t i) { return ceil_div(-(b - a) * i, b); };
  auto j_hi = [&](std::int64_t i) { return floor_div(top - (b - a) * i, b); };
  net.j_min_ = j_lo(net.i_max_);
  const std::int64_t j_max = j_hi(0);
  net.j_span_ = j_max - net.j_min_ + 1;

  for (std::int64_t i = net.i_min_; i <= net.i_max_; ++i)
    for (std::int64_t j = j_lo(i); j <= j_hi(i); ++j) net.vertices_.push_back({i, j});
  std::sort(net.vertices_.begin(), net.vertices_.end(),
            [](const LatticePoint& x, const LatticePoint& y) {
              return std::pair{x.level(), x.i} < std::pair{y.level(), y.i};
            });

  net.lookup_.assign(static_cast<std::size_t>((net.i_max_ - net.i_min_ + 1) * net.j_span_), kNone);
  for (std::size_t v = 0; v < net.vertices_.size(); ++v) {
    const auto& pt = net.vertices_[v];
    net.lookup_[static_cast<std::size_t>((pt.i - net.i_min_) * net.j_span_ + (pt.j - net.j_min_))] = v;
  }

  net.succ_.assign(net.vertices_.size(), {});
  net.pred_.assign(net.vertices_.size(), {});
  for (std::size_t v = 0; v < net.vertices_.size(); ++v) {
    const auto& pt = net.vertices_[v];
    auto link = [&](std::int64_t di, std::int64_t dj) {
      if (auto w = net.index_of(pt.i + di, pt.j + dj)) {
        net.succ_[v].push_back(*w);
        net.pred_[*w].push_back(v);
      }
    };
    link(1, 0);
    link(0, 1);
    if (delannoy_mode) link(1, 1);
  }

  for (int r = 0; r < source_count; ++r) {
    const auto s = LatticeNetwork::source_point(params, r);
    const auto t = LatticeNetwork::sink_point(params, r);
    const auto si = net.index_of(s.i, s.j);
    const auto ti = net.index_of(t.i, t.j);
    if (!si || !ti) throw std::logic_error("source or sink outside the band");
    net.sources_.push_back(*si);
    net.sinks_.push_back(*ti);
  }
  return net;
}

std::vector<BigInt> paths_from_source(const LatticeNetwork& net, int r) {
  std::vector<BigInt> count(net.vertex_count(), BigInt(0));
  const std::size_t s = net.source(r);
  count[s] = 1;
  for (std::size_t v = s; v < net.vertex_count(); ++v) {
    if (count[v] == 0) continue;
    for (std::size_t w : net.successors(v)) count[w] += count[v];
  }
  return count;
}

BigInt path_count(const LatticeNetwork& net, int i, int j, SweepDirection direction) {
  const std::size_t s = net.source(i);
  const std::size_t t = net.sink(j);
  if (direction == SweepDirection::SourceToSink) return paths_from_source(net, i)[t];

  std::vector<BigInt> to_sink(net.vertex_count(), BigInt(0));
  to_sink[t] = 1;
  for (std::size_t v = t + 1; v-- > 0;) {
    for (std::size_t w : net.successors(v))
      if (w <= t) to_sink[v] += to_sink[w];
  }
  return to_sink[s];
}

BigMatrix path_matrix(const LatticeNetwork& net) {
  const int w = net.source_count();
  BigMatrix m(w, w);
  for (int i = 0; i < w; ++i) {
    const auto counts = paths_from_source(net, i);
    for (int j = 0; j < w; ++j) m(i, j) = counts[net.sink(j)];
  }
  return m;
}

BigInt disjoint_families(const LatticeNetwork& net, const std::vector<int>& sources,
                         const std::vector<int>& sinks, std::uint64_t budget) {
  if (sources.size() != sinks.size() || sources.empty())
    throw std::invalid_argument("disjoint_families needs |I| = |J| >= 1");
  const std::size_t paths = sources.size();
  const auto& vx = net.vertices();

  std::vector<std::size_t> src(paths), snk(paths);
  std::vector<std::int64_t> start(paths), finish(paths);
  for (std::size_t r = 0; r < paths; ++r) {
    src[r] = net.source(sources[r]);
    snk[r] = net.sink(sinks[r]);
    start[r] = vx[src[r]].level();
    finish[r] = vx[snk[r]].level();
    // Inside the band a sink is reachable exactly when it dominates.
    if (vx[src[r]].i > vx[snk[r]].i || vx[src[r]].j > vx[snk[r]].j) return BigInt(0);
  }
  const std::int64_t first = *std::min_element(start.begin(), start.end());
  const std::int64_t last = *std::max_element(finish.begin(), finish.end());

  using State = std::vector<std::int32_t>;
  using Frontier = std::unordered_map<State, BigInt, StateHash>;
  Frontier frontier;
  frontier.emplace(State(paths, kNotStarted), BigInt(1));
  BigInt total(0);
  std::uint64_t visited = 0;

  std::vector<std::size_t> movers;
  std::vector<std::int64_t> occupied;

  for (std::int64_t level = first; level <= last && !frontier.empty(); ++level) {
    Frontier next;
    for (auto& [raw, count] : frontier) {
      if (++visited > budget)
        throw BudgetExceeded("disjoint-family search exceeded " + std::to_string(budget) +
                                 " states",
                             budget);
      State state = raw;
      bool alive = true;
      occupied.clear();
      for (std::size_t r = 0; r < paths && alive; ++r) {
        if (state[r] == kNotStarted && start[r] == level) state[r] = static_cast<std::int32_t>(src[r]);
        if (state[r] < 0) continue;
        const auto& here = vx[static_cast<std::size_t>(state[r])];
        const auto& goal = vx[snk[r]];
        if (here.level() > finish[r] || here.i > goal.i || here.j > goal.j) {
          alive = false;
        } else if (here.level() == level) {
          occupied.push_back(state[r]);
        }
      }
      if (!alive) continue;
      std::sort(occupied.begin(), occupied.end());
      if (std::adjacent_find(occupied.begin(), occupied.end()) != occupied.end()) continue;

      movers.clear();
      bool done = true;
      for (std::size_t r = 0; r < paths; ++r) {
        if (state[r] >= 0 && finish[r] == level) {
          // Level matches and the sink dominates, so this is the sink itself.
          state[r] = kFinished;
        }
        if (state[r] != kFinished) done = false;
        if (state[r] >= 0 && vx[static_cast<std::size_t>(state[r])].level() == level)
          movers.push_back(r);
      }
      if (done) {
        total += count;
        continue;
      }

      // Odometer over the successor choices of every path sitting on this level.
      std::vector<std::size_t> choice(movers.size(), 0);
      bool stuck = false;
      for (std::size_t m : movers)
        if (net.successors(static_cast<std::size_t>(state[m])).empty()) stuck = true;
      if (stuck) continue;
      const State base = state;
      while (true) {
        State moved = base;
        for (std::size_t c = 0; c < movers.size(); ++c) {
          const auto& out = net.successors(static_cast<std::size_t>(base[movers[c]]));
          moved[movers[c]] = static_cast<std::int32_t>(out[choice[c]]);
        }
        next[std::move(moved)] += count;
        std::size_t c = 0;
        for (; c < movers.size(); ++c) {
          const auto& out = net.successors(static_cast<std::size_t>(base[movers[c]]));
          if (++choice[c] < out.size()) break;
          choice[c] = 0;
        }
        if (c == movers.size()) break;
      }
    }
    frontier = std::move(next);
  }
  return total;
}

LgvReport verify_lgv(const RayParams& params, int window, int max_order, bool delannoy_mode,
                     std::uint64_t minor_budget, std::uint64_t enumeration_budget) {
  if (window < 1 || max_order < 1 || max_order > window)
    throw std::invalid_argument("verify_lgv requires 1 <= max_order <= window");
  const std::uint64_t needed = minor_count(window, max_order);
  if (needed > minor_budget)
    throw BudgetExceeded("LGV check needs " + std::to_string(needed) + " minors, budget is " +
                             std::to_string(minor_budget),
                         minor_budget);

  const LatticeNetwork net = build_network(params, window, delannoy_mode);
  const auto kind = delannoy_mode ? SequenceKind::Delannoy : SequenceKind::Binomial;
  LgvReport report{params};
  report.window = window;
  report.max_order = max_order;
  report.delannoy_mode = delannoy_mode;
  report.path_matrix = path_matrix(net);
  report.sequence = ray_sequence(params, static_cast<std::size_t>(window), kind).values;

  const BigMatrix toeplitz = ToeplitzWindow(report.sequence, window).matrix();
  for (int i = 0; i < window && report.toeplitz_match; ++i)
    for (int j = 0; j < window; ++j)
      if (report.path_matrix(i, j) != toeplitz(i, j)) {
        report.toeplitz_match = false;
        report.toeplitz_mismatch = std::pair{i, j};
        break;
      }

  for (int r = 1; r <= max_order; ++r) {
    const auto subsets = combinations(window, r);
    for (const auto& rows : subsets) {
      for (const auto& cols : subsets) {
        MinorSpec spec{rows, cols};
        BigInt value = minor_of(report.path_matrix, spec);
        ++report.minors_checked;
        if (value < 0 && report.minors_nonnegative) {
          report.minors_nonnegative = false;
          report.negative_minor = MinorWitness{spec, value};
        }
        BigInt families = disjoint_families(net, rows, cols, enumeration_budget);
        if (families != value) {
          report.minors_match_families = false;
          report.family_mismatch = LgvMismatch{std::move(spec), std::move(value), std::move(families)};
          return report;
        }
      }
    }
  }
  return report;
}

std::string export_dot(const LatticeNetwork& net) {
  std::ostringstream out;
  out << "digraph lattice {\n";
  if (net.vertex_count() > 0) {
    out << "  node [shape=point];\n";
    std::map<std::size_t, std::string> labels;
    auto add_label = [&labels](std::size_t v, const std::string& text) {
      auto& slot = labels[v];
      slot = slot.empty() ? text : slot + "/" + text;
    };
    for (int r = 0; r < net.source_count(); ++r) add_label(net.source(r), "s" + std::to_string(r));
    for (int r = 0; r < net.source_count(); ++r) add_label(net.sink(r), "t" + std::to_string(r));

    auto id = [&net](std::size_t v) {
      const auto& p = net.vertices()[v];
      return "\"" + std::to_string(p.i) + "," + std::to_string(p.j) + "\"";
    };
    for (std::size_t v = 0; v < net.vertex_count(); ++v) {
      const auto& p = net.vertices()[v];
      out << "  " << id(v) << " [pos=\"" << p.i << "," << p.j << "!\"";
      if (auto it = labels.find(v); it != labels.end())
        out << ", shape=circle, label=\"" << it->second << "\"";
      out << "];\n";
    }
    for (std::size_t v = 0; v < net.vertex_count(); ++v) {
      const auto& p = net.vertices()[v];
      for (std::size_t w : net.successors(v)) {
        const auto& q = net.vertices()[w];
        out << "  " << id(v) << " -> " << id(w);
        if (q.i == p.i + 1 && q.j == p.j + 1) out << " [style=dashed]";
        out << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace raypf
