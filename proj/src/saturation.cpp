#include "stpec/saturation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace stpec {

namespace {

Dir boundary_dir(const SwitchSlot& slot) { return slot.type == AngleType::Src ? Dir::Out : Dir::In; }

// A chord ending at a slot saturates it when it enters a +1 source angle or
// leaves a +1 sink angle.
bool saturates_as_head(const SwitchSlot& s) { return s.type == AngleType::Src && s.label == 1; }
bool saturates_as_tail(const SwitchSlot& s) { return s.type == AngleType::Snk && s.label == 1; }
bool can_be_tail(const SwitchSlot& s) { return s.type == AngleType::Src || s.label == 1; }
bool can_be_head(const SwitchSlot& s) { return s.type == AngleType::Snk || s.label == 1; }

int cyc(int x, int p) { return ((x % p) + p) % p; }

struct Positional {
  std::vector<Chord> chords;
  std::optional<std::pair<int, int>> kept;
};

struct CacheEntry {
  int searched_budget = -1;
  std::optional<int> min_count;
  std::vector<Positional> solutions;
};

using CacheKey = std::pair<std::vector<std::pair<int, int>>, bool>;

thread_local std::map<CacheKey, CacheEntry> face_cache;

class FaceSearch {
 public:
  FaceSearch(const std::vector<SwitchSlot>& slots, bool external)
      : slots_(slots), p_(static_cast<int>(slots.size())), external_(external) {}

  // All valid chord sets of minimum size, if that size is at most budget.
  CacheEntry run(int budget) {
    CacheEntry entry;
    entry.searched_budget = budget;
    std::vector<std::pair<int, int>> kept_choices;
    if (external_) {
      for (int s = 0; s < p_; ++s) {
        if (!saturates_as_head(slots_[static_cast<size_t>(s)])) continue;
        for (int t = 0; t < p_; ++t) {
          if (saturates_as_tail(slots_[static_cast<size_t>(t)])) kept_choices.emplace_back(s, t);
        }
      }
      if (kept_choices.empty()) return entry;
    } else {
      kept_choices.emplace_back(-1, -1);
    }
    int plus = 0;
    for (const auto& s : slots_) plus += s.label == 1 ? 1 : 0;
    const int required = plus - (external_ ? 2 : 0);
    for (int target = (required + 1) / 2; target <= budget; ++target) {
      for (auto [s, t] : kept_choices) {
        kept_s_ = s;
        kept_t_ = t;
        chosen_.clear();
        target_ = target;
        dfs(entry);
      }
      if (!entry.solutions.empty()) {
        entry.min_count = target;
        return entry;
      }
      if (target >= p_ * p_) break;
    }
    return entry;
  }

 private:
  const std::vector<SwitchSlot>& slots_;
  int p_;
  bool external_;
  int kept_s_ = -1;
  int kept_t_ = -1;
  int target_ = 0;
  std::vector<Chord> chosen_;

  [[nodiscard]] bool is_kept(int i) const { return i == kept_s_ || i == kept_t_; }

  [[nodiscard]] bool covered(int i) const {
    for (auto [t, h] : chosen_) {
      if (h == i && saturates_as_head(slots_[static_cast<size_t>(i)])) return true;
      if (t == i && saturates_as_tail(slots_[static_cast<size_t>(i)])) return true;
    }
    return false;
  }

  [[nodiscard]] int first_uncovered() const {
    for (int i = 0; i < p_; ++i) {
      if (slots_[static_cast<size_t>(i)].label == 1 && !is_kept(i) && !covered(i)) return i;
    }
    return -1;
  }

  [[nodiscard]] bool compatible(Chord c) const {
    if (c.first == c.second) return false;
    if (cyc(c.first - c.second, p_) == 1 || cyc(c.second - c.first, p_) == 1) return false;
    const SwitchSlot& tail = slots_[static_cast<size_t>(c.first)];
    const SwitchSlot& head = slots_[static_cast<size_t>(c.second)];
    if (!can_be_tail(tail) || !can_be_head(head)) return false;
    // Kept switches must stay switches.
    if (c.first == kept_t_ && saturates_as_tail(tail)) return false;
    if (c.second == kept_s_ && saturates_as_head(head)) return false;
    for (Chord o : chosen_) {
      if (std::minmax(o.first, o.second) == std::minmax(c.first, c.second)) return false;
      if (chords_cross(o, c, p_)) return false;
    }
    return true;
  }

  void dfs(CacheEntry& entry) {
    const int next = first_uncovered();
    if (static_cast<int>(chosen_.size()) == target_) {
      if (next != -1) return;
      std::optional<std::pair<int, int>> kept;
      if (valid_saturation(slots_, chosen_, external_, &kept)) {
        Positional sol{chosen_, kept};
        std::sort(sol.chords.begin(), sol.chords.end());
        entry.solutions.push_back(std::move(sol));
      }
      return;
    }
    if (next == -1) return;
    const SwitchSlot& x = slots_[static_cast<size_t>(next)];
    for (int j = 0; j < p_; ++j) {
      Chord c = saturates_as_head(x) ? Chord{j, next} : Chord{next, j};
      if (!compatible(c)) continue;
      chosen_.push_back(c);
      dfs(entry);
      chosen_.pop_back();
    }
  }
};

}  // namespace

bool chords_cross(Chord a, Chord b, int slot_count) {
  auto [a1, a2] = std::minmax(a.first, a.second);
  auto [b1, b2] = std::minmax(b.first, b.second);
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  const bool b1_inside = a1 < b1 && b1 < a2;
  const bool b2_inside = a1 < b2 && b2 < a2;
  (void)slot_count;
  return b1_inside != b2_inside;
}

bool valid_saturation(const std::vector<SwitchSlot>& slots, const std::vector<Chord>& chords,
                      bool external, std::optional<std::pair<int, int>>* kept) {
  const int p = static_cast<int>(slots.size());
  for (size_t i = 0; i < chords.size(); ++i) {
    const Chord c = chords[i];
    if (c.first < 0 || c.second < 0 || c.first >= p || c.second >= p || c.first == c.second) return false;
    if (cyc(c.first - c.second, p) == 1 || cyc(c.second - c.first, p) == 1) return false;
    for (size_t j = 0; j < i; ++j) {
      if (std::minmax(chords[j].first, chords[j].second) == std::minmax(c.first, c.second)) return false;
      if (chords_cross(chords[j], c, p)) return false;
    }
  }

  struct Incident {
    int other;
    Dir dir;
  };
  std::vector<std::vector<Incident>> at(static_cast<size_t>(p));
  for (auto [t, h] : chords) {
    at[static_cast<size_t>(t)].push_back({h, Dir::Out});
    at[static_cast<size_t>(h)].push_back({t, Dir::In});
  }
  std::vector<int> unsat_src;
  std::vector<int> unsat_snk;
  for (int i = 0; i < p; ++i) {
    auto& inc = at[static_cast<size_t>(i)];
    std::sort(inc.begin(), inc.end(), [&](const Incident& a, const Incident& b) {
      return cyc(a.other - i, p) < cyc(b.other - i, p);
    });
    const SwitchSlot& s = slots[static_cast<size_t>(i)];
    const Dir base = boundary_dir(s);
    int transitions = 0;
    Dir prev = base;
    for (const auto& x : inc) {
      transitions += x.dir != prev ? 1 : 0;
      prev = x.dir;
    }
    transitions += prev != base ? 1 : 0;
    if (s.label != 1) {
      if (transitions != 0) return false;
    } else if (transitions == 0) {
      (s.type == AngleType::Src ? unsat_src : unsat_snk).push_back(i);
    } else if (transitions != 2) {
      return false;
    }
  }
  if (!external && (!unsat_src.empty() || !unsat_snk.empty())) return false;
  if (external && (unsat_src.size() != 1 || unsat_snk.size() != 1)) return false;

  // Pieces of the subdivided face: the polygon on the slots plus the chords.
  // Counterclockwise at i the neighbours come in order of (j - i) mod p.
  std::vector<std::vector<int>> rot(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i) {
    auto& r = rot[static_cast<size_t>(i)];
    r.push_back(cyc(i + 1, p));
    for (const auto& x : at[static_cast<size_t>(i)]) r.push_back(x.other);
    if (p > 2) r.push_back(cyc(i - 1, p));
  }
  auto dir_of = [&](int y, int x) {
    for (const auto& inc : at[static_cast<size_t>(y)]) {
      if (inc.other == x) return inc.dir;
    }
    return boundary_dir(slots[static_cast<size_t>(y)]);
  };
  std::set<std::pair<int, int>> used;
  struct Piece {
    int balance = 0;
    std::vector<int> corners;
  };
  std::vector<Piece> pieces;
  if (p <= 2) {
    Piece whole;
    for (int i = 0; i < p; ++i) {
      whole.balance += slots[static_cast<size_t>(i)].label;
      whole.corners.push_back(i);
    }
    pieces.push_back(whole);
  } else {
    // The outside of the polygon is the walk i+1 -> i; mark it used.
    for (int i = 0; i < p; ++i) used.insert({cyc(i + 1, p), i});
    for (int i = 0; i < p; ++i) {
      for (int j : rot[static_cast<size_t>(i)]) {
        if (used.count({i, j})) continue;
        Piece piece;
        int x = i;
        int y = j;
        while (!used.count({x, y})) {
          used.insert({x, y});
          const auto& r = rot[static_cast<size_t>(y)];
          const size_t idx = static_cast<size_t>(std::find(r.begin(), r.end(), x) - r.begin());
          const int z = r[(idx + r.size() - 1) % r.size()];
          // Corner at y between edges (y, x) and (y, z).
          const SwitchSlot& s = slots[static_cast<size_t>(y)];
          if (at[static_cast<size_t>(y)].empty()) {
            piece.balance += s.label;
          } else {
            piece.balance += dir_of(y, x) == dir_of(y, z) ? -1 : 0;
          }
          piece.corners.push_back(y);
          x = y;
          y = z;
        }
        pieces.push_back(std::move(piece));
      }
    }
  }

  if (!external) {
    return std::all_of(pieces.begin(), pieces.end(), [](const Piece& pc) { return pc.balance == -2; });
  }
  const int ks = unsat_src.front();
  const int kt = unsat_snk.front();
  for (size_t o = 0; o < pieces.size(); ++o) {
    bool ok = true;
    for (size_t q = 0; q < pieces.size() && ok; ++q) {
      int balance = pieces[q].balance;
      for (int kslot : {ks, kt}) {
        const bool here = std::find(pieces[q].corners.begin(), pieces[q].corners.end(), kslot) !=
                          pieces[q].corners.end();
        const bool split = !at[static_cast<size_t>(kslot)].empty();
        if (q == o) {
          if (!here) ok = false;
          if (here && split) balance += 2;  // the kept switch's +1 sub-angle
        } else if (here && !split) {
          ok = false;  // the unsplit +1 angle must face the outer piece
        }
      }
      if (balance != (q == o ? 2 : -2)) ok = false;
    }
    if (ok) {
      if (kept) *kept = std::make_pair(ks, kt);
      return true;
    }
  }
  return false;
}

std::optional<FaceSolution> solve_face(const std::vector<SwitchSlot>& slots, bool external,
                                       int budget) {
  if (budget < 0) return std::nullopt;
  CacheKey key;
  key.second = external;
  for (const auto& s : slots) key.first.emplace_back(static_cast<int>(s.type), s.label);
  CacheEntry& entry = face_cache[key];
  const bool answered = entry.min_count.has_value() || entry.searched_budget >= budget;
  if (!answered) entry = FaceSearch(slots, external).run(budget);
  if (!entry.min_count || *entry.min_count > budget) return std::nullopt;

  std::optional<FaceSolution> best;
  for (const Positional& sol : entry.solutions) {
    FaceSolution fs;
    fs.count = static_cast<int>(sol.chords.size());
    for (auto [t, h] : sol.chords) {
      fs.edges.push_back(Edge{slots[static_cast<size_t>(t)].vertex, slots[static_cast<size_t>(h)].vertex});
    }
    std::sort(fs.edges.begin(), fs.edges.end());
    if (sol.kept) {
      fs.kept = std::make_pair(slots[static_cast<size_t>(sol.kept->first)].vertex,
                               slots[static_cast<size_t>(sol.kept->second)].vertex);
    }
    if (!best || std::tie(fs.edges, fs.kept) < std::tie(best->edges, best->kept)) best = std::move(fs);
  }
  return best;
}

std::vector<SwitchSlot> switch_slots(const Digraph& g, const FaceWalk& face,
                                     const AngleAssignment& labels) {
  std::vector<SwitchSlot> out;
  for (size_t i = 0; i < face.boundary.size(); ++i) {
    const Corner& c = face.boundary[i];
    if (!is_switch_angle(g, c)) continue;
    SwitchSlot s;
    s.vertex = c.vertex;
    s.type = dir_at(g.edge(c.leaving), c.vertex) == Dir::Out ? AngleType::Src : AngleType::Snk;
    s.label = labels.at(AngleId{face.id, static_cast<int>(i)});
    out.push_back(s);
  }
  return out;
}

SimplifiedBoundary simplify_boundary(const Digraph& g, const FaceWalk& face,
                                     const AngleAssignment& labels, bool last_representative) {
  SimplifiedBoundary sb;
  const auto& walk = face.boundary;
  const size_t n = walk.size();
  // Start right after a switch angle so no run wraps around the walk's end.
  size_t start = 0;
  for (size_t i = 0; i < n; ++i) {
    if (is_switch_angle(g, walk[i])) {
      start = (i + 1) % n;
      break;
    }
  }
  for (size_t step = 0; step < n; ++step) {
    const size_t i = (start + step) % n;
    const Corner& c = walk[i];
    if (is_switch_angle(g, c)) {
      BoundarySlot slot;
      slot.angle.vertex = c.vertex;
      slot.angle.type = dir_at(g.edge(c.leaving), c.vertex) == Dir::Out ? AngleType::Src : AngleType::Snk;
      slot.angle.label = labels.at(AngleId{face.id, static_cast<int>(i)});
      sb.slots.push_back(slot);
      ++sb.switch_angles;
      continue;
    }
    if (sb.slots.empty() || !sb.slots.back().is_run) {
      BoundarySlot run;
      run.is_run = true;
      sb.slots.push_back(run);
    }
    sb.slots.back().members.push_back(c.vertex);
  }
  for (auto& slot : sb.slots) {
    if (slot.is_run) slot.representative = last_representative ? slot.members.back() : slot.members.front();
  }
  return sb;
}

namespace {

std::vector<SwitchSlot> slots_of(const SimplifiedBoundary& sb) {
  std::vector<SwitchSlot> out;
  for (const auto& slot : sb.slots) {
    if (!slot.is_run) out.push_back(slot.angle);
  }
  return out;
}

}  // namespace

std::optional<FaceSolution> min_saturating_edges(const Digraph& g, const FaceWalk& face,
                                                 const AngleAssignment& labels, int budget) {
  return solve_face(slots_of(simplify_boundary(g, face, labels)), false, budget);
}

std::optional<FaceSolution> min_saturating_edges_external(const Digraph& g, const FaceWalk& face,
                                                          const AngleAssignment& labels,
                                                          int budget) {
  return solve_face(slots_of(simplify_boundary(g, face, labels)), true, budget);
}

}  // namespace stpec
