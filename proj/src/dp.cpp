#include "stpec/dp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <ostream>
#include <sstream>
#include <thread>

#include "stpec/saturation.hpp"

namespace stpec {

namespace {

const char* dir_name(Dir d) { return d == Dir::Out ? "out" : "in"; }

std::string pole_string(const PoleState& p) {
  std::ostringstream os;
  os << dir_name(p.dir_uv) << '/' << dir_name(p.dir_vu);
  if (!p.active) os << " used";
  if (p.zeros) os << " z" << p.zeros;
  return os.str();
}

}  // namespace

std::string to_string(const TableKey& key) {
  return "[" + to_string(key.sigma1) + "] [" + to_string(key.sigma2) + "] u=" + pole_string(key.u) +
         " v=" + pole_string(key.v);
}

TableKey mirrored(const TableKey& key) {
  TableKey m;
  m.sigma1 = reversed(key.sigma2);
  m.sigma2 = reversed(key.sigma1);
  m.u = key.u;
  m.v = key.v;
  std::swap(m.u.dir_uv, m.u.dir_vu);
  std::swap(m.v.dir_uv, m.v.dir_vu);
  return m;
}

void DpStats::merge(const DpStats& o) {
  entries_stored += o.entries_stored;
  long_signatures_discarded += o.long_signatures_discarded;
  stored_long_signatures += o.stored_long_signatures;
  infeasible_faces += o.infeasible_faces;
}

DpContext::DpContext(const SpqrTree& t, int budget, const PlanarEmbedding* fixed_embedding,
                     DpStats* s)
    : tree(t), k(budget), fixed(fixed_embedding), stats(s), switches(classify_switches(t.graph())) {}

namespace {

// A skeleton edge traversed a -> b (forward) or b -> a.
struct DartRef {
  int skel = 0;
  bool forward = true;
};

// Faces of one embedded skeleton. Open faces are the two faces beside the
// reference edge with the reference dart removed; the root has none.
struct Layout {
  std::vector<std::pair<Vertex, Vertex>> ends;
  std::vector<std::vector<DartRef>> closed;
  int external = -1;
  std::vector<DartRef> left;   // u to v
  std::vector<DartRef> right;  // v to u
  bool open = true;
  Vertex pole_u = 0;
  Vertex pole_v = 0;
  std::vector<int> present;
  std::vector<Vertex> vertices;
};

Vertex from_of(const Layout& lay, DartRef d) {
  const auto& [a, b] = lay.ends[static_cast<size_t>(d.skel)];
  return d.forward ? a : b;
}

Dir first_dir(const TableKey& key, bool forward) { return forward ? key.u.dir_uv : key.v.dir_vu; }
Dir last_dir(const TableKey& key, bool forward) { return forward ? key.v.dir_uv : key.u.dir_vu; }
const Signature& side_of(const TableKey& key, bool forward) { return forward ? key.sigma1 : key.sigma2; }

std::vector<DartRef> to_refs(const Layout& lay, const std::vector<Dart>& face) {
  std::vector<DartRef> out;
  for (const Dart& d : face) {
    out.push_back({d.edge, d.from == lay.ends[static_cast<size_t>(d.edge)].first});
  }
  return out;
}

void collect_present(Layout& lay, const RotationSystem& rs) {
  std::set<int> present;
  for (Vertex x = 0; x < rs.vertex_count(); ++x) {
    const auto& rot = rs.rotation[static_cast<size_t>(x)];
    if (rot.empty()) continue;
    lay.vertices.push_back(x);
    present.insert(rot.begin(), rot.end());
  }
  lay.present.assign(present.begin(), present.end());
}

Layout make_layout(const SpqrNode& node, const RotationSystem& rs) {
  Layout lay;
  for (const auto& e : node.skeleton) lay.ends.emplace_back(e.a, e.b);
  lay.pole_u = node.pole_u;
  lay.pole_v = node.pole_v;
  collect_present(lay, rs);
  lay.present.erase(std::remove(lay.present.begin(), lay.present.end(), 0), lay.present.end());
  for (const auto& face : trace_faces(rs)) {
    auto refs = to_refs(lay, face);
    auto it = std::find_if(refs.begin(), refs.end(), [](DartRef d) { return d.skel == 0; });
    if (it == refs.end()) {
      lay.closed.push_back(std::move(refs));
      continue;
    }
    std::vector<DartRef> walk(it + 1, refs.end());
    walk.insert(walk.end(), refs.begin(), it);
    // The face left of v -> u continues along B_uv.
    (it->forward ? lay.right : lay.left) = std::move(walk);
  }
  return lay;
}

// The root: edge e as skeleton edge 0 and the rest of the graph as edge 1.
Layout make_root_layout(Vertex u0, Vertex v0, int n, bool external_right) {
  RotationSystem rs;
  rs.ends = {{u0, v0}, {u0, v0}};
  rs.rotation.assign(static_cast<size_t>(n), {});
  rs.rotation[static_cast<size_t>(u0)] = {0, 1};
  rs.rotation[static_cast<size_t>(v0)] = {0, 1};
  Layout lay;
  lay.ends = rs.ends;
  lay.open = false;
  lay.pole_u = u0;
  lay.pole_v = v0;
  collect_present(lay, rs);
  for (const auto& face : trace_faces(rs)) {
    auto refs = to_refs(lay, face);
    const bool has_e_forward = std::any_of(refs.begin(), refs.end(), [](DartRef d) {
      return d.skel == 0 && d.forward;
    });
    if (has_e_forward == external_right) lay.external = static_cast<int>(lay.closed.size());
    lay.closed.push_back(std::move(refs));
  }
  return lay;
}

// One element of a face walk: the angle at a skeleton vertex between two
// consecutive darts, or a symbol taken from a child's signature.
struct Elem {
  bool is_angle = true;
  Vertex vertex = 0;
  bool switch_angle = false;
  AngleType type = AngleType::Src;
  Symbol sym;
  int var = -1;
  int option = -1;
};

struct Var {
  int options = 0;
  bool can_defer = false;
};

struct FaceElems {
  std::vector<Elem> elems;
  bool closed = true;
  bool external = false;
};

struct Selection {
  std::vector<const TableKey*> keys;  // per skeleton index, nullptr for the reference
  int cost = 0;
};

AngleType angle_type(Dir d) { return d == Dir::Out ? AngleType::Src : AngleType::Snk; }

Symbol angle_symbol(const Elem& e, bool undecided) {
  const bool src = e.type == AngleType::Src;
  if (undecided) return {src ? SymbolKind::Src : SymbolKind::Snk, e.vertex};
  return {src ? SymbolKind::SrcLocal : SymbolKind::SnkLocal, e.vertex};
}

struct Leaf {
  std::vector<int> choice;
  int cost = 0;
  std::vector<Edge> edges;
};

// Assigns every variable one of its options (or the deferral value
// `options`), keeps the assignments that balance every closed face, and
// charges each closed face its minimum saturation.
void enumerate_leaves(const std::vector<Var>& vars, const std::vector<FaceElems>& faces, int budget,
                      DpStats* stats, const std::function<void(const Leaf&)>& visit) {
  std::vector<int> target(faces.size(), 0);
  std::vector<int> fixed_plus(faces.size(), 0);
  // Face and slot of every option, for the running +1 counts.
  std::vector<std::vector<int>> option_face(vars.size());
  for (size_t v = 0; v < vars.size(); ++v) option_face[v].assign(static_cast<size_t>(vars[v].options), -1);
  for (size_t f = 0; f < faces.size(); ++f) {
    if (!faces[f].closed) continue;
    int slots = 0;
    for (const Elem& e : faces[f].elems) {
      if (e.is_angle && !e.switch_angle) continue;
      ++slots;
      if (e.var >= 0 && e.option >= 0) option_face[static_cast<size_t>(e.var)][static_cast<size_t>(e.option)] = static_cast<int>(f);
    }
    const int t2 = faces[f].external ? slots + 2 : slots - 2;
    if (t2 < 0 || t2 % 2 != 0) return;
    target[f] = t2 / 2;
  }
  std::vector<int> plus = fixed_plus;
  Leaf leaf;
  leaf.choice.assign(vars.size(), 0);

  auto finish = [&]() {
    for (size_t f = 0; f < faces.size(); ++f) {
      if (faces[f].closed && plus[f] != target[f]) return;
    }
    Leaf out;
    out.choice = leaf.choice;
    int remaining = budget;
    for (size_t f = 0; f < faces.size(); ++f) {
      if (!faces[f].closed) continue;
      std::vector<SwitchSlot> slots;
      for (const Elem& e : faces[f].elems) {
        if (e.is_angle && !e.switch_angle) continue;
        SwitchSlot s;
        s.vertex = e.vertex;
        s.type = e.is_angle ? e.type : (e.sym.source_like() ? AngleType::Src : AngleType::Snk);
        s.label = e.var >= 0 && e.option >= 0 && leaf.choice[static_cast<size_t>(e.var)] == e.option ? 1 : -1;
        slots.push_back(s);
      }
      auto sol = solve_face(slots, faces[f].external, remaining);
      if (!sol) {
        if (stats && slots.size() <= 12 && !solve_face(slots, faces[f].external, static_cast<int>(slots.size()))) {
          ++stats->infeasible_faces;
        }
        return;
      }
      remaining -= sol->count;
      out.edges.insert(out.edges.end(), sol->edges.begin(), sol->edges.end());
    }
    out.cost = budget - remaining;
    visit(out);
  };

  std::function<void(size_t)> rec = [&](size_t v) {
    if (v == vars.size()) {
      finish();
      return;
    }
    const Var& var = vars[v];
    for (int o = 0; o < var.options; ++o) {
      const int f = option_face[v][static_cast<size_t>(o)];
      if (f >= 0 && plus[static_cast<size_t>(f)] >= target[static_cast<size_t>(f)]) continue;
      if (f >= 0) ++plus[static_cast<size_t>(f)];
      leaf.choice[v] = o;
      rec(v + 1);
      if (f >= 0) --plus[static_cast<size_t>(f)];
    }
    if (var.can_defer) {
      leaf.choice[v] = var.options;
      rec(v + 1);
    }
  };
  rec(0);
}

void offer(Table& table, const TableKey& key, int cost, std::vector<Edge> witness, Backpointer back) {
  std::sort(witness.begin(), witness.end());
  auto it = table.find(key);
  if (it != table.end()) {
    const TableEntry& cur = it->second;
    if (std::tie(cost, witness) >= std::tie(cur.cost, cur.witness)) return;
  }
  table[key] = TableEntry{cost, std::move(witness), std::move(back)};
}

// Everything a selection of child tuples produces on one embedded skeleton.
// For the root, `on_root` receives (cost, local edges) per valid leaf.
struct Combiner {
  const DpContext& ctx;
  const Layout& lay;
  const Selection& sel;

  std::vector<FaceElems> faces;  // closed faces first, then left and right
  std::vector<Var> vars;
  std::map<Vertex, int> pole_zeros;
  std::map<Vertex, int> vertex_var;
  std::map<Vertex, bool> has_false_flag;

  const TableKey& key(int skel) const { return *sel.keys[static_cast<size_t>(skel)]; }

  void add_symbols(FaceElems& fe, DartRef d) const {
    for (const Symbol& s : side_of(key(d.skel), d.forward)) {
      Elem e;
      e.is_angle = false;
      e.vertex = s.vertex;
      e.sym = s;
      fe.elems.push_back(e);
    }
  }

  Elem angle_between(DartRef prev, DartRef next) const {
    Elem e;
    e.vertex = from_of(lay, next);
    const Dir in = last_dir(key(prev.skel), prev.forward);
    const Dir out = first_dir(key(next.skel), next.forward);
    e.switch_angle = in == out;
    e.type = angle_type(out);
    return e;
  }

  bool build() {
    for (size_t i = 0; i < lay.closed.size(); ++i) {
      const auto& darts = lay.closed[i];
      FaceElems fe;
      fe.external = static_cast<int>(i) == lay.external;
      for (size_t j = 0; j < darts.size(); ++j) {
        fe.elems.push_back(angle_between(darts[(j + darts.size() - 1) % darts.size()], darts[j]));
        add_symbols(fe, darts[j]);
      }
      faces.push_back(std::move(fe));
    }
    if (lay.open) {
      for (const auto* darts : {&lay.left, &lay.right}) {
        FaceElems fe;
        fe.closed = false;
        for (size_t j = 0; j < darts->size(); ++j) {
          if (j > 0) fe.elems.push_back(angle_between((*darts)[j - 1], (*darts)[j]));
          add_symbols(fe, (*darts)[j]);
        }
        faces.push_back(std::move(fe));
      }
    }
    return check_vertices() && bind_symbols();
  }

  [[nodiscard]] bool is_pole(Vertex x) const { return lay.open && (x == lay.pole_u || x == lay.pole_v); }

  bool check_vertices() {
    for (Vertex x : lay.vertices) {
      int falses = 0;
      int zeros = 0;
      for (int skel : lay.present) {
        const auto& [a, b] = lay.ends[static_cast<size_t>(skel)];
        if (a != x && b != x) continue;
        const PoleState& p = a == x ? key(skel).u : key(skel).v;
        falses += p.active ? 0 : 1;
        zeros += p.zeros;
      }
      bool outer = false;
      std::vector<Elem*> inner;
      for (auto& fe : faces) {
        for (auto& e : fe.elems) {
          if (!e.is_angle || e.vertex != x) continue;
          if (!e.switch_angle) ++zeros;
          if (fe.closed) {
            inner.push_back(&e);
          } else {
            outer = true;
          }
        }
      }
      if (ctx.switches.is_switch(x)) {
        if (falses > 1) return false;
        has_false_flag[x] = falses == 1;
        if (falses == 1) continue;
        Var var;
        var.can_defer = is_pole(x) || outer;
        const int id = static_cast<int>(vars.size());
        for (Elem* e : inner) {
          e->var = id;
          e->option = var.options++;
        }
        if (var.options == 0 && !var.can_defer) return false;
        for (auto& fe : faces) {
          if (fe.closed) continue;
          for (auto& e : fe.elems) {
            if (e.is_angle && e.vertex == x) e.var = id;
          }
        }
        vertex_var[x] = id;
        vars.push_back(var);
      } else {
        if (is_pole(x)) {
          if (zeros > 2) return false;
          pole_zeros[x] = zeros;
        } else if (zeros != 2) {
          return false;
        }
      }
    }
    return true;
  }

  // Undecided child symbols: one variable per vertex, its options are the
  // occurrences inside closed faces.
  bool bind_symbols() {
    std::map<Vertex, int> var_of;
    for (auto& fe : faces) {
      for (auto& e : fe.elems) {
        if (e.is_angle || !e.sym.undecided()) continue;
        auto [it, fresh] = var_of.try_emplace(e.vertex, static_cast<int>(vars.size()));
        if (fresh) vars.push_back(Var{});
        Var& var = vars[static_cast<size_t>(it->second)];
        e.var = it->second;
        if (fe.closed) {
          e.option = var.options++;
        } else {
          var.can_defer = true;
        }
      }
    }
    for (auto [x, id] : var_of) {
      const Var& var = vars[static_cast<size_t>(id)];
      if (var.options == 0 && !var.can_defer) return false;
    }
    return true;
  }

  Signature open_signature(const FaceElems& fe, const std::vector<int>& choice) const {
    Signature sigma;
    for (const Elem& e : fe.elems) {
      const bool deferred = e.var >= 0 && choice[static_cast<size_t>(e.var)] == vars[static_cast<size_t>(e.var)].options;
      if (e.is_angle) {
        if (!e.switch_angle) continue;
        sigma.push_back(angle_symbol(e, deferred));
      } else {
        sigma.push_back(e.sym.undecided() && deferred ? e.sym : localized(e.sym));
      }
    }
    return sigma;
  }

  PoleState pole_state(Vertex x, Dir dir_uv, Dir dir_vu, const std::vector<int>& choice) const {
    PoleState p;
    p.dir_uv = dir_uv;
    p.dir_vu = dir_vu;
    if (ctx.switches.is_switch(x)) {
      auto it = vertex_var.find(x);
      p.active = it != vertex_var.end() &&
                 choice[static_cast<size_t>(it->second)] == vars[static_cast<size_t>(it->second)].options;
    } else {
      p.zeros = pole_zeros.at(x);
    }
    return p;
  }

  TableKey result_key(const std::vector<int>& choice) const {
    const FaceElems& left = faces[faces.size() - 2];
    const FaceElems& right = faces[faces.size() - 1];
    TableKey out;
    out.sigma1 = open_signature(left, choice);
    out.sigma2 = open_signature(right, choice);
    const DartRef l0 = lay.left.front();
    const DartRef l1 = lay.left.back();
    const DartRef r0 = lay.right.front();
    const DartRef r1 = lay.right.back();
    out.u = pole_state(lay.pole_u, first_dir(key(l0.skel), l0.forward), last_dir(key(r1.skel), r1.forward), choice);
    out.v = pole_state(lay.pole_v, last_dir(key(l1.skel), l1.forward), first_dir(key(r0.skel), r0.forward), choice);
    return out;
  }
};

void for_each_selection(const DpContext& ctx, const Layout& lay, const std::vector<int>& child_ids,
                        const std::vector<Table>& tables,
                        const std::function<void(const Selection&)>& visit) {
  Selection sel;
  sel.keys.assign(lay.ends.size(), nullptr);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == lay.present.size()) {
      visit(sel);
      return;
    }
    const int skel = lay.present[i];
    const Table& table = tables[static_cast<size_t>(child_ids[static_cast<size_t>(skel)])];
    for (const auto& [key, entry] : table) {
      if (sel.cost + entry.cost > ctx.k) continue;
      sel.keys[static_cast<size_t>(skel)] = &key;
      sel.cost += entry.cost;
      rec(i + 1);
      sel.cost -= entry.cost;
    }
    sel.keys[static_cast<size_t>(skel)] = nullptr;
  };
  rec(0);
}

void process_embedding(const DpContext& ctx, int id, const RotationSystem& rs,
                       const std::vector<Table>& tables, Table& out) {
  const SpqrNode& node = ctx.tree.node(id);
  const Layout lay = make_layout(node, rs);
  std::vector<int> child_ids(node.skeleton.size(), -1);
  for (size_t i = 1; i < node.skeleton.size(); ++i) child_ids[i] = node.skeleton[i].child;
  for_each_selection(ctx, lay, child_ids, tables, [&](const Selection& sel) {
    Combiner comb{ctx, lay, sel, {}, {}, {}, {}, {}};
    if (!comb.build()) return;
    enumerate_leaves(comb.vars, comb.faces, ctx.k - sel.cost, ctx.stats, [&](const Leaf& leaf) {
      TableKey key = comb.result_key(leaf.choice);
      if (!is_short(key.sigma1, ctx.k) || !is_short(key.sigma2, ctx.k)) {
        if (ctx.stats) ++ctx.stats->long_signatures_discarded;
        return;
      }
      Backpointer back;
      std::vector<Edge> witness = leaf.edges;
      for (int skel : lay.present) {
        const int child = child_ids[static_cast<size_t>(skel)];
        const TableKey& ck = *sel.keys[static_cast<size_t>(skel)];
        back.children.emplace_back(child, ck);
        const auto& cw = tables[static_cast<size_t>(child)].at(ck).witness;
        witness.insert(witness.end(), cw.begin(), cw.end());
      }
      back.local = leaf.edges;
      std::sort(back.local.begin(), back.local.end());
      offer(out, key, sel.cost + leaf.cost, std::move(witness), std::move(back));
    });
  });
}

// Does the skeleton embedding agree with the fixed rotation of g?
bool matches_fixed(const DpContext& ctx, int id, const RotationSystem& rs) {
  if (!ctx.fixed) return true;
  for (Vertex x = 0; x < rs.vertex_count(); ++x) {
    const auto& want = rs.rotation[static_cast<size_t>(x)];
    if (want.empty()) continue;
    std::vector<int> seq;
    for (EdgeId e : ctx.fixed->rotation.rotation[static_cast<size_t>(x)]) {
      const int idx = ctx.tree.skeleton_index_of(id, e);
      if (seq.empty() || seq.back() != idx) seq.push_back(idx);
    }
    while (seq.size() > 1 && seq.front() == seq.back()) seq.pop_back();
    if (seq.size() != want.size()) return false;
    bool found = false;
    for (size_t shift = 0; shift < seq.size() && !found; ++shift) {
      found = true;
      for (size_t i = 0; i < seq.size() && found; ++i) {
        found = seq[(i + shift) % seq.size()] == want[i];
      }
    }
    if (!found) return false;
  }
  return true;
}

void record(const DpContext& ctx, const Table& table) {
  if (!ctx.stats) return;
  ctx.stats->entries_stored += static_cast<long long>(table.size());
  for (const auto& [key, entry] : table) {
    if (!is_short(key.sigma1, ctx.k) || !is_short(key.sigma2, ctx.k)) ++ctx.stats->stored_long_signatures;
  }
}

}  // namespace

Table process_q_node(const DpContext& ctx, int id) {
  const SpqrNode& node = ctx.tree.node(id);
  const Edge& e = ctx.tree.graph().edge(node.edge);
  TableKey key;
  key.u.dir_uv = key.u.dir_vu = dir_at(e, node.pole_u);
  key.v.dir_uv = key.v.dir_vu = dir_at(e, node.pole_v);
  Table table;
  table[key] = TableEntry{};
  return table;
}

Table process_s_node(const DpContext& ctx, int id, const std::vector<Table>& tables) {
  Table out;
  const SpqrNode& node = ctx.tree.node(id);
  for (const auto& rs : skeleton_embeddings(node, ctx.tree.graph().vertex_count())) {
    process_embedding(ctx, id, rs, tables, out);
  }
  record(ctx, out);
  return out;
}

std::vector<int> prune_p_children(const DpContext& ctx, int id, const std::vector<Table>& tables) {
  const SpqrNode& node = ctx.tree.node(id);
  const int t = 4 * ctx.k + 10;
  int empties = 0;
  std::vector<int> kept;
  for (size_t i = 1; i < node.skeleton.size(); ++i) {
    const int child = node.skeleton[i].child;
    const Table& table = tables[static_cast<size_t>(child)];
    const bool empty_only =
        ctx.tree.node(child).kind != NodeKind::Q && !table.empty() &&
        std::all_of(table.begin(), table.end(), [](const auto& kv) {
          return kv.first.sigma1.empty() && kv.first.sigma2.empty();
        });
    if (empty_only && ++empties > t + 1) continue;
    kept.push_back(static_cast<int>(i));
  }
  return kept;
}

Table process_p_node(const DpContext& ctx, int id, const std::vector<Table>& tables) {
  Table out;
  const SpqrNode& node = ctx.tree.node(id);
  std::vector<int> order = prune_p_children(ctx, id, tables);
  do {
    RotationSystem rs = p_node_rotation(node, order, ctx.tree.graph().vertex_count());
    if (matches_fixed(ctx, id, rs)) process_embedding(ctx, id, rs, tables, out);
  } while (std::next_permutation(order.begin(), order.end()));
  record(ctx, out);
  return out;
}

Table process_r_node(const DpContext& ctx, int id, const std::vector<Table>& tables) {
  Table out;
  const SpqrNode& node = ctx.tree.node(id);
  for (const auto& rs : skeleton_embeddings(node, ctx.tree.graph().vertex_count())) {
    if (matches_fixed(ctx, id, rs)) process_embedding(ctx, id, rs, tables, out);
  }
  record(ctx, out);
  return out;
}

std::vector<Table> compute_tables(const DpContext& ctx) {
  std::vector<Table> tables(static_cast<size_t>(ctx.tree.size()));
  for (int id : ctx.tree.postorder()) {
    if (id == ctx.tree.root()) continue;
    auto& slot = tables[static_cast<size_t>(id)];
    switch (ctx.tree.node(id).kind) {
      case NodeKind::Q: slot = process_q_node(ctx, id); break;
      case NodeKind::S: slot = process_s_node(ctx, id, tables); break;
      case NodeKind::P: slot = process_p_node(ctx, id, tables); break;
      case NodeKind::R: slot = process_r_node(ctx, id, tables); break;
    }
  }
  return tables;
}

std::vector<Edge> reconstruct_witness(const std::vector<Table>& tables, int node,
                                      const TableKey& key) {
  const TableEntry& entry = tables.at(static_cast<size_t>(node)).at(key);
  std::vector<Edge> out = entry.back.local;
  for (const auto& [child, ck] : entry.back.children) {
    auto sub = reconstruct_witness(tables, child, ck);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void dump_table(std::ostream& os, const SpqrTree& tree, int id, const Table& table) {
  const SpqrNode& node = tree.node(id);
  os << to_char(node.kind) << " #" << id << " poles=(" << node.pole_u << "," << node.pole_v
     << ") entries=" << table.size() << '\n';
  for (const auto& [key, entry] : table) {
    os << "  " << to_string(key) << " -> " << entry.cost << '\n';
  }
}

std::optional<RootedSolution> solve_rooted(const Digraph& g, EdgeId e, int k,
                                           const PlanarEmbedding* fixed, DpStats* stats,
                                           std::ostream* trace) {
  if (k < 0) return std::nullopt;
  const Vertex u0 = g.edge(e).tail;
  const Vertex v0 = g.edge(e).head;
  if (g.edge_count() == 1) return RootedSolution{};

  std::vector<bool> right_choices{true, false};
  if (fixed) {
    right_choices.clear();
    const auto faces = enumerate_faces(*fixed);
    for (const Corner& c : faces.at(static_cast<size_t>(fixed->external_face)).boundary) {
      if (c.leaving == e) right_choices.push_back(c.vertex == u0);
    }
    if (right_choices.empty()) return std::nullopt;
  }

  const SpqrTree tree = build_spqr(g, e);
  DpContext ctx(tree, k, fixed, stats);
  const std::vector<Table> tables = compute_tables(ctx);
  if (trace) {
    for (int id : tree.postorder()) {
      if (id != tree.root()) dump_table(*trace, tree, id, tables[static_cast<size_t>(id)]);
    }
  }

  const int xi = tree.node(tree.root()).children.at(0);
  TableKey edge_key;
  edge_key.u.dir_uv = edge_key.u.dir_vu = Dir::Out;
  edge_key.v.dir_uv = edge_key.v.dir_vu = Dir::In;

  std::optional<RootedSolution> best;
  for (bool right : right_choices) {
    const Layout lay = make_root_layout(u0, v0, g.vertex_count(), right);
    for (const auto& [key, entry] : tables[static_cast<size_t>(xi)]) {
      Selection sel;
      sel.keys = {&edge_key, &key};
      sel.cost = entry.cost;
      Combiner comb{ctx, lay, sel, {}, {}, {}, {}, {}};
      if (!comb.build()) continue;
      enumerate_leaves(comb.vars, comb.faces, k - entry.cost, stats, [&](const Leaf& leaf) {
        RootedSolution sol;
        sol.cost = entry.cost + leaf.cost;
        sol.witness = reconstruct_witness(tables, xi, key);
        sol.witness.insert(sol.witness.end(), leaf.edges.begin(), leaf.edges.end());
        std::sort(sol.witness.begin(), sol.witness.end());
        if (!best || std::tie(sol.cost, sol.witness) < std::tie(best->cost, best->witness)) best = std::move(sol);
      });
    }
  }
  if (trace) {
    *trace << "root edge " << u0 << "->" << v0 << ": ";
    if (best) {
      *trace << best->cost << '\n';
    } else {
      *trace << "none\n";
    }
  }
  return best;
}

SolveResult solve(const Digraph& g, int k, const SolveOptions& options) {
  SolveResult result;
  const Precheck pre = precheck(g, k);
  if (!pre.passed()) {
    result.rejected = pre.reject;
    return result;
  }
  const bool short_circuit =
      g.edge_count() == 1 || (k == 0 && !options.fixed_embedding && !options.ref_edge && !options.trace);
  if (short_circuit) {
    if (is_st_planar(g)) {
      result.yes = true;
      result.min_edges = 0;
      result.witness = std::vector<Edge>{};
    }
    return result;
  }

  std::vector<EdgeId> roots;
  if (options.ref_edge) {
    roots.push_back(*options.ref_edge);
  } else {
    roots.resize(static_cast<size_t>(g.edge_count()));
    std::iota(roots.begin(), roots.end(), 0);
  }
  std::vector<std::optional<RootedSolution>> found(roots.size());
  std::vector<DpStats> stats(roots.size());
  std::vector<std::ostringstream> traces(roots.size());
  auto run = [&](size_t i) {
    found[i] = solve_rooted(g, roots[i], k, options.fixed_embedding, &stats[i],
                            options.trace ? &traces[i] : nullptr);
  };
  const size_t jobs = static_cast<size_t>(std::max(1, options.jobs));
  if (jobs == 1) {
    for (size_t i = 0; i < roots.size(); ++i) run(i);
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        for (size_t i = w; i < roots.size(); i += jobs) run(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  std::optional<RootedSolution> best;
  for (size_t i = 0; i < roots.size(); ++i) {
    result.stats.merge(stats[i]);
    if (options.trace) *options.trace << traces[i].str();
    result.per_edge.push_back(RootOutcome{roots[i], found[i] ? std::optional<int>(found[i]->cost) : std::nullopt});
    if (found[i] && (!best || std::tie(found[i]->cost, found[i]->witness) < std::tie(best->cost, best->witness))) {
      best = found[i];
    }
  }
  if (best) {
    result.yes = true;
    result.min_edges = best->cost;
    result.witness = best->witness;
  }
  return result;
}

}  // namespace stpec
