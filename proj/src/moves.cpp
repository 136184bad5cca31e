#include "tri/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tri/builder.hpp"
#include "tri/surgery.hpp"

namespace tri {

namespace {

int named_strand(const Surface& m, const std::string& name) {
  int s = m.find_strand(name);
  check(s >= 0, "no strand named " + name);
  return s;
}

bool ring_flagged(const Surface& m, int s) {
  return m.strand(s).boundary || m.strand(s).frontier;
}

Family fam_of(int idx) {
  switch (idx % 3) {
    case 0: return Family::A;
    case 1: return Family::B;
    default: return Family::C;
  }
}

std::string fresh_name(const Surface& m, std::string base) {
  while (m.find_strand(base) >= 0) base += "'";
  return base;
}

// the strand carrying the non-guide darts of an attach vertex
int attach_host(const Surface& m, Dart guide_dart) {
  int host = -1;
  for (Dart e : m.vertex_orbit(guide_dart)) {
    if (e == guide_dart) continue;
    int s = m.owner(e);
    check(host == -1 || host == s, "guide end touches two strands");
    host = s;
  }
  check(host >= 0, "guide end attached to nothing");
  return host;
}

}  // namespace

// ---------------------------------------------------------------- dehn twist

void dehn_twist(Diagram& d, const std::string& curve, int sign) {
  Surface& m = d.m;
  int c = named_strand(m, curve);
  const Strand& st = m.strand(c);
  check(st.kind == StrandKind::Closed,
        "cannot twist along " + curve + ", it is an arc");
  check(st.family != Family::Scaffold, "cannot twist along scaffolding");
  for (Dart w : m.strand_walk(c)) {
    if (m.vertex_kind(w) != VertexKind::Crossing) continue;
    int t = m.owner(m.next(w));
    if (ring_flagged(m, t)) fail(curve + " runs into the frontier");
  }
  twist_strand(m, c, sign);
  normalize(m);
}

// -------------------------------------------------------------- handle slide

namespace {

// darts strictly between out and in at out's vertex, rotation order
std::vector<Dart> sector_spokes(const Surface& m, Dart out, Dart in) {
  std::vector<Dart> s;
  for (Dart e = m.next(out); e != in; e = m.next(e)) {
    check(e != out, "spoke sector wrapped all the way around");
    s.push_back(e);
  }
  return s;
}

// closed walk reoriented and rotated so that walk[0] == out_at
std::vector<Dart> oriented_cycle(const Surface& m, int s, Dart out_at) {
  auto w = m.strand_walk(s);
  auto pos = std::find(w.begin(), w.end(), out_at);
  if (pos == w.end()) {
    std::vector<Dart> r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(m.twin(*it));
    w = std::move(r);
    pos = std::find(w.begin(), w.end(), out_at);
    check(pos != w.end(), "dart is not on the strand");
  }
  std::rotate(w.begin(), pos, w.end());
  return w;
}

// pushoff spokes around a closed walk, skipping the sector at vertex 0;
// crossed head-on, each spoke is entered from the face ahead of it, so the
// pushoff runs against the walk order
std::vector<Dart> circuit_spokes(const Surface& m, const std::vector<Dart>& w) {
  std::vector<Dart> out;
  int n = (int)w.size();
  for (int i = n - 1; i >= 1; i--)
    for (Dart e : sector_spokes(m, w[i], m.twin(w[i - 1])))
      out.push_back(e);
  return out;
}

// the two banks of a band running along the guide: fwd crosses each
// transversal on the way out, bwd on the way back; the outbound bank takes
// the far-side sectors and with head-on crossings the return bank has to run
// against the guide
void corridor_banks(const Surface& m, const std::vector<Dart>& gw,
                    std::vector<Dart>& fwd, std::vector<Dart>& bwd) {
  int n = (int)gw.size();
  for (int i = 1; i < n; i++)
    for (Dart e : sector_spokes(m, m.twin(gw[i - 1]), gw[i]))
      fwd.push_back(e);
  for (int i = n - 1; i >= 1; i--)
    for (Dart e : sector_spokes(m, gw[i], m.twin(gw[i - 1])))
      bwd.push_back(e);
}

}  // namespace

void handle_slide(Diagram& d, const std::string& moving,
                  const std::string& over, const std::string& guide) {
  Surface& m = d.m;
  int mov = named_strand(m, moving);
  int ovr = named_strand(m, over);
  int gid = named_strand(m, guide);
  check(mov != ovr, "cannot slide " + moving + " over itself");
  Family fam = m.strand(mov).family;
  check(family_curvelike(fam), moving + " is not a diagram strand");
  check(m.strand(ovr).family == fam,
        moving + " and " + over + " lie in different families");
  check(m.strand(ovr).kind == StrandKind::Closed,
        "cannot slide over " + over + ", it is an arc");
  check(m.strand(gid).family == Family::Guide, guide + " is not a guide");
  check(m.strand(gid).kind == StrandKind::Arc, guide + " is not a guide arc");
  check(crossing_count(m, mov, ovr) == 0,
        moving + " and " + over + " must be disjoint");

  auto gw = m.strand_walk(gid);
  check(!gw.empty() && !m.strand_walk_closed(gid), guide + " is degenerate");
  {
    int h0 = attach_host(m, gw.front());
    int h1 = attach_host(m, m.twin(gw.back()));
    if (h0 == ovr && h1 == mov) {
      std::vector<Dart> r;
      for (auto it = gw.rbegin(); it != gw.rend(); ++it)
        r.push_back(m.twin(*it));
      gw = std::move(r);
    } else {
      check(h0 == mov && h1 == ovr,
            guide + " does not join " + moving + " to " + over);
    }
  }
  for (int i = 1; i < (int)gw.size(); i++) {
    VertexKind k = m.vertex_kind(gw[i]);
    if (k == VertexKind::Marker) continue;
    check(k == VertexKind::Crossing,
          guide + " is tangled at a " + vertex_kind_name(k) + " vertex");
    int t = m.owner(m.next(gw[i]));
    check(t != gid, guide + " crosses itself");
    check(m.strand(t).family != fam,
          guide + " crosses " + m.strand(t).name + " of the sliding family");
  }

  Dart g_at_mov = gw.front();
  Dart g_at_ovr = m.twin(gw.back());
  check(m.owner(m.prev(g_at_ovr)) == ovr, "guide end out of position");

  // band route: around moving, out one bank, around a pushoff of over,
  // back the other bank
  std::vector<Dart> fwd, bwd;
  corridor_banks(m, gw, fwd, bwd);
  auto ow = oriented_cycle(m, ovr, m.prev(g_at_ovr));
  std::vector<Dart> over_part = circuit_spokes(m, ow);

  bool mov_closed = m.strand(mov).kind == StrandKind::Closed;
  std::string tmp = fresh_name(m, moving + ".slid");
  Surface backup = m;
  int laid = -1;
  std::string lay_err;
  if (mov_closed) {
    check(m.owner(m.prev(g_at_mov)) == mov, "guide end out of position");
    auto mw = oriented_cycle(m, mov, m.prev(g_at_mov));
    std::vector<Dart> route = circuit_spokes(m, mw);
    route.insert(route.end(), fwd.begin(), fwd.end());
    route.insert(route.end(), over_part.begin(), over_part.end());
    route.insert(route.end(), bwd.begin(), bwd.end());
    try {
      laid = lay_closed(m, tmp, fam, route);
    } catch (const Error& e) {
      m = backup;
      lay_err = e.what();
    }
  } else {
    // arc: walk oriented so the guide leaves on the pushoff side, then the
    // band is spliced into the pushoff at the attach vertex
    auto aw = m.strand_walk(mov);
    Dart want = m.prev(g_at_mov);
    int at = -1;
    for (int i = 0; i < (int)aw.size(); i++)
      if (aw[i] == want) at = i;
    if (at < 0) {
      std::vector<Dart> r;
      for (auto it = aw.rbegin(); it != aw.rend(); ++it)
        r.push_back(m.twin(*it));
      aw = std::move(r);
      for (int i = 0; i < (int)aw.size(); i++)
        if (aw[i] == want) at = i;
    }
    check(at > 0, "guide attaches at the very end of " + moving);
    int M = (int)aw.size();
    // the pushoff runs against the arc, so it anchors by the far endpoint
    // and finishes by the near one, detouring at the attach vertex
    std::vector<Dart> route;
    for (int i = M - 1; i > at; i--)
      for (Dart e : sector_spokes(m, aw[i], m.twin(aw[i - 1])))
        route.push_back(e);
    route.insert(route.end(), fwd.begin(), fwd.end());
    route.insert(route.end(), over_part.begin(), over_part.end());
    route.insert(route.end(), bwd.begin(), bwd.end());
    for (int i = at - 1; i >= 1; i--)
      for (Dart e : sector_spokes(m, aw[i], m.twin(aw[i - 1])))
        route.push_back(e);
    Dart from = m.prev(m.twin(aw[M - 1]));
    Dart to = m.next(aw[0]);
    try {
      laid = lay_arc(m, tmp, fam, from, route, to);
    } catch (const Error& e) {
      m = backup;
      lay_err = e.what();
    }
  }
  check(laid >= 0, "band sum does not embed: " + lay_err);

  delete_strand(m, mov);
  delete_strand(m, gid);
  m.strand_mut(laid).name = moving;
  normalize(m);
  for (int s : m.live_strands()) {
    if (s == laid || m.strand(s).family != fam) continue;
    check(crossing_count(m, laid, s) == 0,
          "band sum is not embedded, " + moving + " still meets " +
              m.strand(s).name);
  }
}

// ------------------------------------------------- stabilization, both kinds

namespace {

// first eligible all-scaffold face (hint picks among them); the chosen
// corner's vertex must be purely scaffold so the new handle lands on the page
// skeleton and nowhere near a curve
// a corner of the face whose vertex carries only scaffolding, so the handle
// block slots into the rotation without splitting any strand's passage. If
// the face has no such corner, a marker minted on one of its scaffold edges
// provides one.
Dart stab_corner(Surface& m, int face_hint) {
  int idx = 0;
  for (auto& f : m.all_faces()) {
    if (m.is_hole_face(f[0])) continue;
    Dart at = kNoDart, cut = kNoDart;
    for (Dart e : f) {
      if (m.strand(m.owner(e)).family != Family::Scaffold) continue;
      if (cut == kNoDart) cut = e;
      bool pure = true;
      for (Dart v : m.vertex_orbit(e))
        if (m.strand(m.owner(v)).family != Family::Scaffold) pure = false;
      if (pure && at == kNoDart) at = e;
    }
    if (at == kNoDart && cut == kNoDart) continue;
    if (face_hint >= 0 && face_hint != idx) {
      idx++;
      continue;
    }
    if (at != kNoDart) return at;
    return m.subdivide(cut).second;
  }
  fail(face_hint < 0 ? "no strand-free face to stabilize at"
                     : "stabilization site out of range");
}

std::array<std::string, 3> stab_core(Diagram& d, int dual_idx, int face_hint) {
  Surface& m = d.m;
  Dart w = stab_corner(m, face_hint);
  Dart p = m.prev(w);

  int n = (int)d.loops.size() + 1;
  int sA = m.add_strand(fresh_name(m, "A" + std::to_string(n)),
                        Family::Scaffold, StrandKind::Closed);
  int sB = m.add_strand(fresh_name(m, "B" + std::to_string(n)),
                        Family::Scaffold, StrandKind::Closed);
  Dart a1 = m.new_dart(sA), b1 = m.new_dart(sB);
  Dart a2 = m.new_dart(sA), b2 = m.new_dart(sB);
  m.rot_insert_after(p, a1);
  m.rot_insert_after(a1, b1);
  m.rot_insert_after(b1, a2);
  m.rot_insert_after(a2, b2);
  m.set_twin(a1, a2);
  m.set_twin(b1, b2);
  d.loops.push_back({sA, sB});

  const char* letter = "abc";
  auto cname = [&](int idx) {
    return fresh_name(m, std::string(1, letter[idx]) + "s" + std::to_string(n));
  };
  std::string n1 = cname((dual_idx + 1) % 3);
  int c1 = lay_parallel(m, n1, fam_of(dual_idx + 1), sB);
  std::string n2 = cname((dual_idx + 2) % 3);
  int c2 = lay_parallel(m, n2, fam_of(dual_idx + 2), c1);
  std::string nd = cname(dual_idx);
  int cd = lay_parallel(m, nd, fam_of(dual_idx), sA);

  check(crossing_count(m, c1, c2) == 0, "stabilization pair not parallel");
  check(std::abs(algebraic_intersection(m, cd, c1)) == 1 &&
            std::abs(algebraic_intersection(m, cd, c2)) == 1,
        "stabilization dual misses its pair");
  return {nd, n1, n2};
}

}  // namespace

std::array<std::string, 3> stabilize(Diagram& d, int type, int face_hint) {
  check(type >= 1 && type <= 3, "stabilization type is 1, 2 or 3");
  check(d.variant != Variant::RelativeArced,
        "interior stabilization applies to closed diagrams and patches");
  TrisectionParams pre;
  if (d.variant == Variant::Closed) pre = validate_closed(d);
  auto names = stab_core(d, (type + 2) % 3, face_hint);
  if (d.variant == Variant::Closed) {
    TrisectionParams post = validate_closed(d);
    check(post.g == pre.g + 1, "stabilization failed to add genus");
    int bump[4] = {0, post.k1 - pre.k1, post.k2 - pre.k2, post.k3 - pre.k3};
    int want = type == 1 ? 2 : type == 2 ? 3 : 1;
    for (int j = 1; j <= 3; j++)
      check(bump[j] == (j == want ? 1 : 0), "stabilization skewed the sectors");
  }
  return names;
}

std::array<std::string, 3> boundary_stabilize(Diagram& d, int sector,
                                              int face_hint) {
  check(sector >= 1 && sector <= 3, "boundary sector is 1, 2 or 3");
  check(d.variant == Variant::RelativeArced,
        "boundary stabilization needs a boundary");
  TrisectionParams pre = validate_relative(d);
  auto names = stab_core(d, (sector + 1) % 3, face_hint);
  TrisectionParams post = validate_relative(d);
  check(post.g == pre.g + 1 && post.p == pre.p && post.b == pre.b,
        "boundary stabilization skewed the page data");
  int bump[4] = {0, post.k1 - pre.k1, post.k2 - pre.k2, post.k3 - pre.k3};
  for (int j = 1; j <= 3; j++)
    check(bump[j] == (j == sector ? 1 : 0),
          "boundary stabilization skewed the sectors");
  return names;
}

// ------------------------------------------------------------ destabilization

namespace {

void scaffold_delete(Surface& m, int s) {
  auto ds = m.strand_darts(s);
  for (Dart dd : ds) m.rot_remove(dd);
  for (Dart dd : ds) m.kill_dart(dd);
  m.remove_strand(s);
}

// connected components of the dart set under next and twin
std::vector<std::vector<Dart>> dart_components(const Surface& m) {
  std::set<Dart> seen;
  std::vector<std::vector<Dart>> out;
  for (Dart d0 : m.darts()) {
    if (seen.count(d0)) continue;
    std::vector<Dart> comp, stack = {d0};
    seen.insert(d0);
    while (!stack.empty()) {
      Dart x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Dart y : {m.next(x), m.twin(x)})
        if (!seen.count(y)) {
          seen.insert(y);
          stack.push_back(y);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

int component_euler(const Surface& m, const std::vector<Dart>& comp) {
  std::set<Dart> vreps, freps;
  for (Dart d : comp) {
    vreps.insert(m.vertex_rep(d));
    freps.insert(m.face_rep(d));
  }
  return (int)vreps.size() - (int)comp.size() / 2 + (int)freps.size();
}

// b and c must cobound an annulus clear of everything else; checked on a
// probe copy by cutting both and looking for the right component
void check_annulus(const Surface& m, int A, int B, int C,
                   const std::string& bn, const std::string& cn) {
  Surface probe = m;
  delete_strand(probe, A);
  auto rb = cut_along(probe, B);
  auto rc = cut_along(probe, C);
  std::set<int> bring(rb.rings.begin(), rb.rings.end());
  std::set<int> cring(rc.rings.begin(), rc.rings.end());
  std::string blocker;
  for (auto& comp : dart_components(probe)) {
    std::set<int> owners;
    for (Dart d : comp) owners.insert(probe.owner(d));
    int nb = 0, nc = 0, nring = 0;
    std::vector<std::string> bad;
    for (int s : owners) {
      if (bring.count(s)) nb++;
      if (cring.count(s)) nc++;
      if (ring_flagged(probe, s)) nring++;
      if (probe.strand(s).family != Family::Scaffold)
        bad.push_back(probe.strand(s).name);
    }
    if (nb == 0 || nc == 0) continue;
    if (!bad.empty()) {
      std::sort(bad.begin(), bad.end());
      blocker = bad.front();
      continue;
    }
    if (nb == 1 && nc == 1 && nring == 2 && component_euler(probe, comp) == 2)
      return;
  }
  if (!blocker.empty())
    fail("no clear annulus between " + bn + " and " + cn + ", blocked by " +
         blocker);
  fail(bn + " and " + cn + " do not cobound an annulus");
}

// post-surgery debris: crossing-free severed pieces, scaffold markers, and
// bare circles bounding empty disks (the capped scars and the emptied handle
// loop). Anything a curve still runs through stays put.
void tidy_scaffold(Diagram& d, const std::vector<int>& debris) {
  Surface& m = d.m;
  std::set<int> junk(debris.begin(), debris.end());
  // a handle loop whose partner was severed by the surgery is junk too; any
  // other closed scaffolding is the page itself and stays
  for (auto& lp : d.loops) {
    bool d0 = lp[0] >= m.strand_count() || m.strand(lp[0]).dead;
    bool d1 = lp[1] >= m.strand_count() || m.strand(lp[1]).dead;
    if (d0 != d1) junk.insert(d0 ? lp[1] : lp[0]);
  }
  for (;;) {
    bool did = false;
    for (int s : m.live_strands()) {
      if (m.strand(s).family != Family::Scaffold) continue;
      if (m.strand(s).kind == StrandKind::Arc) {
        if (!junk.count(s)) continue;
        if (strand_crossing_vertices(m, s) != 0) continue;
        scaffold_delete(m, s);
        did = true;
        break;
      }
      if (!junk.count(s)) continue;
      if (ring_flagged(m, s)) continue;
      bool pure = false;
      for (Dart dd : m.strand_darts(s))
        if (m.face_pure(dd, s)) pure = true;
      if (!pure) continue;
      bool safe = true;
      std::set<Dart> vs;
      for (Dart dd : m.strand_darts(s)) vs.insert(m.vertex_rep(dd));
      for (Dart v : vs) {
        int others = 0;
        bool all_scaffold = true;
        for (Dart e : m.vertex_orbit(v)) {
          if (m.owner(e) == s) continue;
          others++;
          if (m.strand(m.owner(e)).family != Family::Scaffold)
            all_scaffold = false;
        }
        if (others == 1 || (others >= 2 && !all_scaffold)) safe = false;
      }
      if (!safe) continue;
      scaffold_delete(m, s);
      std::erase_if(d.loops, [&](const std::array<int, 2>& lp) {
        return lp[0] == s || lp[1] == s;
      });
      did = true;
      break;
    }
    if (did) continue;
    for (auto& orb : m.all_vertices()) {
      if (orb.size() != 2) continue;
      if (m.owner(orb[0]) != m.owner(orb[1])) continue;
      if (m.strand(m.owner(orb[0])).family != Family::Scaffold) continue;
      if (m.twin(orb[0]) == orb[1]) continue;  // one-vertex circle
      Dart tx = m.twin(orb[0]), ty = m.twin(orb[1]);
      if (m.vertex_rep(tx) == m.vertex_rep(ty) && m.vertex_degree(tx) == 4 &&
          m.next(m.next(tx)) == ty)
        continue;  // merged edge would double back on one crossing
      m.dissolve_marker(orb[0]);
      did = true;
      break;
    }
    if (!did) return;
  }
}

}  // namespace

void destabilize(Diagram& d, const std::string& an, const std::string& bn,
                 const std::string& cn) {
  Surface& m = d.m;
  int A = named_strand(m, an), B = named_strand(m, bn),
      C = named_strand(m, cn);
  {
    std::set<Family> fams{m.strand(A).family, m.strand(B).family,
                          m.strand(C).family};
    check(fams.size() == 3 && !fams.count(Family::Scaffold) &&
              !fams.count(Family::Guide) && !fams.count(Family::Grey),
          "destabilization takes one curve from each family");
  }
  for (int s : {A, B, C}) {
    check(m.strand(s).kind == StrandKind::Closed,
          m.strand(s).name + " is an arc, destabilization triples are closed");
    check(crossing_count(m, s, s) == 0, m.strand(s).name + " crosses itself");
    for (Dart w : m.strand_walk(s))
      check(m.vertex_kind(w) != VertexKind::Attach,
            "a guide is attached to " + m.strand(s).name);
  }
  check(crossing_count(m, A, B) == 1,
        an + " must meet " + bn + " exactly once");
  check(crossing_count(m, A, C) == 1,
        an + " must meet " + cn + " exactly once");
  check(crossing_count(m, B, C) == 0, bn + " and " + cn + " must not meet");
  for (int s : m.live_strands()) {
    if (s == A || s == B || s == C) continue;
    if (m.strand(s).family == Family::Scaffold) continue;
    for (int x : {A, B, C})
      check(crossing_count(m, x, s) == 0,
            "destabilization blocked, " + m.strand(x).name + " meets " +
                m.strand(s).name);
  }
  check_annulus(m, A, B, C, bn, cn);

  delete_strand(m, B);
  delete_strand(m, C);
  std::set<int> before;
  for (int s : m.live_strands()) before.insert(s);
  auto cut = cut_along(m, A);
  for (int ring : cut.rings) cap_ring(m, ring);
  std::vector<int> debris;
  for (int s : m.live_strands())
    if (!before.count(s) &&
        std::find(cut.rings.begin(), cut.rings.end(), s) == cut.rings.end())
      debris.push_back(s);
  tidy_scaffold(d, debris);
  // the capped scars: once the severed pieces are gone they are bare circles
  // bounding disks, so they vanish; a scar that still carries attachments
  // stays behind as plain scaffolding
  for (int ring : cut.rings) {
    bool bare = true;
    for (Dart dd : m.strand_darts(ring))
      for (Dart e : m.vertex_orbit(dd))
        if (m.owner(e) != ring) bare = false;
    if (bare) scaffold_delete(m, ring);
  }
  tidy_scaffold(d, debris);
  std::erase_if(d.loops, [&](const std::array<int, 2>& lp) {
    return lp[0] >= m.strand_count() || lp[1] >= m.strand_count() ||
           m.strand(lp[0]).dead || m.strand(lp[1]).dead;
  });
}

}  // namespace tri
