#include "tri/diagram.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "tri/homology.hpp"
#include "tri/surgery.hpp"

namespace tri {

namespace {

const char kFamilyTag[] = "abcSGY";

std::string fam_word(Family f) {
  switch (f) {
    case Family::A: return "a";
    case Family::B: return "b";
    case Family::C: return "c";
    case Family::Scaffold: return "scaffold";
    case Family::Guide: return "guide";
    case Family::Grey: return "grey";
  }
  return "?";
}

}  // namespace

std::string params_str(const TrisectionParams& t) {
  std::ostringstream o;
  if (t.closed) {
    o << "(" << t.g << ";" << t.k1 << "," << t.k2 << "," << t.k3 << ")";
  } else if (t.balanced()) {
    o << "(" << t.g << "," << t.k1 << ";" << t.p << "," << t.b << ")";
  } else {
    o << "(" << t.g << "," << t.k1 << "," << t.k2 << "," << t.k3 << ";" << t.p
      << "," << t.b << ")";
  }
  return o.str();
}

std::vector<int> family_closed(const Surface& m, Family f) {
  std::vector<int> out;
  for (int s : m.live_strands())
    if (m.strand(s).family == f && m.strand(s).kind == StrandKind::Closed)
      out.push_back(s);
  return out;
}

std::vector<int> family_arcs(const Surface& m, Family f) {
  std::vector<int> out;
  for (int s : m.live_strands())
    if (m.strand(s).family == f && m.strand(s).kind == StrandKind::Arc)
      out.push_back(s);
  return out;
}

std::array<int, 2> arc_end_rings(const Surface& m, int s) {
  check(m.strand(s).kind == StrandKind::Arc,
        m.strand(s).name + " is not an arc");
  auto walk = m.strand_walk(s);
  check(!walk.empty() && !m.strand_walk_closed(s),
        m.strand(s).name + ": arc walk is broken");
  std::array<Dart, 2> ends = {walk.front(), m.twin(walk.back())};
  std::array<int, 2> out = {-1, -1};
  for (int i = 0; i < 2; i++) {
    for (Dart v : m.vertex_orbit(ends[i])) {
      int o = m.owner(v);
      if (o == s) continue;
      const Strand& st = m.strand(o);
      if (st.boundary || st.frontier) {
        out[i] = o;
        break;
      }
    }
    check(out[i] >= 0, m.strand(s).name + " does not end on a ring");
  }
  return out;
}

namespace {

void check_family_clean(const Surface& m, Family f, const std::vector<int>& ss,
                        const std::string& what) {
  for (size_t i = 0; i < ss.size(); i++)
    for (size_t j = i; j < ss.size(); j++)
      check(crossing_count(m, ss[i], ss[j]) == 0,
            what + ": " + fam_word(f) + " family strands " +
                m.strand(ss[i]).name + " and " + m.strand(ss[j]).name +
                " cross");
}

int pairing_rank(const Surface& m, const std::vector<int>& xs,
                 const std::vector<int>& ys) {
  if (xs.empty() || ys.empty()) return 0;
  std::vector<std::vector<long long>> mat(
      xs.size(), std::vector<long long>(ys.size(), 0));
  for (size_t i = 0; i < xs.size(); i++)
    for (size_t j = 0; j < ys.size(); j++)
      mat[i][j] = algebraic_intersection(m, xs[i], ys[j]);
  int r = 0;
  for (long long v : smith_diagonal(mat))
    if (v != 0) r++;
  return r;
}

}  // namespace

TrisectionParams validate_closed(const Diagram& d) {
  check(d.variant == Variant::Closed, "validate_closed: diagram is not closed");
  const Surface& m = d.m;
  m.validate_map();
  check(m.ring_strands().empty(), "validate_closed: surface has open rings");
  check(family_closed(m, Family::Guide).empty() &&
            family_arcs(m, Family::Guide).empty() &&
            family_closed(m, Family::Grey).empty() &&
            family_arcs(m, Family::Grey).empty(),
        "validate_closed: leftover guide or grey strands");
  SurfaceStats st = m.stats();
  check(st.components == 1, "validate_closed: surface not connected");
  int g = st.genus;
  std::array<std::vector<int>, 3> fam;
  for (int i = 0; i < 3; i++) {
    Family f = static_cast<Family>(i);
    check(family_arcs(m, f).empty(),
          "validate_closed: " + fam_word(f) + " family holds arcs");
    fam[i] = family_closed(m, f);
    check((int)fam[i].size() == g,
          "validate_closed: " + fam_word(f) + " family has " +
              std::to_string(fam[i].size()) + " curves on a genus " +
              std::to_string(g) + " surface");
    check_family_clean(m, f, fam[i], "validate_closed");
    Surface c = restrict_families(m, {f});
    int cutr = 0;
    for (int s : fam[i]) cutr += (int)cut_along(c, s).rings.size();
    SurfaceStats cs = c.stats();
    check(cs.components == 1,
          "validate_closed: " + fam_word(f) + " family disconnects the surface");
    check(cs.genus == 0,
          "validate_closed: " + fam_word(f) + " family is not a cut system");
    check(cutr == 2 * g && cs.holes == 2 * g,
          "validate_closed: " + fam_word(f) + " family cut circles off");
  }
  TrisectionParams t;
  t.closed = true;
  t.g = g;
  t.k1 = g - pairing_rank(m, fam[0], fam[1]);
  t.k2 = g - pairing_rank(m, fam[1], fam[2]);
  t.k3 = g - pairing_rank(m, fam[2], fam[0]);
  return t;
}

TrisectionParams validate_relative(const Diagram& d) {
  check(d.variant == Variant::RelativeArced,
        "validate_relative: diagram is not relative");
  const Surface& m = d.m;
  m.validate_map();
  check(family_closed(m, Family::Guide).empty() &&
            family_arcs(m, Family::Guide).empty() &&
            family_closed(m, Family::Grey).empty() &&
            family_arcs(m, Family::Grey).empty(),
        "validate_relative: leftover guide or grey strands");
  auto rings = m.ring_strands();
  for (int r : rings)
    check(m.strand(r).boundary && !m.strand(r).frontier,
          "validate_relative: frontier circle " + m.strand(r).name);
  int b = (int)rings.size();
  check(b >= 1, "validate_relative: no boundary rings");
  SurfaceStats st = m.stats();
  check(st.components == 1, "validate_relative: surface not connected");
  check(st.holes == b, "validate_relative: stray holes");
  int g = st.genus;

  int p = -1;
  std::array<std::vector<int>, 3> curves, arcs;
  for (int i = 0; i < 3; i++) {
    Family f = static_cast<Family>(i);
    curves[i] = family_closed(m, f);
    arcs[i] = family_arcs(m, f);
    int pf = g - (int)curves[i].size();
    check(pf >= 0, "validate_relative: too many closed curves in the " +
                       fam_word(f) + " family");
    if (i == 0) p = pf;
    check(pf == p, "validate_relative: family curve counts disagree");
    check((int)arcs[i].size() == 2 * p + b - 1,
          "validate_relative: " + fam_word(f) + " family needs " +
              std::to_string(2 * p + b - 1) + " arcs, has " +
              std::to_string(arcs[i].size()));
    for (int s : arcs[i]) arc_end_rings(m, s);
    std::vector<int> all = curves[i];
    all.insert(all.end(), arcs[i].begin(), arcs[i].end());
    check_family_clean(m, f, all, "validate_relative");

    Surface c = restrict_families(m, {f});
    std::vector<int> cutr;
    for (int s : curves[i]) {
      auto res = cut_along(c, s);
      cutr.insert(cutr.end(), res.rings.begin(), res.rings.end());
    }
    SurfaceStats mid = c.stats();
    check(mid.components == 1,
          "validate_relative: " + fam_word(f) + " curves disconnect the surface");
    check(mid.genus == p,
          "validate_relative: " + fam_word(f) + " curves do not reach the page");
    check((int)cutr.size() == 2 * (g - p) && mid.holes == b + 2 * (g - p),
          "validate_relative: " + fam_word(f) + " cut circle count off");
    for (int r : cutr) cap_ring(c, r);
    for (int s : arcs[i]) cut_along(c, s);
    SurfaceStats fin = c.stats();
    check(fin.components == 1 && fin.genus == 0 && fin.holes == 1,
          "validate_relative: " + fam_word(f) +
              " arcs do not cut the page to a disk");
  }

  int base = g + p + b - 1;
  TrisectionParams t;
  t.closed = false;
  t.g = g;
  t.p = p;
  t.b = b;
  t.k1 = base - pairing_rank(m, curves[0], curves[1]);
  t.k2 = base - pairing_rank(m, curves[1], curves[2]);
  t.k3 = base - pairing_rank(m, curves[2], curves[0]);
  return t;
}

TrisectionParams validate(const Diagram& d) {
  switch (d.variant) {
    case Variant::Closed: return validate_closed(d);
    case Variant::RelativeArced: return validate_relative(d);
    case Variant::Patch: break;
  }
  throw Error("validate: patch pieces carry no parameter contract");
}

Diagram mirror(const Diagram& d) {
  Diagram out = d;
  out.m.reverse_orientation();
  return out;
}

namespace {

// degree-2 same-owner vertex whose two edges are distinct
bool marker_at(const Surface& m, Dart u) {
  Dart v = m.next(u);
  return v != u && m.next(v) == u && m.owner(u) == m.owner(v) &&
         m.twin(u) != v;
}

std::string strand_label(const Surface& m, int s,
                         const std::map<int, std::string>& relabel) {
  auto it = relabel.find(s);
  if (it != relabel.end()) return it->second;
  const Strand& st = m.strand(s);
  std::string lab(1, kFamilyTag[(int)st.family]);
  lab += st.kind == StrandKind::Closed ? 'o' : 'i';
  if (st.boundary) lab += 'B';
  if (st.frontier) lab += 'F';
  return lab;
}

std::string encode_from(const Surface& m, Dart root,
                        const std::map<int, std::string>& relabel) {
  std::vector<int> idx(m.dart_limit(), -1);
  std::vector<Dart> order;
  idx[root] = 0;
  order.push_back(root);
  for (size_t i = 0; i < order.size(); i++) {
    Dart d = order[i];
    for (Dart y : {m.next(d), m.twin(d)}) {
      if (idx[y] == -1) {
        idx[y] = (int)order.size();
        order.push_back(y);
      }
    }
  }
  std::vector<std::pair<int, int>> firsts;  // (discovery idx, strand)
  std::vector<int> sfirst(m.strand_count(), -1);
  for (size_t i = 0; i < order.size(); i++) {
    int s = m.owner(order[i]);
    if (sfirst[s] == -1) {
      sfirst[s] = (int)i;
      firsts.push_back({(int)i, s});
    }
  }
  std::ostringstream o;
  for (Dart d : order)
    o << idx[m.next(d)] << "," << idx[m.twin(d)] << "," << sfirst[m.owner(d)]
      << ";";
  o << "|";
  for (auto& fs : firsts)
    o << fs.first << "=" << strand_label(m, fs.second, relabel) << ";";
  return o.str();
}

}  // namespace

std::string canonical_code(const Surface& min,
                           const std::map<int, std::string>& relabel) {
  Surface m = min;
  for (bool again = true; again;) {
    again = false;
    for (Dart d : m.darts()) {
      if (!marker_at(m, d)) continue;
      m.dissolve_marker(d);
      again = true;
      break;
    }
  }
  auto ds = m.darts();
  if (ds.empty()) return "empty";
  std::vector<int> cid(m.dart_limit(), -1);
  int nc = 0;
  for (Dart d : ds) {
    if (cid[d] != -1) continue;
    std::vector<Dart> stack = {d};
    cid[d] = nc;
    while (!stack.empty()) {
      Dart x = stack.back();
      stack.pop_back();
      for (Dart y : {m.twin(x), m.next(x)})
        if (cid[y] == -1) {
          cid[y] = nc;
          stack.push_back(y);
        }
    }
    nc++;
  }
  std::vector<std::string> codes(nc);
  for (Dart root : ds) {
    std::string s = encode_from(m, root, relabel);
    int c = cid[root];
    if (codes[c].empty() || s < codes[c]) codes[c] = std::move(s);
  }
  std::sort(codes.begin(), codes.end());
  std::string out = codes[0];
  for (int i = 1; i < nc; i++) out += "/" + codes[i];
  return out;
}

std::string canonical_code(const Diagram& d) { return canonical_code(d.m); }

int lay_closed_search(Surface& m, const std::string& name, Family f,
                      const std::vector<std::vector<Dart>>& options,
                      const std::function<bool(const Surface&, int)>& accept) {
  check(!options.empty(), "lay_closed_search: no crossing slots");
  for (auto& o : options) check(!o.empty(), "lay_closed_search: empty slot");
  std::vector<size_t> pick(options.size(), 0);
  Surface backup = m;
  while (true) {
    std::vector<Dart> xs(options.size());
    for (size_t i = 0; i < options.size(); i++) xs[i] = options[i][pick[i]];
    int sid = -1;
    try {
      sid = lay_closed(m, name, f, xs);
    } catch (const Error&) {
      m = backup;
    }
    if (sid >= 0) {
      if (!accept || accept(m, sid)) return sid;
      m = backup;
    }
    size_t i = 0;
    for (; i < options.size(); i++) {
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
    }
    if (i == options.size()) return -1;
  }
}

namespace {

// arc variant of the search: leading slot picks the start ring edge, trailing
// slot the end ring edge, middle slots are crossings
int lay_arc_search(Surface& m, const std::string& name, Family f,
                   const std::vector<std::vector<Dart>>& options,
                   const std::function<bool(const Surface&, int)>& accept) {
  check(options.size() >= 2, "lay_arc_search: need start and end slots");
  for (auto& o : options) check(!o.empty(), "lay_arc_search: empty slot");
  std::vector<size_t> pick(options.size(), 0);
  Surface backup = m;
  while (true) {
    std::vector<Dart> xs(options.size());
    for (size_t i = 0; i < options.size(); i++) xs[i] = options[i][pick[i]];
    std::vector<Dart> mid(xs.begin() + 1, xs.end() - 1);
    int sid = -1;
    try {
      sid = lay_arc(m, name, f, xs.front(), mid, xs.back());
    } catch (const Error&) {
      m = backup;
    }
    if (sid >= 0) {
      if (!accept || accept(m, sid)) return sid;
      m = backup;
    }
    size_t i = 0;
    for (; i < options.size(); i++) {
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
    }
    if (i == options.size()) return -1;
  }
}

Diagram page_diagram(int genus, int nrings, Variant v) {
  Diagram d;
  d.variant = v;
  PageHandles h = make_page(d.m, genus, nrings);
  d.loops = h.loops;
  return d;
}

// dual pair plus diagonal on one handle: the alpha runs along the handle's
// A loop, the beta along its B loop, and the gamma crosses all four once
void lay_handle_triple(Diagram& d, int hidx, const std::string& sfx) {
  Surface& m = d.m;
  int A = d.loops[hidx][0], B = d.loops[hidx][1];
  int al = lay_parallel(m, "alpha" + sfx, Family::A, A);
  int be = lay_parallel(m, "beta" + sfx, Family::B, B);
  check(crossing_count(m, al, be) == 1, "handle triple: dual pair misses");
  auto accept = [&](const Surface& s, int g) {
    int a = std::abs(algebraic_intersection(s, g, al));
    int b2 = std::abs(algebraic_intersection(s, g, be));
    return a == 1 && b2 == 1;
  };
  std::vector<int> rest = {B, al, be};
  std::sort(rest.begin(), rest.end());
  int gid = -1;
  do {
    std::vector<std::vector<Dart>> opts = {m.strand_darts(A)};
    for (int s : rest) opts.push_back(m.strand_darts(s));
    gid = lay_closed_search(m, "gamma" + sfx, Family::C, opts, accept);
    if (gid >= 0) break;
  } while (std::next_permutation(rest.begin(), rest.end()));
  check(gid >= 0, "handle triple: no embedding for the diagonal");
}

Diagram std_cp2() {
  Diagram d = page_diagram(1, 0, Variant::Closed);
  lay_handle_triple(d, 0, "1");
  return d;
}

Diagram std_s2xs2() {
  Diagram d = page_diagram(2, 0, Variant::Closed);
  lay_handle_triple(d, 0, "1");
  lay_handle_triple(d, 1, "2");
  return d;
}

Diagram std_s1xs3() {
  Diagram d = page_diagram(1, 0, Variant::Closed);
  int a = lay_parallel(d.m, "alpha1", Family::A, d.loops[0][0]);
  int b = lay_parallel(d.m, "beta1", Family::B, a);
  lay_parallel(d.m, "gamma1", Family::C, b);
  return d;
}

// one spanning arc per family between the two rings, all parallel
Diagram std_annulus_trivial() {
  Diagram d = page_diagram(0, 2, Variant::RelativeArced);
  Surface& m = d.m;
  auto rs = m.ring_strands();
  const char* nm[3] = {"a", "b", "c"};
  for (int i = 0; i < 3; i++) {
    int sid = lay_arc_search(
        m, nm[i], static_cast<Family>(i),
        {m.strand_darts(rs[0]), m.strand_darts(rs[1])},
        [&](const Surface& s, int arc) {
          for (int j = 0; j < (int)s.strand_count(); j++) {
            if (j == arc || s.strand(j).dead) continue;
            if (!family_curvelike(s.strand(j).family)) continue;
            if (crossing_count(s, arc, j) != 0) return false;
          }
          return true;
        });
    check(sid >= 0, "annulus piece: no parallel slot for " + std::string(nm[i]));
  }
  return d;
}

// annular surgery piece: two families parallel, the named one wound once
// around the core, crossing each of the others positively
Diagram std_piece(Family twisted) {
  Diagram d = page_diagram(0, 2, Variant::Patch);
  Surface& m = d.m;
  for (int r : m.ring_strands()) {
    m.strand_mut(r).boundary = false;
    m.strand_mut(r).frontier = true;
  }
  auto rs = m.ring_strands();
  const char* nm[3] = {"a", "b", "c"};
  std::vector<int> plain;
  for (int i = 0; i < 3; i++) {
    if (static_cast<Family>(i) == twisted) continue;
    int sid = lay_arc_search(
        m, nm[i], static_cast<Family>(i),
        {m.strand_darts(rs[0]), m.strand_darts(rs[1])},
        [&](const Surface& s, int arc) {
          for (int other : plain)
            if (crossing_count(s, arc, other) != 0) return false;
          return true;
        });
    check(sid >= 0, "surgery piece: no parallel slot for " + std::string(nm[i]));
    plain.push_back(sid);
  }
  auto accept = [&](const Surface& s, int arc) {
    return algebraic_intersection(s, arc, plain[0]) == 1 &&
           algebraic_intersection(s, arc, plain[1]) == 1;
  };
  int tw = -1;
  for (int ord = 0; ord < 2 && tw < 0; ord++) {
    std::vector<std::vector<Dart>> opts = {m.strand_darts(rs[0])};
    opts.push_back(m.strand_darts(plain[ord]));
    opts.push_back(m.strand_darts(plain[1 - ord]));
    opts.push_back(m.strand_darts(rs[1]));
    tw = lay_arc_search(m, nm[(int)twisted], twisted, opts, accept);
  }
  check(tw >= 0, "surgery piece: no wound arc for family " + fam_word(twisted));
  return d;
}

}  // namespace

Diagram standard(const std::string& name) {
  if (name == "cp2") return std_cp2();
  if (name == "s2xs2") return std_s2xs2();
  if (name == "s1xs3") return std_s1xs3();
  if (name == "s4_trivial") return page_diagram(0, 0, Variant::Closed);
  if (name == "b4_arced") return page_diagram(0, 1, Variant::RelativeArced);
  if (name == "annulus_trivial") return std_annulus_trivial();
  if (name == "D_a") return std_piece(Family::A);
  if (name == "D_b") return std_piece(Family::B);
  if (name == "D_c") return std_piece(Family::C);
  if (name.size() > 7 && name.substr(name.size() - 7) == "_mirror")
    return mirror(standard(name.substr(0, name.size() - 7)));
  throw Error("standard: unknown name " + name);
}

std::vector<std::string> standard_names() {
  return {"cp2",        "s2xs2",      "s1xs3",      "s4_trivial",
          "b4_arced",   "annulus_trivial",
          "D_a",        "D_b",        "D_c",
          "D_a_mirror", "D_b_mirror", "D_c_mirror"};
}

}  // namespace tri
