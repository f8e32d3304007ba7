#include "galfold/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "galfold/charts.hpp"
#include "galfold/document.hpp"
#include "galfold/error.hpp"
#include "galfold/folding.hpp"
#include "galfold/path_bridge.hpp"
#include "galfold/tree.hpp"

namespace galfold {

void VerifyReport::note(const std::string& key, const std::string& value) {
  lines.push_back(key + ": " + value);
}

void VerifyReport::check(const std::string& what, bool ok,
                         const std::string& detail) {
  std::string line = (ok ? "ok   " : "FAIL ") + what;
  if (!detail.empty()) line += " [" + detail + "]";
  lines.push_back(std::move(line));
  if (!ok) pass = false;
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  for (const auto& l : lines) os << l << "\n";
  os << "result: " << (pass ? "pass" : "fail") << "\n";
  return os.str();
}

namespace {

/// Strictly dominant coweights whose minimal gallery fits the length bound,
/// sorted by (length, lex); the corpus cycles over them.
std::vector<CombinatorialGallery> dominant_targets(const RootSystem& rs,
                                                   int max_length) {
  const int n = rs.rank();
  std::vector<std::pair<int, CombinatorialGallery>> found;
  std::vector<long> levels(static_cast<std::size_t>(n), 1);
  const long kMaxLevel = 4;
  for (;;) {
    Vector lambda(n);
    for (int i = 0; i < n; ++i) lambda(i) = Rat(levels[static_cast<std::size_t>(i)]);
    CombinatorialGallery min = minimal_gallery(
        rs, Face::vertex(rs.origin()), Face::vertex(lambda));
    if (min.length() >= 1 && min.length() <= max_length)
      found.emplace_back(min.length(), std::move(min));
    int i = 0;
    while (i < n && ++levels[static_cast<std::size_t>(i)] > kMaxLevel) {
      levels[static_cast<std::size_t>(i)] = 1;
      ++i;
    }
    if (i == n) break;
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<CombinatorialGallery> out;
  out.reserve(found.size());
  for (auto& [len, g] : found) out.push_back(std::move(g));
  return out;
}

std::vector<OperatorChoice> all_ops(const RootSystem& rs) {
  std::vector<OperatorChoice> ops;
  for (int a = 0; a < rs.rank(); ++a) {
    ops.push_back({OperatorKind::E, a});
    ops.push_back({OperatorKind::F, a});
    ops.push_back({OperatorKind::ETilde, a});
  }
  return ops;
}

}  // namespace

std::vector<CombinatorialGallery> build_corpus(const RootSystem& rs,
                                               int samples,
                                               std::uint64_t seed,
                                               int max_length) {
  std::vector<CombinatorialGallery> targets = dominant_targets(rs, max_length);
  if (targets.empty())
    fail(Errc::InvalidArgument, "no dominant targets within the length bound");
  std::vector<CombinatorialGallery> corpus;
  corpus.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const auto& minimal = targets[static_cast<std::size_t>(i) % targets.size()];
    corpus.push_back(generate_random_folded(
        rs, minimal, seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(i + 1),
        /*positive_only=*/true));
  }
  return corpus;
}

VerifyReport verify_operators(const VerifyOptions& opts) {
  VerifyReport rep;
  RootSystem rs = RootSystem::build(opts.type);
  rep.note("suite", "operators");
  rep.note("type", opts.type);
  rep.note("samples", std::to_string(opts.samples));
  rep.note("seed", std::to_string(opts.seed));

  auto corpus = build_corpus(rs, opts.samples, opts.seed, opts.max_length);
  FaceCheckCache cache;
  long corpus_valid = 0;
  for (const auto& g : corpus)
    if (is_valid(rs, g, &cache)) ++corpus_valid;
  rep.check("corpus validity",
            corpus_valid == static_cast<long>(corpus.size()),
            std::to_string(corpus_valid) + "/" + std::to_string(corpus.size()));

  long defined = 0, valid_ok = 0, weight_ok = 0, strip_ok = 0, strip_total = 0;
  long inv_checked = 0, inv_ok = 0, type_checked = 0, type_ok = 0;
  long defined_by_kind[3] = {0, 0, 0};
  std::string first_bad;

  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const auto& g = corpus[gi];
    for (int a = 0; a < rs.rank(); ++a) {
      const Vector coroot = rs.simple_root(a).coroot_levels;
      for (OperatorKind kind :
           {OperatorKind::E, OperatorKind::F, OperatorKind::ETilde}) {
        auto idx = operator_indices(rs, g, a, kind);
        if (!idx) continue;
        ++defined;
        ++defined_by_kind[static_cast<int>(kind)];
        OperatorApplication app = apply_operator(rs, g, a, kind);

        bool valid = is_valid(rs, app.gallery, &cache);
        valid_ok += valid;
        if (!valid && first_bad.empty()) {
          std::ostringstream os;
          os << "gallery " << gi << " root " << a + 1 << " op "
             << operator_name(kind);
          first_bad = os.str();
        }

        Point expect = weight(g);
        if (kind == OperatorKind::E) expect += coroot;
        if (kind == OperatorKind::F) expect -= coroot;
        weight_ok += weight(app.gallery) == expect;

        if (kind == OperatorKind::E) {
          // Case-I block geometry: the reflected block lies in the closed
          // strip between H_{alpha,m} and H_{alpha,m+1}.
          ++strip_total;
          bool in_strip = true;
          for (int i = idx->j; i < idx->k && i < g.length(); ++i) {
            if (!weakly_in_halfspace(rs, g.alcoves[i], {a, idx->m}, +1) ||
                !weakly_in_halfspace(rs, g.alcoves[i], {a, idx->m + 1}, -1))
              in_strip = false;
          }
          strip_ok += in_strip;
        }

        OperatorKind partner =
            kind == OperatorKind::E ? OperatorKind::F : OperatorKind::E;
        if (kind != OperatorKind::ETilde &&
            operator_indices(rs, app.gallery, a, partner)) {
          ++inv_checked;
          inv_ok += apply_operator(rs, app.gallery, a, partner).gallery == g;
        }

        if (gi % 10 == 0) {
          ++type_checked;
          type_ok += gallery_type(rs, app.gallery) == gallery_type(rs, g);
        }
      }
    }
  }

  rep.note("defined applications", std::to_string(defined));
  rep.note("defined e/f/etilde",
           std::to_string(defined_by_kind[0]) + "/" +
               std::to_string(defined_by_kind[1]) + "/" +
               std::to_string(defined_by_kind[2]));
  rep.check("operator outputs valid", valid_ok == defined,
            std::to_string(valid_ok) + "/" + std::to_string(defined) +
                (first_bad.empty() ? "" : "; first: " + first_bad));
  rep.check("weight laws", weight_ok == defined,
            std::to_string(weight_ok) + "/" + std::to_string(defined));
  rep.check("partial inverses", inv_ok == inv_checked,
            std::to_string(inv_ok) + "/" + std::to_string(inv_checked));
  rep.check("case-I strip geometry", strip_ok == strip_total,
            std::to_string(strip_ok) + "/" + std::to_string(strip_total));
  rep.check("type preservation", type_ok == type_checked,
            std::to_string(type_ok) + "/" + std::to_string(type_checked));

  // Crystal cross-check in A2: the {f_1,f_2}-closure of the minimal dominant
  // gallery for the highest coroot has exactly dim V(lambda) = 8 elements.
  {
    RootSystem a2 = RootSystem::build("A2");
    CombinatorialGallery min = minimal_gallery(
        a2, Face::vertex(a2.origin()),
        Face::vertex(a2.highest_root().coroot_levels));
    auto orb = orbit(a2, min, {{OperatorKind::F, 0}, {OperatorKind::F, 1}});
    rep.check("A2 adjoint crystal orbit size == 8", orb.size() == 8,
              std::to_string(orb.size()));
  }

  // Path bridge: pushed-path endpoint equals the folded gallery's weight;
  // the path stays inside the folded gallery's closed faces.
  {
    std::mt19937_64 rng(opts.seed ^ 0xabcdef12345678ull);
    auto targets = dominant_targets(rs, opts.max_length);
    long endpoint_ok = 0, contain_ok = 0, total = 0, pieces_checked = 0;
    for (int s = 0; s < 100; ++s) {
      const auto& minimal = targets[static_cast<std::size_t>(s) % targets.size()];
      Segment pi{rs.origin(), weight(minimal)};
      std::vector<OperatorChoice> seq;
      CombinatorialGallery cur = embed_segment(rs, pi);
      int want = static_cast<int>(rng() % 5);
      for (int step = 0; step < want; ++step) {
        std::vector<OperatorChoice> defined_ops;
        for (const auto& op : all_ops(rs))
          if (operator_indices(rs, cur, op.simple_root, op.kind))
            defined_ops.push_back(op);
        if (defined_ops.empty()) break;
        OperatorChoice pick = defined_ops[rng() % defined_ops.size()];
        seq.push_back(pick);
        cur = apply_operator(rs, cur, pick.simple_root, pick.kind).gallery;
      }
      ++total;
      PiecewisePath pushed = push_through(rs, pi, seq);
      CombinatorialGallery folded = push_through_gallery(rs, pi, seq);
      endpoint_ok += pushed.endpoint() == weight(folded);

      bool contained = true;
      for (std::size_t b = 0; b + 1 < pushed.breakpoints.size(); ++b) {
        for (int sample = 0; sample <= 10; ++sample) {
          Rat t(sample, 10);
          Point p = pushed.breakpoints[b].second +
                    ((pushed.breakpoints[b + 1].second -
                      pushed.breakpoints[b].second) *
                     t)
                        .eval();
          bool inside = false;
          for (const auto& c : folded.alcoves)
            if (point_in_closed_face(p, c)) {
              inside = true;
              break;
            }
          if (folded.alcoves.empty())
            inside = point_in_closed_face(p, folded.panels[0]);
          if (!inside) contained = false;
          ++pieces_checked;
        }
      }
      contain_ok += contained;
    }
    rep.note("path bridge samples", std::to_string(total));
    rep.note("path bridge points checked", std::to_string(pieces_checked));
    rep.check("pushed-path endpoint = weight", endpoint_ok == total,
              std::to_string(endpoint_ok) + "/" + std::to_string(total));
    rep.check("pushed-path containment", contain_ok == total,
              std::to_string(contain_ok) + "/" + std::to_string(total));
  }

  return rep;
}

VerifyReport verify_theorems(const VerifyOptions& opts) {
  VerifyReport rep;
  RootSystem rs = RootSystem::build(opts.type);
  rep.note("suite", "theorems");
  rep.note("type", opts.type);
  rep.note("samples", std::to_string(opts.samples));
  rep.note("seed", std::to_string(opts.seed));

  auto corpus = build_corpus(rs, opts.samples, opts.seed, opts.max_length);

  long tallies[3][6] = {};
  long nf_checked = 0, nf_ok = 0;
  for (const auto& g : corpus) {
    for (int a = 0; a < rs.rank(); ++a) {
      for (OperatorKind kind :
           {OperatorKind::E, OperatorKind::F, OperatorKind::ETilde}) {
        TheoremOutcome out = compare_theorem(rs, g, a, kind);
        ++tallies[static_cast<int>(kind)][static_cast<int>(out)];
        if (out != TheoremOutcome::Undefined) {
          ++nf_checked;
          nf_ok += reflection_normal_form(rs, g, a, kind) ==
                   apply_operator(rs, g, a, kind).gallery;
        }
      }
    }
  }

  auto report_kind = [&](OperatorKind kind) {
    const long* t = tallies[static_cast<int>(kind)];
    long defined = t[1] + t[2] + t[3] + t[4] + t[5];
    long regular = t[1] + t[2];
    std::ostringstream rate;
    rate << "defined " << defined << ", regular " << regular;
    rep.note(std::string("theorem ") + operator_name(kind) + " counts",
             rate.str());
    rep.check(std::string("theorem ") + operator_name(kind) +
                  " rhs = operator on regular galleries",
              t[2] == 0,
              std::to_string(t[1]) + " agree, " + std::to_string(t[2]) +
                  " mismatch");
    if (opts.experiment || kind == OperatorKind::E || kind == OperatorKind::F) {
      std::ostringstream ir;
      ir << "agree " << t[3] << ", mismatch " << t[4] << ", domain-error "
         << t[5];
      rep.note(std::string("theorem ") + operator_name(kind) +
                   " non-regular statistics",
               ir.str());
    }
  };
  report_kind(OperatorKind::E);
  report_kind(OperatorKind::F);
  report_kind(OperatorKind::ETilde);
  rep.check("reflection normal forms equal operators", nf_ok == nf_checked,
            std::to_string(nf_ok) + "/" + std::to_string(nf_checked));

  // Reflection lemma, exhaustive window: alcoves within 4 wall-crossings of
  // the fundamental alcove, every simple root, k in [-3,3].
  {
    std::set<Face> window{fundamental_alcove(rs)};
    std::deque<std::pair<Face, int>> queue{{fundamental_alcove(rs), 0}};
    while (!queue.empty()) {
      auto [cell, depth] = queue.front();
      queue.pop_front();
      if (depth == 4) continue;
      const auto& vs = cell.vertices();
      for (std::size_t drop = 0; drop < vs.size(); ++drop) {
        std::vector<Point> keep;
        for (std::size_t i = 0; i < vs.size(); ++i)
          if (i != drop) keep.push_back(vs[i]);
        auto wall = spanning_wall(rs, Face(keep));
        Face nbr = apply(affine_reflection(rs, *wall), cell);
        if (window.insert(nbr).second) queue.emplace_back(nbr, depth + 1);
      }
    }
    long checked = 0, good = 0;
    for (const Face& c : window) {
      for (int a = 0; a < rs.rank(); ++a) {
        for (long k = -3; k <= 3; ++k) {
          if (!weakly_in_halfspace(rs, c, {a, k}, +1)) continue;
          LabeledFace branch{ChartId::lower(a, k), c};
          Face dom = retract(rs, branch, Direction::Dominant);
          Face anti = retract(rs, branch, Direction::Antidominant);
          ++checked;
          good += dom == apply(affine_reflection(rs, Hyperplane{a, k}), anti);
        }
      }
    }
    rep.note("reflection lemma window alcoves", std::to_string(window.size()));
    rep.check("reflection lemma d_op = s_{alpha,k}(d)", good == checked,
              std::to_string(good) + "/" + std::to_string(checked));
  }

  // Affine identity s_{alpha,m+1} o s_{alpha,m} = t_{alpha^vee}.
  {
    long checked = 0, good = 0;
    for (int idx = 0; idx < static_cast<int>(rs.positive_roots().size()); ++idx) {
      for (long m = -5; m <= 5; ++m) {
        AffineMap lhs = compose(affine_reflection(rs, Hyperplane{idx, m + 1}),
                                affine_reflection(rs, Hyperplane{idx, m}));
        AffineMap rhs = coroot_translation(rs, rs.root(idx));
        ++checked;
        good += lhs == rhs;
      }
    }
    rep.check("affine identity s_{m+1} s_m = t", good == checked,
              std::to_string(good) + "/" + std::to_string(checked));
  }

  // Folding automorphisms: the m-composite induces the wall reflection.
  {
    long checked = 0, good = 0;
    std::mt19937_64 rng(opts.seed + 17);
    auto targets = dominant_targets(rs, opts.max_length);
    for (int s = 0; s < 50; ++s) {
      const auto& minimal = targets[static_cast<std::size_t>(s) % targets.size()];
      CombinatorialGallery g = generate_random_folded(rs, minimal, rng());
      const Face& c = g.alcoves[static_cast<std::size_t>(
          rng() % static_cast<std::uint64_t>(g.alcoves.size()))];
      int a = static_cast<int>(rng() % static_cast<std::uint64_t>(rs.rank()));
      long k = static_cast<long>(rng() % 7) - 3;
      FoldingAutomorphism u{a, k, rng() % 2 == 0};
      ++checked;
      good += m_composite_on_base(rs, u, c) ==
              apply(affine_reflection(rs, Hyperplane{a, k}), c);
    }
    rep.check("m-composite equals wall reflection", good == checked,
              std::to_string(good) + "/" + std::to_string(checked));
  }

  return rep;
}

VerifyReport verify_tree(const VerifyOptions& opts) {
  VerifyReport rep;
  rep.note("suite", "tree");
  rep.note("q", std::to_string(opts.tree_q));
  rep.note("depth", std::to_string(opts.tree_depth));
  TreeBuilding t = TreeBuilding::build(opts.tree_q, opts.tree_depth);
  rep.note("vertices", std::to_string(t.vertex_count()));

  {
    bool thick = true;
    for (int v = 0; v < t.vertex_count(); ++v)
      if (!t.is_leaf(v) && t.degree(v) != t.q() + 1) thick = false;
    rep.check("thickness: interior degree q+1", thick);
    rep.check("apartment has 2R+2 vertices",
              static_cast<int>(t.apartment_path().size()) ==
                  2 * t.radius() + 2);
  }

  auto apartment_valid = [&](const TreeApartment& a) {
    for (std::size_t i = 0; i + 1 < a.vertices.size(); ++i) {
      const auto& nb = t.neighbors(a.vertices[i]);
      if (std::find(nb.begin(), nb.end(), a.vertices[i + 1]) == nb.end())
        return false;
      if (i + 2 < a.vertices.size() &&
          a.vertices[i] == a.vertices[i + 2])
        return false;
    }
    return true;
  };
  auto contains = [](const TreeApartment& a, int v) {
    return std::find(a.vertices.begin(), a.vertices.end(), v) !=
           a.vertices.end();
  };

  // Union lemma witnesses for every simplex within radius R-1.
  {
    long checked = 0, good = 0;
    TreeEdge base = t.base_edge();
    for (int v = 0; v < t.vertex_count(); ++v) {
      if (t.dist_to_base(v) > t.radius() - 1) continue;
      TreeApartment a1 = t.apartment_through(v, base);
      TreeApartment a2 = t.apartment_through(v, TreeEnd::Minus);
      TreeApartment a3 = t.apartment_through(v, TreeEnd::Plus);
      ++checked;
      good += apartment_valid(a1) && contains(a1, v) && contains(a1, base.u) &&
              contains(a1, base.v) && apartment_valid(a2) && contains(a2, v) &&
              contains(a2, t.apartment_vertex(-t.radius())) &&
              apartment_valid(a3) && contains(a3, v) &&
              contains(a3, t.apartment_vertex(t.radius() + 1));
      // Edges: the witness through the farther endpoint covers the edge.
      for (int nb : t.neighbors(v)) {
        if (nb < v || t.dist_to_base(nb) > t.radius() - 1) continue;
        int far = t.dist(v, base.u) + t.dist(v, base.v) >
                          t.dist(nb, base.u) + t.dist(nb, base.v)
                      ? v
                      : nb;
        TreeApartment ae = t.apartment_through(far, base);
        ++checked;
        good += apartment_valid(ae) && contains(ae, v) && contains(ae, nb);
      }
    }
    rep.note("union lemma simplices", std::to_string(checked));
    rep.check("union lemma witnesses", good == checked,
              std::to_string(good) + "/" + std::to_string(checked));
  }

  // Retraction compatibility: a witness alcove exists for every vertex
  // within margin.
  {
    long checked = 0, good = 0;
    for (int v = 0; v < t.vertex_count(); ++v) {
      if (!t.within_end_margin(v)) continue;
      for (TreeEnd xi : {TreeEnd::Minus, TreeEnd::Plus}) {
        ++checked;
        try {
          TreeEdge c = t.compat_witness(xi, v);
          good += t.retract_at_alcove(c, v) == t.retract_from_end(xi, v);
        } catch (const Error&) {
        }
      }
    }
    rep.note("compatibility vertices", std::to_string(checked));
    rep.check("compatibility witnesses", good == checked,
              std::to_string(good) + "/" + std::to_string(checked));
  }

  // End fibers are Busemann level sets (independent BFS-distance oracle) and
  // alcove fibers match the exact q^n counts.
  {
    bool fibers_ok = true;
    for (TreeEnd xi : {TreeEnd::Minus, TreeEnd::Plus}) {
      TreeBuilding::RetractionSpec spec{TreeBuilding::RetractionSpec::FromEnd,
                                        t.base_edge(), xi};
      auto fibers = t.fiber_partition(spec);
      int far = xi == TreeEnd::Minus ? t.apartment_vertex(-t.radius())
                                     : t.apartment_vertex(t.radius() + 1);
      long far_level = t.apartment_level(far);
      std::map<long, std::set<int>> oracle;
      for (int v = 0; v < t.vertex_count(); ++v) {
        if (!t.within_end_margin(v)) continue;
        long busemann =
            xi == TreeEnd::Minus
                ? static_cast<long>(t.dist(v, far)) + far_level
                : far_level - static_cast<long>(t.dist(v, far));
        oracle[busemann].insert(v);
      }
      if (fibers.size() != oracle.size()) fibers_ok = false;
      for (const auto& [level, members] : fibers) {
        std::set<int> got(members.begin(), members.end());
        if (!oracle.count(level) || oracle[level] != got) fibers_ok = false;
      }
    }
    rep.check("end fibers = Busemann level sets (oracle)", fibers_ok);

    TreeBuilding::RetractionSpec spec{TreeBuilding::RetractionSpec::AtAlcove,
                                      t.base_edge(), TreeEnd::Minus};
    auto fibers = t.fiber_partition(spec);
    bool sizes_ok = true;
    long covered = 0;
    for (const auto& [level, members] : fibers) {
      long n = level >= 1 ? level - 1 : -level;
      long expect = 1;
      for (long i = 0; i < n; ++i) expect *= t.q();
      if (static_cast<long>(members.size()) != expect) sizes_ok = false;
      covered += static_cast<long>(members.size());
    }
    rep.check("alcove fiber sizes = q^n", sizes_ok);
    rep.check("fibers partition the vertex set",
              covered == t.vertex_count());
  }

  return rep;
}

VerifyReport verify_all(const VerifyOptions& opts) {
  VerifyReport all;
  for (VerifyReport rep :
       {verify_operators(opts), verify_theorems(opts), verify_tree(opts)}) {
    all.lines.insert(all.lines.end(), rep.lines.begin(), rep.lines.end());
    all.pass = all.pass && rep.pass;
  }
  return all;
}

}  // namespace galfold
