#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

using namespace khb;
using namespace khb::testdata;

namespace {

using Pt = RatVector;
using oracle::chain_hull;
using oracle::frac;
using oracle::shoelace;

Pt sub(const Pt& a, const Pt& b) { return Pt{a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Pt cross3(const Pt& a, const Pt& b) {
  return Pt{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Rational det3(const Pt& a, const Pt& b, const Pt& c) { return dot(a, cross3(b, c)); }

struct Brute3 {
  std::set<Pt> vertices;
  Rational volume = 0;
};

// Every plane through three points with all points on one side is a facet
// plane; its points, hulled in a coordinate projection, give the facet.
Brute3 brute_hull3(const std::vector<Pt>& pts) {
  Brute3 out;
  Pt c{0, 0, 0};
  for (const auto& p : pts)
    for (int i = 0; i < 3; ++i) c[i] += p[i] / Rational(static_cast<long>(pts.size()));
  std::set<std::set<Pt>> seen;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Pt nrm = cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
        if (nrm == Pt{0, 0, 0}) continue;
        int pos = 0, neg = 0;
        std::set<Pt> on;
        for (const auto& p : pts) {
          Rational s = dot(nrm, sub(p, pts[i]));
          if (s > 0) ++pos;
          if (s < 0) ++neg;
          if (s == 0) on.insert(p);
        }
        if ((pos && neg) || !seen.insert(on).second) continue;
        int drop = 0;
        for (int a = 1; a < 3; ++a)
          if (abs(nrm[a]) > abs(nrm[drop])) drop = a;
        std::vector<Pt> proj;
        std::map<Pt, Pt> back;
        for (const auto& p : on) {
          Pt q2;
          for (int a = 0; a < 3; ++a)
            if (a != drop) q2.push_back(p[a]);
          proj.push_back(q2);
          back[q2] = p;
        }
        auto poly = chain_hull(proj);
        for (const auto& v : poly) out.vertices.insert(back[v]);
        for (std::size_t t = 1; t + 1 < poly.size(); ++t)
          out.volume += abs(det3(sub(back[poly[0]], c), sub(back[poly[t]], c), sub(back[poly[t + 1]], c))) / 6;
      }
  return out;
}

RatMatrix printed_V() {
  return RatMatrix{{q("-11/190"), q("13/38"), q("-91/95"), q("-53/95"), q("-3/19"), q("23/95"), q("-49/190"), q("23/95")},
                   {q("3/190"), q("-7/38"), q("68/95"), q("49/95"), q("6/19"), q("11/95"), q("11/95"), q("-62/285")}};
}

std::vector<Pt> columns(const RatMatrix& m) {
  std::vector<Pt> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

}  // namespace

TEST(Hull, TriangleWithInteriorPoint) {
  Polytope p = convex_hull({Pt{0, 0}, Pt{4, 0}, Pt{0, 4}, Pt{1, 1}});
  EXPECT_EQ(p.dim, 2u);
  EXPECT_EQ(p.vertices, (std::vector<Pt>{Pt{0, 0}, Pt{4, 0}, Pt{0, 4}}));
  EXPECT_EQ(p.euclidean_volume, 8);
  EXPECT_EQ(p.facets.size(), 3u);
  EXPECT_TRUE(p.contains(Pt{1, 1}));
  EXPECT_FALSE(p.contains(Pt{3, 3}));
}

TEST(Hull, LowerDimensionalInputs) {
  Polytope seg = convex_hull({Pt{0, 0}, Pt{1, 1}, Pt{2, 2}, Pt{q("1/2"), q("1/2")}});
  EXPECT_EQ(seg.dim, 1u);
  EXPECT_EQ(seg.vertices, (std::vector<Pt>{Pt{0, 0}, Pt{2, 2}}));
  EXPECT_EQ(volume(seg), 0);
  Polytope pt = convex_hull({Pt{1, 2}, Pt{1, 2}});
  EXPECT_EQ(pt.dim, 0u);
  EXPECT_EQ(pt.vertices.size(), 1u);
  EXPECT_THROW(convex_hull({}), std::invalid_argument);
  EXPECT_THROW(convex_hull({Pt{1, 2}, Pt{1}}), std::invalid_argument);
}

TEST(Hull, PrintedValueMatrixSpansAPentagon) {
  Polytope p = convex_hull(columns(printed_V()));
  std::set<Pt> expect = {Pt{q("-91/95"), q("68/95")}, Pt{q("-49/190"), q("11/95")}, Pt{q("23/95"), q("-62/285")},
                         Pt{q("13/38"), q("-7/38")}, Pt{q("23/95"), q("11/95")}};
  EXPECT_EQ(std::set<Pt>(p.vertices.begin(), p.vertices.end()), expect);
  EXPECT_EQ(p.euclidean_volume, q("1/4"));
}

TEST(Volume, Simplices) {
  EXPECT_EQ(simplex_volume({Pt{0, 0, 0}, Pt{1, 0, 0}, Pt{0, 1, 0}, Pt{0, 0, 1}}), q("1/6"));
  EXPECT_EQ(simplex_volume({Pt{0, 0}, Pt{2, 0}, Pt{0, 3}}), 3);
  Polytope cube = convex_hull({Pt{0, 0, 0}, Pt{1, 0, 0}, Pt{0, 1, 0}, Pt{0, 0, 1}, Pt{1, 1, 0}, Pt{1, 0, 1},
                               Pt{0, 1, 1}, Pt{1, 1, 1}, Pt{q("1/2"), q("1/2"), q("1/2")}});
  EXPECT_EQ(cube.vertices.size(), 8u);
  EXPECT_EQ(cube.facets.size(), 6u);
  EXPECT_EQ(volume(cube), 1);
}

TEST(HullProperty, PlanarHullsMatchMonotoneChain) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> coord(-6, 6), count(3, 12), den(1, 3);
  int full = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Pt> pts;
    for (int k = count(rng); k > 0; --k) pts.push_back(Pt{frac(coord(rng), den(rng)), frac(coord(rng), den(rng))});
    auto expect = chain_hull(pts);
    Polytope p = convex_hull(pts);
    std::shuffle(pts.begin(), pts.end(), rng);
    Polytope shuffled = convex_hull(pts);
    ASSERT_EQ(shuffled.vertices, p.vertices);
    ASSERT_EQ(shuffled.euclidean_volume, p.euclidean_volume);
    if (expect.size() < 3) {
      ASSERT_LT(p.dim, 2u);
      continue;
    }
    ++full;
    ASSERT_EQ(p.vertices, expect);
    ASSERT_EQ(volume(p), shoelace(expect));
    ASSERT_EQ(p.facets.size(), expect.size());
    for (const auto& f : p.facets) {
      int tight = 0;
      for (const auto& v : p.vertices) {
        ASSERT_LE(dot(f.normal, v), f.offset);
        tight += dot(f.normal, v) == f.offset;
      }
      ASSERT_EQ(tight, 2);
    }
  }
  EXPECT_GE(full, 900);
}

TEST(HullProperty, SpatialHullsMatchBruteForceFacets) {
  std::mt19937_64 rng(4321);
  std::uniform_int_distribution<int> coord(-3, 3), count(4, 10);
  int full = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Pt> pts;
    for (int k = count(rng); k > 0; --k) pts.push_back(Pt{coord(rng), coord(rng), coord(rng)});
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Polytope p = convex_hull(pts);
    if (p.dim < 3) continue;
    ++full;
    Brute3 b = brute_hull3(pts);
    ASSERT_EQ(std::set<Pt>(p.vertices.begin(), p.vertices.end()), b.vertices);
    ASSERT_EQ(volume(p), b.volume);
    std::shuffle(pts.begin(), pts.end(), rng);
    ASSERT_EQ(convex_hull(pts).vertices, p.vertices);
  }
  EXPECT_GE(full, 800);
}

TEST(GradedValuation, ExtendsByDegreeRow) {
  GradedValuation g = extend_graded(ValuationTable(ray_table().N, ValueOrder::lex(2)), alternating_degrees());
  EXPECT_EQ(g.values.row(0), (RatVector{1, 2, 3, 3}));
  EXPECT_EQ(g.values.row(2), (RatVector{22, -2, -3, -3}));
  // Lower degree wins.
  EXPECT_EQ(g.compare(RatVector{1, 100, 100}, RatVector{2, -100, -100}), std::strong_ordering::greater);
  EXPECT_EQ(g.compare(RatVector{2, 1, 0}, RatVector{2, 0, 5}), std::strong_ordering::greater);
  EXPECT_THROW(extend_graded(ray_table(), IntVector{1, 0, 3, 3}), std::invalid_argument);
  EXPECT_THROW(extend_graded(ray_table(), IntVector{1, 2, 3}), std::invalid_argument);
}

TEST(DirectBody, AlternatingTriangle) {
  DirectBody b = nobody_direct_report(ray_table());
  EXPECT_EQ(b.body.vertices, (std::vector<Pt>{Pt{-3, -1}, Pt{q("14/3"), -1}, Pt{-3, 22}}));
  EXPECT_EQ(volume(b.body), q("529/6"));
  ASSERT_TRUE(b.normalized_volume.has_value());
  EXPECT_EQ(*b.normalized_volume, q("1/3"));
}

TEST(DirectBody, Pentagon) {
  DirectBody b = nobody_direct_report(pentagon_table());
  std::set<Pt> expect = {Pt{0, 3}, Pt{q("1/2"), q("3/2")}, Pt{q("4/3"), q("1/3")}, Pt{2, 0}, Pt{3, 0}};
  EXPECT_EQ(std::set<Pt>(b.body.vertices.begin(), b.body.vertices.end()), expect);
  EXPECT_EQ(volume(b.body), q("5/2"));
  EXPECT_EQ(*b.normalized_volume, 5);
  EXPECT_THROW(nobody_direct(ValuationTable(ray_table().N, ValueOrder::lex(2))), std::invalid_argument);
}

TEST(Algorithm1, AlternatingTriangle) {
  NOBodyReport r = algorithm1_volume(alternating_gb(), ray_table());
  std::set<Pt> expect = {Pt{q("-5/23"), q("3/23")}, Pt{q("13/46"), q("-14/69")}, Pt{q("13/46"), q("3/23")}};
  EXPECT_EQ(std::set<Pt>(r.body.vertices.begin(), r.body.vertices.end()), expect);
  EXPECT_EQ(r.euclidean_volume, q("1/12"));
  EXPECT_EQ(r.lattice_det, q("1/46"));
  EXPECT_EQ(r.d_norm_sq, 23);
  EXPECT_EQ(r.normalized_volume, q("1/3"));
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_EQ(r.certificate->verdict, Verdict::certified_up_to_bound);
  EXPECT_EQ(r.certificate->leaves.degree_bound, 8);
}

TEST(Algorithm1, PentagonWithPrintedW) {
  NOBodyReport r = algorithm1_volume(pentagon_gb(), pentagon_table(), Algorithm1Options{pentagon_W(), {}, {}});
  EXPECT_EQ(r.V, printed_V());
  EXPECT_EQ(r.euclidean_volume, q("1/4"));
  EXPECT_EQ(r.lattice_det, q("1/190"));
  EXPECT_EQ(r.normalized_volume, 5);
  // The printed L' is an upper triangular basis of the same lattice.
  Lattice printed = Lattice::from_generators(
      std::vector<RatVector>{Pt{1, 0, 0}, Pt{0, 1, 0}, Pt{q("-6/19"), q("-67/190"), q("1/190")}}, 3);
  EXPECT_EQ(Lattice::from_generators(columns(r.L_prime), 3), printed);
}

TEST(Algorithm1, PentagonDefaultExtensionAndLatticeOnly) {
  NOBodyReport r = algorithm1_volume(pentagon_gb(), pentagon_table());
  EXPECT_EQ(r.euclidean_volume, q("5/2"));
  EXPECT_EQ(r.lattice_det, q("1/19"));
  EXPECT_EQ(r.normalized_volume, 5);
  EXPECT_EQ(algorithm1_volume(pentagon_K(), pentagon_degrees()).normalized_volume, 5);
  EXPECT_EQ(algorithm1_volume(pentagon_K(), pentagon_degrees(), Algorithm1Options{pentagon_W(), {}, {}}).normalized_volume, 5);
}

TEST(Algorithm1, PointBodies) {
  NOBodyReport one = algorithm1_volume(Lattice(1), IntVector{1});
  EXPECT_TRUE(one.point_body);
  EXPECT_EQ(one.normalized_volume, 1);
  // A hyperplane x = y in P^1 is one point.
  NOBodyReport line = algorithm1_volume(Lattice::from_generators(std::vector<IntVector>{{1, -1}}, 2), IntVector{1, 1});
  EXPECT_TRUE(line.point_body);
  EXPECT_EQ(line.lattice_det, q("1/2"));
  EXPECT_EQ(line.normalized_volume, 1);
}

TEST(Algorithm1, RefutedCertificateThrows) {
  ValuationTable generic(RatMatrix::identity(4), ValueOrder::lex(4), alternating_degrees());
  EXPECT_THROW(algorithm1_volume(alternating_gb(), generic), CertificateRefuted);
}

TEST(Affine, AlternatingBodiesCorrespond) {
  NOBodyReport r = algorithm1_volume(alternating_gb(), ray_table());
  MuContext ctx = build_mu_context(alternating_gb(), MuOptions{alternating_degrees(), {}, {}});
  PhiResult phi = phi_transformation(ray_table(), ctx);
  AffineCheck ok = affine_equivalence(r.body, nobody_direct(ray_table()), phi.phi);
  EXPECT_TRUE(ok.pass) << ok.reason;
  ASSERT_TRUE(ok.map.has_value());
  EXPECT_EQ(ok.map->M, (RatMatrix{{0, -23}, {46, 69}}));
  EXPECT_EQ(ok.map->b, (RatVector{0, 0}));
  RatMatrix bad = phi.phi;
  bad(1, 1) += 1;
  EXPECT_FALSE(affine_equivalence(r.body, nobody_direct(ray_table()), bad).pass);
  bad = phi.phi;
  bad(0, 1) = 1;
  EXPECT_EQ(affine_equivalence(r.body, nobody_direct(ray_table()), bad).reason,
            "degree row of phi is not of the form (s, 0, ..., 0)");
}

TEST(Affine, PentagonBodiesCorrespond) {
  auto G = pentagon_gb();
  MuContext ctx = build_mu_context(G, MuOptions{pentagon_degrees(), {}, pentagon_W()});
  NOBodyReport r = algorithm1_from_context(ctx);
  AffineCheck c = affine_equivalence(r.body, nobody_direct(pentagon_table()), phi_transformation(pentagon_table(), ctx).phi);
  EXPECT_TRUE(c.pass) << c.reason;
}

TEST(Invariance, NormalizedVolumeAcrossTiebreaksAndExtensions) {
  struct Fixture {
    std::function<std::shared_ptr<const GroebnerBasis>(const MonomialOrder&)> gb;
    ValuationTable table;
    std::size_t n;
    Rational expect;
  };
  std::vector<Fixture> fixtures = {
      {[](const MonomialOrder& t) { return alternating_gb(ray_order(t)); }, ray_table(), 4, q("1/3")},
      {[](const MonomialOrder& t) { return pentagon_gb(t); }, pentagon_table(), 8, Rational(5)}};
  int runs = 0;
  for (const auto& f : fixtures)
    for (const auto& tie : {MonomialOrder::grevlex(f.n), MonomialOrder::lex(f.n), MonomialOrder::grlex(f.n)}) {
      auto G = f.gb(tie);
      MuContext base = build_mu_context(G, MuOptions{f.table.degrees, {}, {}});
      EXPECT_EQ(algorithm1_volume(G, f.table).normalized_volume, f.expect);
      for (std::uint64_t seed = 1; seed <= 3; ++seed, ++runs) {
        auto ext = randomized_extension(base, seed);
        NOBodyReport r = algorithm1_volume(G, f.table, Algorithm1Options{{}, ext, {}});
        EXPECT_EQ(r.normalized_volume, f.expect) << "seed " << seed;
        MuContext ctx = build_mu_context(G, MuOptions{f.table.degrees, ext, {}});
        EXPECT_TRUE(affine_equivalence(r.body, nobody_direct(f.table), phi_transformation(f.table, ctx).phi).pass);
      }
    }
  EXPECT_EQ(runs, 18);
}
