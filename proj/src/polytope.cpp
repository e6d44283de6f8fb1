#include "khb/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace khb {

bool Polytope::contains(const RatVector& p) const {
  if (!full_dimensional()) throw std::logic_error("Polytope::contains: not full-dimensional");
  return std::all_of(facets.begin(), facets.end(), [&](const Facet& f) { return dot(f.normal, p) <= f.offset; });
}

Rational simplex_volume(const std::vector<RatVector>& simplex) {
  if (simplex.empty()) throw std::invalid_argument("simplex_volume: no points");
  const std::size_t k = simplex.size() - 1;
  RatMatrix M(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (simplex[i + 1].size() != k) throw std::invalid_argument("simplex_volume: expected k+1 points in Q^k");
    for (std::size_t j = 0; j < k; ++j) M(i, j) = simplex[i + 1][j] - simplex[0][j];
  }
  Rational det = k == 0 ? Rational(1) : determinant(M);
  return abs(det) / Rational(factorial(k));
}

namespace {

RatVector minus(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Scale (normal, offset) by a positive factor so the normal is primitive integral.
Facet normalize(RatVector normal, Rational offset) {
  Integer l = lcm_of_denominators(normal);
  IntVector num(normal.size());
  for (std::size_t i = 0; i < normal.size(); ++i) num[i] = Rational(normal[i] * l).get_num();
  Integer g = gcd_of(num);
  Rational s = Rational(l) / Rational(g);
  for (auto& x : normal) x *= s;
  return {normal, offset * s};
}

struct SimplexFacet {
  std::vector<std::size_t> verts;  // sorted
  RatVector normal;
  Rational offset;
};

class Incremental {
 public:
  Incremental(const std::vector<RatVector>& pts, std::size_t k) : pts_(pts), k_(k) {}

  void run() {
    std::vector<std::size_t> simplex = initial_simplex();
    interior_.assign(k_, Rational(0));
    for (auto i : simplex)
      for (std::size_t j = 0; j < k_; ++j) interior_[j] += pts_[i][j];
    for (auto& x : interior_) x /= Rational(static_cast<long>(k_ + 1));
    apex_ = simplex.front();
    for (std::size_t omit = 0; omit <= k_; ++omit) {
      std::vector<std::size_t> f;
      for (std::size_t j = 0; j <= k_; ++j)
        if (j != omit) f.push_back(simplex[j]);
      facets_.push_back(make_facet(std::move(f)));
    }
    std::set<std::size_t> in_simplex(simplex.begin(), simplex.end());
    for (std::size_t p = 0; p < pts_.size(); ++p)
      if (!in_simplex.count(p)) insert(p);
  }

  const std::vector<SimplexFacet>& facets() const { return facets_; }
  std::size_t apex() const { return apex_; }

 private:
  std::vector<std::size_t> initial_simplex() const {
    std::vector<std::size_t> chosen{0};
    std::vector<RatVector> diffs;
    for (std::size_t i = 1; i < pts_.size() && chosen.size() < k_ + 1; ++i) {
      diffs.push_back(minus(pts_[i], pts_[0]));
      if (rank(RatMatrix::from_rows(diffs, k_)) == diffs.size()) {
        chosen.push_back(i);
      } else {
        diffs.pop_back();
      }
    }
    if (chosen.size() != k_ + 1) throw std::logic_error("convex_hull: projected points are degenerate");
    return chosen;
  }

  SimplexFacet make_facet(std::vector<std::size_t> verts) const {
    std::sort(verts.begin(), verts.end());
    RatVector n;
    if (k_ == 1) {
      n = {Rational(1)};
    } else {
      std::vector<RatVector> rows;
      for (std::size_t j = 1; j < verts.size(); ++j) rows.push_back(minus(pts_[verts[j]], pts_[verts[0]]));
      auto ns = nullspace(RatMatrix::from_rows(rows, k_));
      if (ns.size() != 1) throw std::logic_error("convex_hull: degenerate facet");
      n = ns.front();
    }
    Rational b = dot(n, pts_[verts[0]]);
    if (dot(n, interior_) > b) {
      for (auto& x : n) x = -x;
      b = -b;
    }
    return {std::move(verts), std::move(n), std::move(b)};
  }

  void insert(std::size_t p) {
    std::vector<SimplexFacet> kept;
    std::map<std::vector<std::size_t>, int> ridges;
    bool any = false;
    for (auto& f : facets_) {
      if (dot(f.normal, pts_[p]) > f.offset) {
        any = true;
        for (std::size_t omit = 0; omit < f.verts.size(); ++omit) {
          std::vector<std::size_t> r;
          for (std::size_t j = 0; j < f.verts.size(); ++j)
            if (j != omit) r.push_back(f.verts[j]);
          ++ridges[r];
        }
      } else {
        kept.push_back(std::move(f));
      }
    }
    if (!any) {
      facets_ = std::move(kept);
      return;
    }
    for (const auto& [r, count] : ridges) {
      if (count != 1) continue;
      std::vector<std::size_t> f = r;
      f.push_back(p);
      kept.push_back(make_facet(std::move(f)));
    }
    facets_ = std::move(kept);
  }

  const std::vector<RatVector>& pts_;
  std::size_t k_;
  RatVector interior_;
  std::size_t apex_ = 0;
  std::vector<SimplexFacet> facets_;
};

void order_planar(std::vector<RatVector>& v) {
  std::sort(v.begin(), v.end());
  if (v.size() < 3) return;
  const RatVector s = v.front();
  std::sort(v.begin() + 1, v.end(), [&](const RatVector& a, const RatVector& b) {
    Rational cross = (a[0] - s[0]) * (b[1] - s[1]) - (a[1] - s[1]) * (b[0] - s[0]);
    return cross > 0;
  });
}

}  // namespace

Polytope convex_hull(const std::vector<RatVector>& input) {
  if (input.empty()) throw std::invalid_argument("convex_hull: no points");
  const std::size_t n = input.front().size();
  if (n == 0) throw std::invalid_argument("convex_hull: points must have positive dimension");
  for (const auto& p : input)
    if (p.size() != n) throw std::invalid_argument("convex_hull: points of different dimensions");

  std::vector<RatVector> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Affine frame p0 + span(B).
  const RatVector& p0 = pts.front();
  std::vector<RatVector> frame;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    frame.push_back(minus(pts[i], p0));
    if (rank(RatMatrix::from_columns(frame, n)) < frame.size()) frame.pop_back();
  }
  const std::size_t k = frame.size();
  if (k > max_hull_dimension)
    throw std::invalid_argument("convex_hull: affine span of dimension " + std::to_string(k) + " exceeds " +
                                std::to_string(max_hull_dimension));

  Polytope P;
  P.ambient_dim = n;
  P.dim = k;
  if (k == 0) {
    P.vertices = {p0};
    return P;
  }

  RatMatrix B = RatMatrix::from_columns(frame, n);
  // k rows of B on which it is invertible give exact frame coordinates.
  std::vector<std::size_t> rows;
  {
    std::vector<RatVector> picked;
    for (std::size_t r = 0; r < n && rows.size() < k; ++r) {
      picked.push_back(B.row(r));
      if (rank(RatMatrix::from_rows(picked, k)) == picked.size()) {
        rows.push_back(r);
      } else {
        picked.pop_back();
      }
    }
  }
  RatMatrix Bsub(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) Bsub(i, j) = B(rows[i], j);
  RatMatrix Binv = invert(Bsub);
  std::vector<RatVector> local;
  for (const auto& p : pts) {
    RatVector diff(k);
    for (std::size_t i = 0; i < k; ++i) diff[i] = p[rows[i]] - p0[rows[i]];
    local.push_back(Binv.apply(diff));
  }

  Incremental hull(local, k);
  hull.run();

  std::map<std::size_t, std::vector<RatVector>> incident;
  Rational vol = 0;
  for (const auto& f : hull.facets()) {
    for (auto v : f.verts) incident[v].push_back(f.normal);
    std::vector<RatVector> simplex{local[hull.apex()]};
    for (auto v : f.verts) simplex.push_back(local[v]);
    vol += simplex_volume(simplex);
  }
  for (const auto& [v, normals] : incident)
    if (rank(RatMatrix::from_rows(normals, k)) == k) P.vertices.push_back(pts[v]);
  if (n == 2 && k == 2) {
    order_planar(P.vertices);
  } else {
    std::sort(P.vertices.begin(), P.vertices.end());
  }

  if (k == n) {
    P.euclidean_volume = vol * abs(determinant(B));
    // n_c . c <= b with c = B^{-1}(x - p0).
    RatMatrix BinvT = invert(B).transpose();
    std::set<std::pair<RatVector, Rational>> seen;
    for (const auto& f : hull.facets()) {
      RatVector normal = BinvT.apply(f.normal);
      Facet h = normalize(normal, f.offset + dot(normal, p0));
      if (seen.emplace(h.normal, h.offset).second) P.facets.push_back(h);
    }
    std::sort(P.facets.begin(), P.facets.end(),
              [](const Facet& a, const Facet& b) { return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset); });
  }
  return P;
}

}  // namespace khb
