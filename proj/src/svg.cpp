#include "khb/report.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace khb {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

Integer floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

Integer ceil_of(const Rational& q) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c;
}

}  // namespace

std::string svg_of(const Polytope& p, const std::string& title) {
  if (p.ambient_dim != 2) throw std::invalid_argument("svg_of: only planar bodies can be drawn");
  Rational xmin = p.vertices.front()[0], xmax = xmin, ymin = p.vertices.front()[1], ymax = ymin;
  for (const auto& v : p.vertices) {
    xmin = std::min(xmin, v[0]);
    xmax = std::max(xmax, v[0]);
    ymin = std::min(ymin, v[1]);
    ymax = std::max(ymax, v[1]);
  }
  const Integer gx0 = floor_of(xmin), gx1 = ceil_of(xmax), gy0 = floor_of(ymin), gy1 = ceil_of(ymax);
  const double wx = Integer(gx1 - gx0).get_d(), wy = Integer(gy1 - gy0).get_d();
  const double span = std::max({wx, wy, 1.0});
  const double scale = 400.0 / span, margin = 70.0;
  const double width = wx * scale + 2 * margin;
  const double height = wy * scale + 2 * margin + 20;
  auto X = [&](const Rational& x) { return margin + Rational(x - gx0).get_d() * scale; };
  auto Y = [&](const Rational& y) { return height - margin - Rational(y - gy0).get_d() * scale; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
     << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << num(width / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
     << title << "</text>\n";

  const Integer cells = (gx1 - gx0 + 1) * (gy1 - gy0 + 1);
  if (cells <= 4000) {
    os << "<g fill=\"#9a9a9a\">\n";
    for (Integer x = gx0; x <= gx1; ++x)
      for (Integer y = gy0; y <= gy1; ++y)
        os << "<circle cx=\"" << num(X(Rational(x))) << "\" cy=\"" << num(Y(Rational(y))) << "\" r=\"1.5\"/>\n";
    os << "</g>\n";
  }

  if (p.vertices.size() == 1) {
    // A single point: nothing to fill.
  } else {
    os << "<polygon points=\"";
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
      os << (i ? " " : "") << num(X(p.vertices[i][0])) << "," << num(Y(p.vertices[i][1]));
    os << "\" fill=\"#cfe0f3\" fill-opacity=\"0.7\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";
  }
  for (const auto& v : p.vertices) {
    os << "<circle cx=\"" << num(X(v[0])) << "\" cy=\"" << num(Y(v[1])) << "\" r=\"3.5\" fill=\"#1f4e79\"/>\n";
    os << "<text x=\"" << num(X(v[0]) + 6) << "\" y=\"" << num(Y(v[1]) - 6)
       << "\" font-family=\"sans-serif\" font-size=\"12\">(" << to_string(v[0]) << ", " << to_string(v[1]) << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace khb
