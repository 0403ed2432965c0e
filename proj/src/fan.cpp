#include "looijenga/fan.hpp"

namespace looijenga {

namespace {

bool ray_primitive(const Ray& r) {
  if (r[0] == 0 && r[1] == 0) return false;
  return boost::multiprecision::gcd(boost::multiprecision::abs(r[0]),
                                    boost::multiprecision::abs(r[1])) == 1;
}

// Number of times the counterclockwise arc (u, v], of angle < pi, contains the
// direction (1, 0). Summed over consecutive pairs this is the winding number.
int crosses_positive_x(const Ray& u, const Ray& v) {
  const Ray d{Int(1), Int(0)};
  if (det2(v, d) == 0 && v[0] > 0) return 1;  // v is the direction itself
  if (det2(u, d) > 0 && det2(d, v) > 0) return 1;
  return 0;
}

}  // namespace

Fan2D::Fan2D(std::vector<Ray> r) : rays(std::move(r)) {
  const std::size_t n = rays.size();
  if (n < 3) throw std::invalid_argument("Fan2D: at least three rays required");
  int winding = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!ray_primitive(rays[i])) throw std::invalid_argument("Fan2D: ray not primitive");
    const Ray& a = rays[i];
    const Ray& b = rays[(i + 1) % n];
    if (det2(a, b) != 1)
      throw std::invalid_argument("Fan2D: consecutive rays must form a positive basis");
    winding += crosses_positive_x(a, b);
  }
  if (winding != 1) throw std::invalid_argument("Fan2D: rays must wind exactly once");
}

std::vector<Int> selfintersections(const Fan2D& f) {
  const std::size_t n = f.size();
  std::vector<Int> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Ray& prev = f.rays[(i + n - 1) % n];
    const Ray& cur = f.rays[i];
    const Ray& next = f.rays[(i + 1) % n];
    // prev + next = -d_i * cur, solvable on either nonzero coordinate.
    Int sx = prev[0] + next[0], sy = prev[1] + next[1];
    Int di;
    if (cur[0] != 0) {
      if (sx % cur[0] != 0) throw std::logic_error("selfintersections: broken fan relation");
      di = -sx / cur[0];
      if (-di * cur[1] != sy) throw std::logic_error("selfintersections: broken fan relation");
    } else {
      if (sy % cur[1] != 0 || sx != 0)
        throw std::logic_error("selfintersections: broken fan relation");
      di = -sy / cur[1];
    }
    d[i] = di;
  }
  return d;
}

Fan2D fan_from_selfintersections(const std::vector<Int>& d) {
  const std::size_t n = d.size();
  if (n < 3) throw std::invalid_argument("unrealizable sequence: need at least three entries");
  std::vector<Ray> rays;
  rays.push_back({Int(1), Int(0)});
  rays.push_back({Int(0), Int(1)});
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const Ray& prev = rays[i - 1];
    const Ray& cur = rays[i];
    rays.push_back({-d[i] * cur[0] - prev[0], -d[i] * cur[1] - prev[1]});
  }
  // Closure: the recurrence must return to v_1, v_2.
  const Ray& last = rays[n - 1];
  const Ray& second_last = rays[n - 2];
  Ray wrap1{-d[n - 1] * last[0] - second_last[0], -d[n - 1] * last[1] - second_last[1]};
  if (wrap1 != rays[0]) throw std::invalid_argument("unrealizable sequence: does not close up");
  Ray wrap2{-d[0] * rays[0][0] - last[0], -d[0] * rays[0][1] - last[1]};
  if (wrap2 != rays[1]) throw std::invalid_argument("unrealizable sequence: does not close up");
  try {
    return Fan2D(std::move(rays));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("unrealizable sequence: winding or smoothness failure");
  }
}

Fan2D corner_blowup(const Fan2D& f, std::size_t i) {
  const std::size_t n = f.size();
  if (i >= n) throw std::invalid_argument("corner_blowup: index out of range");
  std::vector<Ray> rays;
  rays.reserve(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    rays.push_back(f.rays[j]);
    if (j == i) {
      const Ray& a = f.rays[i];
      const Ray& b = f.rays[(i + 1) % n];
      rays.push_back({a[0] + b[0], a[1] + b[1]});
    }
  }
  return Fan2D(std::move(rays));
}

ToricPic toric_pic(const Fan2D& f) {
  const std::size_t n = f.size();
  // Relations: image of M -> Z^n, m |-> (m wedge v_i)_i; basis images for
  // m = (1,0) and m = (0,1) are (v_{i,y})_i and (-v_{i,x})_i.
  IntMat rel(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    rel(i, 0) = f.rays[i][1];
    rel(i, 1) = -f.rays[i][0];
  }
  // The 2x2 block of the last two coordinates is unimodular because
  // det(v_{n-1}, v_n) = 1; reduce any vector by the relations to kill them.
  Int a = rel(n - 2, 0), b = rel(n - 2, 1);
  Int c = rel(n - 1, 0), dd = rel(n - 1, 1);
  Int block_det = a * dd - b * c;
  if (block_det != 1 && block_det != -1) throw std::logic_error("toric_pic: relation block not unimodular");
  auto reduce = [&](const ClassVec& u) {
    // Solve (s, t): s*(a, c) + t*(b, dd) = (u_{n-2}, u_{n-1}).
    Int ux = u[n - 2], uy = u[n - 1];
    Int s = (ux * dd - b * uy) / block_det;
    Int t = (a * uy - ux * c) / block_det;
    ClassVec r(n - 2);
    for (std::size_t i = 0; i + 2 < n; ++i) r[i] = u[i] - s * rel(i, 0) - t * rel(i, 1);
    return r;
  };

  std::vector<Int> d = selfintersections(f);
  // Intersection pairing on Z^n: diag d_i, cyclically adjacent 1.
  auto pair_zn = [&](const ClassVec& x, const ClassVec& y) {
    Int acc(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      acc += x[i] * d[i] * y[i];
      acc += x[i] * y[(i + 1) % n];
      acc += x[i] * y[(i + n - 1) % n];
    }
    return acc;
  };

  IntMat gram(n - 2, n - 2);
  for (std::size_t i = 0; i + 2 < n; ++i)
    for (std::size_t j = 0; j + 2 < n; ++j) {
      ClassVec ei(n, Int(0)), ej(n, Int(0));
      ei[i] = 1;
      ej[j] = 1;
      gram(i, j) = pair_zn(ei, ej);
    }
  std::vector<std::string> labels(n - 2);
  for (std::size_t i = 0; i + 2 < n; ++i) labels[i] = "T" + std::to_string(i + 1);

  ToricPic tp;
  tp.lattice = IntLattice(gram, labels);
  tp.relations = rel;
  for (std::size_t i = 0; i < n; ++i) {
    ClassVec ei(n, Int(0));
    ei[i] = 1;
    tp.boundary_classes.push_back(reduce(ei));
  }
  // The pairing must descend to the quotient: relations pair to zero.
  for (std::size_t j = 0; j < 2; ++j) {
    ClassVec r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = rel(i, j);
    for (std::size_t i = 0; i < n; ++i) {
      ClassVec ei(n, Int(0));
      ei[i] = 1;
      if (pair_zn(r, ei) != 0) throw std::logic_error("toric_pic: relations not in the radical");
    }
  }
  return tp;
}

}  // namespace looijenga
