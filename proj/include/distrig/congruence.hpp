#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "distrig/enumeration.hpp"
#include "distrig/errors.hpp"
#include "distrig/geometry.hpp"
#include "distrig/matrix.hpp"

namespace distrig {

enum class Group { O, SO };

inline const char* to_string(Group g) { return g == Group::O ? "O" : "SO"; }

inline Group parse_group(const std::string& s) {
  if (s == "O") return Group::O;
  if (s == "SO") return Group::SO;
  throw ParseError("group must be O or SO, got '" + s + "'");
}

// u_j = v_j - v_0 for j = 1..k.
inline std::vector<std::vector<Rational>> pin_to_origin(const ConfigTuple& t) {
  std::vector<std::vector<Rational>> u;
  for (std::size_t j = 1; j < t.size(); ++j) {
    std::vector<Rational> v(t.dim());
    for (std::size_t i = 0; i < t.dim(); ++i) v[i] = t[j][i] - t[0][i];
    u.push_back(std::move(v));
  }
  return u;
}

// Frame A = [u_1 .. u_d] and coefficients c_j with A c_j = u_j for j > d.
struct MovingFrame {
  RationalMatrix frame;
  std::vector<std::vector<Rational>> coeffs;
};

inline MovingFrame moving_frame_coords(const ConfigTuple& t) {
  const std::size_t d = t.dim();
  if (t.size() < d + 1 || !is_nonsingular(t))
    throw PreconditionError("moving frame needs a non-singular tuple (first d+1 points affinely independent)");
  const auto u = pin_to_origin(t);
  MovingFrame mf{frame_matrix(t.points(), d), {}};
  for (std::size_t j = d; j < u.size(); ++j) mf.coeffs.push_back(solve(mf.frame, u[j]));
  return mf;
}

using RealMatrix = Matrix<double>;

// A = B C with B orthogonal and C upper triangular with positive diagonal,
// by modified Gram-Schmidt on the columns of A with one re-orthogonalization pass.
struct GramSchmidtFactors {
  RealMatrix orthogonal;  // B
  RealMatrix triangular;  // C
};

inline GramSchmidtFactors gram_schmidt(const RealMatrix& a) {
  const std::size_t d = a.rows();
  if (a.cols() != d) throw PreconditionError("gram_schmidt: square matrix required");
  RealMatrix q(d, d, 0.0), r(d, d, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<double> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = a(i, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = 0; p < j; ++p) {
        double dot = 0;
        for (std::size_t i = 0; i < d; ++i) dot += q(i, p) * v[i];
        r(p, j) += dot;
        for (std::size_t i = 0; i < d; ++i) v[i] -= dot * q(i, p);
      }
    }
    double norm = 0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (!(norm > 0)) throw PreconditionError("gram_schmidt: singular frame");
    r(j, j) = norm;
    for (std::size_t i = 0; i < d; ++i) q(i, j) = v[i] / norm;
  }
  return {q, r};
}

// Representative of a congruence class: the triangular factor of the frame,
// the frame coefficients of the trailing points, and the orientation of the
// frame. Under O the orientation is carried but not compared.
struct CanonicalForm {
  RealMatrix triangular;
  std::vector<std::vector<double>> frame_coeffs;
  int orientation = 1;
  Group group = Group::O;
};

namespace detail {

inline bool close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace detail

inline bool equal_within(const CanonicalForm& a, const CanonicalForm& b, double rel = 1e-9) {
  if (a.group != b.group || a.triangular.rows() != b.triangular.rows() ||
      a.frame_coeffs.size() != b.frame_coeffs.size())
    return false;
  if (a.group == Group::SO && a.orientation != b.orientation) return false;
  const std::size_t d = a.triangular.rows();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!detail::close(a.triangular(i, j), b.triangular(i, j), rel)) return false;
  for (std::size_t j = 0; j < a.frame_coeffs.size(); ++j)
    for (std::size_t i = 0; i < d; ++i)
      if (!detail::close(a.frame_coeffs[j][i], b.frame_coeffs[j][i], rel)) return false;
  return true;
}

// Canonical form of a real tuple; each inner vector is one point.
inline CanonicalForm canonical_form(const std::vector<std::vector<double>>& pts, Group group) {
  if (pts.size() < 2) throw PreconditionError("canonical_form: need at least 2 points");
  const std::size_t d = pts.front().size();
  if (pts.size() < d + 1) throw PreconditionError("canonical_form: need k >= d");
  RealMatrix a(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) a(i, j) = pts[j + 1][i] - pts[0][i];
  // Orientation from the elimination's pivots.
  RealMatrix lu = a;
  int sign = 1;
  for (std::size_t k = 0; k < d; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < d; ++r)
      if (std::abs(lu(r, k)) > std::abs(lu(piv, k))) piv = r;
    if (lu(piv, k) == 0.0) throw PreconditionError("canonical_form: singular tuple");
    if (piv != k) {
      lu.swap_rows(piv, k);
      sign = -sign;
    }
    if (lu(k, k) < 0) sign = -sign;
    for (std::size_t r = k + 1; r < d; ++r) {
      const double f = lu(r, k) / lu(k, k);
      for (std::size_t c = k; c < d; ++c) lu(r, c) -= f * lu(k, c);
    }
  }
  CanonicalForm cf;
  cf.group = group;
  cf.orientation = sign;
  const auto gs = gram_schmidt(a);
  cf.triangular = gs.triangular;
  // c_j = C^{-1} B^T u_j by back substitution.
  for (std::size_t j = d + 1; j < pts.size(); ++j) {
    std::vector<double> y(d, 0.0), c(d, 0.0);
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t i = 0; i < d; ++i) y[p] += gs.orthogonal(i, p) * (pts[j][i] - pts[0][i]);
    for (std::size_t p = d; p-- > 0;) {
      double s = y[p];
      for (std::size_t q = p + 1; q < d; ++q) s -= gs.triangular(p, q) * c[q];
      c[p] = s / gs.triangular(p, p);
    }
    cf.frame_coeffs.push_back(std::move(c));
  }
  return cf;
}

// Canonical form of an exact tuple. The frame coefficients are solved exactly
// and the orientation is the exact determinant sign.
inline CanonicalForm canonical_form(const ConfigTuple& t, Group group) {
  const MovingFrame mf = moving_frame_coords(t);
  const std::size_t d = t.dim();
  RealMatrix a(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a(i, j) = mf.frame(i, j).get_d();
  CanonicalForm cf;
  cf.group = group;
  cf.orientation = sgn(determinant(mf.frame));
  cf.triangular = gram_schmidt(a).triangular;
  for (const auto& c : mf.coeffs) {
    std::vector<double> v;
    for (const auto& x : c) v.push_back(x.get_d());
    cf.frame_coeffs.push_back(std::move(v));
  }
  return cf;
}

// Labeled squared distances over all pairs (lexicographic), plus orientation under SO.
struct ExactCongruenceKey {
  std::vector<Rational> distances;
  int orientation = 0;  // 0 under O
  friend bool operator==(const ExactCongruenceKey&, const ExactCongruenceKey&) = default;
};

inline ExactCongruenceKey congruence_key(const ConfigTuple& t, Group group) {
  ExactCongruenceKey key;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) key.distances.push_back(squared_distance(t[i], t[j]));
  if (group == Group::SO) key.orientation = sgn(determinant(frame_matrix(t.points(), t.dim())));
  return key;
}

inline bool congruent_exact(const ConfigTuple& a, const ConfigTuple& b, Group group) {
  if (a.dim() != b.dim() || a.size() != b.size())
    throw PreconditionError("congruent_exact: tuples differ in dimension or length");
  if (a.size() < a.dim() + 1 || !is_nonsingular(a) || !is_nonsingular(b))
    throw PreconditionError("congruent_exact: tuples must be non-singular");
  return congruence_key(a, group) == congruence_key(b, group);
}

struct CongruenceCensus {
  Group group = Group::O;
  std::size_t d = 0, k = 0, n = 0;
  bool any_order = false;
  std::uint64_t nonsingular_count = 0;  // N, admitted tuples
  std::uint64_t class_count = 0;        // |M_d(k)(E)|
  std::map<std::uint64_t, std::uint64_t> class_size_histogram;  // size -> number of classes
  Integer sum_sq_class_sizes = 0;       // sum of lambda^2
  Integer cs_lhs = 0;                   // N^2
  Integer cs_rhs = 0;                   // |M| * sum lambda^2
};

struct CongruenceOptions : EnumerationOptions {
  bool any_order = false;
};

// Congruence classes of non-singular (k+1)-tuples of E, keyed exactly by
// labeled squared distances (and orientation under SO). With any_order, a
// tuple whose leading d+1 points are dependent is still admitted when some
// reordering fixes that; it is keyed under the lexicographically first such
// reordering of positions.
inline CongruenceCensus congruence_census(const PointSet& e, std::size_t k, Group group,
                                          const CongruenceOptions& opt = {}) {
  const std::size_t d = e.dim(), n = e.size(), len = k + 1;
  if (k < d) throw PreconditionError("congruence_census needs k >= d");
  if (n < d + 1) throw PreconditionError("congruence_census needs |E| >= d+1");
  check_budget(n, len, opt.budget);
  const DistanceTable table(e);
  const OrientationOracle orient(e);
  const std::size_t pairs = len * (len - 1) / 2;
  const KeyLayout layout(pairs + (group == Group::SO ? 1 : 0), std::max<std::size_t>(table.distinct(), 2));

  auto fill = [&](auto& b, std::size_t i0, auto& map) {
    std::vector<std::size_t> perm(len), chosen;
    for_each_tuple(n, len, i0, [&](const std::vector<std::size_t>& idx) {
      const std::size_t* use = idx.data();
      int s = orient.sign(use);
      if (s == 0) {
        if (!opt.any_order) return;
        // Lexicographically first ordered choice of d+1 positions that is independent.
        chosen.clear();
        std::vector<char> used(len, 0);
        std::vector<std::size_t> probe(d + 1);
        auto search = [&](auto&& self, std::size_t depth) -> bool {
          if (depth == d + 1) {
            for (std::size_t i = 0; i <= d; ++i) probe[i] = idx[chosen[i]];
            s = orient.sign(probe.data());
            return s != 0;
          }
          for (std::size_t p = 0; p < len; ++p) {
            if (used[p]) continue;
            used[p] = 1;
            chosen.push_back(p);
            if (self(self, depth + 1)) return true;
            chosen.pop_back();
            used[p] = 0;
          }
          return false;
        };
        if (!search(search, 0)) return;
        std::size_t w = 0;
        for (auto p : chosen) perm[w++] = idx[p];
        for (std::size_t p = 0; p < len; ++p)
          if (!used[p]) perm[w++] = idx[p];
        use = perm.data();
      }
      b.reset();
      for (std::size_t i = 0; i < len; ++i) {
        const std::uint32_t* row = table.row(use[i]);
        for (std::size_t j = i + 1; j < len; ++j) b.push(row[use[j]]);
      }
      if (group == Group::SO) b.push(s > 0 ? 1u : 0u);
      ++map[b.get()];
    });
  };
  const KeyCounts counts = count_keys(layout, n, opt.threads, fill);

  CongruenceCensus rep;
  rep.group = group;
  rep.d = d;
  rep.k = k;
  rep.n = n;
  rep.any_order = opt.any_order;
  rep.class_count = counts.entries.size();
  for (const auto& [key, c] : counts.entries) {
    rep.nonsingular_count += c;
    ++rep.class_size_histogram[c];
    rep.sum_sq_class_sizes += Integer(static_cast<unsigned long>(c)) * Integer(static_cast<unsigned long>(c));
  }
  const Integer big_n(static_cast<unsigned long>(rep.nonsingular_count));
  rep.cs_lhs = big_n * big_n;
  rep.cs_rhs = Integer(static_cast<unsigned long>(rep.class_count)) * rep.sum_sq_class_sizes;
  return rep;
}

}  // namespace distrig
