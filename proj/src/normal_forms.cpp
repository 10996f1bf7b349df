#include "dcx/normal_forms.hpp"

#include <stdexcept>

namespace dcx {

namespace {

using boost::multiprecision::abs;

// Column ops on m mirrored on u so m_in * u == m holds throughout.
struct ColWorker {
  MatZ m, u;

  explicit ColWorker(const MatZ& in) : m(in), u(MatZ::Identity(in.cols(), in.cols())) {}

  void swap_cols(Index a, Index b) {
    m.col(a).swap(m.col(b));
    u.col(a).swap(u.col(b));
  }
  void negate_col(Index a) {
    m.col(a) = -m.col(a);
    u.col(a) = -u.col(a);
  }
  // col(a) += k * col(b)
  void add_col(Index a, Index b, const Int& k) {
    if (k == 0) return;
    m.col(a) += k * m.col(b);
    u.col(a) += k * u.col(b);
  }
};

}  // namespace

HnfResult hermite_normal_form(const MatZ& in) {
  ColWorker w(in);
  const Index rows = in.rows(), cols = in.cols();
  Index lead = 0;  // next column to place a pivot into
  for (Index r = 0; r < rows && lead < cols; ++r) {
    // Euclidean reduction across columns lead..cols-1 in row r until at most
    // one nonzero entry remains there; keep it at column `lead`.
    while (true) {
      Index piv = -1;
      for (Index j = lead; j < cols; ++j) {
        if (w.m(r, j) != 0 && (piv < 0 || abs(w.m(r, j)) < abs(w.m(r, piv)))) piv = j;
      }
      if (piv < 0) break;  // row r is zero on the working block; no pivot here
      if (piv != lead) w.swap_cols(piv, lead);
      bool cleared = true;
      for (Index j = lead + 1; j < cols; ++j) {
        if (w.m(r, j) == 0) continue;
        Int q = w.m(r, j) / w.m(r, lead);
        w.add_col(j, lead, -q);
        if (w.m(r, j) != 0) cleared = false;  // remainder survives; next round
      }
      if (cleared) {
        if (w.m(r, lead) < 0) w.negate_col(lead);
        // Reduce entries left of the pivot into [0, pivot).
        for (Index j = 0; j < lead; ++j) {
          Int q = w.m(r, j) / w.m(r, lead);
          if (w.m(r, j) - q * w.m(r, lead) < 0) q -= 1;
          w.add_col(j, lead, -q);
        }
        ++lead;
        break;
      }
    }
  }
  return {w.m, w.u};
}

MatZ hnf_basis(const MatZ& m) {
  MatZ h = hermite_normal_form(m).h;
  Index nz = 0;
  for (Index j = 0; j < h.cols(); ++j) {
    bool zero = true;
    for (Index i = 0; i < h.rows(); ++i)
      if (h(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) break;  // zero columns trail
    ++nz;
  }
  return h.leftCols(nz);
}

SnfResult smith_normal_form(const MatZ& in) {
  MatZ a = in;
  const Index rows = a.rows(), cols = a.cols();
  MatZ left = MatZ::Identity(rows, rows), right = MatZ::Identity(cols, cols);

  auto swap_rows = [&](Index x, Index y) {
    a.row(x).swap(a.row(y));
    left.row(x).swap(left.row(y));
  };
  auto swap_cols = [&](Index x, Index y) {
    a.col(x).swap(a.col(y));
    right.col(x).swap(right.col(y));
  };
  auto add_row = [&](Index x, Index y, const Int& k) {  // row x += k * row y
    a.row(x) += k * a.row(y);
    left.row(x) += k * left.row(y);
  };
  auto add_col = [&](Index x, Index y, const Int& k) {
    a.col(x) += k * a.col(y);
    right.col(x) += k * right.col(y);
  };

  const Index n = std::min(rows, cols);
  Index t = 0;
  for (; t < n; ++t) {
    // Pivot: minimal |a(i,j)| over the trailing block.
    Index pi = -1, pj = -1;
    for (Index i = t; i < rows; ++i)
      for (Index j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;  // trailing block is zero
    if (pi != t) swap_rows(pi, t);
    if (pj != t) swap_cols(pj, t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        add_row(i, t, -(a(i, t) / a(t, t)));
        if (a(i, t) != 0) {  // remainder smaller than pivot: promote it
          swap_rows(i, t);
          clean = false;
        }
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        add_col(j, t, -(a(t, j) / a(t, t)));
        if (a(t, j) != 0) {
          swap_cols(j, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility fix-up: fold any entry not divisible by the pivot back in.
      for (Index i = t + 1; i < rows && clean; ++i)
        for (Index j = t + 1; j < cols && clean; ++j)
          if (a(i, j) % a(t, t) != 0) {
            add_row(t, i, 1);
            clean = false;
          }
    }
    if (a(t, t) < 0) {
      a.row(t) = -a.row(t);
      left.row(t) = -left.row(t);
    }
  }
  SnfResult out;
  out.d.reserve(static_cast<size_t>(t));
  for (Index k = 0; k < t; ++k) out.d.push_back(a(k, k));
  out.left = left;
  out.right = right;
  return out;
}

Int det_integer(const MatZ& in) {
  if (in.rows() != in.cols()) throw std::invalid_argument("det_integer: non-square matrix");
  const Index n = in.rows();
  if (n == 0) return 1;
  MatZ a = in;
  Int prev = 1;
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index p = -1;
      for (Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;  // Bareiss: exact division
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Index rank_of(const MatQ& in) {
  MatQ a = in;
  Index rank = 0;
  for (Index c = 0; c < a.cols() && rank < a.rows(); ++c) {
    Index p = -1;
    for (Index i = rank; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    a.row(p).swap(a.row(rank));
    for (Index i = rank + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) / a(rank, c);
      a.row(i) -= f * a.row(rank);
    }
    ++rank;
  }
  return rank;
}

Index rank_of(const MatZ& in) { return rank_of(to_rat(in)); }

MatZ kernel_basis(const MatZ& m) {
  // Transform columns to HNF: zero columns of h correspond to u-columns in
  // the kernel; they span it and u unimodular makes them a lattice basis of
  // ker cap Z^cols (automatically saturated).
  HnfResult r = hermite_normal_form(m);
  std::vector<VecZ> ker;
  for (Index j = 0; j < r.h.cols(); ++j) {
    bool zero = true;
    for (Index i = 0; i < r.h.rows(); ++i)
      if (r.h(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) ker.push_back(r.u.col(j));
  }
  return hnf_basis(matrix_from_columns(ker, m.cols()));
}

MatZ inverse_unimodular(const MatZ& m) {
  Int d = det_integer(m);
  if (d != 1 && d != -1) throw std::invalid_argument("inverse_unimodular: determinant not +-1");
  const Index n = m.rows();
  Eigen::FullPivLU<MatQ> lu(to_rat(m));
  lu.setThreshold(Rat(0));
  return to_int(MatQ(lu.solve(MatQ::Identity(n, n))));
}

VecQ solve(const MatQ& m, const VecQ& b) {
  Eigen::FullPivLU<MatQ> lu(m);
  // Exact scalar: any nonzero entry is a valid pivot.
  lu.setThreshold(Rat(0));
  VecQ x = lu.solve(b);
  VecQ resid = m * x - b;
  for (Index i = 0; i < resid.size(); ++i)
    if (resid[i] != 0) throw std::invalid_argument("solve: inconsistent linear system");
  return x;
}

}  // namespace dcx
