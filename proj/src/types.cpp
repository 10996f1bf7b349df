#include "dcx/types.hpp"

#include <stdexcept>

namespace dcx {

Rat to_rat(const Int& z) { return Rat(z); }

Rat make_rat(const Int& p, const Int& q) {
  if (q == 0) throw std::invalid_argument("make_rat: zero denominator");
  return Rat(p) / Rat(q);
}

VecQ to_rat(const VecZ& v) {
  VecQ out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

MatQ to_rat(const MatZ& m) {
  MatQ out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = Rat(m(i, j));
  return out;
}

bool is_integer(const Rat& r) { return den(r) == 1; }

bool is_integer(const VecQ& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_integer(v[i])) return false;
  return true;
}

bool is_integer(const MatQ& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_integer(m(i, j))) return false;
  return true;
}

Int floor_int(const Rat& r) {
  Int p = num(r), q = den(r);
  Int d = p / q;
  if (p % q != 0 && p < 0) d -= 1;
  return d;
}

Int ceil_int(const Rat& r) { return -floor_int(-r); }

VecZ to_int(const VecQ& v) {
  VecZ out(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    if (!is_integer(v[i])) throw std::invalid_argument("to_int: non-integer entry");
    out[i] = num(v[i]);
  }
  return out;
}

MatZ to_int(const MatQ& m) {
  MatZ out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) {
      if (!is_integer(m(i, j))) throw std::invalid_argument("to_int: non-integer entry");
      out(i, j) = num(m(i, j));
    }
  return out;
}

Int gcd_of(const VecZ& v) {
  Int g = 0;
  for (Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, v[i]);
  return g;
}

VecZ primitive(const VecZ& v) {
  Int g = gcd_of(v);
  if (g == 0 || g == 1) return v;
  VecZ out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

VecZ primitive(const VecQ& v) {
  Int l = 1;
  for (Index i = 0; i < v.size(); ++i) l = boost::multiprecision::lcm(l, den(v[i]));
  VecZ scaled(v.size());
  for (Index i = 0; i < v.size(); ++i) scaled[i] = num(v[i]) * (l / den(v[i]));
  return primitive(scaled);
}

VecZ line_representative(const VecZ& v) {
  VecZ p = primitive(v);
  for (Index i = 0; i < p.size(); ++i) {
    if (p[i] != 0) {
      if (p[i] < 0) p = -p;
      break;
    }
  }
  return p;
}

bool lex_less(const VecZ& a, const VecZ& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool lex_less(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

template <class M>
M sorted_columns_impl(const M& m, bool unique) {
  std::vector<Index> idx(static_cast<size_t>(m.cols()));
  for (size_t j = 0; j < idx.size(); ++j) idx[j] = static_cast<Index>(j);
  auto less = [&](Index a, Index b) {
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, a) != m(i, b)) return m(i, a) < m(i, b);
    return false;
  };
  std::sort(idx.begin(), idx.end(), less);
  if (unique) {
    auto eq = [&](Index a, Index b) { return !less(a, b) && !less(b, a); };
    idx.erase(std::unique(idx.begin(), idx.end(), eq), idx.end());
  }
  M out(m.rows(), static_cast<Index>(idx.size()));
  for (size_t j = 0; j < idx.size(); ++j) out.col(static_cast<Index>(j)) = m.col(idx[j]);
  return out;
}

}  // namespace

MatZ sorted_columns(const MatZ& m) { return sorted_columns_impl(m, false); }
MatQ sorted_columns(const MatQ& m) { return sorted_columns_impl(m, false); }
MatZ sorted_unique_columns(const MatZ& m) { return sorted_columns_impl(m, true); }
MatQ sorted_unique_columns(const MatQ& m) { return sorted_columns_impl(m, true); }

std::vector<VecZ> columns_of(const MatZ& m) {
  std::vector<VecZ> out;
  out.reserve(static_cast<size_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return out;
}

std::vector<VecQ> columns_of(const MatQ& m) {
  std::vector<VecQ> out;
  out.reserve(static_cast<size_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return out;
}

MatZ matrix_from_columns(const std::vector<VecZ>& cols, Index rows) {
  MatZ out(rows, static_cast<Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Index>(j)) = cols[j];
  return out;
}

MatQ matrix_from_columns(const std::vector<VecQ>& cols, Index rows) {
  MatQ out(rows, static_cast<Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Index>(j)) = cols[j];
  return out;
}

std::string rat_string(const Rat& r) {
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

Rat parse_rat(const std::string& s) {
  auto bad = [&] { throw std::invalid_argument("parse_rat: malformed rational '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  auto check_int = [&](const std::string& t) {
    if (t.empty()) bad();
    size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (k == t.size()) bad();
    for (; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') bad();
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rat(Int(s));
  }
  std::string p = s.substr(0, slash), q = s.substr(slash + 1);
  check_int(p);
  check_int(q);
  Int qq(q);
  if (qq <= 0) bad();
  return make_rat(Int(p), qq);
}

}  // namespace dcx
