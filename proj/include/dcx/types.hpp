#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <vector>

namespace dcx {

// Exact scalars. Expression templates are disabled so the types behave as
// plain value types inside Eigen expressions.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatZ = Mat<Int>;
using VecZ = Vec<Int>;
using MatQ = Mat<Rat>;
using VecQ = Vec<Rat>;

using Index = Eigen::Index;

inline Int num(const Rat& r) { return Int(boost::multiprecision::numerator(r)); }
inline Int den(const Rat& r) { return Int(boost::multiprecision::denominator(r)); }

Rat to_rat(const Int& z);
Rat make_rat(const Int& p, const Int& q);
VecQ to_rat(const VecZ& v);
MatQ to_rat(const MatZ& m);

bool is_integer(const Rat& r);
bool is_integer(const VecQ& v);
bool is_integer(const MatQ& m);
Int floor_int(const Rat& r);
Int ceil_int(const Rat& r);

// Precondition: all entries integral.
VecZ to_int(const VecQ& v);
MatZ to_int(const MatQ& m);

Int gcd_of(const VecZ& v);

// v / gcd(v); the zero vector stays zero. Keeps the sign of v.
VecZ primitive(const VecZ& v);
// Clears denominators first, then reduces; direction of a rational vector.
VecZ primitive(const VecQ& v);
// Primitive with the first nonzero entry positive; canonical per +- line.
VecZ line_representative(const VecZ& v);

bool lex_less(const VecZ& a, const VecZ& b);
bool lex_less(const VecQ& a, const VecQ& b);

struct VecZLess {
  bool operator()(const VecZ& a, const VecZ& b) const { return lex_less(a, b); }
};
struct VecQLess {
  bool operator()(const VecQ& a, const VecQ& b) const { return lex_less(a, b); }
};

// Columns sorted lexicographically; with dedup for canonical point sets.
MatZ sorted_columns(const MatZ& m);
MatQ sorted_columns(const MatQ& m);
MatZ sorted_unique_columns(const MatZ& m);
MatQ sorted_unique_columns(const MatQ& m);

std::vector<VecZ> columns_of(const MatZ& m);
std::vector<VecQ> columns_of(const MatQ& m);
MatZ matrix_from_columns(const std::vector<VecZ>& cols, Index rows);
MatQ matrix_from_columns(const std::vector<VecQ>& cols, Index rows);

// "p" or "p/q" with q > 0; the parse rejects anything else.
std::string rat_string(const Rat& r);
Rat parse_rat(const std::string& s);

}  // namespace dcx
