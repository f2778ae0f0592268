#pragma once
// Exact sparse vectors/matrices, fraction-free rank and kernel, span solving.

#include "kr/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace kr {

using SparseVec = std::map<int, Rational>;

void axpy(SparseVec& y, const Rational& a, const SparseVec& x);  // y += a*x
SparseVec scaled(const SparseVec& x, const Rational& a);
inline bool is_zero(const SparseVec& v) { return v.empty(); }

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::map<std::pair<int, int>, Rational>& entries() const { return e_; }
  bool is_zero() const { return e_.empty(); }

  Rational get(int r, int c) const;
  void set(int r, int c, const Rational& v);
  void add(int r, int c, const Rational& v);

  SparseMatrix transpose() const;
  // Column c as a sparse vector over rows.
  SparseVec column(int c) const;
  std::vector<SparseVec> row_vectors() const;
  SparseVec apply(const SparseVec& x) const;  // M x

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  SparseMatrix scaled(const Rational& c) const;
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  static SparseMatrix identity(int n);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::map<std::pair<int, int>, Rational> e_;
};

struct RankKernel {
  int rank = 0;
  // Kernel basis: one vector per non-pivot column f, with entry 1 at f,
  // read off the reduced echelon form of the row space.
  std::vector<SparseVec> kernel;
  std::vector<int> pivots;  // pivot columns in increasing order
};

RankKernel rank_kernel(const SparseMatrix& m);
int rank_of(const SparseMatrix& m);
int rank_of_rows(const std::vector<SparseVec>& rows);
// Reduced echelon basis (rows, lead entry 1) of the span of the given vectors.
std::vector<SparseVec> rref_rows(const std::vector<SparseVec>& rows);

// Incrementally built basis of a subspace with coordinate recovery.
class SpanSolver {
 public:
  // Adds v; returns false (and stores nothing) when v is dependent.
  bool add(const SparseVec& v);
  int dim() const { return static_cast<int>(piv_.size()); }
  // Coordinates of t in terms of the accepted vectors (in insertion order), or nullopt.
  std::optional<SparseVec> coords(const SparseVec& t) const;
  bool contains(const SparseVec& t) const;
  // Remainder of t after reduction (zero iff t is in the span).
  SparseVec reduce(const SparseVec& t) const;

 private:
  struct Pivot {
    int col;
    SparseVec vec;    // reduced vector, lead entry 1 at col
    SparseVec combo;  // combination of accepted vectors giving vec
  };
  std::vector<Pivot> piv_;
  std::map<int, int> by_col_;
  int accepted_ = 0;
};

}  // namespace kr
