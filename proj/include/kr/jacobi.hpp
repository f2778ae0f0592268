#pragma once
// Structure constants of a windowed model and the graded Jacobi sweep.

#include "kr/superalg.hpp"

#include <string>
#include <vector>

namespace kr {

// Brackets of basis elements in global indices (basis of g_jmin first, then g_jmin+1, ...).
struct StructureConstants {
  AlgebraId id = AlgebraId::E38;
  int jmin = 0;
  int jmax = 0;
  std::vector<int> degree;  // per global index
  std::vector<int> parity;
  std::vector<std::string> label;
  // c[a * n + b] = [e_a, e_b]; zero when the result degree is below the depth.
  std::vector<SparseVec> c;
  // computed[a * n + b] is false when the result leaves the window.
  std::vector<char> computed;

  int size() const { return static_cast<int>(degree.size()); }
  const SparseVec& at(int a, int b) const { return c[static_cast<size_t>(a) * degree.size() + static_cast<size_t>(b)]; }
  SparseVec& at(int a, int b) { return c[static_cast<size_t>(a) * degree.size() + static_cast<size_t>(b)]; }
  bool has(int a, int b) const { return computed[static_cast<size_t>(a) * degree.size() + static_cast<size_t>(b)] != 0; }
};

StructureConstants structure_constants(const AlgebraModel& m, int jmin, int jmax, int workers = 1);

struct JacobiViolation {
  std::string type;  // "antisymmetry" or "jacobi"
  std::vector<std::string> elements;
  std::string residual;
};

struct JacobiReport {
  long long pairs_checked = 0;
  long long triples_checked = 0;
  std::vector<JacobiViolation> violations;
};

JacobiReport jacobi_check(const StructureConstants& sc, int workers = 1, size_t max_listed = 50);
JacobiReport jacobi_check(const AlgebraModel& m, int jmin, int jmax, int workers = 1);

// Splits [0, n) into chunks handled by up to `workers` threads.
void parallel_for(int n, int workers, const std::function<void(int)>& body);
int default_workers();

}  // namespace kr
