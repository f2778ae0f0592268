#pragma once
// U(L_-) in a PBW basis, truncated generalized Verma modules M(V) = U(L_-) (x) V,
// the action of the whole algebra on them, morphism elements and induced block maps.

#include "kr/heis.hpp"
#include "kr/sl5.hpp"
#include "kr/sparse.hpp"
#include "kr/superalg.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace kr {

// Nondecreasing sequence of positions in the PBW order; odd factors at most once.
using Word = std::vector<uint8_t>;
using UElem = std::map<Word, Rational>;

class Enveloping {
 public:
  // `order` lists canonical generator indices in PBW order (identity when empty).
  Enveloping(const AlgebraModel& model, int cutoff, std::vector<int> order = {});

  const AlgebraModel& model() const { return *model_; }
  int cutoff() const { return cutoff_; }
  int ngens() const { return static_cast<int>(gens_.size()); }
  const SuperElement& gen(int g) const { return gens_[static_cast<size_t>(g)]; }
  const std::string& gen_name(int g) const { return names_[static_cast<size_t>(g)]; }
  int gen_udeg(int g) const { return udeg_[static_cast<size_t>(g)]; }
  int gen_parity(int g) const { return par_[static_cast<size_t>(g)]; }
  int find_gen(const std::string& name) const;

  int udeg(const Word& w) const;
  int parity(const Word& w) const;
  bool is_normal(const Word& w) const;
  std::string word_str(const Word& w) const;

  UElem left_mul(int g, const Word& w) const;
  UElem mul(const Word& a, const Word& b) const;
  UElem mul(const UElem& a, const UElem& b) const;
  // Product of generators given in any order.
  UElem straighten(const std::vector<int>& factors) const;
  // Element of L_- as a combination of generators.
  UElem element_of(const SuperElement& x) const;
  const std::vector<Word>& words(int udeg) const;

  // x . (w (x) a) for a basis element x of g_j, j >= 0: words with remnants acting on the ground.
  // Remnant index -1 is the identity, k >= 0 the k-th basis element of g_0.
  using Action = std::map<Word, SparseVec>;
  const Action& act_word(int j, int idx, const Word& w) const;

 private:
  UElem bracket_gens(int a, int b) const;

  const AlgebraModel* model_;
  int cutoff_;
  std::vector<SuperElement> gens_;
  std::vector<std::string> names_;
  std::vector<int> udeg_, par_;
  std::map<int, SpanSolver> gen_span_;        // per degree, generators in model coordinates
  std::map<int, std::vector<int>> gen_of_deg_;  // generators of each degree in insertion order
  std::vector<std::vector<UElem>> brackets_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, Word>, UElem> lmemo_;
  mutable std::map<std::tuple<int, int, Word>, Action> amemo_;
  mutable std::map<int, std::vector<Word>> words_;
};

// Finite-dimensional g_0-module used as the ground of an induced module.
class GroundModule {
 public:
  virtual ~GroundModule() = default;
  virtual std::string name() const = 0;
  virtual int dim() const = 0;
  virtual std::string basis_label(int i) const = 0;
  // Action of a degree-0 element on a coordinate vector.
  virtual SparseVec act(const SuperElement& x, const SparseVec& v) const = 0;
};

SparseMatrix rho_matrix(const GroundModule& V, const SuperElement& x);

class FockGround : public GroundModule {
 public:
  explicit FockGround(FockBlock b) : b_(std::move(b)) {}
  const FockBlock& block() const { return b_; }
  std::string name() const override { return b_.name(); }
  int dim() const override { return b_.dim(); }
  std::string basis_label(int i) const override;
  SparseVec act(const SuperElement& x, const SparseVec& v) const override;

 private:
  FockBlock b_;
};

class S5Ground : public GroundModule {
 public:
  explicit S5Ground(HighComponent h) : h_(std::move(h)) {}
  const HighComponent& component() const { return h_; }
  std::string name() const override { return h_.name(); }
  int dim() const override { return h_.dim(); }
  std::string basis_label(int i) const override { return h_.poly(i).str(); }
  SparseVec act(const SuperElement& x, const SparseVec& v) const override;

 private:
  HighComponent h_;
};

// Phi = sum_m u_m (x) l_m, with l_m a matrix from the source ground to the target ground.
struct MorphismElement {
  std::string name;
  std::shared_ptr<const GroundModule> source, target;
  int udeg = 0;
  std::map<Word, SparseMatrix> terms;
  std::map<Word, std::string> hom_desc;  // symbolic Hom part per term, when known
  bool is_zero() const;
  void add(const UElem& u, const SparseMatrix& l);
};

using RhoCache = std::map<std::pair<const GroundModule*, int>, SparseMatrix>;

// Truncated induced module with a (U-degree, weight) block decomposition.
using Weight = std::vector<Rational>;
std::string weight_str(const Weight& w);

struct BlockKey {
  int udeg = 0;
  Weight weight;
  auto operator<=>(const BlockKey&) const = default;
  std::string str() const { return std::to_string(udeg) + "," + weight_str(weight); }
};

class InducedModule {
 public:
  // Words of U-degree up to max_udeg (the cutoff when negative).
  InducedModule(const Enveloping& U, std::shared_ptr<const GroundModule> V, const std::vector<SuperElement>& cartan,
                int max_udeg = -1);
  int max_udeg() const { return max_udeg_; }
  const Enveloping& U() const { return *U_; }
  const GroundModule& ground() const { return *V_; }
  std::shared_ptr<const GroundModule> ground_ptr() const { return V_; }
  const std::map<BlockKey, std::vector<std::pair<Word, int>>>& blocks() const { return blocks_; }
  // Block and position of a basis vector; throws if the U-degree exceeds the cutoff.
  std::pair<BlockKey, int> locate(const Word& w, int a) const;
  const Weight& ground_weight(int a) const { return gw_[static_cast<size_t>(a)]; }
  Weight word_weight(const Word& w) const;
  int dim(int udeg) const;

 private:
  const Enveloping* U_;
  std::shared_ptr<const GroundModule> V_;
  int max_udeg_ = 0;
  std::vector<Weight> genw_;
  std::vector<Weight> gw_;
  std::map<BlockKey, std::vector<std::pair<Word, int>>> blocks_;
  std::map<std::pair<Word, int>, std::pair<BlockKey, int>> index_;
};

// Cartan elements used for weights: x_i d_i and h (E36, E38), H_1..H_4 (E510).
std::vector<SuperElement> cartan_elements(const AlgebraModel& m);

using InducedVector = std::map<std::pair<Word, int>, Rational>;
std::string induced_str(const Enveloping& U, const InducedVector& v);

InducedVector act_full(const Enveloping& U, const GroundModule& V, const SuperElement& x, const InducedVector& v,
                       RhoCache* cache = nullptr);

// v . Phi as a morphism element: [v, u_m] (x) l_m + u_m (x) (rho_B(v) l_m - l_m rho_A(v)) for v in g_0,
// remnants rho_B(X) l_m for v of positive degree.
MorphismElement phi_act(const Enveloping& U, const SuperElement& v, const MorphismElement& phi, RhoCache* cache = nullptr);

struct SingularResidual {
  std::string generator;
  bool zero = true;
  long nonzero_entries = 0;
  std::vector<std::string> sample;  // a few nonzero terms, "word: (row,col)=value"
};

struct SingularReport {
  std::string morphism;
  bool pass = true;
  std::vector<SingularResidual> residuals;
};

SingularReport verify_singular(const Enveloping& U, const MorphismElement& phi,
                               const std::vector<std::pair<std::string, SuperElement>>& generators,
                               RhoCache* cache = nullptr);
// Default generator sets: g_0 Chevalley generators, Y, e'_0, e#_0 (E38); basis of g_0 and g_1 (E510).
std::vector<std::pair<std::string, SuperElement>> singular_generators(const AlgebraModel& m);

struct GradedBlockMap {
  std::string name;
  int shift = 0;
  std::map<BlockKey, SparseMatrix> blocks;  // source block -> target block of the same weight, U-degree + shift
};

// Blocks of U-degree <= max_source_udeg (and with target inside the cutoff).
GradedBlockMap induce_map(const MorphismElement& phi, const InducedModule& src, const InducedModule& tgt, int max_source_udeg);

// Phi_1 o Phi_2 as a morphism element (Phi_2 applied first).
MorphismElement compose_elements(const Enveloping& U, const MorphismElement& phi1, const MorphismElement& phi2);

}  // namespace kr
