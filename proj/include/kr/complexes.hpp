#pragma once
// Named morphisms between induced modules, the two arrow graphs, composition checks and homology.

#include "kr/verma.hpp"

#include <memory>
#include <string>
#include <vector>

namespace kr {

class Workspace {
 public:
  explicit Workspace(AlgebraId id, int cutoff = 6, std::vector<int> pbw_order = {});
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  AlgebraId id() const { return model_.id(); }
  const AlgebraModel& model() const { return model_; }
  const Enveloping& U() const { return *U_; }
  int cutoff() const { return U_->cutoff(); }
  RhoCache& rho() { return rho_; }
  const std::vector<SuperElement>& cartan() const { return cartan_; }

  // Fock blocks in label coordinates (p or q, r); nullptr when the label is not a block of X.
  std::shared_ptr<const FockGround> fock(Lagrangian X, int pq, int r);
  // Fock blocks in weight coordinates; nullptr when sign-inconsistent.
  std::shared_ptr<const FockGround> fock_weight(Lagrangian X, int m, int n);
  // Top component of bidegree (m, n); nullptr for negative degrees.
  std::shared_ptr<const S5Ground> s5(S5Space X, int m, int n, bool raw = false);
  const InducedModule& induced(const std::shared_ptr<const GroundModule>& V, int max_udeg);

 private:
  AlgebraModel model_;
  std::unique_ptr<Enveloping> U_;
  std::vector<SuperElement> cartan_;
  RhoCache rho_;
  std::map<std::string, std::shared_ptr<const GroundModule>> grounds_;
  std::map<std::string, std::unique_ptr<InducedModule>> induced_;
};

// nabla, nabla2, nabla3 (E38, source in label coordinates (p or q, r));
// nablaA, nablaB, nablaC, nablaA_raw (E510, source bidegree (m, n)).
// The target is null when the computed target block does not exist; the element is then zero.
// Throws std::invalid_argument for a source outside the family of the morphism.
MorphismElement build_morphism(Workspace& ws, const std::string& name, char tag, int a, int b);

// g_0-isomorphism between two realizations of the same irreducible (matching variable names).
SparseMatrix identification(Workspace& ws, const S5Ground& from, const S5Ground& to);
MorphismElement precompose(const MorphismElement& phi, std::shared_ptr<const GroundModule> source, const SparseMatrix& iso);

struct ComplexNode {
  std::string name;  // e.g. A_m2_n3
  char tag = 'A';
  int a = 0, b = 0;
  std::string label;
  std::vector<std::string> aliases;
  bool partial = false;
  std::shared_ptr<const GroundModule> ground;
};

struct ComplexArrow {
  std::string name;  // arrow_<kind>_<source>_<target>
  std::string kind;
  std::string source, target;
  bool ghost = false;
  int udeg = 0;
  std::shared_ptr<const MorphismElement> phi;  // null for ghost edges
};

struct FigureGraph {
  int figure = 1;
  AlgebraId id = AlgebraId::E38;
  int range = 0;
  std::vector<ComplexNode> nodes;
  std::vector<ComplexArrow> arrows;
  const ComplexNode& node(const std::string& name) const;
  bool has_node(const std::string& name) const;
  std::vector<const ComplexArrow*> incoming(const std::string& name, bool with_ghosts = false) const;
  std::vector<const ComplexArrow*> outgoing(const std::string& name, bool with_ghosts = false) const;
  // Consecutive pairs (first, second) of non-ghost arrows.
  std::vector<std::pair<const ComplexArrow*, const ComplexArrow*>> paths2() const;
  std::string dot() const;
};

// Figure 1 (E38): quadrants A..D with label coordinates in [0, range].
// Figure 2 (E510): A, B, C with bidegrees in [0, range].
FigureGraph figure_graph(Workspace& ws, int figure, int range);

struct ComposeReport {
  std::string first, second;
  bool element_zero = true;
  long element_nonzero = 0;
  long blocks_checked = 0;
  long block_violations = 0;
  bool pass() const { return element_zero && block_violations == 0; }
};

// phi1 o phi2 (phi2 first). With blocks = true the induced block maps are composed up to the cutoff.
ComposeReport compose_check(Workspace& ws, const MorphismElement& phi1, const MorphismElement& phi2, int cutoff, bool blocks = true);

struct HomologyRow {
  int udeg = 0;
  Weight weight;
  int dim = 0;
  int dim_ker = 0;
  int dim_im = 0;
  int dim_h = 0;
};

struct HomologyReport {
  std::string node;
  bool partial = false;
  bool has_outgoing = false;
  std::vector<HomologyRow> rows;
  // Total homology per U-degree.
  std::map<int, int> by_degree() const;
};

HomologyReport homology_at(Workspace& ws, const FigureGraph& g, const std::string& node, int max_udeg);

// Operator-wise check of theta_ab theta_cd - theta_ac theta_bd + theta_ad theta_bc = 0 on the ground
// of bidegree (m, n) (on V_A for A, modulo S_low for B, on all of S_C for C). Returns the number of failing quadruples.
int theta_identity_violations(S5Space X, int m, int n);

}  // namespace kr
