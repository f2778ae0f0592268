#pragma once
// JSON / CSV / DOT reports shared by krtool and the acceptance run.

#include "kr/complexes.hpp"
#include "kr/jacobi.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace kr {

using Json = nlohmann::json;

struct RunConfig {
  std::string algebra = "e38";
  bool window_set = false;
  int jmin = 0, jmax = 0;
  int cutoff = 6;
  int range = 4;
  int figure = 1;
  int max_udeg = 5;
  std::string name;  // morphism family; empty means all families of the algebra
  std::string node;  // empty means every node
  int workers = 1;

  AlgebraId id() const { return parse_algebra(algebra); }
  // Window of the check: the one given, else [-2,4] (e36, e510) or [-3,4] (e38).
  std::pair<int, int> window() const;
  Json to_json() const;
};

std::string rat_str(const Rational& q);  // always "p/q"
std::string weight_key(const Weight& w);  // "(p/q,...)" with p/q entries

// {check, algebra, config, status, violations, dimensions} plus "counts".
Json report_skeleton(const std::string& check, const RunConfig& c);
// status from the violations unless already "partial".
void report_finish(Json& r);
bool report_failed(const Json& r);

Json report_jacobi(const RunConfig& c);
// e36, e38: bracket relations and Y-eigenvalues; e510: theta identities for m+n <= range.
Json report_relations(const RunConfig& c);
// E(3,6) -> E(5,10) on pairs of total degree <= jmax; sharp -> flat map with its kernel.
Json report_embedding(const RunConfig& c);
Json report_singular(Workspace& ws, const RunConfig& c);
Json report_nilpotent(Workspace& ws, const RunConfig& c);
// Kernel dimension of each sampled morphism on source blocks of U-degree <= udeg.
Json report_kernels(Workspace& ws, const RunConfig& c, const std::vector<std::tuple<std::string, char, int, int>>& samples, int udeg);
// Kernel dimensions of the Pluecker system on S_A, m+n <= range; literal = false adds the incidence operators.
Json report_pluecker(const RunConfig& c, bool literal);
// nabla_A and nabla_C vanish exactly on the rows n = 0 and m = 0, m, n <= range.
Json report_vanishing(Workspace& ws, const RunConfig& c);
Json report_graph(const FigureGraph& g, const RunConfig& c);
Json report_homology(const std::vector<HomologyReport>& reps, const RunConfig& c);
std::string homology_csv(const std::vector<HomologyReport>& reps);

// Sources (tag, a, b) of a morphism family within the range of the config.
std::vector<std::tuple<char, int, int>> family_sources(AlgebraId id, const std::string& name, int range);
std::vector<std::string> family_names(AlgebraId id);

}  // namespace kr
