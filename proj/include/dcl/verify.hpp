#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dcl/digraph.hpp"
#include "dcl/poset.hpp"

namespace dcl::verify {

struct Options {
  int max_n = 0;  // 0 picks the suite default
  int samples = 100;
  unsigned seed = 20240601;
  bool inject_fault = false;  // recolor one edge before the structural checks
};

struct Report {
  explicit Report(std::string name) : suite(std::move(name)) {}

  std::string suite;
  int checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void check(bool cond, const std::string& what);
  void merge(const Report& o);
};

const std::vector<std::string>& suite_names();
int default_max_n(const std::string& suite);
// Throws InvalidObject for an unknown suite.
Report run_suite(const std::string& suite, const Options& opt);

// Random poset on `size` elements: each pair i < j related with probability p,
// then reduced to covers. Colors uniform in [1, colors].
VertexColoredPoset random_poset(int size, int colors, double p, std::mt19937& rng);

// Copy of g with the color of edge e bumped to a different value.
ColoredDigraph recolor_edge(const ColoredDigraph& g, int e);

}  // namespace dcl::verify
