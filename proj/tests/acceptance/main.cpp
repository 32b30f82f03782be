#include <cstring>
#include <iostream>
#include <string>

#include "acceptance/harness.hpp"

namespace acceptance {

bool criterion_contract_suite(std::ostream&);
bool criterion_pies_cardinality(std::ostream&);
bool criterion_pies_forward_induction(std::ostream&);
bool criterion_ns_minhash_equivalence(std::ostream&);
bool criterion_metric_oracles(std::ostream&);
bool criterion_state_bound(std::ostream&);
bool criterion_ordering(std::ostream&);
bool criterion_component_size_exception(std::ostream&);
bool criterion_phi_one_degeneracy(std::ostream&);
bool criterion_summary_pipeline(std::ostream&);

std::vector<Criterion> all_criteria() {
  return {
      {1, "contract suite (single pass, edge subset, closure, determinism)",
       criterion_contract_suite},
      {2, "pies cardinality after saturation", criterion_pies_cardinality},
      {3, "pies forward-induction replay oracle",
       criterion_pies_forward_induction},
      {4, "streaming ns min-hash equivalence and uniformity",
       criterion_ns_minhash_equivalence},
      {5, "metric distributions match brute-force oracles",
       criterion_metric_oracles},
      {6, "bounded sampler state independent of stream length",
       criterion_state_bound},
      {7, "pies ordering on degree/clustering/path fixtures",
       criterion_ordering},
      {8, "component-size exception for edge sampling",
       criterion_component_size_exception},
      {9, "phi = 1 degeneracy gives zero distance",
       criterion_phi_one_degeneracy},
      {10, "dataset summary pipeline on bundled fixtures",
       criterion_summary_pipeline},
  };
}

}  // namespace acceptance

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      selected = std::stoi(argv[i + 1]);
      ++i;
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }

  int failures = 0;
  for (const auto& criterion : acceptance::all_criteria()) {
    if (selected != 0 && criterion.id != selected) {
      continue;
    }
    bool passed = false;
    try {
      passed = criterion.run(std::cout);
    } catch (const std::exception& e) {
      std::cout << "    unexpected exception: " << e.what() << '\n';
    }
    std::cout << (passed ? "[PASS]" : "[FAIL]") << " criterion "
              << criterion.id << ": " << criterion.title << std::endl;
    if (!passed) {
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
