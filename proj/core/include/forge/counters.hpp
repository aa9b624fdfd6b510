#pragma once

#include <cstdint>

namespace forge {

// Pinned operation-count model for the complexity reports, so curves are
// comparable across runs and machines:
//
//   new_nodes      — interning-registry insertions (each structurally new
//                    node ever constructed, shared subterms counted once);
//   assembly_steps — candidate/assembly considerations performed by the
//                    batch generators: each subset-sum or product emitted,
//                    each base-term or factor-power construction, each
//                    exponent candidate n scanned per window prime q, each
//                    candidate prime considered in the descending-prime
//                    product search at each node, and each exponent
//                    extension tried (including the failing one that stops
//                    a run).
//
// manipulations = new_nodes + assembly_steps. Where a scan's outcome is
// computable in O(1) the implementation adds the scan length in bulk; the
// counter always equals what the element-by-element recurrence would do.
struct ManipulationCounters {
  std::uint64_t assembly_steps = 0;
  std::uint64_t new_nodes = 0;

  std::uint64_t total() const { return assembly_steps + new_nodes; }

  ManipulationCounters& operator+=(const ManipulationCounters& o) {
    assembly_steps += o.assembly_steps;
    new_nodes += o.new_nodes;
    return *this;
  }
};

}  // namespace forge
