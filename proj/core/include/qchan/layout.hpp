#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qchan/matrix.hpp"

namespace qchan {

// Ordered subsystem bookkeeping for a composite system. The declared part
// order is the canonical tensor order: a basis state of the full space is
// |p0> x |p1> x ... with the leftmost part varying slowest in row-major
// indexing. All operator construction that needs a different subsystem
// order goes through embed(), which performs the index permutation.
class SystemLayout {
public:
    struct Part {
        std::string label;
        int dim;
    };

    explicit SystemLayout(std::vector<Part> parts);

    static SystemLayout qubit_cba();  // C x B x A, one qubit each

    int total_dim() const { return total_dim_; }
    int part_count() const { return static_cast<int>(parts_.size()); }
    const std::vector<Part>& parts() const { return parts_; }

    bool has_label(const std::string& label) const;
    int index_of(const std::string& label) const;  // throws on unknown label
    int dim_of(const std::string& label) const;

private:
    std::vector<Part> parts_;
    int total_dim_;
};

// Operator on the full space acting as `op` on the subsystems named in `on`
// (in the caller's stated order, first label slowest) and as identity
// elsewhere. Handles all permutations to/from the canonical layout order.
ComplexMatrix embed(const ComplexMatrix& op, const std::vector<std::string>& on,
                    const SystemLayout& layout);

// Partial trace onto the subsystems named in `keep`, in canonical layout
// order. Preserves the trace of the input.
ComplexMatrix partial_trace(const ComplexMatrix& mat, const std::vector<std::string>& keep,
                            const SystemLayout& layout);

}  // namespace qchan
