#include "qchan/layout.hpp"

#include <algorithm>
#include <stdexcept>

namespace qchan {

SystemLayout::SystemLayout(std::vector<Part> parts) : parts_(std::move(parts)), total_dim_(1) {
    if (parts_.empty()) throw std::invalid_argument("SystemLayout: no parts");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].label.empty()) throw std::invalid_argument("SystemLayout: empty label");
        if (parts_[i].dim < 1) {
            throw std::invalid_argument("SystemLayout: part '" + parts_[i].label +
                                        "' has non-positive dimension");
        }
        for (std::size_t j = i + 1; j < parts_.size(); ++j) {
            if (parts_[i].label == parts_[j].label) {
                throw std::invalid_argument("SystemLayout: duplicate label '" + parts_[i].label + "'");
            }
        }
        total_dim_ *= parts_[i].dim;
    }
    // The Hilbert spaces of the B and C subsystems are identified, so any
    // layout that names both must give them equal dimension.
    if (has_label("B") && has_label("C") && dim_of("B") != dim_of("C")) {
        throw std::invalid_argument("SystemLayout: parts B and C must have equal dimension");
    }
}

SystemLayout SystemLayout::qubit_cba() {
    return SystemLayout({{"C", 2}, {"B", 2}, {"A", 2}});
}

bool SystemLayout::has_label(const std::string& label) const {
    for (const Part& p : parts_) {
        if (p.label == label) return true;
    }
    return false;
}

int SystemLayout::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].label == label) return static_cast<int>(i);
    }
    throw std::invalid_argument("SystemLayout: unknown label '" + label + "'");
}

int SystemLayout::dim_of(const std::string& label) const {
    return parts_[index_of(label)].dim;
}

namespace {

// Mixed-radix digits of a full-space index, leftmost part slowest.
std::vector<int> digits_of(int index, const SystemLayout& layout) {
    const int n = layout.part_count();
    std::vector<int> digits(n);
    for (int k = n - 1; k >= 0; --k) {
        const int d = layout.parts()[k].dim;
        digits[k] = index % d;
        index /= d;
    }
    return digits;
}

}  // namespace

ComplexMatrix embed(const ComplexMatrix& op, const std::vector<std::string>& on,
                    const SystemLayout& layout) {
    if (!op.is_square()) throw std::invalid_argument("embed: operator must be square");
    if (on.empty()) throw std::invalid_argument("embed: no target subsystems");

    std::vector<int> on_parts;
    int on_dim = 1;
    for (const std::string& label : on) {
        const int k = layout.index_of(label);
        if (std::find(on_parts.begin(), on_parts.end(), k) != on_parts.end()) {
            throw std::invalid_argument("embed: repeated label '" + label + "'");
        }
        on_parts.push_back(k);
        on_dim *= layout.parts()[k].dim;
    }
    if (op.rows() != on_dim) {
        throw std::invalid_argument("embed: operator dimension " + std::to_string(op.rows()) +
                                    " does not match target dimension " + std::to_string(on_dim));
    }

    // Strides of the sub-index in the caller's stated order (first label slowest).
    const int n_on = static_cast<int>(on_parts.size());
    std::vector<int> on_strides(n_on, 1);
    for (int k = n_on - 2; k >= 0; --k) {
        on_strides[k] = on_strides[k + 1] * layout.parts()[on_parts[k + 1]].dim;
    }
    std::vector<bool> is_on(layout.part_count(), false);
    for (int k : on_parts) is_on[k] = true;

    const int dim = layout.total_dim();
    ComplexMatrix out(dim, dim);
    for (int r = 0; r < dim; ++r) {
        const std::vector<int> dr = digits_of(r, layout);
        for (int c = 0; c < dim; ++c) {
            const std::vector<int> dc = digits_of(c, layout);
            bool identity_match = true;
            for (int k = 0; k < layout.part_count(); ++k) {
                if (!is_on[k] && dr[k] != dc[k]) {
                    identity_match = false;
                    break;
                }
            }
            if (!identity_match) continue;
            int sub_r = 0, sub_c = 0;
            for (int k = 0; k < n_on; ++k) {
                sub_r += dr[on_parts[k]] * on_strides[k];
                sub_c += dc[on_parts[k]] * on_strides[k];
            }
            out(r, c) = op(sub_r, sub_c);
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& mat, const std::vector<std::string>& keep,
                            const SystemLayout& layout) {
    if (!mat.is_square() || mat.rows() != layout.total_dim()) {
        throw std::invalid_argument("partial_trace: matrix dimension does not match layout");
    }
    if (keep.empty()) throw std::invalid_argument("partial_trace: nothing kept");

    std::vector<bool> kept(layout.part_count(), false);
    for (const std::string& label : keep) {
        const int k = layout.index_of(label);
        if (kept[k]) throw std::invalid_argument("partial_trace: repeated label '" + label + "'");
        kept[k] = true;
    }

    // Kept sub-index in canonical layout order.
    std::vector<int> keep_parts;
    int out_dim = 1;
    for (int k = 0; k < layout.part_count(); ++k) {
        if (kept[k]) {
            keep_parts.push_back(k);
            out_dim *= layout.parts()[k].dim;
        }
    }
    const int n_keep = static_cast<int>(keep_parts.size());
    std::vector<int> keep_strides(n_keep, 1);
    for (int k = n_keep - 2; k >= 0; --k) {
        keep_strides[k] = keep_strides[k + 1] * layout.parts()[keep_parts[k + 1]].dim;
    }

    const int dim = layout.total_dim();
    ComplexMatrix out(out_dim, out_dim);
    for (int r = 0; r < dim; ++r) {
        const std::vector<int> dr = digits_of(r, layout);
        for (int c = 0; c < dim; ++c) {
            const std::vector<int> dc = digits_of(c, layout);
            bool traced_match = true;
            for (int k = 0; k < layout.part_count(); ++k) {
                if (!kept[k] && dr[k] != dc[k]) {
                    traced_match = false;
                    break;
                }
            }
            if (!traced_match) continue;
            int sub_r = 0, sub_c = 0;
            for (int k = 0; k < n_keep; ++k) {
                sub_r += dr[keep_parts[k]] * keep_strides[k];
                sub_c += dc[keep_parts[k]] * keep_strides[k];
            }
            out(sub_r, sub_c) += mat(r, c);
        }
    }
    return out;
}

}  // namespace qchan
