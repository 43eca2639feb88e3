#include "jdm/instance.hpp"

#include <numeric>
#include <string>

namespace jdm {

namespace {

void validate_shape(const std::vector<int>& sizes, const std::vector<int>& degrees,
                    const std::vector<std::vector<long long>>& m, bool allow_wildcard) {
    const auto k = sizes.size();
    if (k == 0) throw validation_error("instance needs at least one class");
    if (degrees.size() != k) throw validation_error("class_degrees size differs from class_sizes");
    for (std::size_t i = 0; i < k; ++i) {
        if (sizes[i] < 1)
            throw validation_error("class " + std::to_string(i) + " has non-positive size");
        if (degrees[i] < 0)
            throw validation_error("class " + std::to_string(i) + " has negative degree");
    }
    if (m.size() != k) throw validation_error("matrix is not k x k");
    for (std::size_t i = 0; i < k; ++i) {
        if (m[i].size() != k)
            throw validation_error("matrix row " + std::to_string(i) + " has wrong length");
        for (std::size_t j = 0; j < k; ++j) {
            const long long e = m[i][j];
            if (e == kWildcard && allow_wildcard) continue;
            if (e < 0)
                throw validation_error("matrix entry (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") is negative");
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (m[i][j] != m[j][i])
                throw validation_error("matrix is asymmetric at cells (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")/(" + std::to_string(j) + "," +
                                       std::to_string(i) + ")");
}

}  // namespace

int JdmInstance::total_vertices() const {
    return std::accumulate(class_sizes.begin(), class_sizes.end(), 0);
}

void JdmInstance::validate() const {
    validate_shape(class_sizes, class_degrees, matrix, false);
}

int StarInstance::total_vertices() const {
    return std::accumulate(class_sizes.begin(), class_sizes.end(), 0);
}

bool StarInstance::has_wildcards() const {
    for (const auto& row : entries)
        for (long long e : row)
            if (e == kWildcard) return true;
    return false;
}

void StarInstance::validate() const {
    validate_shape(class_sizes, class_degrees, entries, true);
}

JdmInstance StarInstance::zero_filled() const {
    validate();
    JdmInstance out{class_sizes, class_degrees, entries};
    for (auto& row : out.matrix)
        for (auto& e : row)
            if (e == kWildcard) e = 0;
    return out;
}

JdmInstance StarInstance::as_exact() const {
    validate();
    if (has_wildcards()) throw validation_error("matrix has wildcard entries");
    return JdmInstance{class_sizes, class_degrees, entries};
}

bool check_degree_feasibility(const JdmInstance& inst) {
    inst.validate();
    const int k = inst.class_count();
    for (int i = 0; i < k; ++i) {
        long long row = 2 * inst.matrix[i][i];
        for (int j = 0; j < k; ++j)
            if (j != i) row += inst.matrix[i][j];
        if (row != static_cast<long long>(inst.class_sizes[i]) * inst.class_degrees[i])
            return false;
    }
    return true;
}

bool check_matrix_feasibility(const JdmInstance& inst) {
    inst.validate();
    const int k = inst.class_count();
    for (int i = 0; i < k; ++i) {
        const long long ni = inst.class_sizes[i];
        if (inst.matrix[i][i] > ni * (ni - 1) / 2) return false;
        for (int j = i + 1; j < k; ++j)
            if (inst.matrix[i][j] > ni * inst.class_sizes[j]) return false;
    }
    return true;
}

void require_feasible(const JdmInstance& inst) {
    inst.validate();
    const int k = inst.class_count();
    for (int i = 0; i < k; ++i) {
        long long row = 2 * inst.matrix[i][i];
        for (int j = 0; j < k; ++j)
            if (j != i) row += inst.matrix[i][j];
        const long long want = static_cast<long long>(inst.class_sizes[i]) * inst.class_degrees[i];
        if (row != want)
            throw feasibility_error("degree feasibility violated for class " + std::to_string(i) +
                                    ": 2*d_ii + sum_j d_ij = " + std::to_string(row) + " but |V_i|*d(V_i) = " +
                                    std::to_string(want));
    }
    for (int i = 0; i < k; ++i) {
        const long long ni = inst.class_sizes[i];
        if (inst.matrix[i][i] > ni * (ni - 1) / 2)
            throw feasibility_error("matrix feasibility violated at cell (" + std::to_string(i) + "," +
                                    std::to_string(i) + "): " + std::to_string(inst.matrix[i][i]) +
                                    " > " + std::to_string(ni * (ni - 1) / 2));
        for (int j = i + 1; j < k; ++j)
            if (inst.matrix[i][j] > ni * inst.class_sizes[j])
                throw feasibility_error("matrix feasibility violated at cell (" + std::to_string(i) + "," +
                                        std::to_string(j) + "): " + std::to_string(inst.matrix[i][j]) +
                                        " > " + std::to_string(ni * inst.class_sizes[j]));
    }
}

}  // namespace jdm
