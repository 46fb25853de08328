#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "stiffprobe/errors.hpp"

namespace stiffprobe {

enum class ElementKind { bar1d, tri3 };

struct Node {
    int id = -1;
    std::array<double, 2> coords{0.0, 0.0};  // coords[1] unused for 1D meshes
};

struct Element {
    int id = -1;
    ElementKind kind = ElementKind::bar1d;
    std::array<int, 3> nodes{-1, -1, -1};  // nodes[2] unused for bars
    double section = 0.0;                  // cross-section area (bar) or thickness (tri)

    int node_count() const { return kind == ElementKind::bar1d ? 2 : 3; }
};

struct Constraint {
    int node = -1;
    int axis = -1;
    double value = 0.0;
};

/// Immutable geometry + connectivity + boundary constraints + DOF numbering.
///
/// DOF layout is node-major: global dof = node * dim + axis. Free DOFs are
/// numbered 0..free_dof_count()-1 in increasing global-dof order.
class Mesh {
public:
    /// Validates all invariants (dense ids, positive areas/lengths, distinct
    /// in-range connectivity, no duplicate constraints) and builds the DOF map.
    static Mesh build(std::vector<Node> nodes, std::vector<Element> elements,
                      std::vector<Constraint> constraints);

    /// Same nodes/elements with a different constraint set.
    Mesh with_constraints(std::vector<Constraint> constraints) const;

    int dim() const { return dim_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Element>& elements() const { return elements_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }

    int total_dof_count() const { return static_cast<int>(nodes_.size()) * dim_; }
    int free_dof_count() const { return free_count_; }
    std::pair<int, int> dof_count() const { return {total_dof_count(), free_dof_count()}; }

    /// Free index of (node, axis), or -1 if the DOF is constrained.
    int free_index(int node, int axis) const { return free_index_[node * dim_ + axis]; }
    int free_index_of(int global_dof) const { return free_index_[global_dof]; }
    bool is_constrained(int node, int axis) const { return free_index(node, axis) < 0; }

    /// Global dof index of the k-th free DOF.
    int global_of_free(int k) const { return global_of_free_[k]; }

    /// Prescribed values on all DOFs (zero at free DOFs).
    const Eigen::VectorXd& prescribed_values() const { return prescribed_; }

    /// Expand a free-DOF vector to all DOFs, filling prescribed values.
    Eigen::VectorXd to_full(const Eigen::VectorXd& free_vec) const;
    /// Extract the free-DOF part of a full-length vector.
    Eigen::VectorXd restrict_free(const Eigen::VectorXd& full_vec) const;

    /// Coordinates of an element's nodes, one row per node.
    Eigen::MatrixXd element_coords(const Element& e) const;

    /// Sum of element measures: total bar length (1D) or triangle area (2D).
    double total_measure() const;

    /// Throws unless enough DOFs are pinned to remove rigid-body modes
    /// (>= d(d+1)/2). Singular systems that slip past this are caught at
    /// factorization time.
    void require_solve_ready() const;

private:
    Mesh() = default;

    std::vector<Node> nodes_;
    std::vector<Element> elements_;
    std::vector<Constraint> constraints_;
    int dim_ = 0;
    int free_count_ = 0;
    std::vector<int> free_index_;
    std::vector<int> global_of_free_;
    Eigen::VectorXd prescribed_;
};

/// Signed area of a tri3 from its corner coordinates (counter-clockwise > 0).
double triangle_signed_area(const Eigen::MatrixXd& xy);

/// Parse the line-oriented mesh format:
///   node <id> <x> [<y>]
///   elem <id> bar1d|tri3 <n0> <n1> [<n2>] <section>
///   fix <node> <axis 0|1> <value>
/// '#' starts a comment. Axis 1 is rejected for 1D meshes.
Mesh load_mesh(std::string_view text);

/// Serialize a mesh to the same format; load_mesh(write_mesh(m)) == m.
std::string write_mesh(const Mesh& mesh);

/// Structured rectangle: (nx+1)*(ny+1) nodes, 2*nx*ny tri3 elements, each cell
/// split along the lower-left to upper-right diagonal. No constraints attached.
Mesh generate_rect_grid(int nx, int ny, double lx, double ly, double thickness);

}  // namespace stiffprobe
