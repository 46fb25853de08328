#include "stiffprobe/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace stiffprobe {

namespace {

bool finite(double x) { return std::isfinite(x); }

int kind_dim(ElementKind k) { return k == ElementKind::bar1d ? 1 : 2; }

}  // namespace

double triangle_signed_area(const Eigen::MatrixXd& xy) {
    return 0.5 * ((xy(1, 0) - xy(0, 0)) * (xy(2, 1) - xy(0, 1)) -
                  (xy(2, 0) - xy(0, 0)) * (xy(1, 1) - xy(0, 1)));
}

Mesh Mesh::build(std::vector<Node> nodes, std::vector<Element> elements,
                 std::vector<Constraint> constraints) {
    if (nodes.empty()) throw ValidationError("mesh has no nodes");
    if (elements.empty()) throw ValidationError("mesh has no elements");

    std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.id < b.id; });
    const int n = static_cast<int>(nodes.size());
    for (int i = 0; i < n; ++i) {
        if (nodes[i].id != i)
            throw ValidationError("node ids must be dense 0..N-1; missing or duplicate id " +
                                  std::to_string(i));
        if (!finite(nodes[i].coords[0]) || !finite(nodes[i].coords[1]))
            throw ValidationError("node " + std::to_string(i) + " has non-finite coordinates");
    }

    std::sort(elements.begin(), elements.end(),
              [](const Element& a, const Element& b) { return a.id < b.id; });
    const int ne = static_cast<int>(elements.size());
    const int dim = kind_dim(elements.front().kind);

    Mesh m;
    m.nodes_ = std::move(nodes);
    m.dim_ = dim;

    for (int e = 0; e < ne; ++e) {
        const Element& el = elements[e];
        if (el.id != e)
            throw ValidationError("element ids must be dense 0..M-1; missing or duplicate id " +
                                  std::to_string(e));
        if (kind_dim(el.kind) != dim)
            throw ValidationError("element " + std::to_string(e) +
                                  ": element kinds must be homogeneous in dimension");
        const int nc = el.node_count();
        for (int a = 0; a < nc; ++a) {
            if (el.nodes[a] < 0 || el.nodes[a] >= n)
                throw ValidationError("element " + std::to_string(e) + ": node id out of range");
            for (int b = a + 1; b < nc; ++b)
                if (el.nodes[a] == el.nodes[b])
                    throw ValidationError("element " + std::to_string(e) + ": repeated node id");
        }
        if (!(el.section > 0.0) || !finite(el.section))
            throw ValidationError("element " + std::to_string(e) + ": non-positive section");
        if (el.kind == ElementKind::bar1d) {
            const double len =
                m.nodes_[el.nodes[1]].coords[0] - m.nodes_[el.nodes[0]].coords[0];
            if (std::abs(len) <= 0.0)
                throw ValidationError("element " + std::to_string(e) + ": zero bar length");
        } else {
            Eigen::MatrixXd xy(3, 2);
            for (int a = 0; a < 3; ++a) {
                xy(a, 0) = m.nodes_[el.nodes[a]].coords[0];
                xy(a, 1) = m.nodes_[el.nodes[a]].coords[1];
            }
            const double area = triangle_signed_area(xy);
            if (!(area > 0.0))
                throw ValidationError("element " + std::to_string(e) +
                                      ": negative area (nodes must be counter-clockwise)");
        }
    }
    m.elements_ = std::move(elements);

    std::set<std::pair<int, int>> seen;
    for (const Constraint& c : constraints) {
        if (c.node < 0 || c.node >= n)
            throw ValidationError("constraint references unknown node " + std::to_string(c.node));
        if (c.axis < 0 || c.axis >= dim)
            throw ValidationError("constraint axis " + std::to_string(c.axis) +
                                  " invalid for a " + std::to_string(dim) + "D mesh");
        if (!finite(c.value))
            throw ValidationError("constraint value must be finite");
        if (!seen.insert({c.node, c.axis}).second)
            throw ValidationError("duplicate constraint on node " + std::to_string(c.node) +
                                  " axis " + std::to_string(c.axis));
    }
    std::sort(constraints.begin(), constraints.end(), [](const Constraint& a, const Constraint& b) {
        return std::pair{a.node, a.axis} < std::pair{b.node, b.axis};
    });
    m.constraints_ = std::move(constraints);

    const int total = n * dim;
    m.free_index_.assign(total, 0);
    m.prescribed_ = Eigen::VectorXd::Zero(total);
    for (const Constraint& c : m.constraints_) {
        m.free_index_[c.node * dim + c.axis] = -1;
        m.prescribed_[c.node * dim + c.axis] = c.value;
    }
    m.free_count_ = 0;
    for (int g = 0; g < total; ++g) {
        if (m.free_index_[g] == 0) {
            m.free_index_[g] = m.free_count_++;
            m.global_of_free_.push_back(g);
        }
    }
    return m;
}

Mesh Mesh::with_constraints(std::vector<Constraint> constraints) const {
    return build(nodes_, elements_, std::move(constraints));
}

Eigen::VectorXd Mesh::to_full(const Eigen::VectorXd& free_vec) const {
    if (free_vec.size() != free_count_)
        throw ValidationError("free vector length mismatch");
    Eigen::VectorXd full = prescribed_;
    for (int k = 0; k < free_count_; ++k) full[global_of_free_[k]] = free_vec[k];
    return full;
}

Eigen::VectorXd Mesh::restrict_free(const Eigen::VectorXd& full_vec) const {
    if (full_vec.size() != total_dof_count())
        throw ValidationError("full vector length mismatch");
    Eigen::VectorXd out(free_count_);
    for (int k = 0; k < free_count_; ++k) out[k] = full_vec[global_of_free_[k]];
    return out;
}

Eigen::MatrixXd Mesh::element_coords(const Element& e) const {
    const int nc = e.node_count();
    Eigen::MatrixXd xy(nc, dim_);
    for (int a = 0; a < nc; ++a)
        for (int d = 0; d < dim_; ++d) xy(a, d) = nodes_[e.nodes[a]].coords[d];
    return xy;
}

double Mesh::total_measure() const {
    double sum = 0.0;
    for (const Element& e : elements_) {
        if (e.kind == ElementKind::bar1d) {
            sum += std::abs(nodes_[e.nodes[1]].coords[0] - nodes_[e.nodes[0]].coords[0]);
        } else {
            sum += triangle_signed_area(element_coords(e));
        }
    }
    return sum;
}

void Mesh::require_solve_ready() const {
    const int needed = dim_ * (dim_ + 1) / 2;
    if (static_cast<int>(constraints_.size()) < needed)
        throw ValidationError("under-constrained mesh: " + std::to_string(constraints_.size()) +
                              " pinned DOFs, need at least " + std::to_string(needed) +
                              " to remove rigid-body modes");
}

Mesh load_mesh(std::string_view text) {
    std::vector<Node> nodes;
    std::vector<Element> elements;
    std::vector<Constraint> constraints;
    int node_dim = 0;  // 0 = not yet known

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line

        if (tag == "node") {
            Node nd;
            if (!(ls >> nd.id >> nd.coords[0]))
                throw ParseError("expected 'node <id> <x> [<y>]'", lineno);
            double y;
            const int dim = (ls >> y) ? 2 : 1;
            if (dim == 2) nd.coords[1] = y;
            if (node_dim == 0) node_dim = dim;
            if (node_dim != dim)
                throw ParseError("mixed 1D/2D node coordinates", lineno);
            std::string extra;
            if (ls >> extra) throw ParseError("trailing tokens after node", lineno);
            nodes.push_back(nd);
        } else if (tag == "elem") {
            Element el;
            std::string kind;
            if (!(ls >> el.id >> kind))
                throw ParseError("expected 'elem <id> <kind> <nodes...> <section>'", lineno);
            if (kind == "bar1d") {
                el.kind = ElementKind::bar1d;
                if (!(ls >> el.nodes[0] >> el.nodes[1] >> el.section))
                    throw ParseError("expected 'elem <id> bar1d <n0> <n1> <section>'", lineno);
            } else if (kind == "tri3") {
                el.kind = ElementKind::tri3;
                if (!(ls >> el.nodes[0] >> el.nodes[1] >> el.nodes[2] >> el.section))
                    throw ParseError("expected 'elem <id> tri3 <n0> <n1> <n2> <section>'", lineno);
            } else {
                throw ParseError("unknown element kind '" + kind + "'", lineno);
            }
            std::string extra;
            if (ls >> extra) throw ParseError("trailing tokens after elem", lineno);
            elements.push_back(el);
        } else if (tag == "fix") {
            Constraint c;
            if (!(ls >> c.node >> c.axis >> c.value))
                throw ParseError("expected 'fix <node> <axis> <value>'", lineno);
            std::string extra;
            if (ls >> extra) throw ParseError("trailing tokens after fix", lineno);
            constraints.push_back(c);
        } else {
            throw ParseError("unknown directive '" + tag + "'", lineno);
        }
    }
    return Mesh::build(std::move(nodes), std::move(elements), std::move(constraints));
}

std::string write_mesh(const Mesh& mesh) {
    std::ostringstream out;
    char buf[96];
    for (const Node& nd : mesh.nodes()) {
        if (mesh.dim() == 1)
            std::snprintf(buf, sizeof buf, "node %d %.17g\n", nd.id, nd.coords[0]);
        else
            std::snprintf(buf, sizeof buf, "node %d %.17g %.17g\n", nd.id, nd.coords[0],
                          nd.coords[1]);
        out << buf;
    }
    for (const Element& el : mesh.elements()) {
        if (el.kind == ElementKind::bar1d)
            std::snprintf(buf, sizeof buf, "elem %d bar1d %d %d %.17g\n", el.id, el.nodes[0],
                          el.nodes[1], el.section);
        else
            std::snprintf(buf, sizeof buf, "elem %d tri3 %d %d %d %.17g\n", el.id, el.nodes[0],
                          el.nodes[1], el.nodes[2], el.section);
        out << buf;
    }
    for (const Constraint& c : mesh.constraints()) {
        std::snprintf(buf, sizeof buf, "fix %d %d %.17g\n", c.node, c.axis, c.value);
        out << buf;
    }
    return out.str();
}

Mesh generate_rect_grid(int nx, int ny, double lx, double ly, double thickness) {
    if (nx < 1 || ny < 1) throw ValidationError("grid cell counts must be >= 1");
    if (!(lx > 0.0) || !(ly > 0.0)) throw ValidationError("grid dimensions must be positive");
    if (!(thickness > 0.0)) throw ValidationError("grid thickness must be positive");

    std::vector<Node> nodes;
    nodes.reserve((nx + 1) * (ny + 1));
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i)
            nodes.push_back({j * (nx + 1) + i, {i * lx / nx, j * ly / ny}});

    std::vector<Element> elements;
    elements.reserve(2 * nx * ny);
    int id = 0;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const int n00 = j * (nx + 1) + i;
            const int n10 = n00 + 1;
            const int n01 = n00 + (nx + 1);
            const int n11 = n01 + 1;
            // diagonal runs lower-left to upper-right
            elements.push_back({id++, ElementKind::tri3, {n00, n10, n11}, thickness});
            elements.push_back({id++, ElementKind::tri3, {n00, n11, n01}, thickness});
        }
    }
    return Mesh::build(std::move(nodes), std::move(elements), {});
}

}  // namespace stiffprobe
