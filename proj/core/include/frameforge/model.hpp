#pragma once

#include "frameforge/diagnostics.hpp"
#include "frameforge/units.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace frameforge {

/// Node coordinate matching tolerance, in model length units.
inline constexpr double kCoordinateTol = 1e-6;

/// Reads FRAMEFORGE_TOL from the environment, falling back to kCoordinateTol.
double coordinate_tolerance();

struct Coord {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Coord&) const = default;
};

enum class SupportKind { fixed, pinned, roller_x, roller_y };
enum class ElementKind { column, girder };

std::string_view to_string(SupportKind k);
std::string_view to_string(ElementKind k);
std::optional<SupportKind> support_kind_from_string(std::string_view s);
std::optional<ElementKind> element_kind_from_string(std::string_view s);

/// Restrained DOFs for a support kind, in (ux, uy, rz) order.
struct Fixity {
    bool ux = false;
    bool uy = false;
    bool rz = false;

    bool operator==(const Fixity&) const = default;
};
Fixity fixity_of(SupportKind k);
std::optional<SupportKind> support_kind_from_fixity(const Fixity& f);

struct NodeRecord {
    int id = 0; ///< positive, unique within a model
    double x = 0.0;
    double y = 0.0; ///< vertical, up-positive
    std::string description;

    bool operator==(const NodeRecord&) const = default;
};

struct SupportRecord {
    int node_id = 0;
    SupportKind kind = SupportKind::fixed;

    bool operator==(const SupportRecord&) const = default;
};

struct SectionProperties {
    std::string name;
    double youngs_modulus = 0.0; ///< force / length^2
    double area = 0.0;           ///< length^2
    double moment_of_inertia = 0.0; ///< length^4

    bool operator==(const SectionProperties&) const = default;
};

/// An element end is either a resolved node id or a raw coordinate pair.
class ElementEnd {
  public:
    ElementEnd() : ref_(Coord{}) {}
    static ElementEnd node(int id) { return ElementEnd(id); }
    static ElementEnd at(double x, double y) { return ElementEnd(Coord{x, y}); }

    bool resolved() const { return std::holds_alternative<int>(ref_); }
    int node_id() const { return std::get<int>(ref_); }
    const Coord& coord() const { return std::get<Coord>(ref_); }

    bool operator==(const ElementEnd&) const = default;

  private:
    explicit ElementEnd(int id) : ref_(id) {}
    explicit ElementEnd(Coord c) : ref_(c) {}
    std::variant<int, Coord> ref_;
};

struct ElementRecord {
    int id = 0;
    ElementKind kind = ElementKind::column;
    ElementEnd end_i;
    ElementEnd end_j;
    std::string section; ///< SectionProperties name
    std::string description;

    bool operator==(const ElementRecord&) const = default;
};

struct PointLoad {
    int node_id = 0;
    double fx = 0.0;
    double fy = 0.0;
    double mz = 0.0;

    bool operator==(const PointLoad&) const = default;
};

struct DistributedLoad {
    int element_id = 0;
    double w_transverse = 0.0; ///< negative = toward -y for girders

    bool operator==(const DistributedLoad&) const = default;
};

/// The platform-agnostic frame model; the cross-stage contract.
struct FrameModel {
    UnitSystem units;
    std::vector<NodeRecord> nodes;
    std::vector<SupportRecord> supports;
    std::vector<SectionProperties> sections;
    std::vector<ElementRecord> elements; ///< resolved form
    std::vector<PointLoad> point_loads;
    std::vector<DistributedLoad> distributed_loads;
    std::string provenance;

    const NodeRecord* find_node(int id) const;
    const ElementRecord* find_element(int id) const;
    const SectionProperties* find_section(std::string_view name) const;

    bool operator==(const FrameModel&) const = default;
};

/// Checks every FrameModel invariant; returns an empty list iff all hold.
/// Never throws: diagnostics are the return value.
std::vector<Diagnostic> validate_model(const FrameModel& model,
                                       double coord_tol = kCoordinateTol);

/// Replaces coordinate element ends by the id of the unique node within
/// coord_tol. Element order is preserved. Throws FrameError with
/// NO_MATCHING_NODE or AMBIGUOUS_MATCH.
std::vector<ElementRecord> resolve_connectivity(const std::vector<NodeRecord>& nodes,
                                                const std::vector<ElementRecord>& elements_with_coords,
                                                double coord_tol = kCoordinateTol);

} // namespace frameforge
