#pragma once

#include "frameforge/model.hpp"

#include <string>
#include <vector>

namespace frameforge {

struct StoryLevel {
    std::string name;       ///< "STORY<k>" bottom-up, "BASE" at elevation 0
    double elevation = 0.0; ///< top-of-story elevation; 0 for BASE
    double height = 0.0;    ///< elevation difference to the level below; 0 for BASE

    bool operator==(const StoryLevel&) const = default;
};

struct BasePoint {
    std::string name; ///< "P<i>" ordered by ascending x
    double x = 0.0;

    bool operator==(const BasePoint&) const = default;
};

/// A line object defined once at base-grid level and assigned per story.
/// Columns reference one point twice; girders reference (left, right).
struct LineTemplate {
    std::string name; ///< "C<i>" for columns, "B<j>" for girders
    ElementKind kind = ElementKind::column;
    std::string point_i;
    std::string point_j;

    bool operator==(const LineTemplate&) const = default;
};

struct LineAssignment {
    std::string line;    ///< LineTemplate name
    std::string section; ///< SectionProperties name

    bool operator==(const LineAssignment&) const = default;
};

/// Objects active in one story (or at BASE, which carries points only).
struct StoryAssignment {
    std::string story;
    std::vector<std::string> points; ///< active base point names
    std::vector<LineAssignment> lines;

    bool operator==(const StoryAssignment&) const = default;
};

struct BaseRestraint {
    std::string point;
    SupportKind kind = SupportKind::fixed;

    bool operator==(const BaseRestraint&) const = default;
};

struct StoryPointLoad {
    std::string point;
    std::string story;
    double fx = 0.0;
    double fy = 0.0;
    double mz = 0.0;

    bool operator==(const StoryPointLoad&) const = default;
};

struct StoryLineLoad {
    std::string line;
    std::string story;
    double w = 0.0;

    bool operator==(const StoryLineLoad&) const = default;
};

/// Story-level re-expression of a FrameModel: stories top-down, base points
/// and line templates defined once, objects assigned per story.
struct StoryModel {
    UnitSystem units;
    std::vector<StoryLevel> levels; ///< descending elevation, BASE last
    std::vector<BasePoint> base_points;
    std::vector<LineTemplate> line_templates; ///< columns first, then girders
    std::vector<StoryAssignment> assignments; ///< same order as levels
    std::vector<BaseRestraint> base_restraints;
    std::vector<SectionProperties> sections;
    std::vector<StoryPointLoad> point_loads;
    std::vector<StoryLineLoad> line_loads;
    std::string provenance;

    const StoryLevel* find_level(std::string_view name) const;
    const BasePoint* find_point(std::string_view name) const;
    const LineTemplate* find_line(std::string_view name) const;

    bool operator==(const StoryModel&) const = default;
};

/// Maps a validated, story-stratified FrameModel onto the story-based form.
/// Throws FrameError with NON_STRATIFIED_MODEL when the model cannot be
/// expressed story-wise (support above base, element spanning non-adjacent
/// levels, girder at base elevation, node below base).
StoryModel to_story_model(const FrameModel& model, double coord_tol = kCoordinateTol);

/// Inverse mapping; the result is equivalent to the source model under
/// models_equivalent (ids are regenerated deterministically).
FrameModel from_story_model(const StoryModel& story, double coord_tol = kCoordinateTol);

} // namespace frameforge
