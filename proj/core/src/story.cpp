#include "frameforge/story.hpp"

#include "frameforge/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace frameforge {

const StoryLevel* StoryModel::find_level(std::string_view level_name) const {
    for (const auto& l : levels) {
        if (l.name == level_name) return &l;
    }
    return nullptr;
}

const BasePoint* StoryModel::find_point(std::string_view point_name) const {
    for (const auto& p : base_points) {
        if (p.name == point_name) return &p;
    }
    return nullptr;
}

const LineTemplate* StoryModel::find_line(std::string_view line_name) const {
    for (const auto& l : line_templates) {
        if (l.name == line_name) return &l;
    }
    return nullptr;
}

namespace {

[[noreturn]] void non_stratified(std::string detail, int subject_id = -1) {
    fail(DiagCode::NON_STRATIFIED_MODEL, std::move(detail), subject_id);
}

/// Clusters sorted values within tolerance; returns cluster representatives.
std::vector<double> cluster(std::vector<double> values, double tol) {
    std::sort(values.begin(), values.end());
    std::vector<double> reps;
    for (double v : values) {
        if (reps.empty() || v - reps.back() > tol) reps.push_back(v);
    }
    return reps;
}

int index_of(const std::vector<double>& reps, double v, double tol) {
    for (size_t i = 0; i < reps.size(); ++i) {
        if (std::fabs(reps[i] - v) <= tol) return static_cast<int>(i);
    }
    return -1;
}

} // namespace

StoryModel to_story_model(const FrameModel& model, double coord_tol) {
    StoryModel story;
    story.units = model.units;
    story.sections = model.sections;
    story.provenance = model.provenance;

    std::vector<double> ys, xs;
    for (const auto& n : model.nodes) {
        if (n.y < -coord_tol)
            non_stratified("node " + std::to_string(n.id) + " lies below the base elevation", n.id);
        ys.push_back(n.y);
        xs.push_back(n.x);
    }
    auto elevations = cluster(std::move(ys), coord_tol); // ascending
    auto abscissae = cluster(std::move(xs), coord_tol);

    const bool has_base = !elevations.empty() && std::fabs(elevations.front()) <= coord_tol;
    if (!has_base) elevations.insert(elevations.begin(), 0.0);

    // levels[0] = BASE at elevation 0; stories count upward from there
    const int n_stories = static_cast<int>(elevations.size()) - 1;

    auto level_name = [&](int level) {
        return level == 0 ? std::string("BASE") : "STORY" + std::to_string(level);
    };

    for (int k = n_stories; k >= 0; --k) { // stored top-down, BASE last
        StoryLevel lvl;
        lvl.name = level_name(k);
        lvl.elevation = elevations[k];
        lvl.height = k == 0 ? 0.0 : elevations[k] - elevations[k - 1];
        story.levels.push_back(std::move(lvl));
    }

    for (size_t i = 0; i < abscissae.size(); ++i)
        story.base_points.push_back(BasePoint{"P" + std::to_string(i + 1), abscissae[i]});

    auto point_name = [&](double x, int node_id) {
        int idx = index_of(abscissae, x, coord_tol);
        if (idx < 0)
            non_stratified("coordinate x=" + format_double(x) + " matches no column line", node_id);
        return story.base_points[idx].name;
    };
    auto node_level = [&](const NodeRecord& n) {
        int lvl = index_of(elevations, n.y, coord_tol);
        if (lvl < 0)
            non_stratified("node " + std::to_string(n.id) + " elevation matches no story level",
                           n.id);
        return lvl;
    };

    // point assignments per level, bottom-up while building, emitted top-down
    std::vector<std::vector<std::string>> points_per_level(n_stories + 1);
    for (const auto& n : model.nodes)
        points_per_level[node_level(n)].push_back(point_name(n.x, n.id));

    // line templates and per-story line assignments
    std::set<int> column_lines;                 // point index
    std::set<std::pair<int, int>> girder_spans; // (left, right) point indices
    struct Placement {
        int story = 0;
        bool is_column = false;
        int a = 0, b = 0; // point indices
        std::string section;
        int element_id = 0;
    };
    std::vector<Placement> placements;
    std::set<std::tuple<bool, int, int, int>> occupied; // (is_column, a, b, story)

    auto resolved_node = [&](const ElementEnd& end, int element_id) -> const NodeRecord* {
        if (!end.resolved())
            non_stratified("element " + std::to_string(element_id) + " has unresolved ends",
                           element_id);
        const NodeRecord* n = model.find_node(end.node_id());
        if (!n)
            fail(DiagCode::DANGLING_NODE_REF,
                 "element " + std::to_string(element_id) + " references missing node " +
                     std::to_string(end.node_id()),
                 element_id);
        return n;
    };

    for (const auto& e : model.elements) {
        const NodeRecord* ni = resolved_node(e.end_i, e.id);
        const NodeRecord* nj = resolved_node(e.end_j, e.id);
        Placement p;
        p.section = e.section;
        p.element_id = e.id;
        if (e.kind == ElementKind::column) {
            const NodeRecord* lower = ni->y <= nj->y ? ni : nj;
            const NodeRecord* upper = ni->y <= nj->y ? nj : ni;
            int lvl_lo = node_level(*lower);
            int lvl_hi = node_level(*upper);
            if (lvl_hi != lvl_lo + 1)
                non_stratified("column " + std::to_string(e.id) + " spans non-adjacent levels",
                               e.id);
            p.is_column = true;
            p.a = p.b = index_of(abscissae, lower->x, coord_tol);
            p.story = lvl_hi;
            column_lines.insert(p.a);
        } else {
            int lvl = node_level(*ni);
            if (lvl == 0)
                non_stratified("girder " + std::to_string(e.id) + " lies at the base elevation",
                               e.id);
            int a = index_of(abscissae, std::min(ni->x, nj->x), coord_tol);
            int b = index_of(abscissae, std::max(ni->x, nj->x), coord_tol);
            p.is_column = false;
            p.a = a;
            p.b = b;
            p.story = lvl;
            girder_spans.insert({a, b});
        }
        if (!occupied.insert({p.is_column, p.a, p.b, p.story}).second)
            non_stratified("element " + std::to_string(e.id) +
                               " duplicates another element's line and story",
                           e.id);
        placements.push_back(std::move(p));
    }

    std::map<int, std::string> column_template_of;
    for (int c : column_lines) {
        LineTemplate t;
        t.name = "C" + std::to_string(c + 1);
        t.kind = ElementKind::column;
        t.point_i = t.point_j = story.base_points[c].name;
        column_template_of[c] = t.name;
        story.line_templates.push_back(std::move(t));
    }
    std::map<std::pair<int, int>, std::string> girder_template_of;
    int girder_seq = 1;
    for (const auto& span : girder_spans) {
        LineTemplate t;
        t.name = "B" + std::to_string(girder_seq++);
        t.kind = ElementKind::girder;
        t.point_i = story.base_points[span.first].name;
        t.point_j = story.base_points[span.second].name;
        girder_template_of[span] = t.name;
        story.line_templates.push_back(std::move(t));
    }

    std::vector<std::vector<LineAssignment>> lines_per_story(n_stories + 1);
    std::map<std::pair<std::string, std::string>, int> element_of_assignment;
    for (const auto& p : placements) {
        std::string tname =
            p.is_column ? column_template_of.at(p.a) : girder_template_of.at({p.a, p.b});
        lines_per_story[p.story].push_back(LineAssignment{tname, p.section});
        element_of_assignment[{tname, level_name(p.story)}] = p.element_id;
    }

    // deterministic assignment order: columns before girders, template order
    auto template_rank = [&](const std::string& tname) {
        for (size_t i = 0; i < story.line_templates.size(); ++i) {
            if (story.line_templates[i].name == tname) return i;
        }
        return story.line_templates.size();
    };
    for (int k = n_stories; k >= 0; --k) {
        StoryAssignment assign;
        assign.story = level_name(k);
        auto pts = points_per_level[k];
        std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
            return story.find_point(a)->x < story.find_point(b)->x;
        });
        assign.points = std::move(pts);
        auto lines = lines_per_story[k];
        std::sort(lines.begin(), lines.end(), [&](const auto& a, const auto& b) {
            return template_rank(a.line) < template_rank(b.line);
        });
        assign.lines = std::move(lines);
        story.assignments.push_back(std::move(assign));
    }

    auto lookup_node = [&](int id) -> const NodeRecord* {
        const NodeRecord* n = model.find_node(id);
        if (!n) fail(DiagCode::DANGLING_NODE_REF, "missing node " + std::to_string(id), id);
        return n;
    };

    for (const auto& s : model.supports) {
        const NodeRecord* n = lookup_node(s.node_id);
        if (node_level(*n) != 0)
            non_stratified("support on node " + std::to_string(s.node_id) +
                               " lies above the base level",
                           s.node_id);
        story.base_restraints.push_back(BaseRestraint{point_name(n->x, n->id), s.kind});
    }
    std::sort(story.base_restraints.begin(), story.base_restraints.end(),
              [&](const auto& a, const auto& b) {
                  return story.find_point(a.point)->x < story.find_point(b.point)->x;
              });

    for (const auto& l : model.point_loads) {
        const NodeRecord* n = lookup_node(l.node_id);
        story.point_loads.push_back(StoryPointLoad{point_name(n->x, n->id),
                                                   level_name(node_level(*n)), l.fx, l.fy, l.mz});
    }
    std::map<int, std::pair<std::string, std::string>> assignment_of_element;
    for (const auto& [key, id] : element_of_assignment) assignment_of_element[id] = key;
    for (const auto& l : model.distributed_loads) {
        auto it = assignment_of_element.find(l.element_id);
        if (it == assignment_of_element.end())
            fail(DiagCode::DANGLING_ELEMENT_REF,
                 "distributed load references missing element " + std::to_string(l.element_id),
                 l.element_id);
        story.line_loads.push_back(StoryLineLoad{it->second.first, it->second.second, l.w_transverse});
    }

    return story;
}

FrameModel from_story_model(const StoryModel& story, double coord_tol) {
    FrameModel model;
    model.units = story.units;
    model.sections = story.sections;
    model.provenance = story.provenance;

    // levels bottom-up with BASE first
    std::vector<StoryLevel> levels(story.levels.rbegin(), story.levels.rend());
    std::map<std::string, int> level_index;
    std::vector<double> elevations;
    for (size_t i = 0; i < levels.size(); ++i) {
        level_index[levels[i].name] = static_cast<int>(i);
        elevations.push_back(levels[i].elevation);
    }

    auto point_x = [&](const std::string& name) {
        const BasePoint* p = story.find_point(name);
        if (!p) fail(DiagCode::UNDEFINED_REFERENCE, "unknown base point '" + name + "'");
        return p->x;
    };
    auto level_of = [&](const std::string& name) {
        auto it = level_index.find(name);
        if (it == level_index.end())
            fail(DiagCode::UNDEFINED_REFERENCE, "unknown story level '" + name + "'");
        return it->second;
    };

    // nodes: levels bottom-up, points left to right
    int next_node = 1;
    for (size_t i = 0; i < levels.size(); ++i) {
        const StoryAssignment* assign = nullptr;
        for (const auto& a : story.assignments) {
            if (a.story == levels[i].name) {
                assign = &a;
                break;
            }
        }
        if (!assign) continue;
        auto pts = assign->points;
        std::sort(pts.begin(), pts.end(),
                  [&](const auto& a, const auto& b) { return point_x(a) < point_x(b); });
        for (const auto& pname : pts) {
            NodeRecord node;
            node.id = next_node++;
            node.x = point_x(pname);
            node.y = elevations[i];
            node.description = pname + " " + levels[i].name;
            model.nodes.push_back(std::move(node));
        }
    }

    auto node_at = [&](double x, double y) -> const NodeRecord* {
        for (const auto& n : model.nodes) {
            if (std::fabs(n.x - x) <= coord_tol && std::fabs(n.y - y) <= coord_tol) return &n;
        }
        return nullptr;
    };

    // elements: stories bottom-up, assignment order
    int next_element = 1;
    std::map<std::pair<std::string, std::string>, int> element_of_assignment;
    std::vector<ElementRecord> coordinate_elements;
    for (size_t i = 1; i < levels.size(); ++i) {
        for (const auto& a : story.assignments) {
            if (a.story != levels[i].name) continue;
            for (const auto& line : a.lines) {
                const LineTemplate* t = story.find_line(line.line);
                if (!t)
                    fail(DiagCode::UNDEFINED_REFERENCE, "unknown line template '" + line.line + "'");
                ElementRecord e;
                e.id = next_element++;
                e.kind = t->kind;
                e.section = line.section;
                e.description = t->name + " " + levels[i].name;
                if (t->kind == ElementKind::column) {
                    double x = point_x(t->point_i);
                    e.end_i = ElementEnd::at(x, elevations[i - 1]);
                    e.end_j = ElementEnd::at(x, elevations[i]);
                } else {
                    e.end_i = ElementEnd::at(point_x(t->point_i), elevations[i]);
                    e.end_j = ElementEnd::at(point_x(t->point_j), elevations[i]);
                }
                element_of_assignment[{t->name, levels[i].name}] = e.id;
                coordinate_elements.push_back(std::move(e));
            }
        }
    }
    model.elements = resolve_connectivity(model.nodes, coordinate_elements, coord_tol);

    for (const auto& r : story.base_restraints) {
        const NodeRecord* n = node_at(point_x(r.point), 0.0);
        if (!n)
            fail(DiagCode::UNDEFINED_REFERENCE,
                 "restraint references point '" + r.point + "' absent at BASE");
        model.supports.push_back(SupportRecord{n->id, r.kind});
    }

    for (const auto& l : story.point_loads) {
        int lvl = level_of(l.story);
        const NodeRecord* n = node_at(point_x(l.point), elevations[lvl]);
        if (!n)
            fail(DiagCode::UNDEFINED_REFERENCE, "point load references inactive point '" + l.point +
                                                    "' at " + l.story);
        model.point_loads.push_back(PointLoad{n->id, l.fx, l.fy, l.mz});
    }
    for (const auto& l : story.line_loads) {
        auto it = element_of_assignment.find({l.line, l.story});
        if (it == element_of_assignment.end())
            fail(DiagCode::UNDEFINED_REFERENCE,
                 "line load references inactive line '" + l.line + "' at " + l.story);
        model.distributed_loads.push_back(DistributedLoad{it->second, l.w});
    }

    return model;
}

} // namespace frameforge
