#include "frameforge/topology.hpp"

#include "frameforge/loads.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace frameforge {

ConstructionPlan build_plan(const FrameProblemSpec& spec) {
    ConstructionPlan plan;
    const int max_story = spec.max_story_count();
    for (int k = 1; k <= max_story; ++k) {
        for (int b = 1; b <= spec.n_bays; ++b) {
            if (spec.stories_per_bay[b - 1] >= k) plan.steps.push_back(CellStep{k, b});
        }
    }
    return plan;
}

std::vector<double> column_line_abscissae(const FrameProblemSpec& spec) {
    std::vector<double> x(spec.n_bays + 1, 0.0);
    for (int c = 1; c <= spec.n_bays; ++c) x[c] = x[c - 1] + spec.bay_widths[c - 1];
    return x;
}

std::vector<int> column_line_heights(const FrameProblemSpec& spec) {
    std::vector<int> heights(spec.n_bays + 1, 0);
    for (int c = 0; c <= spec.n_bays; ++c) {
        int h = 0;
        if (c > 0) h = std::max(h, spec.stories_per_bay[c - 1]); // bay to the left
        if (c < spec.n_bays) h = std::max(h, spec.stories_per_bay[c]); // bay to the right
        heights[c] = h;
    }
    return heights;
}

std::vector<double> level_elevations(const FrameProblemSpec& spec) {
    std::vector<double> y(spec.max_story_count() + 1, 0.0);
    for (size_t k = 1; k < y.size(); ++k) y[k] = y[k - 1] + spec.story_heights[k - 1];
    return y;
}

GeneratedNodes generate_nodes(const FrameProblemSpec& spec, const ConstructionPlan&) {
    const auto x = column_line_abscissae(spec);
    const auto heights = column_line_heights(spec);
    const auto y = level_elevations(spec);

    GeneratedNodes out;
    int next_id = 1;
    for (int k = 0; k <= spec.max_story_count(); ++k) {
        for (int c = 0; c <= spec.n_bays; ++c) {
            if (heights[c] < k) continue;
            NodeRecord node;
            node.id = next_id++;
            node.x = x[c];
            node.y = y[k];
            node.description =
                "line " + std::to_string(c) + (k == 0 ? " base" : " level " + std::to_string(k));
            out.nodes.push_back(std::move(node));
            if (k == 0) out.supports.push_back(SupportRecord{out.nodes.back().id, spec.support_kind});
        }
    }
    return out;
}

std::vector<ElementRecord> generate_elements(const FrameProblemSpec& spec,
                                             const ConstructionPlan& plan,
                                             const std::vector<NodeRecord>&) {
    const auto x = column_line_abscissae(spec);
    const auto y = level_elevations(spec);

    std::vector<ElementRecord> elements;
    std::set<std::pair<int, int>> placed_columns; // (line, story)
    int next_id = 1;

    auto add_column = [&](int line, int story) {
        if (!placed_columns.insert({line, story}).second) return; // shared line already built
        ElementRecord e;
        e.id = next_id++;
        e.kind = ElementKind::column;
        e.end_i = ElementEnd::at(x[line], y[story - 1]);
        e.end_j = ElementEnd::at(x[line], y[story]);
        e.section = spec.column_section.name;
        e.description = "column line " + std::to_string(line) + " story " + std::to_string(story);
        elements.push_back(std::move(e));
    };

    for (const auto& step : plan.steps) {
        add_column(step.bay - 1, step.story);
        add_column(step.bay, step.story);

        ElementRecord girder;
        girder.id = next_id++;
        girder.kind = ElementKind::girder;
        girder.end_i = ElementEnd::at(x[step.bay - 1], y[step.story]);
        girder.end_j = ElementEnd::at(x[step.bay], y[step.story]);
        girder.section = spec.girder_section.name;
        girder.description =
            "girder bay " + std::to_string(step.bay) + " level " + std::to_string(step.story);
        elements.push_back(std::move(girder));
    }
    return elements;
}

FrameModel build_model(const FrameProblemSpec& spec, double coord_tol) {
    const auto plan = build_plan(spec);
    auto generated = generate_nodes(spec, plan);
    auto elements = generate_elements(spec, plan, generated.nodes);

    FrameModel model;
    model.units = spec.units;
    model.nodes = std::move(generated.nodes);
    model.supports = std::move(generated.supports);
    model.sections = {spec.column_section, spec.girder_section};
    model.elements = resolve_connectivity(model.nodes, elements, coord_tol);

    auto loads = assign_loads(spec, model.nodes, model.elements, coord_tol);
    model.point_loads = std::move(loads.point_loads);
    model.distributed_loads = std::move(loads.distributed_loads);
    model.provenance = "frameforge: compiled from problem template";

    auto diags = validate_model(model, coord_tol);
    if (has_errors(diags)) {
        for (auto& d : diags) {
            if (d.severity == Severity::error) throw FrameError(std::move(d));
        }
    }
    return model;
}

} // namespace frameforge
