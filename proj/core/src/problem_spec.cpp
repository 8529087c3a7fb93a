#include "frameforge/problem_spec.hpp"

#include "frameforge/numeric.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace frameforge {

std::string_view to_string(TargetDialect t) {
    switch (t) {
    case TargetDialect::opensees: return "opensees";
    case TargetDialect::sap2000: return "sap2000";
    case TargetDialect::etabs: return "etabs";
    case TargetDialect::all: return "all";
    }
    return "all";
}

std::optional<TargetDialect> target_from_string(std::string_view s) {
    if (s == "opensees") return TargetDialect::opensees;
    if (s == "sap2000") return TargetDialect::sap2000;
    if (s == "etabs") return TargetDialect::etabs;
    if (s == "all") return TargetDialect::all;
    return std::nullopt;
}

int FrameProblemSpec::max_story_count() const {
    int max_stories = 0;
    for (int s : stories_per_bay) max_stories = std::max(max_stories, s);
    return max_stories;
}

namespace {

constexpr const char* kSectionNames[] = {"UNITS", "GEOMETRY", "SUPPORTS",
                                         "MATERIALS", "LOADS", "TARGET"};

bool is_section_name(std::string_view s) {
    for (const char* n : kSectionNames) {
        if (s == n) return true;
    }
    return false;
}

[[noreturn]] void syntax_error(std::string detail, int line, int column) {
    fail(DiagCode::SYNTAX_ERROR, std::move(detail), -1, line, column);
}

std::string_view trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

/// One `key = value` style statement with its source position.
struct Statement {
    std::string text; // trimmed
    int line = 0;
    int column = 0; // 1-based column of the statement start
};

/// A physical quantity dimension: force^fp * length^lp.
struct Dimension {
    int force = 0;
    int length = 0;
    bool operator==(const Dimension&) const = default;
};

std::string dimension_text(Dimension d) {
    if (d == Dimension{0, 1}) return "a length unit";
    if (d == Dimension{1, 0}) return "a force unit";
    if (d == Dimension{1, -1}) return "a force-per-length unit";
    if (d == Dimension{1, -2}) return "a force-per-area unit";
    if (d == Dimension{0, 2}) return "an area unit";
    if (d == Dimension{0, 4}) return "a length^4 unit";
    return "a unit";
}

struct ParsedUnit {
    ForceUnit force = ForceUnit::kilonewton;
    LengthUnit length = LengthUnit::meter;
    Dimension dim;
};

// Accepts tokens like "kN", "m", "kN/m", "kN/m^2", "m^2", "m4".
std::optional<ParsedUnit> parse_unit_token(std::string_view tok) {
    auto split_power = [](std::string_view part) -> std::optional<std::pair<std::string_view, int>> {
        size_t caret = part.find('^');
        std::string_view base = part;
        int power = 1;
        if (caret != std::string_view::npos) {
            base = part.substr(0, caret);
            auto p = parse_int(part.substr(caret + 1));
            if (!p || *p < 1 || *p > 4) return std::nullopt;
            power = *p;
        } else if (!part.empty() && (part.back() == '2' || part.back() == '3' || part.back() == '4')) {
            power = part.back() - '0';
            base = part.substr(0, part.size() - 1);
        }
        return std::make_pair(base, power);
    };

    ParsedUnit unit;
    size_t slash = tok.find('/');
    std::string_view numerator = slash == std::string_view::npos ? tok : tok.substr(0, slash);

    auto num = split_power(numerator);
    if (!num) return std::nullopt;
    if (auto f = force_unit_from_token(num->first)) {
        if (num->second != 1) return std::nullopt;
        unit.force = *f;
        unit.dim.force = 1;
    } else if (auto l = length_unit_from_token(num->first)) {
        unit.length = *l;
        unit.dim.length = num->second;
    } else {
        return std::nullopt;
    }

    if (slash != std::string_view::npos) {
        auto den = split_power(tok.substr(slash + 1));
        if (!den) return std::nullopt;
        auto l = length_unit_from_token(den->first);
        if (!l) return std::nullopt; // only lengths appear in denominators
        if (unit.dim.length != 0) return std::nullopt;
        unit.length = *l;
        unit.dim.length = -den->second;
    }
    return unit;
}

struct SectionText {
    std::vector<Statement> statements;
    int header_line = 0;
};

/// Strips comments, locates section headers, splits statements on newlines
/// and semicolons.
std::map<std::string, SectionText> scan_sections(std::string_view text) {
    std::map<std::string, SectionText> sections;
    std::string current;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        size_t cursor = 0;
        std::string_view rest = line;
        if (size_t b = rest.find_first_not_of(" \t"); b != std::string_view::npos && rest[b] == '[') {
            size_t close = rest.find(']', b);
            if (close == std::string_view::npos)
                syntax_error("unterminated section header", line_no, static_cast<int>(b) + 1);
            std::string header(trim(rest.substr(b + 1, close - b - 1)));
            if (!is_section_name(header))
                syntax_error("unknown section [" + header + "]", line_no, static_cast<int>(b) + 1);
            if (sections.count(header))
                syntax_error("section [" + header + "] declared more than once", line_no,
                             static_cast<int>(b) + 1);
            sections[header].header_line = line_no;
            current = header;
            cursor = close + 1;
        } else if (trim(rest).empty()) {
            cursor = rest.size();
        } else if (current.empty()) {
            syntax_error("expected a section header like [GEOMETRY]", line_no,
                         static_cast<int>(rest.find_first_not_of(" \t")) + 1);
        }

        // statements on the remainder of the line, split on ';'
        while (cursor < rest.size()) {
            size_t semi = rest.find(';', cursor);
            size_t end = semi == std::string_view::npos ? rest.size() : semi;
            std::string_view raw = rest.substr(cursor, end - cursor);
            std::string_view stmt = trim(raw);
            if (!stmt.empty()) {
                size_t col = cursor + raw.find_first_not_of(" \t");
                sections[current].statements.push_back(
                    Statement{std::string(stmt), line_no, static_cast<int>(col) + 1});
            }
            cursor = end + 1;
        }

        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return sections;
}

struct KeyValue {
    std::string key;
    std::string value;
    int line = 0;
    int column = 0;
};

KeyValue split_key_value(const Statement& st, char sep = '=') {
    size_t eq = st.text.find(sep);
    if (eq == std::string::npos)
        syntax_error("expected '" + std::string(1, sep) + "' in '" + st.text + "'", st.line,
                     st.column);
    KeyValue kv;
    kv.key = std::string(trim(std::string_view(st.text).substr(0, eq)));
    kv.value = std::string(trim(std::string_view(st.text).substr(eq + 1)));
    kv.line = st.line;
    kv.column = st.column;
    return kv;
}

std::vector<std::string> split_list(std::string_view value) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (true) {
        size_t comma = value.find(',', pos);
        parts.emplace_back(trim(value.substr(pos, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return parts;
}

/// Parses "<num> <unit-token>" and converts into the spec unit system.
double parse_quantity(std::string_view text, Dimension expected, const UnitSystem& units, int line,
                      int column) {
    auto t = trim(text);
    size_t space = t.find_first_of(" \t");
    if (space == std::string_view::npos)
        syntax_error("expected '<number> <unit>' in '" + std::string(t) + "'", line, column);
    auto number = parse_double(t.substr(0, space));
    if (!number)
        syntax_error("expected a number in '" + std::string(t) + "'", line, column);
    std::string_view unit_tok = trim(t.substr(space + 1));
    auto unit = parse_unit_token(unit_tok);
    if (!unit || !(unit->dim == expected))
        fail(DiagCode::UNSUPPORTED_UNIT,
             "'" + std::string(unit_tok) + "' is not " + dimension_text(expected), -1, line, column);
    return *number * conversion_factor(unit->force, unit->length, expected.force, expected.length,
                                       units);
}

double parse_bare_number(std::string_view text, int line, int column) {
    auto v = parse_double(trim(text));
    if (!v) syntax_error("expected a number, got '" + std::string(trim(text)) + "'", line, column);
    return *v;
}

SectionProperties parse_material_statement(const Statement& st, std::string_view member,
                                           const UnitSystem& units) {
    auto kv = split_key_value(st, ':');
    if (kv.key != member)
        syntax_error("expected '" + std::string(member) + ":' in [MATERIALS]", st.line, st.column);
    auto parts = split_list(kv.value);
    if (parts.size() != 3)
        syntax_error("expected 'E = ..., A = ..., I = ...' after '" + std::string(member) + ":'",
                     st.line, st.column);

    SectionProperties section;
    section.name = member == "column" ? "COLUMN" : "GIRDER";
    const char* expected_keys[] = {"E", "A", "I"};
    const Dimension dims[] = {{1, -2}, {0, 2}, {0, 4}};
    double* slots[] = {&section.youngs_modulus, &section.area, &section.moment_of_inertia};
    for (int i = 0; i < 3; ++i) {
        Statement part{parts[i], st.line, st.column};
        auto inner = split_key_value(part);
        if (inner.key != expected_keys[i])
            syntax_error(std::string("expected '") + expected_keys[i] + " = ...', got '" +
                             inner.key + "'",
                         st.line, st.column);
        *slots[i] = parse_quantity(inner.value, dims[i], units, st.line, st.column);
        if (*slots[i] <= 0.0)
            syntax_error(std::string(expected_keys[i]) + " must be positive", st.line, st.column);
    }
    return section;
}

ExtraPointLoad parse_point_statement(const KeyValue& kv) {
    auto parts = split_list(kv.value);
    const char* labels[] = {"x", "y", "fx", "fy", "mz"};
    if (parts.size() != 5)
        syntax_error("expected 'point = x <n>, y <n>, fx <n>, fy <n>, mz <n>'", kv.line, kv.column);
    ExtraPointLoad load;
    double* slots[] = {&load.x, &load.y, &load.fx, &load.fy, &load.mz};
    for (int i = 0; i < 5; ++i) {
        std::string_view part = parts[i];
        size_t space = part.find_first_of(" \t");
        if (space == std::string_view::npos || trim(part.substr(0, space)) != labels[i])
            syntax_error(std::string("expected '") + labels[i] + " <number>', got '" +
                             std::string(part) + "'",
                         kv.line, kv.column);
        *slots[i] = parse_bare_number(part.substr(space + 1), kv.line, kv.column);
    }
    return load;
}

} // namespace

FrameProblemSpec parse_problem(std::string_view text) {
    auto sections = scan_sections(text);

    for (const char* required : {"UNITS", "GEOMETRY", "SUPPORTS", "MATERIALS", "LOADS"}) {
        if (!sections.count(required))
            fail(DiagCode::MISSING_SECTION, std::string("section [") + required + "] is missing");
    }

    FrameProblemSpec spec;

    // [UNITS] first: every other section's quantities convert into this system.
    {
        bool have_length = false, have_force = false;
        for (const auto& st : sections.at("UNITS").statements) {
            auto kv = split_key_value(st);
            if (kv.key == "length") {
                auto u = length_unit_from_token(kv.value);
                if (!u)
                    fail(DiagCode::UNSUPPORTED_UNIT, "unknown length unit '" + kv.value + "'", -1,
                         kv.line, kv.column);
                spec.units.length = *u;
                have_length = true;
            } else if (kv.key == "force") {
                auto u = force_unit_from_token(kv.value);
                if (!u)
                    fail(DiagCode::UNSUPPORTED_UNIT, "unknown force unit '" + kv.value + "'", -1,
                         kv.line, kv.column);
                spec.units.force = *u;
                have_force = true;
            } else {
                syntax_error("unknown key '" + kv.key + "' in [UNITS]", kv.line, kv.column);
            }
        }
        if (!have_length || !have_force)
            syntax_error("[UNITS] requires both 'length' and 'force'",
                         sections.at("UNITS").header_line, 1);
    }

    // [GEOMETRY]
    {
        bool have_bays = false, have_stories = false, have_widths = false, have_heights = false;
        for (const auto& st : sections.at("GEOMETRY").statements) {
            auto kv = split_key_value(st);
            if (kv.key == "bays") {
                auto v = parse_int(kv.value);
                if (!v || *v < 1)
                    syntax_error("'bays' must be a positive integer", kv.line, kv.column);
                spec.n_bays = *v;
                have_bays = true;
            } else if (kv.key == "stories_per_bay") {
                for (const auto& part : split_list(kv.value)) {
                    auto v = parse_int(part);
                    if (!v || *v < 1)
                        syntax_error("'stories_per_bay' entries must be positive integers", kv.line,
                                     kv.column);
                    spec.stories_per_bay.push_back(*v);
                }
                have_stories = true;
            } else if (kv.key == "bay_widths" || kv.key == "story_heights") {
                auto parts = split_list(kv.value);
                // the unit token trails the last number
                const std::string last = parts.back();
                size_t space = last.find_last_of(" \t");
                if (space == std::string::npos)
                    syntax_error("'" + kv.key + "' requires a trailing length unit", kv.line,
                                 kv.column);
                std::string_view unit_tok = trim(std::string_view(last).substr(space + 1));
                auto unit = parse_unit_token(unit_tok);
                if (!unit || !(unit->dim == Dimension{0, 1}))
                    fail(DiagCode::UNSUPPORTED_UNIT,
                         "'" + std::string(unit_tok) + "' is not a length unit", -1, kv.line,
                         kv.column);
                double factor =
                    conversion_factor(unit->force, unit->length, 0, 1, spec.units);
                std::vector<double>& out =
                    kv.key == "bay_widths" ? spec.bay_widths : spec.story_heights;
                parts.back() = std::string(trim(std::string_view(last).substr(0, space)));
                for (const auto& part : parts) {
                    double v = parse_bare_number(part, kv.line, kv.column) * factor;
                    if (v <= 0.0)
                        syntax_error("'" + kv.key + "' entries must be positive", kv.line,
                                     kv.column);
                    out.push_back(v);
                }
                (kv.key == "bay_widths" ? have_widths : have_heights) = true;
            } else {
                syntax_error("unknown key '" + kv.key + "' in [GEOMETRY]", kv.line, kv.column);
            }
        }
        int line = sections.at("GEOMETRY").header_line;
        if (!have_bays) syntax_error("[GEOMETRY] requires 'bays'", line, 1);
        if (!have_stories) syntax_error("[GEOMETRY] requires 'stories_per_bay'", line, 1);
        if (!have_widths) syntax_error("[GEOMETRY] requires 'bay_widths'", line, 1);
        if (!have_heights) syntax_error("[GEOMETRY] requires 'story_heights'", line, 1);

        if (static_cast<int>(spec.stories_per_bay.size()) != spec.n_bays)
            fail(DiagCode::INCONSISTENT_LENGTHS,
                 "stories_per_bay has " + std::to_string(spec.stories_per_bay.size()) +
                     " entries for " + std::to_string(spec.n_bays) + " bays",
                 -1, line);
        if (static_cast<int>(spec.bay_widths.size()) != spec.n_bays)
            fail(DiagCode::INCONSISTENT_LENGTHS,
                 "bay_widths has " + std::to_string(spec.bay_widths.size()) + " entries for " +
                     std::to_string(spec.n_bays) + " bays",
                 -1, line);
        if (static_cast<int>(spec.story_heights.size()) != spec.max_story_count())
            fail(DiagCode::INCONSISTENT_LENGTHS,
                 "story_heights has " + std::to_string(spec.story_heights.size()) +
                     " entries but the tallest bay has " + std::to_string(spec.max_story_count()) +
                     " stories",
                 -1, line);
    }

    // [SUPPORTS]
    {
        bool have_base = false;
        for (const auto& st : sections.at("SUPPORTS").statements) {
            auto kv = split_key_value(st);
            if (kv.key != "base")
                syntax_error("unknown key '" + kv.key + "' in [SUPPORTS]", kv.line, kv.column);
            auto kind = support_kind_from_string(kv.value);
            if (!kind)
                syntax_error("'base' must be fixed, pinned, roller_x or roller_y", kv.line,
                             kv.column);
            spec.support_kind = *kind;
            have_base = true;
        }
        if (!have_base)
            syntax_error("[SUPPORTS] requires 'base'", sections.at("SUPPORTS").header_line, 1);
    }

    // [MATERIALS]
    {
        const auto& stmts = sections.at("MATERIALS").statements;
        if (stmts.size() != 2)
            syntax_error("[MATERIALS] requires exactly a 'column:' and a 'girder:' line",
                         sections.at("MATERIALS").header_line, 1);
        spec.column_section = parse_material_statement(stmts[0], "column", spec.units);
        spec.girder_section = parse_material_statement(stmts[1], "girder", spec.units);
    }

    // [LOADS]
    {
        bool have_lateral = false, have_udl = false;
        for (const auto& st : sections.at("LOADS").statements) {
            auto kv = split_key_value(st);
            if (kv.key == "lateral_per_floor") {
                spec.lateral_load_per_floor =
                    parse_quantity(kv.value, Dimension{1, 0}, spec.units, kv.line, kv.column);
                have_lateral = true;
            } else if (kv.key == "gravity_udl") {
                spec.gravity_udl =
                    parse_quantity(kv.value, Dimension{1, -1}, spec.units, kv.line, kv.column);
                have_udl = true;
            } else if (kv.key == "point") {
                spec.extra_point_loads.push_back(parse_point_statement(kv));
            } else {
                syntax_error("unknown key '" + kv.key + "' in [LOADS]", kv.line, kv.column);
            }
        }
        int line = sections.at("LOADS").header_line;
        if (!have_lateral) syntax_error("[LOADS] requires 'lateral_per_floor'", line, 1);
        if (!have_udl) syntax_error("[LOADS] requires 'gravity_udl'", line, 1);
    }

    // [TARGET] is optional; default is all
    if (auto it = sections.find("TARGET"); it != sections.end()) {
        bool have_software = false;
        for (const auto& st : it->second.statements) {
            auto kv = split_key_value(st);
            if (kv.key != "software")
                syntax_error("unknown key '" + kv.key + "' in [TARGET]", kv.line, kv.column);
            auto t = target_from_string(kv.value);
            if (!t)
                syntax_error("'software' must be opensees, sap2000, etabs or all", kv.line,
                             kv.column);
            spec.target = *t;
            have_software = true;
        }
        if (!have_software) syntax_error("[TARGET] requires 'software'", it->second.header_line, 1);
    }

    return spec;
}

std::string format_problem(const FrameProblemSpec& spec) {
    const std::string lu(token(spec.units.length));
    const std::string fu(token(spec.units.force));

    auto join = [](const auto& values, auto&& fmt) {
        std::string out;
        for (size_t i = 0; i < values.size(); ++i) {
            if (i) out += ", ";
            out += fmt(values[i]);
        }
        return out;
    };
    auto fmt_int = [](int v) { return std::to_string(v); };

    std::ostringstream out;
    out << "[UNITS]\n";
    out << "length = " << lu << "\n";
    out << "force = " << fu << "\n";
    out << "\n[GEOMETRY]\n";
    out << "bays = " << spec.n_bays << "\n";
    out << "stories_per_bay = " << join(spec.stories_per_bay, fmt_int) << "\n";
    out << "bay_widths = " << join(spec.bay_widths, format_double) << " " << lu << "\n";
    out << "story_heights = " << join(spec.story_heights, format_double) << " " << lu << "\n";
    out << "\n[SUPPORTS]\n";
    out << "base = " << to_string(spec.support_kind) << "\n";
    out << "\n[MATERIALS]\n";
    for (const auto* section : {&spec.column_section, &spec.girder_section}) {
        out << (section == &spec.column_section ? "column" : "girder") << ": ";
        out << "E = " << format_double(section->youngs_modulus) << " " << fu << "/" << lu << "^2, ";
        out << "A = " << format_double(section->area) << " " << lu << "^2, ";
        out << "I = " << format_double(section->moment_of_inertia) << " " << lu << "^4\n";
    }
    out << "\n[LOADS]\n";
    out << "lateral_per_floor = " << format_double(spec.lateral_load_per_floor) << " " << fu << "\n";
    out << "gravity_udl = " << format_double(spec.gravity_udl) << " " << fu << "/" << lu << "\n";
    for (const auto& p : spec.extra_point_loads) {
        out << "point = x " << format_double(p.x) << ", y " << format_double(p.y) << ", fx "
            << format_double(p.fx) << ", fy " << format_double(p.fy) << ", mz "
            << format_double(p.mz) << "\n";
    }
    out << "\n[TARGET]\n";
    out << "software = " << to_string(spec.target) << "\n";
    return out.str();
}

} // namespace frameforge
