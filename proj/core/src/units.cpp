#include "frameforge/units.hpp"

#include <cmath>

namespace frameforge {

double meters_per(LengthUnit u) {
    switch (u) {
    case LengthUnit::meter: return 1.0;
    case LengthUnit::millimeter: return 1e-3;
    case LengthUnit::foot: return 0.3048;
    case LengthUnit::inch: return 0.0254;
    }
    return 1.0;
}

double newtons_per(ForceUnit u) {
    switch (u) {
    case ForceUnit::kilonewton: return 1e3;
    case ForceUnit::newton: return 1.0;
    case ForceUnit::kip: return 4448.2216152605;
    case ForceUnit::pound: return 4.4482216152605;
    }
    return 1.0;
}

std::string_view token(LengthUnit u) {
    switch (u) {
    case LengthUnit::meter: return "m";
    case LengthUnit::millimeter: return "mm";
    case LengthUnit::foot: return "ft";
    case LengthUnit::inch: return "in";
    }
    return "m";
}

std::string_view token(ForceUnit u) {
    switch (u) {
    case ForceUnit::kilonewton: return "kN";
    case ForceUnit::newton: return "N";
    case ForceUnit::kip: return "kip";
    case ForceUnit::pound: return "lb";
    }
    return "kN";
}

std::string_view name(LengthUnit u) {
    switch (u) {
    case LengthUnit::meter: return "meter";
    case LengthUnit::millimeter: return "millimeter";
    case LengthUnit::foot: return "foot";
    case LengthUnit::inch: return "inch";
    }
    return "meter";
}

std::string_view name(ForceUnit u) {
    switch (u) {
    case ForceUnit::kilonewton: return "kilonewton";
    case ForceUnit::newton: return "newton";
    case ForceUnit::kip: return "kip";
    case ForceUnit::pound: return "pound";
    }
    return "kilonewton";
}

std::optional<LengthUnit> length_unit_from_token(std::string_view tok) {
    if (tok == "m") return LengthUnit::meter;
    if (tok == "mm") return LengthUnit::millimeter;
    if (tok == "ft") return LengthUnit::foot;
    if (tok == "in") return LengthUnit::inch;
    return std::nullopt;
}

std::optional<ForceUnit> force_unit_from_token(std::string_view tok) {
    if (tok == "kN") return ForceUnit::kilonewton;
    if (tok == "N") return ForceUnit::newton;
    if (tok == "kip") return ForceUnit::kip;
    if (tok == "lb") return ForceUnit::pound;
    return std::nullopt;
}

std::optional<LengthUnit> length_unit_from_name(std::string_view n) {
    if (n == "meter") return LengthUnit::meter;
    if (n == "millimeter") return LengthUnit::millimeter;
    if (n == "foot") return LengthUnit::foot;
    if (n == "inch") return LengthUnit::inch;
    return std::nullopt;
}

std::optional<ForceUnit> force_unit_from_name(std::string_view n) {
    if (n == "kilonewton") return ForceUnit::kilonewton;
    if (n == "newton") return ForceUnit::newton;
    if (n == "kip") return ForceUnit::kip;
    if (n == "pound") return ForceUnit::pound;
    return std::nullopt;
}

double conversion_factor(ForceUnit f, LengthUnit l, int force_power, int length_power,
                         const UnitSystem& target) {
    const double force_ratio = newtons_per(f) / newtons_per(target.force);
    const double length_ratio = meters_per(l) / meters_per(target.length);
    return std::pow(force_ratio, force_power) * std::pow(length_ratio, length_power);
}

} // namespace frameforge
