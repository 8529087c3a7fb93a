#pragma once

#include <optional>
#include <string_view>

namespace frameforge {

enum class LengthUnit { meter, millimeter, foot, inch };
enum class ForceUnit { kilonewton, newton, kip, pound };

/// One consistent unit system per model; no per-field overrides.
struct UnitSystem {
    LengthUnit length = LengthUnit::meter;
    ForceUnit force = ForceUnit::kilonewton;

    bool operator==(const UnitSystem&) const = default;
};

double meters_per(LengthUnit u);
double newtons_per(ForceUnit u);

std::string_view token(LengthUnit u); // "m" "mm" "ft" "in"
std::string_view token(ForceUnit u);  // "kN" "N" "kip" "lb"
std::string_view name(LengthUnit u);  // "meter" ... (canonical JSON spelling)
std::string_view name(ForceUnit u);   // "kilonewton" ...

std::optional<LengthUnit> length_unit_from_token(std::string_view tok);
std::optional<ForceUnit> force_unit_from_token(std::string_view tok);
std::optional<LengthUnit> length_unit_from_name(std::string_view n);
std::optional<ForceUnit> force_unit_from_name(std::string_view n);

/// Conversion factor for a quantity of dimension force^fp * length^lp
/// expressed in (f, l) into the target system.
double conversion_factor(ForceUnit f, LengthUnit l, int force_power, int length_power,
                         const UnitSystem& target);

} // namespace frameforge
