#include "pam/units.hpp"

#include <string>

namespace pam::units {

Dimension dimension_of(Unit u) {
    switch (u) {
    case Unit::pascal_:
    case Unit::bar:
    case Unit::kilopascal:
        return Dimension::pressure;
    case Unit::meter:
    case Unit::centimeter:
    case Unit::millimeter:
        return Dimension::length;
    case Unit::radian:
    case Unit::degree:
        return Dimension::angle;
    case Unit::newton:
        return Dimension::force;
    case Unit::newton_meter_per_radian:
        return Dimension::stiffness;
    }
    throw DomainError("unhandled unit tag");
}

double si_factor(Unit u) {
    switch (u) {
    case Unit::pascal_: return 1.0;
    case Unit::bar: return bar_to_pa;
    case Unit::kilopascal: return kpa_to_pa;
    case Unit::meter: return 1.0;
    case Unit::centimeter: return cm_to_m;
    case Unit::millimeter: return mm_to_m;
    case Unit::radian: return 1.0;
    case Unit::degree: return deg_to_rad;
    case Unit::newton: return 1.0;
    case Unit::newton_meter_per_radian: return 1.0;
    }
    throw DomainError("unhandled unit tag");
}

Unit parse_unit(std::string_view name) {
    if (name == "Pa") return Unit::pascal_;
    if (name == "bar") return Unit::bar;
    if (name == "kPa") return Unit::kilopascal;
    if (name == "m") return Unit::meter;
    if (name == "cm") return Unit::centimeter;
    if (name == "mm") return Unit::millimeter;
    if (name == "rad") return Unit::radian;
    if (name == "deg") return Unit::degree;
    if (name == "N") return Unit::newton;
    if (name == "N.m/rad" || name == "N·m/rad") return Unit::newton_meter_per_radian;
    throw UsageError("unknown unit '" + std::string(name) + "'");
}

double convert(double value, Unit from, Unit to) {
    if (dimension_of(from) != dimension_of(to))
        throw DomainError("unit dimension mismatch in conversion");
    // multiply in, divide out: keeps round trips within 1 ulp
    return value * si_factor(from) / si_factor(to);
}

double convert(double value, std::string_view from, std::string_view to) {
    return convert(value, parse_unit(from), parse_unit(to));
}

} // namespace pam::units
