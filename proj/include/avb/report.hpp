// Outcome of a single numeric verification: LHS/RHS, slack, pass/fail.
#pragma once

#include <cstdint>
#include <string>

namespace avb {

struct CheckReport {
    std::string name;
    std::string instance;  // serialized inputs, replayable
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs for "lhs ≤ rhs" checks; -|lhs-rhs| for equalities
    bool sound_direction_only = true;
    bool pass = false;
    std::int64_t seed = 0;
    std::string note;  // informational findings, never asserted

    static CheckReport inequality(std::string name, std::string instance, double lhs,
                                  double rhs, double tol = 1e-9) {
        CheckReport r;
        r.name = std::move(name);
        r.instance = std::move(instance);
        r.lhs = lhs;
        r.rhs = rhs;
        r.slack = rhs - lhs;
        r.pass = r.slack >= -tol;
        return r;
    }

    static CheckReport equality(std::string name, std::string instance, double lhs,
                                double rhs, double tol = 1e-9) {
        CheckReport r;
        r.name = std::move(name);
        r.instance = std::move(instance);
        r.lhs = lhs;
        r.rhs = rhs;
        r.slack = -std::abs(lhs - rhs);
        r.pass = r.slack >= -tol;
        return r;
    }

    CheckReport& also_require(bool ok) {
        pass = pass && ok;
        return *this;
    }
};

// JSON-lines record: {name, instance, lhs, rhs, slack, pass, seed}.
std::string to_json_line(const CheckReport& r);

// Fixed 12-significant-digit rendering used for all numeric output.
std::string fmt12(double x);

}  // namespace avb
