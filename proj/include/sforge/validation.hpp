#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sforge {

/* One failed axiom instance, with the witnessing indices. */
struct Violation {
    std::string axiom;
    std::vector<std::int64_t> where;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    void add(std::string axiom, std::vector<std::int64_t> where, std::string detail = {}) {
        violations.push_back({std::move(axiom), std::move(where), std::move(detail)});
    }
};

/* Malformed container dimensions; the message names the offending field. */
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Inputs that parse but violate a precondition of the requested operation. */
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* A resource guard tripped; rerun with a larger bound or guards disabled. */
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}
