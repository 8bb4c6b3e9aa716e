#pragma once

#include <string>
#include <vector>

namespace gono::verify {

enum class Status { pass, fail, skipped };

struct InstanceRecord {
    std::string instance;                         // parameter point, e.g. "strip n=4"
    std::string expected;
    std::string actual;
    bool ok = false;
};

struct VerificationReport {
    std::string check_id;
    std::string parameter_range;
    Status status = Status::skipped;
    std::vector<InstanceRecord> details;          // sorted by parameters
    std::vector<std::string> notes;
    double elapsed_seconds = 0.0;                 // informational; never rendered
};

struct CheckParams {
    int n_max = -1;                               // -1: per-check default, inclusive
};

// Registered check ids in canonical order.
const std::vector<std::string>& check_ids();
bool is_registered(const std::string& check_id);
std::string describe_check(const std::string& check_id);

// Runs one check. Throws precondition_error for unknown ids, limit_error when
// params exceed caps. Reports are deterministic: byte-identical renderings for
// identical parameters.
VerificationReport run_check(const std::string& check_id, const CheckParams& params = {});

std::string render_text(const std::vector<VerificationReport>& reports);
std::string render_json(const std::vector<VerificationReport>& reports);
std::string render_csv(const std::vector<VerificationReport>& reports);

} // namespace gono::verify
