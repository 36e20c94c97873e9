#pragma once

#include <stdexcept>
#include <string>

namespace ptaa {

// eigensolver did not converge; [block_lo, block_hi] is the unreduced block (0-based)
struct solver_error : std::runtime_error {
    int block_lo;
    int block_hi;
    solver_error(const std::string& msg, int lo, int hi)
        : std::runtime_error(msg), block_lo(lo), block_hi(hi) {}
};

// spectral post-processing failed (ambiguous conjugate pairing, bad pair structure)
struct analysis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// amplitude blow-up during propagation; last_valid_time is the latest fully recorded t
struct overflow_error : std::runtime_error {
    double last_valid_time;
    overflow_error(const std::string& msg, double t)
        : std::runtime_error(msg), last_valid_time(t) {}
};

// characteristic-polynomial recurrence left the representable range; site is 1-based
struct evaluation_error : std::runtime_error {
    int site;
    evaluation_error(const std::string& msg, int site_index)
        : std::runtime_error(msg), site(site_index) {}
};

// output file could not be opened or written
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ptaa
