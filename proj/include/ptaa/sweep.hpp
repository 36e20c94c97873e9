#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ptaa/lattice.hpp"

namespace ptaa {

inline constexpr const char* sweep_schema = "ptaa-sweep-1";

enum class sweep_kind : int {
    threshold_vs_beta,
    indices_vs_beta,
    scaling_vs_n,
    boundary_grid,
};

struct sweep_job {
    sweep_kind kind = sweep_kind::threshold_vs_beta;
    lattice_config lat;
    double v0 = 0.0;
    double gamma_max = 10.0;

    // threshold-vs-beta / indices-vs-beta: beta_k = k/denominator for k = k_lo..k_hi
    long long denominator = 0;
    long long k_lo = 1;
    long long k_hi = 0;

    // scaling-vs-N
    std::vector<int> n_list;
    double beta = 0.0;

    // boundary-grid
    double beta1 = 0.0;
    double beta2 = 0.0;
    int resolution = 0;
    double r_max = 0.0;

    std::string out_path;
    int workers = 1;

    // test hook: abort (like an interrupt) after this many fresh evaluations; <0 disables
    long long interrupt_after = -1;
};

// thrown by the interrupt_after test hook; the output file keeps its appended records
struct sweep_interrupted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct sweep_result {
    long long evaluated = 0;  // tuples computed this run
    long long resumed = 0;    // tuples already present and skipped
    long long errored = 0;    // tuples recorded as error records (this run)
    long long discarded = 0;  // malformed lines dropped from a previous file
    std::vector<std::string> lines; // final records in canonical order
};

// evaluates missing tuples, appends one JSON line per tuple as each completes,
// then rewrites the file in canonical grid order
sweep_result run_sweep(const sweep_job& job);

// grid enumeration order defines the canonical record order
long long sweep_size(const sweep_job& job);

// canonical key of tuple #index in grid order
std::string sweep_key(const sweep_job& job, long long index);

// index-distributed loop used by every data-parallel kernel; workers <= 1 runs the
// serial reference path, otherwise iterations spread across an OpenMP team
void parallel_for(long long count, int workers, const std::function<void(long long)>& body);

// thread-pool width used when a caller does not choose one
int default_workers();

} // namespace ptaa
