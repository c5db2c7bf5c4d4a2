#ifndef INDSAT_EXEC_HH
#define INDSAT_EXEC_HH

namespace indsat
{
    /// Execution policy for the parallel kernels. jobs <= 1 selects the serial
    /// reference path; larger values run the OpenMP path with that many threads.
    /// Both paths return identical results.
    struct Exec
    {
        int jobs = 1;

        auto parallel() const -> bool { return jobs > 1; }
    };

    auto serial() -> Exec;

    /// OpenMP-aware thread count of the machine (1 when built without OpenMP).
    auto hardware_jobs() -> int;
}

#endif
