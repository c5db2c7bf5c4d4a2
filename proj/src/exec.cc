#include <indsat/exec.hh>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace indsat
{
    auto serial() -> Exec
    {
        return Exec{1};
    }

    auto hardware_jobs() -> int
    {
#ifdef _OPENMP
        return omp_get_num_procs();
#else
        return 1;
#endif
    }
}
