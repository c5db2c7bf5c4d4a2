// Serial reference versus OpenMP path for the two hot kernels.

#include <indsat/constructions.hh>
#include <indsat/exec.hh>
#include <indsat/patterns.hh>
#include <indsat/saturation.hh>
#include <indsat/search.hh>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>

using namespace indsat;

namespace
{
    auto time_it(const std::function<bool()> & f, int reps) -> std::pair<double, bool>
    {
        bool ok = true;
        auto start = std::chrono::steady_clock::now();
        for (int i = 0; i < reps; ++i)
            ok = f() && ok;
        std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
        return {d.count() / reps, ok};
    }

    auto row(const std::string & name, const std::function<bool(Exec)> & f, int jobs, int reps) -> void
    {
        auto [serial_s, a] = time_it([&] { return f(Exec{1}); }, reps);
        auto [parallel_s, b] = time_it([&] { return f(Exec{jobs}); }, reps);
        std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(4)
                  << std::setw(10) << serial_s << std::setw(10) << parallel_s << std::setw(8)
                  << std::setprecision(2) << serial_s / parallel_s << (a == b ? "" : "  MISMATCH") << '\n';
    }
}

auto main(int argc, char * argv[]) -> int
{
    int jobs = argc > 1 ? std::atoi(argv[1]) : std::max(2, hardware_jobs());
    std::cout << "jobs=" << jobs << " (hardware " << hardware_jobs() << ")\n";
    std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial" << std::setw(10)
              << "parallel" << std::setw(8) << "ratio" << '\n';

    auto c4 = c4_minimal(120);
    row("verify c4_minimal(120) vs C4", [&](Exec e) { return verify_graph_saturated(c4, cycle(4), e).saturated(); },
        jobs, 3);
    auto g27 = cycles_construction(27, 4);
    row("verify cycles(27,4) vs C7", [&](Exec e) { return verify_graph_saturated(g27, cycle(7), e).saturated(); },
        jobs, 3);
    row("search_indsat(6, claw, 3)", [](Exec e) { return search_indsat(6, claw(), 3, e).value == std::size_t{3}; },
        jobs, 1);
    row("search_sis(7, paw, 21)", [](Exec e) { return search_sis(7, paw(), 21, e).value == std::size_t{15}; },
        jobs, 1);
    return 0;
}
