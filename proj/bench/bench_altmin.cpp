// Wall-clock comparison of the OpenMP alt_min against the serial reference.
//
//   bench_altmin [repeats]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "altermatic/altermatic.hpp"
#include "altermatic/kneser.hpp"

using namespace altermatic;

namespace {

struct Case {
    std::string name;
    Hypergraph h;
    int k;
};

template <typename F>
double time_ms(int repeats, F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i)
        f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() / repeats;
}

} // namespace

int main(int argc, char** argv)
{
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::vector<Case> cases{
        {"KG(7,2) k=1", complete_uniform(7, 2), 1},
        {"KG(7,3) k=1", complete_uniform(7, 3), 1},
        {"SG(7,2) k=2", schrijver_hypergraph(7, 2), 2},
        {"random n=7 |E|=16 k=2", random_hypergraph(7, 16, {1, 4}, 42), 2},
        {"random n=8 |E|=20 k=1", random_hypergraph(8, 20, {2, 4}, 7), 1},
    };

    std::cout << "threads: " << threads << ", repeats: " << repeats << "\n";
    std::cout << std::left << std::setw(26) << "case" << std::right << std::setw(12) << "serial ms" << std::setw(12)
              << "openmp ms" << std::setw(10) << "speedup" << std::setw(8) << "alt" << "\n";
    for (const auto& c : cases) {
        AltReport serial, parallel;
        const double ts = time_ms(repeats, [&] { serial = alt_min_serial(c.h, c.k); });
        const double tp = time_ms(repeats, [&] { parallel = alt_min(c.h, c.k); });
        if (serial.alt_value != parallel.alt_value || serial.sigma != parallel.sigma) {
            std::cerr << c.name << ": serial and OpenMP results differ\n";
            return 1;
        }
        std::cout << std::left << std::setw(26) << c.name << std::right << std::fixed << std::setprecision(2)
                  << std::setw(12) << ts << std::setw(12) << tp << std::setw(10) << ts / tp << std::setw(8)
                  << serial.alt_value << "\n";
    }
    return 0;
}
