// Timing comparison of the OpenMP kernels against their serial references.
#include <chrono>
#include <cstdio>

#include "flagbott/cohomology.hpp"
#include "flagbott/lr.hpp"
#include "flagbott/parallel.hpp"

using namespace flagbott;

namespace {

template <typename Fn>
double time_ms(Fn&& fn, int repeats) {
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) fn();
    auto elapsed = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double, std::milli>(elapsed).count() / repeats;
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-36s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms,
                equal ? "results equal" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", max_threads());

    {
        GeneralizedPartition u({4, 3, 2, 1, 0, 0});
        Partition v{5, 4, 3, 2};
        bool equal = lr_product_serial(u, v) == lr_product(u, v);
        double s = time_ms([&] { lr_product_serial(u, v); }, 3);
        double p = time_ms([&] { lr_product(u, v); }, 3);
        report("lr_product, 6 rows x 14 boxes", s, p, equal);
    }

    {
        const int r = 4, d = 10;
        // distinct determinant twists defeat the memo; the work is identical
        auto twisted = [&](int m) {
            return GeneralizedPartition::extend(Partition{4, 3, 2, 1}, r).shifted(m);
        };
        bool equal = grassmann_cohomology_serial(r, d, twisted(0)) ==
                     grassmann_cohomology(r, d, twisted(0));
        int serial_twist = 1, parallel_twist = 100;
        double s = time_ms([&] { grassmann_cohomology_serial(r, d, twisted(serial_twist++)); }, 3);
        double p = time_ms([&] { grassmann_cohomology(r, d, twisted(parallel_twist++)); }, 3);
        report("grassmann table, r=4 d=10 v=4,3,2,1", s, p, equal);
    }
    return 0;
}
