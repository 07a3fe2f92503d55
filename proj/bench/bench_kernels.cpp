// Kernel benchmark: every scan and elimination routine that accepts an
// execution policy is run twice, once serial and once parallel, on the same
// inputs. The serial path is the reference; the table reports both timings
// and whether the results agree. Shapes are deterministic, so successive
// runs differ only in the measured times.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lt/liealg.hpp"

using namespace lt;

namespace {

using Clock = std::chrono::steady_clock;

double best_of(int reps, const std::function<void()>& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = Clock::now();
        body();
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (ms < best) best = ms;
    }
    return best;
}

struct Row {
    std::string name;
    std::string size;
    double serial_ms;
    double parallel_ms;
    bool agree;
};

// deterministic dense rational matrix; full rank for generic shapes
Mat rational_matrix(size_t rows, size_t cols) {
    Mat m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            long num = static_cast<long>((7 * i + 3 * j) % 19) - 9;
            long den = static_cast<long>((i + 2 * j) % 5) + 1;
            m.at(i, j) = Cyc(rat(num, den));
        }
    return m;
}

// deterministic matrix over Q(zeta_12)
Mat cyclotomic_matrix(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m.at(i, j) = Cyc::zeta(12, static_cast<long>((i * j) % 12)) +
                         Cyc(rat(static_cast<long>((i + j) % 7), 3));
    return m;
}

// rank-deficient product: kernel dimension cols - inner
Mat low_rank_matrix(size_t rows, size_t cols, size_t inner) {
    Mat a = rational_matrix(rows, inner), b = rational_matrix(inner, cols);
    Mat m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            Cyc s(0);
            for (size_t k = 0; k < inner; ++k) s = s + a.at(i, k) * b.at(k, j);
            m.at(i, j) = s;
        }
    return m;
}

template <typename F>
Row scan_row(const std::string& name, const std::string& size, int reps, F&& run) {
    auto serial = run(Exec::Serial);
    auto parallel = run(Exec::Parallel);
    Row row{name, size, 0, 0, serial == parallel};
    row.serial_ms = best_of(reps, [&] { run(Exec::Serial); });
    row.parallel_ms = best_of(reps, [&] { run(Exec::Parallel); });
    return row;
}

}  // namespace

int main() {
    std::vector<Row> rows;

    SimpleLieAlgebra d4 = build_simple_lie_algebra('D', 4);
    SimpleLieAlgebra e6 = build_simple_lie_algebra('E', 6);
    Mat triality = diagram_automorphism(d4, {2, 1, 3, 0});

    rows.push_back(scan_row("jacobi scan", "D4, 28^3 triples", 3,
                            [&](Exec e) { return jacobi_violation(d4, e); }));
    rows.push_back(scan_row("jacobi scan", "E6, 78^3 triples", 3,
                            [&](Exec e) { return jacobi_violation(e6, e); }));
    rows.push_back(scan_row("antisymmetry scan", "E6, 78^2 pairs", 3,
                            [&](Exec e) { return antisymmetry_violation(e6, e); }));
    rows.push_back(scan_row("form associativity", "E6, 78^3 triples", 3,
                            [&](Exec e) { return form_associativity_violation(e6, e); }));
    rows.push_back(scan_row("automorphism check", "D4 triality", 3,
                            [&](Exec e) { return automorphism_violation(d4, triality, e); }));

    {
        Mat m = rational_matrix(96, 128);
        rows.push_back(
            scan_row("rank, dense rational", "96 x 128", 3, [&](Exec e) { return rank(m, e); }));
    }
    {
        Mat m = cyclotomic_matrix(48);
        rows.push_back(scan_row("rank, cyclotomic Q(z12)", "48 x 48", 3,
                                [&](Exec e) { return rank(m, e); }));
    }
    {
        Mat m = low_rank_matrix(80, 110, 24);
        rows.push_back(scan_row("kernel, rank 24 product", "80 x 110", 3, [&](Exec e) {
            return kernel(m, e).size();
        }));
    }
    {
        Mat m = rational_matrix(96, 128);
        rows.push_back(scan_row("rref, dense rational", "96 x 128", 3, [&](Exec e) {
            Mat copy = m;
            return rref(copy, e).size();
        }));
    }

    std::printf("%-26s %-18s %10s %10s %9s %6s\n", "kernel", "shape", "serial", "parallel",
                "speedup", "agree");
    bool all_agree = true;
    for (const Row& r : rows) {
        double speedup = r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0;
        std::printf("%-26s %-18s %8.1fms %8.1fms %8.2fx %6s\n", r.name.c_str(), r.size.c_str(),
                    r.serial_ms, r.parallel_ms, speedup, r.agree ? "yes" : "NO");
        all_agree = all_agree && r.agree;
    }
    std::printf("\nthreads available: %d\n", max_threads());
    if (!all_agree) {
        std::printf("MISMATCH: parallel and serial results disagree\n");
        return 1;
    }
    return 0;
}
