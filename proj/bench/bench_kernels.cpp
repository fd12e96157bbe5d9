// Timing comparison of the parallel kernels against their serial references:
// row reduction over the rationals and differential matrix assembly.  Every
// timed pair is also checked for equal results.
#include <chrono>
#include <cstdio>
#include <random>

#include "cdga/dga.hpp"
#include "cdga/gca.hpp"
#include "cdga/linalg.hpp"
#include "cdga/quotient.hpp"

using namespace cdga;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

QMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_int_distribution<int> zero(0, 9);
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (zero(rng) >= 6) {
                Rational q(num(rng), den(rng));
                q.canonicalize();
                m.at(i, j) = q;
            }
    return m;
}

bool bench_rref(std::size_t rows, std::size_t cols, std::mt19937& rng) {
    QMatrix m = random_matrix(rows, cols, rng);

    auto t0 = Clock::now();
    RrefResult serial = rref_serial(m);
    double serial_ms = ms_since(t0);

    t0 = Clock::now();
    RrefResult parallel = rref(m);
    double parallel_ms = ms_since(t0);

    bool ok = serial.mat == parallel.mat && serial.pivots == parallel.pivots;
    std::printf("rref %4zux%-4zu  serial %9.2f ms  parallel %9.2f ms  x%.2f  %s\n",
                rows, cols, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                ok ? "match" : "MISMATCH");
    return ok;
}

// free graded-commutative algebra on ten generators, half of them closed
DGA assembly_case(int bound) {
    std::vector<std::pair<std::string, int>> gens;
    for (int i = 1; i <= 10; ++i)
        gens.emplace_back("e" + std::to_string(i), 1);
    auto table = GeneratorTable::make(gens);
    auto gen = [&](std::size_t i) { return Element::generator(table, i); };
    std::map<std::string, Element> images = {
        {"e6", gen(0) * gen(1)},
        {"e7", gen(0) * gen(2) - gen(1) * gen(3)},
        {"e8", gen(2) * gen(3)},
        {"e9", gen(0) * gen(4) + gen(1) * gen(2)},
        {"e10", gen(3) * gen(4)},
    };
    return DGA::build(QuotientAlgebra::build(table, {}, bound), images);
}

// one column at a time, no threading, same canonical bases
QMatrix assemble_serial(const DGA& a, int k) {
    const auto& src = a.algebra().degree_basis(k);
    const auto& dst = a.algebra().degree_basis(k + 1);
    QMatrix m(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        Element img = a.d(Element::term(a.table(), src[j], 1));
        QVector col = element_coordinates(img, dst);
        for (std::size_t i = 0; i < dst.size(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

bool bench_assembly(int k) {
    const int bound = k + 2;
    DGA serial_dga = assembly_case(bound);
    DGA parallel_dga = assembly_case(bound);

    auto t0 = Clock::now();
    QMatrix serial = assemble_serial(serial_dga, k);
    double serial_ms = ms_since(t0);

    t0 = Clock::now();
    const QMatrix& parallel = parallel_dga.differential_matrix(k);
    double parallel_ms = ms_since(t0);

    bool ok = serial == parallel;
    std::printf("assembly d: degree %d, %zu columns  serial %9.2f ms  parallel %9.2f ms  x%.2f  %s\n",
                k, serial.cols, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                ok ? "match" : "MISMATCH");
    return ok;
}

}  // namespace

int main() {
    std::mt19937 rng(7);
    bool ok = true;
    ok &= bench_rref(60, 80, rng);
    ok &= bench_rref(120, 160, rng);
    ok &= bench_rref(200, 240, rng);
    ok &= bench_assembly(3);
    ok &= bench_assembly(4);
    ok &= bench_assembly(5);
    return ok ? 0 : 1;
}
