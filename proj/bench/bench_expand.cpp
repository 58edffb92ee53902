// Benchmark: parallel kernels vs their serial reference implementations.
//   - coordinate expansion of word sums (expand vs expand_serial)
//   - exponent-derivative subset enumeration (falls back to one thread when
//     built without OpenMP)
// Prints wall-clock times and the speedup; always cross-checks equality.

#include <chrono>
#include <cstdio>
#include <random>

#include "ncq/algebra.hpp"
#include "ncq/nc_poly.hpp"
#include "ncq/taylor_ode.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ncq;

namespace {

double now() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

NcPoly random_words(std::mt19937_64& rng, const AlgebraSpec& alg, int n_words,
                    int word_len) {
    std::uniform_int_distribution<int> coord(-3, 3), var(0, 2);
    NcPoly p = NcPoly::zero();
    for (int w = 0; w < n_words; ++w) {
        auto rand_const = [&] {
            std::vector<Rational> c(alg.dim());
            for (auto& v : c) v = Rational(coord(rng));
            return Element(std::move(c));
        };
        NcWord word;
        word.constants.push_back(rand_const());
        for (int t = 0; t < word_len; ++t) {
            int v = var(rng);
            word.vars.push_back(v == 0 ? kVarX : var_h(v));
            word.constants.push_back(rand_const());
        }
        p.words.push_back(std::move(word));
    }
    return p;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; comparing identical serial paths\n");
#endif

    AlgebraSpec H = AlgebraSpec::quaternions();
    std::mt19937_64 rng(1);

    std::printf("\n-- coordinate expansion (quaternions) --\n");
    for (int n_words : {32, 128, 512}) {
        NcPoly p = random_words(rng, H, n_words, 6);
        double t0 = now();
        CoordinateForm par = expand(p, H);
        double t1 = now();
        CoordinateForm ser = expand_serial(p, H);
        double t2 = now();
        bool same = par == ser;
        std::printf(
            "words=%4d  parallel %8.4fs  serial %8.4fs  speedup %5.2fx  "
            "equal: %s\n",
            n_words, t1 - t0, t2 - t1, (t2 - t1) / (t1 - t0),
            same ? "yes" : "NO");
        if (!same) return 1;
    }

    std::printf("\n-- exponent derivative subset enumeration --\n");
    for (int n : {12, 16, 18}) {
        double t0 = now();
        NcPoly dn = exponent_derivative(n, H);
        double t1 = now();
        std::printf("order=%2d  2^n = %7zu words  %8.4fs\n", n,
                    dn.words.size(), t1 - t0);
        if (dn.words.size() != (size_t{1} << n)) return 1;
    }
    return 0;
}
