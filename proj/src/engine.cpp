#include "islands/engine.hpp"

#include <thread>

namespace islands {

namespace {

void accumulate_range(const EmbeddedGraph& eg, VertexSubset begin, VertexSubset end,
                      std::vector<unsigned long long>& d) {
    FaceScratch scratch(eg);
    for (VertexSubset s = begin; s < end; ++s)
        d[static_cast<size_t>(subset_size(s)) - 1] +=
            static_cast<unsigned long long>(scratch.face_count(s));
}

}  // namespace

CountVector island_counts(const EmbeddedGraph& eg, int threads) {
    const int n = eg.marked_count();
    CountVector out;
    out.d.assign(static_cast<size_t>(n), 0);
    if (n == 0) return out;

    const VertexSubset end = VertexSubset{1} << n;
    threads = std::max(1, threads);
    if (threads == 1 || end < 1024) {
        accumulate_range(eg, 1, end, out.d);
        return out;
    }

    threads = std::min<long long>(threads, 256);
    std::vector<std::vector<unsigned long long>> partial(
        static_cast<size_t>(threads), std::vector<unsigned long long>(static_cast<size_t>(n), 0));
    std::vector<std::thread> workers;
    VertexSubset chunk = (end - 1) / static_cast<VertexSubset>(threads) + 1;
    for (int t = 0; t < threads; ++t) {
        VertexSubset lo = 1 + chunk * static_cast<VertexSubset>(t);
        VertexSubset hi = std::min<VertexSubset>(lo + chunk, end);
        if (lo >= hi) continue;
        workers.emplace_back([&eg, lo, hi, &part = partial[static_cast<size_t>(t)]] {
            accumulate_range(eg, lo, hi, part);
        });
    }
    for (auto& w : workers) w.join();
    for (const auto& part : partial)
        for (size_t i = 0; i < part.size(); ++i) out.d[i] += part[i];
    return out;
}

BetaPolynomials beta_polynomials(const CountVector& counts) {
    const int n = counts.length();
    std::vector<mpz_class> bar(n > 1 ? static_cast<size_t>(n - 1) : 0);
    for (int i = 1; i < n; ++i)
        bar[static_cast<size_t>(i - 1)] = mpz_class(static_cast<unsigned long>(counts.d[static_cast<size_t>(i - 1)]));
    BetaPolynomials out;
    out.bar = IntPoly(std::move(bar));
    out.total = out.bar;
    if (n >= 1)
        out.total = out.total +
                    IntPoly::monomial(mpz_class(static_cast<unsigned long>(counts.d[static_cast<size_t>(n - 1)])), n - 1);
    return out;
}

BetaPolynomials beta_polynomials(const EmbeddedGraph& eg, int threads) {
    return beta_polynomials(island_counts(eg, threads));
}

IntPoly beta_total(const EmbeddedGraph& eg, int threads) {
    return beta_polynomials(eg, threads).total;
}

CountVector colored_counts(const EmbeddedGraph& eg, const Coloring& col) {
    col.validate(eg);
    const int c = col.color_count;
    CountVector out;
    out.d.assign(static_cast<size_t>(c), 0);
    if (c == 0) return out;
    if (c > kMaxVertices) throw Error("too many colors for subset enumeration");

    std::vector<VertexSubset> color_slots(static_cast<size_t>(c), 0);
    for (int s = 0; s < eg.marked_count(); ++s) {
        int cc = col.color_of[static_cast<size_t>(eg.vertex_of_slot(s))];
        color_slots[static_cast<size_t>(cc)] |= subset_bit(s);
    }

    FaceScratch scratch(eg);
    const VertexSubset end = VertexSubset{1} << c;
    for (VertexSubset cs = 1; cs < end; ++cs) {
        VertexSubset slots = 0;
        VertexSubset rest = cs;
        while (rest) {
            int cc = __builtin_ctzll(rest);
            rest &= rest - 1;
            slots |= color_slots[static_cast<size_t>(cc)];
        }
        out.d[static_cast<size_t>(subset_size(cs)) - 1] +=
            static_cast<unsigned long long>(scratch.face_count(slots));
    }
    return out;
}

IntPoly beta_colored(const EmbeddedGraph& eg, const Coloring& col) {
    CountVector counts = colored_counts(eg, col);
    std::vector<mpz_class> coeffs(static_cast<size_t>(counts.length()));
    for (int i = 0; i < counts.length(); ++i)
        coeffs[static_cast<size_t>(i)] = mpz_class(static_cast<unsigned long>(counts.d[static_cast<size_t>(i)]));
    return IntPoly(std::move(coeffs));
}

}  // namespace islands
