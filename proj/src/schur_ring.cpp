#include "schurlab/schur_ring.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace schurlab {

namespace {

// Counts LR skew tableaux of shape pi/mu with content nu: fillings weakly
// increasing along rows, strictly increasing down columns, whose reverse
// reading word (right-to-left, top-to-bottom) is a lattice word.
Int count_lr_tableaux(const Partition& pi, const Partition& mu, const Partition& nu) {
    if (!pi.contains(mu)) return 0;
    if (pi.weight() != mu.weight() + nu.weight()) return 0;
    if (nu.weight() == 0) return pi == mu ? Int(1) : Int(0);
    if (!pi.contains(nu)) return 0;

    const int rows = pi.length();
    const int values = nu.length();
    struct Cell { int r, c; };
    std::vector<Cell> cells; // reverse reading order
    for (int r = 0; r < rows; ++r)
        for (int c = pi.parts()[r] - 1; c >= mu.part(r + 1); --c)
            cells.push_back({r, c});

    std::vector<std::vector<int>> fill(rows);
    for (int r = 0; r < rows; ++r) fill[r].assign(pi.parts()[r], 0);
    std::vector<int> remaining(nu.parts().begin(), nu.parts().end());
    std::vector<int> prefix(values + 1, 0); // prefix[v]: count of v so far

    Int total = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        auto [r, c] = cells[idx];
        int ub = values;
        if (c + 1 < pi.parts()[r]) ub = std::min(ub, fill[r][c + 1]);
        int lb = 1;
        if (r > 0 && c < pi.part(r) && c >= mu.part(r)) lb = fill[r - 1][c] + 1;
        for (int v = lb; v <= ub; ++v) {
            if (remaining[v - 1] == 0) continue;
            if (v >= 2 && prefix[v] + 1 > prefix[v - 1]) continue;
            fill[r][c] = v;
            ++prefix[v];
            --remaining[v - 1];
            rec(idx + 1);
            ++remaining[v - 1];
            --prefix[v];
            fill[r][c] = 0;
        }
    };
    rec(0);
    return total;
}

std::shared_mutex g_lr_mutex;
std::map<std::pair<Partition, Partition>, SymFunc> g_lr_cache;

} // namespace

Int lr_coefficient(const Partition& pi, const Partition& mu, const Partition& nu) {
    return count_lr_tableaux(pi, mu, nu);
}

SymFunc schur_product(const Partition& mu, const Partition& nu, int max_degree) {
    check_cap(mu.weight() + nu.weight(), max_degree, "schur_product");
    std::pair<Partition, Partition> key{mu, nu};
    if (nu < mu) std::swap(key.first, key.second); // product is symmetric
    {
        std::shared_lock lock(g_lr_mutex);
        auto it = g_lr_cache.find(key);
        if (it != g_lr_cache.end()) return it->second;
    }
    SymFunc out;
    for (auto& pi : superpartitions_of(key.first, mu.weight() + nu.weight())) {
        Int c = count_lr_tableaux(pi, key.first, key.second);
        if (c != 0) out.add_term(pi, c);
    }
    {
        std::unique_lock lock(g_lr_mutex);
        g_lr_cache.emplace(std::move(key), out);
    }
    return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g, int max_degree) {
    SymFunc out;
    for (auto& [mu, a] : f.coeffs())
        for (auto& [nu, b] : g.coeffs()) {
            SymFunc prod = schur_product(mu, nu, max_degree);
            for (auto& [pi, c] : prod.coeffs()) out.add_term(pi, a * b * c);
        }
    return out;
}

namespace {

// Enumerate partitions mu >= pi obtained by adding a horizontal p-strip
// (interlacing condition mu_1 >= pi_1 >= mu_2 >= pi_2 >= ...).
void horizontal_strips(const Partition& pi, int p, std::vector<Partition>& out) {
    std::vector<int> mu;
    int rows = pi.length() + 1;
    std::function<void(int, int)> rec = [&](int row, int left) {
        if (row > rows) {
            if (left == 0) out.push_back(Partition(mu));
            return;
        }
        int base = pi.part(row);
        int hi = row == 1 ? base + left : std::min(pi.part(row - 1), base + left);
        // Remaining rows can absorb at most what interlacing allows; prune
        // by requiring we can still place `left` boxes.
        for (int v = hi; v >= base; --v) {
            int used = v - base;
            if (used > left) continue;
            if (v == 0) {
                if (left - used == 0) out.push_back(Partition(mu));
                continue;
            }
            mu.push_back(v);
            rec(row + 1, left - used);
            mu.pop_back();
        }
    };
    rec(1, p);
}

} // namespace

SymFunc pieri_h(int p, const Partition& pi, int max_degree) {
    if (p < 1) throw PreconditionError("pieri_h: p must be positive");
    check_cap(pi.weight() + p, max_degree, "pieri_h");
    std::vector<Partition> mus;
    horizontal_strips(pi, p, mus);
    SymFunc out;
    for (auto& mu : mus) out.add_term(mu, 1);
    return out;
}

SymFunc pieri_e(int p, const Partition& pi, int max_degree) {
    if (p < 1) throw PreconditionError("pieri_e: p must be positive");
    check_cap(pi.weight() + p, max_degree, "pieri_e");
    std::vector<Partition> mus;
    horizontal_strips(pi.conjugate(), p, mus);
    SymFunc out;
    for (auto& mu : mus) out.add_term(mu.conjugate(), 1);
    return out;
}

SymFunc from_generator_monomial(const GenWord& word, int max_degree) {
    long total = 0;
    for (auto& f : word) {
        if (f.index < 0) throw PreconditionError("generator index must be nonnegative");
        total += f.index;
    }
    check_cap(total, max_degree, "from_generator_monomial");
    SymFunc acc = SymFunc::one();
    for (auto& f : word) {
        if (f.index == 0) continue; // e_0 = h_0 = 1
        SymFunc next;
        for (auto& [pi, c] : acc.coeffs()) {
            SymFunc step = f.basis == GenBasis::h ? pieri_h(f.index, pi, max_degree)
                                                  : pieri_e(f.index, pi, max_degree);
            for (auto& [mu, d] : step.coeffs()) next.add_term(mu, c * d);
        }
        acc = std::move(next);
    }
    return acc;
}

std::vector<SignedWord> jacobi_trudi(const Partition& pi, GenBasis basis) {
    Partition rows = basis == GenBasis::h ? pi : pi.conjugate();
    const int n = rows.length();
    std::map<GenWord, Int> acc;
    std::vector<bool> used(n + 1, false);
    GenWord word;
    // Permutation expansion of det |g_{rows_i + j - i}|; negative indices
    // kill a term, index 0 is the unit.
    std::function<void(int, int)> rec = [&](int i, int sign) {
        if (i > n) {
            GenWord sorted = word;
            std::sort(sorted.begin(), sorted.end());
            acc[sorted] += sign;
            return;
        }
        for (int j = 1; j <= n; ++j) {
            if (used[j]) continue;
            int idx = rows.part(i) + j - i;
            if (idx < 0) continue;
            used[j] = true;
            // Inversions added by assigning column j at row i.
            int flips = 0;
            for (int k = j + 1; k <= n; ++k)
                if (used[k]) ++flips;
            int s = flips % 2 == 0 ? sign : -sign;
            if (idx == 0) {
                rec(i + 1, s);
            } else {
                word.push_back({basis, idx});
                rec(i + 1, s);
                word.pop_back();
            }
            used[j] = false;
        }
    };
    rec(1, 1);
    std::vector<SignedWord> out;
    for (auto& [w, c] : acc)
        if (c != 0) out.push_back({c, w});
    return out;
}

TensorSymFunc coproduct(const SymFunc& f, int max_degree) {
    TensorSymFunc out;
    for (auto& [pi, a] : f.coeffs()) {
        check_cap(pi.weight(), max_degree, "coproduct");
        for (int m = 0; m <= pi.weight(); ++m) {
            for (auto& mu : partitions_of(m)) {
                if (!pi.contains(mu)) continue;
                for (auto& nu : partitions_of(pi.weight() - m)) {
                    Int c = count_lr_tableaux(pi, mu, nu);
                    if (c != 0) out.add_term(mu, nu, a * c);
                }
            }
        }
    }
    return out;
}

SymFunc omega(const SymFunc& f) {
    SymFunc out;
    for (auto& [pi, c] : f.coeffs()) out.add_term(pi.conjugate(), c);
    return out;
}

SymFunc antipode(const SymFunc& f) {
    SymFunc out;
    for (auto& [pi, c] : f.coeffs())
        out.add_term(pi.conjugate(), pi.weight() % 2 == 0 ? c : -c);
    return out;
}

SymFunc reduce_mod_ideal(const SymFunc& f, const Partition& lambda) {
    SymFunc out;
    for (auto& [pi, c] : f.coeffs())
        if (!pi.contains(lambda)) out.add_term(pi, c);
    return out;
}

namespace {

// Adds c * (monomial expansion of s_pi in num_vars variables) via
// semistandard tableau enumeration; independent of the LR machinery.
void expand_schur(const Partition& pi, const Int& c, int num_vars, MultiPoly& out) {
    if (pi.length() > num_vars) return;
    if (pi.empty()) {
        out += MultiPoly::constant(c);
        return;
    }
    const int rows = pi.length();
    std::vector<std::vector<int>> fill(rows);
    for (int r = 0; r < rows; ++r) fill[r].assign(pi.parts()[r], 0);
    Exponents content(num_vars, 0);
    std::function<void(int, int)> rec = [&](int r, int col) {
        if (r == rows) {
            out.add_term(content, c);
            return;
        }
        if (col == pi.parts()[r]) {
            rec(r + 1, 0);
            return;
        }
        int lb = 1;
        if (col > 0) lb = std::max(lb, fill[r][col - 1]);
        if (r > 0) lb = std::max(lb, fill[r - 1][col] + 1);
        for (int v = lb; v <= num_vars; ++v) {
            fill[r][col] = v;
            ++content[v - 1];
            rec(r, col + 1);
            --content[v - 1];
        }
    };
    rec(0, 0);
}

} // namespace

MultiPoly monomial_expansion_oracle(const SymFunc& f, int num_vars) {
    MultiPoly out;
    for (auto& [pi, c] : f.coeffs()) expand_schur(pi, c, num_vars, out);
    return out;
}

TensorSymFunc tensor_multiply(const TensorSymFunc& a, const TensorSymFunc& b,
                              int max_degree) {
    TensorSymFunc out;
    for (auto& [ka, ca] : a.coeffs())
        for (auto& [kb, cb] : b.coeffs()) {
            SymFunc left = schur_product(ka.first, kb.first, max_degree);
            SymFunc right = schur_product(ka.second, kb.second, max_degree);
            for (auto& [pl, cl] : left.coeffs())
                for (auto& [pr, cr] : right.coeffs())
                    out.add_term(pl, pr, ca * cb * cl * cr);
        }
    return out;
}

} // namespace schurlab
