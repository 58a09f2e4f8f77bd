#include "tc4/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace tc4 {

GeneratorTuple GeneratorTuple::from(const std::array<Int, 4>& input) {
    for (Int v : input)
        if (v <= 0) throw InvalidInput("generators must be positive");
    std::array<int, 4> idx{0, 1, 2, 3};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return input[a] < input[b]; });

    GeneratorTuple g;
    for (int k = 0; k < 4; ++k) {
        g.gens[k] = input[idx[k]];
        g.original_order[idx[k]] = k;
    }
    for (int k = 0; k + 1 < 4; ++k)
        if (g.gens[k] == g.gens[k + 1]) throw InvalidInput("duplicate generators");

    Int d = g.gens[0];
    for (int k = 1; k < 4; ++k) d = std::gcd(d, g.gens[k]);
    if (d != 1) throw InvalidInput("gcd of generators must be 1");

    for (int k = 0; k < 4; ++k)
        g.box_bounds[k] = g.gens[0] / std::gcd(g.gens[0], g.gens[k]);
    return g;
}

Int default_table_limit(const GeneratorTuple& g) {
    Int limit = g.gens[0];
    for (int i = 1; i < 4; ++i)
        limit = checked_add(limit, checked_mul(g.box_bounds[i] - 1, g.gens[i]));
    return limit;
}

MembershipTables build_tables(const GeneratorTuple& g, Int limit, Int max_entries) {
    if (limit < 0) throw InvalidInput("negative table limit");
    if (checked_add(limit, 1) > max_entries)
        throw InvalidInput("membership table would exceed the memory cap (" +
                           std::to_string(limit + 1) + " > " + std::to_string(max_entries) +
                           " entries)");
    MembershipTables t;
    t.limit = limit;
    t.max_len.assign(static_cast<std::size_t>(limit) + 1, -1);
    t.max_len[0] = 0;
    for (Int m = 1; m <= limit; ++m) {
        int32_t best = -1;
        for (int i = 0; i < 4; ++i) {
            Int n = g.gens[i];
            if (m < n) break;  // gens sorted increasing
            int32_t prev = t.max_len[static_cast<std::size_t>(m - n)];
            if (prev >= 0 && prev + 1 > best) best = prev + 1;
        }
        t.max_len[static_cast<std::size_t>(m)] = best;
    }
    return t;
}

std::vector<Int> apery_set(const GeneratorTuple& g, const MembershipTables& t) {
    const Int n1 = g.gens[0];
    std::vector<Int> ap;
    ap.reserve(static_cast<std::size_t>(n1));
    std::vector<char> seen(static_cast<std::size_t>(n1), 0);
    Int found = 0;
    for (Int m = 0; m <= t.limit && found < n1; ++m) {
        if (!t.in_s(m)) continue;
        Int r = m % n1;
        if (seen[static_cast<std::size_t>(r)]) continue;
        seen[static_cast<std::size_t>(r)] = 1;
        ap.push_back(m);
        ++found;
    }
    if (found < n1)
        throw InvalidInput("table limit too small to certify the Apery set; extend the limit");
    std::sort(ap.begin(), ap.end());
    return ap;
}

Int frobenius(const GeneratorTuple& g, const MembershipTables& t) {
    return apery_set(g, t).back() - g.gens[0];
}

bool is_symmetric(const GeneratorTuple& g, const MembershipTables& t) {
    Int f = frobenius(g, t);
    if (f < 0) return true;  // S = N, vacuously symmetric
    for (Int z = 0; z <= f; ++z)
        if (t.in_s(z) == t.in_s(f - z)) return false;
    return true;
}

namespace {

void enumerate_factorizations(const GeneratorTuple& g, Int m, int i, Exponents& cur,
                              std::vector<Exponents>& out, std::size_t cap) {
    if (i == 3) {
        if (m % g.gens[3] == 0) {
            cur.e[3] = m / g.gens[3];
            if (out.size() >= cap) throw BudgetExceeded("factorization count cap exceeded");
            out.push_back(cur);
        }
        return;
    }
    for (Int k = 0; k * g.gens[i] <= m; ++k) {
        cur.e[i] = k;
        enumerate_factorizations(g, m - k * g.gens[i], i + 1, cur, out, cap);
    }
    cur.e[i] = 0;
}

}  // namespace

std::vector<Exponents> factorizations(const GeneratorTuple& g, Int m, std::size_t cap) {
    if (m < 0) throw InvalidInput("factorizations of a negative value");
    std::vector<Exponents> out;
    Exponents cur;
    enumerate_factorizations(g, m, 0, cur, out, cap);
    std::sort(out.begin(), out.end());
    return out;
}

SubsetSemigroup::SubsetSemigroup(std::vector<Int> gens, Int max_entries) {
    if (gens.empty()) throw InvalidInput("empty generator subset");
    for (Int v : gens)
        if (v <= 0) throw InvalidInput("generators must be positive");
    gcd_ = 0;
    for (Int v : gens) gcd_ = std::gcd(gcd_, v);
    std::vector<Int> norm;
    norm.reserve(gens.size());
    for (Int v : gens) norm.push_back(v / gcd_);
    std::sort(norm.begin(), norm.end());
    const Int run_needed = norm.front();

    Int limit = 4 * norm.back() + 1;
    for (;;) {
        if (limit + 1 > max_entries)
            throw InvalidInput("subset-semigroup table exceeds the memory cap");
        in_.assign(static_cast<std::size_t>(limit) + 1, 0);
        in_[0] = 1;
        for (Int m = 1; m <= limit; ++m)
            for (Int n : norm) {
                if (m < n) break;
                if (in_[static_cast<std::size_t>(m - n)]) {
                    in_[static_cast<std::size_t>(m)] = 1;
                    break;
                }
            }
        // a run of norm.front() consecutive members certifies the conductor
        Int run = 0;
        conductor_ = -1;
        for (Int v = 0; v <= limit; ++v) {
            run = in_[static_cast<std::size_t>(v)] ? run + 1 : 0;
            if (run >= run_needed) {
                conductor_ = v - run + 1;
                break;
            }
        }
        if (conductor_ >= 0) return;
        limit = checked_mul(limit, 2);
    }
}

bool SubsetSemigroup::contains(Int v) const {
    if (v < 0) return false;
    if (v % gcd_ != 0) return false;
    Int w = v / gcd_;
    if (w >= conductor_) return true;
    return in_[static_cast<std::size_t>(w)] != 0;
}

}  // namespace tc4
