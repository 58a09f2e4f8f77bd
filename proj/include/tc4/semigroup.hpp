#pragma once

#include "tc4/binomial.hpp"
#include "tc4/common.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace tc4 {

// Default cap on membership-table size (entries, 4 bytes each).
inline constexpr Int kDefaultMaxTableEntries = Int(1) << 28;

// The four semigroup generators, sorted strictly increasing, with the
// box bounds b_i = n1 / gcd(n1, n_i) used by the tangent-cone oracle.
struct GeneratorTuple {
    std::array<Int, 4> gens;            // n1 < n2 < n3 < n4
    std::array<int, 4> original_order;  // input position -> sorted position
    std::array<Int, 4> box_bounds;      // b_1 = 1, b_i = n1/gcd(n1,n_i)

    // Validates positivity, distinctness and gcd = 1; sorts and records the
    // permutation. Throws InvalidInput otherwise.
    static GeneratorTuple from(const std::array<Int, 4>& input);

    Int n(int i) const { return gens[i]; }

    Int s_degree(const Exponents& m) const {
        Int s = 0;
        for (int i = 0; i < 4; ++i) s = checked_add(s, checked_mul(m.e[i], gens[i]));
        return s;
    }
};

// Membership and maximal factorization length over 0..limit.
// max_len[m] = max sum of exponents over factorizations of m, or -1 if m is
// not in the semigroup.
struct MembershipTables {
    Int limit = 0;
    std::vector<int32_t> max_len;

    bool in_s(Int m) const {
        if (m < 0) return false;
        if (m > limit) throw InvalidInput("membership query beyond table limit");
        return max_len[static_cast<std::size_t>(m)] >= 0;
    }
    int32_t len(Int m) const {
        if (m < 0 || m > limit || max_len[static_cast<std::size_t>(m)] < 0)
            throw InvalidInput("max_len query outside the semigroup or table range");
        return max_len[static_cast<std::size_t>(m)];
    }
};

// Largest S-degree the Cohen-Macaulay oracle can query, plus n1 headroom.
Int default_table_limit(const GeneratorTuple& g);

MembershipTables build_tables(const GeneratorTuple& g, Int limit,
                              Int max_entries = kDefaultMaxTableEntries);

// Apery set of S relative to n1: the n1 smallest elements per residue class,
// i.e. {q in S : q - n1 not in S}, sorted increasing.
std::vector<Int> apery_set(const GeneratorTuple& g, const MembershipTables& t);

Int frobenius(const GeneratorTuple& g, const MembershipTables& t);

// z in S <=> F - z not in S for every 0 <= z <= F.
bool is_symmetric(const GeneratorTuple& g, const MembershipTables& t);

// All u in N^4 with sum u_i n_i = m. Empty iff m is not in S.
std::vector<Exponents> factorizations(const GeneratorTuple& g, Int m,
                                      std::size_t cap = 1u << 20);

// Membership in the semigroup generated by an arbitrary generator subset,
// used for the a_i searches. Membership is resolved exactly: the table is
// grown until a full run of consecutive elements certifies the conductor.
class SubsetSemigroup {
  public:
    // gens: nonempty list of positive integers.
    explicit SubsetSemigroup(std::vector<Int> gens,
                             Int max_entries = kDefaultMaxTableEntries);

    bool contains(Int v) const;
    Int gcd_value() const { return gcd_; }
    // Conductor of the normalized semigroup T/gcd.
    Int conductor() const { return conductor_; }

  private:
    Int gcd_ = 1;
    Int conductor_ = 0;
    std::vector<char> in_;  // membership of T/gcd below the conductor
};

}  // namespace tc4
