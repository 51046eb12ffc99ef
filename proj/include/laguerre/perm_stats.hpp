#ifndef LAGUERRE_PERM_STATS_HPP
#define LAGUERRE_PERM_STATS_HPP

#include <vector>

#include "laguerre/multiset.hpp"
#include "laguerre/patterns.hpp"
#include "laguerre/permutation.hpp"

namespace laguerre {

// Values placed at positions 0 and n+1 when classifying letters.
enum class Boundary {
    MinusPlusInfinity,  // pi(0) = -inf, pi(n+1) = +inf
    Zero,               // pi(0) = pi(n+1) = 0
};

enum class LinearKind { Peak, Valley, DoubleAscent, DoubleDescent };

LinearKind linear_kind_at(const Permutation& pi, int position, Boundary boundary);

// Sets of values by kind.
struct LinearKinds {
    IntMultiset peaks, valleys, double_ascents, double_descents;
};
LinearKinds linear_kinds(const Permutation& pi, Boundary boundary);

struct LinearStatRecord {
    IntMultiset des, ides;            // positions
    IntMultiset dt, db, ab;           // descent tops, descent bottoms, ascent bottoms
    IntMultiset dtb, dta, dbb, dba, abb, aba;  // split by comparison with pi(n)
    IntMultiset ddif;                 // union of (pi(i+1), pi(i)] over descents
    IntMultiset dbot;                 // pi(i+1) copies of pi(i+1) over descents
};
LinearStatRecord linear_family(const Permutation& pi);

enum class CyclicKind { Peak, Valley, DoubleAscent, DoubleDescent };
CyclicKind cyclic_kind(const Permutation& pi, int value);

struct CyclicStatRecord {
    IntMultiset exc, nexc;            // values
    IntMultiset ep;                   // excedance positions
    IntMultiset excb, exca, nexcb, nexca, epb, epa;
    IntMultiset edif, ebot, ine;
    std::vector<int> side;            // side[i-1] = s_i
    IntMultiset cpk, cval, cda, cdd;
};
CyclicStatRecord cyclic_family(const Permutation& pi);

struct ShiftedStatRecord {
    int pone = 0;
    std::vector<int> nest, vnest;     // indexed by position - 1
    IntMultiset scval, scpk, scda, scdd;  // subsets of [n-1]
    IntMultiset ep, nep, vnex;
    IntMultiset vnepb, vnepa, vnexb, vnexa, vepb, vepa;
    IntMultiset vedif, vbot, vnest_multiset;
};
ShiftedStatRecord shifted_family(const Permutation& pi);

// Inversion count.
long long inversions(const Permutation& pi);
// Sum of descent positions.
long long major_index(const Permutation& pi);
// Petersen's sorting index: sort by moving n, n-1, ..., 1 home with
// transpositions (i, j), i < j, and add up j - i.
long long sorting_index(const Permutation& pi);

}  // namespace laguerre

#endif  // LAGUERRE_PERM_STATS_HPP
