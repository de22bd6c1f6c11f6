#pragma once

#include <vector>

#include "quandle/table.hpp"

namespace quandle {

// x > y = x
Table trivial(int n);

// x > y = a*x + (1-a)*y over Z_n; requires gcd(a, n) = 1
Table alexander_cyclic(int n, int a);

// x > y = 2y - x over Z_n
Table dihedral(int n);

// group checks for Cayley-table inputs: associativity, two-sided identity,
// inverses. The identity is detected, not assumed.
struct GroupInfo {
    int identity;
    std::vector<int> inverse;
};
GroupInfo verify_group(const Table& cayley);  // DomainError if not a group

// x > y = y^-nfold * x * y^nfold over the group given by cayley
Table conjugation(const Table& cayley, int nfold);

// x > y = s(x * y^-1) * y for an automorphism s given elementwise
Table homogeneous(const Table& cayley, const std::vector<int>& automorphism);

// pairs over Z_p with x > y = x + <x,y> y, <(a,b),(c,d)> = ad - bc;
// p must be a prime <= 3 (order p^2)
Table symplectic(int p);

// i > j = i + k over Z_n; a rack, and a quandle only when k = 0
Table constant_rack(int n, int k);

}  // namespace quandle
