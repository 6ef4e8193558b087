// Enumerates E_3(Z/2) by closure search and compares the order with the
// general-linear order formula for the 2-element field.

#include <iostream>

#include "elgroups/elgroups.hpp"

int main() {
    using namespace elgroups;

    RingPtr R = RingSpec::modular(2);
    FiniteGroupTable t = bfs_closure(elementary_generators(R, 3));
    std::cout << "|E_3(Z/2)| = " << t.size() << (t.complete() ? "" : " (capped)") << "\n";

    // |GL_n(F_q)| = prod_i (q^n - q^i)
    unsigned long q = 2, n = 3, order = 1;
    unsigned long qn = 1;
    for (unsigned long i = 0; i < n; ++i) qn *= q;
    unsigned long qi = 1;
    for (unsigned long i = 0; i < n; ++i) {
        order *= qn - qi;
        qi *= q;
    }
    std::cout << "|GL_3(F_2)| by the order formula = " << order << "\n";
    return t.complete() && t.size() == order ? 0 : 1;
}
