// Symbolic commutator arithmetic over a free noncommutative ring: builds
// [e_12(x), e_23(y)] and prints the product matrix, then runs the full
// commutator suite for n = 3 and prints the verdict.

#include <iostream>

#include "elgroups/elgroups.hpp"

int main() {
    using namespace elgroups;

    RingPtr R = RingSpec::free_ring({"x", "y"});
    RingElement x = RingElement::named_generator(R, "x");
    RingElement y = RingElement::named_generator(R, "y");

    GroupElement c = commutator(e(1, 2, x, 3), e(2, 3, y, 3));
    std::cout << "[e12(x), e23(y)] over " << R->describe() << ":\n"
              << c.value().str() << "\n\n";
    std::cout << "equals e13(xy): " << (c == e(1, 3, x * y, 3) ? "yes" : "no") << "\n\n";

    Report rep = verify_ecom(3, R);
    std::cout << "commutator suite, n=3: " << rep.count(CheckStatus::Pass) << " identities pass, "
              << rep.count(CheckStatus::Fail) << " fail\n";
    return rep.all_passed() ? 0 : 1;
}
