// Sequence-side view: a submeasure as a matrix of row measures, its
// boundedness profile and the truncation diagnostics.
#include <iostream>

#include "sml/banach.hpp"
#include "sml/zoo.hpp"

int main() {
    using namespace sml;

    const VectorSequence x = gen_fin_times_empty({2, 3, 4});
    const Submeasure phi = phi_of_sequence(x);
    std::cout << "blocks 2,3,4: phi of the last block = "
              << phi.eval(PointSet::of(9, {5, 6, 7, 8})).str() << "\n";

    const BoundednessReport rep = boundedness_report(x, PointSet::full(9), Rat(3));
    std::cout << "partial-sum sup norm over all finite sets = " << rep.primal_max.str()
              << (rep.bounded_at_k ? " (bounded at 3)" : " (unbounded at 3)") << "\n";

    const NullityReport nul = nullity_diagnostics(x, 4);
    std::cout << "sup of singleton values = " << nul.sup_col_norm.str() << "\n";
    std::cout << nul.label << "\n";

    // round trip through the row-measure matrix is exact
    const VectorSequence back = sequence_of_phi(phi);
    std::cout << "round trip equal: " << (back == x ? "yes" : "no") << "\n";
    return 0;
}
