// A short tour: build the worked submeasures, compute their dominated
// measures and degrees, and print the covering numbers driving the
// uniform bounds.
#include <iostream>

#include "sml/pathology.hpp"
#include "sml/zoo.hpp"

int main() {
    using namespace sml;

    const Submeasure phi = gen_minimal_pathological();
    const HatResult h = hat(phi, PointSet::full(3));
    std::cout << "minimal example: phi({0,1,2}) = " << phi.eval(PointSet::full(3)).str()
              << ", largest dominated mass = " << h.value.str() << "\n";
    const PathologyReport rep = pathology_degree(phi, DegreeScope::AllSubsets);
    std::cout << "degree of pathology = " << rep.degree.str() << " at " << rep.argmax.str()
              << "\n\n";

    for (uint32_t n = 2; n <= 3; ++n) {
        const MazurExample mz = gen_mazur(n);
        const CoveringStats st = covering_stats(mz.cover);
        const UniformBoundCertificate cert = uniform_bound_check(mz.psi, mz.cover, Rat(1));
        std::cout << "functions " << n << " -> " << 2 * n << ": |ground| = " << mz.ground.size()
                  << ", value of the full set = " << mz.psi.eval(PointSet::full(mz.ground.size())).str()
                  << ", delta = " << st.delta.str() << ", dominated mass <= " << cert.max_mass.str()
                  << " (bound " << cert.bound.str() << ")\n";
    }

    const SoleckiExample so = gen_solecki(3);
    std::cout << "\nclopen-half level 3: |ground| = " << so.ground.size()
              << ", cover value = " << so.chi.eval(PointSet::full(so.ground.size())).str()
              << ", delta = " << covering_stats(so.cover).delta.str() << "\n";
    return 0;
}
