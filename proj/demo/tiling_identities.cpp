// Walks through one board: lists the tilings with 3 squares and 2 dominoes,
// sorts them by where the last domino sits, and checks the pieces add up.

#include <qlattice/combinat.hpp>
#include <qlattice/identities.hpp>
#include <qlattice/stratify.hpp>
#include <qlattice/subspace.hpp>

#include <iostream>

int main()
{
    using namespace qlattice;

    const int n = 5, k = 2;
    std::cout << "[" << n << ' ' << k << "]_q = " << to_text(gauss(n, k)) << "\n\n";

    for (const auto& t : enumerate_tilings(n, k)) {
        const auto path = tiling_to_path(t);
        std::cout << t.text() << "  " << path.text() << "  " << path_to_partition(path).text() << "  q^"
                  << weight_exponent(t) << '\n';
    }

    std::cout << '\n';
    const auto s = stratify_last_domino(n, k);
    for (const auto& st : s.strata)
        std::cout << st.label() << ": " << st.members.size() << " tilings, " << to_text(st.generating) << '\n';
    std::cout << "thm2 holds: " << std::boolalpha << verify_thm2(n, k) << '\n';

    std::cout << "\nat q = 2: " << eval_int(gauss(4, 2), 2) << " = number of planes in GF(2)^4 ("
              << subspace_count(4, 2, 2) << ")\n";
}
