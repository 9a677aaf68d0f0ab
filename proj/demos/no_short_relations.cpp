// Builds a pair of maps satisfying no relation shorter than the bound, then
// prints the certificate for one of the witnessed words.

#include <thompson/thompson.hpp>

#include <iostream>

int main() {
    using namespace thompson;
    const int bound = 6;

    const MultiWitness result = universal_witness(2, bound);
    std::cout << "reduced-word classes of length < " << bound << ": "
              << result.reports.size() << "\n";

    for (const WitnessReport& r : result.reports) {
        if (!r.verified) {
            std::cerr << "unverified: " << to_string(r.word) << "\n";
            return 1;
        }
    }
    std::cout << "all witnessed by one pair (a, b); breakpoint counts: "
              << result.tuple[0].size() << ", " << result.tuple[1].size() << "\n\n";

    std::cout << to_text(result.reports.back());
    return 0;
}
