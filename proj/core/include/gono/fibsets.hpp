#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gono/additive_set.hpp"
#include "gono/fibonacci.hpp"

namespace gono {

// The three concrete residue families, all mod F_{2n}:
//   strip_a:  { F_k * F_{2n-k} : k = 0..n }
//   fan_a:    { 0 } union { F_{2k-1} : k = 1..n }
//   strip_b:  { (-1)^{k+1} F_k^2 : k = 0..n }   (as printed; residues taken mod F_{2n})
enum class FibFamily { strip_a, fan_a, strip_b };

// Requires n >= 2 so the modulus F_{2n} is nontrivial.
AdditiveSet family_additive_set(FibFamily f, int n);

// F_{n-k} F_{n+k} - F_n^2 evaluated against both candidate signs for F_k^2: the
// k-parity sign (-1)^{k+1} and the (n-k)-parity sign (-1)^{n-k+1}. Both results
// are reported; nothing is silently corrected.
struct CatalanCheck {
    int128 lhs = 0;                               // F_{n-k} F_{n+k} - F_n^2
    int128 rhs_k_sign = 0;                        // (-1)^{k+1} F_k^2
    int128 rhs_nk_sign = 0;                       // (-1)^{n-k+1} F_k^2
    bool k_sign_matches = false;
    bool nk_sign_matches = false;
};

CatalanCheck catalan_check(int n, int k);         // 0 <= k <= n

// Zeckendorf forms of -F_k F_{2n-k} mod F_{2n} for k = 1..7, against the tabulated
// shapes (valid for n >= 7).
struct NegationRow {
    int k = 0;
    std::int64_t residue = 0;
    ZeckendorfForm expected;
    ZeckendorfForm computed;
    bool matches = false;
};

std::vector<NegationRow> negation_table(int n);

// F_{2n} + 2 F_{2n-1} - F_k F_{2n-k} == F_{k-2} F_{2n-k+2} + 3 F_{k-1} F_{2n-k+1}
// for 3 <= k <= n.
bool upper_bound_identity_check(int n, int k);

// Structural classification of mA(G_n) for the strip family, m in {2, 3}.
// Case ids name the Zeckendorf prefix that pins the case, e.g. "F2n-1+F2n-3+F2n-6";
// "-other" suffixes mark cases whose tail is unconstrained past the named prefix.
// An element matching no case is a violation.
struct ClassifiedElement {
    std::int64_t element = 0;
    std::string case_id;
    std::vector<int> zeck_indices;                // descending
};

struct SumsetClassification {
    int n = 0;
    int order = 0;                                // m
    std::vector<ClassifiedElement> classes;       // ascending by element
    std::vector<std::int64_t> violations;
};

// m = 2 requires n >= 7; m = 3 requires n >= 8 (below that the index patterns
// collide and the classification is vacuous). For m = 3 only 3A \ 2A is classified.
SumsetClassification classify_sumset(int n, int m);

} // namespace gono
