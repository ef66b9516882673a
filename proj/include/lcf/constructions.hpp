#ifndef LCF_CONSTRUCTIONS_HPP
#define LCF_CONSTRUCTIONS_HPP

#include <optional>
#include <string>

#include "lcf/exact.hpp"
#include "lcf/model.hpp"

namespace lcf {

enum class ConstructionFamily { general_knt, balanced_extension, exhaustive_search };

std::string_view construction_family_name(ConstructionFamily family);

/// Where a witness came from. `n` is the small-side size of the general family;
/// `c` the number of extra y-vertices of the extension family.
struct Provenance {
    ConstructionFamily family = ConstructionFamily::balanced_extension;
    int m = 0;
    int t = 0;
    int c = 0;
    int n = 2;

    [[nodiscard]] std::string describe() const;
};

/// L(x_k) = [m-n] ∪ S_k with S_k = {m + n(k-2) + l : l in [n]}; y-lists run through the
/// transversals of S_1 x ... x S_n in lexicographic order, each repeated t times.
ListAssignment build_general(int n, int m, int t);

/// Closed-form count of build_general(n, m, t).
ExactCount general_formula(int n, int m, int t);

/// build_general(2, m, t) followed by the first c of
/// [m-2] ∪ {m-1, m+1}, [m-2] ∪ {m, m+2}, [m-2] ∪ {m-1, m+2}.
ListAssignment build_extension(int m, int t, int c);

/// Closed-form count of build_extension(m, t, c).
ExactCount extension_formula(int m, int t, int c);

struct Witness {
    ListAssignment lists;
    /// Absent for m = 2 search witnesses that use colors outside the x-union.
    std::optional<CanonicalAssignment> assignment;
    ExactCount count;
    Provenance provenance;
};

/// Extension witness for K_{2,n} with n = 4t + c, t >= 1, when its count is below P(K_{2,n}, m).
/// The count is re-evaluated on the built assignment before returning.
std::optional<Witness> construction_witness(int n, int m);

/// Constructions first, then the exhaustive minimizer within `budget`.
std::optional<Witness> witness_search(int n, int m, const SearchBudget& budget = {});

} // namespace lcf

#endif // LCF_CONSTRUCTIONS_HPP
