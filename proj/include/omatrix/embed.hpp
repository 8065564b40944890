#ifndef OMATRIX_EMBED_HPP
#define OMATRIX_EMBED_HPP

#include "omatrix/matrix.hpp"

namespace omatrix {

// Pair slots of the triple tensor product V (x) V (x) V.
enum class Slot { s12, s13, s23 };

// Permutation operator on V (x) V: e_i (x) e_j -> e_j (x) e_i.
Matrix permutation_operator(int dim_v);

// Mirror operator on the triple product: v1 (x) v2 (x) v3 -> v3 (x) v2 (x) v1.
Matrix mirror_operator(int dim_v);

/// Embeds an operator on V (x) V into the chosen pair of slots of the triple
/// product.  The middle-slot embedding acts on slots 1 and 3 while leaving
/// slot 2 alone; it is computed by the coordinate rule and cross-checked
/// against the conjugation form P23 A12 P23, which must agree exactly.
Matrix embed_pair(const Matrix& a, Slot slot, int dim_v);

}  // namespace omatrix

#endif
