#pragma once

#include "tsilab/vectors.hpp"

#include <memory>
#include <utility>
#include <variant>
#include <vector>

namespace tsilab {

/// The weight parameter of the space. Constructor enforces 0 < value < 1.
class Theta {
public:
    explicit Theta(Rational value);
    const Rational& value() const { return value_; }

private:
    Rational value_;
};

/// Witness for a computed norm value.
///
/// A leaf records a coordinate attaining the sup norm (index 0 is reserved
/// for the zero vector). A node records an admissible partition together
/// with one certificate per part; its value is theta times the sum of the
/// children's values. Re-evaluating a certificate bottom-up against the
/// original vector must reproduce `value` exactly.
struct NormCertificate {
    struct Leaf {
        int index; // zero when the certificate witnesses the zero vector
    };
    struct Node {
        AdmissiblePartition partition;
        std::vector<NormCertificate> children;
    };

    Rational value;
    std::variant<Leaf, Node> witness;

    bool is_leaf() const { return std::holds_alternative<Leaf>(witness); }
};

/// Bottom-up re-evaluation of a certificate against x. Used by tests and by
/// the functional extraction; does not consult the norm implementation.
Rational certificate_value(const NormCertificate& certificate, const FiniteVector& x,
                           const Theta& theta);

/// The m-th Picard iterate of the norm equation starting from the sup norm.
/// Nondecreasing in m; m = 0 gives sup_norm(x).
Rational norm_level(const FiniteVector& x, const Theta& theta, int level);

/// Exact fixed-point norm value (no certificate).
Rational tsirelson_norm_value(const FiniteVector& x, const Theta& theta);

/// Exact norm together with a deterministic certificate. Among optimal
/// partitions the certificate uses the first in enumerate_admissible order;
/// when the sup norm alone attains the value the witness is a leaf at the
/// smallest attaining coordinate.
std::pair<Rational, NormCertificate> tsirelson_norm(const FiniteVector& x, const Theta& theta);

/// Linear functional attaining the certified value: <f, x> equals the
/// certificate's value and f lies in the norming set of the space.
FiniteVector certificate_functional(const NormCertificate& certificate, const FiniteVector& x,
                                    const Theta& theta);

/// A member of the recursively generated norming set, tagged with the level
/// at which it first appears (level 0: signed coordinate functionals).
struct NormingFunctional {
    FiniteVector functional;
    int level = 0;
};

/// The norming set restricted to coordinates 1..dimension: signed functionals
/// generated level by level until a full level adds nothing undominated, then
/// pruned by coordinatewise domination (|f| <= |g| everywhere drops f).
/// Throws InvariantViolation if generation fails to stabilize by level
/// `dimension` (it always stabilizes sooner in practice).
std::vector<NormingFunctional> norming_functionals(int dimension, const Theta& theta);

/// True iff the restriction of x to segment has norm <= the norm of x.
/// This must hold for every input; a false return signals a bug.
bool check_suppression(const FiniteVector& x, const Segment& segment, const Theta& theta);

/// Exact sandwich theta * sum |coefficients| <= |combination| <= sum |coefficients|
/// for normalized successively supported blocks with part_count admissibility
/// (blocks.size() <= min support of blocks[0]).
struct BlockBounds {
    Rational lower;
    Rational value;
    Rational upper;
};

BlockBounds block_l1_bounds(const std::vector<FiniteVector>& blocks,
                            const std::vector<Rational>& coefficients, const Theta& theta);

} // namespace tsilab
