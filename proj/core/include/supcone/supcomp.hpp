#ifndef SUPCONE_SUPCOMP_HPP
#define SUPCONE_SUPCOMP_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supcone/func.hpp"
#include "supcone/stone.hpp"

namespace supcone {

/// The ground lattice X: all of C(K) (bounded tree functions) or all of
/// C^inf(K) (finite-a.e. tree functions).
enum class ModelX { Bounded, Full };

std::string model_name(ModelX model);

/// X-membership predicate of the chosen model.
bool in_model(const TreeFn& f, ModelX model);

struct MemberCheck {
    std::optional<TreeFn> witness;
    /// Set when witness is absent: a printable separating certificate (the
    /// offending -inf cell or -inf-limit branch).
    std::string certificate;
};

/// Cone membership: u belongs to the sup-completion iff it dominates some
/// element of X. On success returns such an element.
MemberCheck member(const TreeFn& u, ModelX model);

/// A cone element together with a dominating witness from X. Constructing
/// one checks the witness exactly; membership is an invariant, not a proof
/// obligation at each operation.
class SupElement {
public:
    SupElement(TreeFn fn, TreeFn witness, ModelX model);

    /// Finds a witness via member(); throws NotInCone with a certificate.
    static SupElement adopt(TreeFn fn, ModelX model);

    const TreeFn& fn() const { return fn_; }
    const TreeFn& witness() const { return witness_; }
    ModelX model() const { return model_; }

private:
    TreeFn fn_;
    TreeFn witness_;
    ModelX model_;
};

SupElement cone_add(const SupElement& a, const SupElement& b);
SupElement cone_meet(const SupElement& a, const SupElement& b);
SupElement cone_join(const SupElement& a, const SupElement& b);
SupElement cone_sup(const std::vector<SupElement>& elems);
/// Infimum given an explicit lower bound in the cone; throws NoLowerBound if
/// the bound fails to minorize every member.
SupElement cone_inf(const std::vector<SupElement>& elems, const SupElement& lower_bound);
/// Convenience form: derives the lower bound as the meet of the members'
/// witnesses.
SupElement cone_inf(const std::vector<SupElement>& elems);

/// Increasing family f_1 <= ... <= f_n in X below u whose supremum is u
/// truncated at height n and flattened at depth d. For u already in X the
/// family is just {u}.
std::vector<TreeFn> order_dense_witness(const SupElement& a, std::size_t depth,
                                        long height);

/// u restricted to U, zero off U.
TreeFn band_project(const ClopenSet& u_set, const TreeFn& u);
SupElement band_project(const ClopenSet& u_set, const SupElement& a);

/// Closure of {a != 0}, always a finite union of cells in this model.
ClopenSet support_closure(const TreeFn& a);
TreeFn principal_band_project(const TreeFn& a, const TreeFn& x);

/// u = finite_part + infinite_part with disjoint supports; the infinite part
/// is 0 on the carrier and +inf off it; carrier = closure{u < inf}.
struct Decomposition {
    TreeFn finite_part;
    TreeFn infinite_part;
    ClopenSet carrier;
};

Decomposition fin_inf_decompose(const SupElement& a);

/// Splits x = y + z with y <= u and z <= v, following the band-splitting
/// proof. Preconditions v >= 0 and x <= u + v are checked exactly; on
/// violation throws PreconditionFailed carrying a point where x > u + v.
std::pair<SupElement, SupElement> riesz_decompose(const SupElement& x,
                                                  const SupElement& u,
                                                  const SupElement& v);

/// One leaf or branch datum of the truncation analysis of u against the
/// weak unit e = 1: either the truncations stabilize at a finite height with
/// u's value, or they diverge (t_n = n there for every n).
struct TruncationDatum {
    PointRef where;
    bool diverges = false;
    long stabilizes_at = 0;
    ExtReal value;
};

struct TruncationCert {
    std::vector<TruncationDatum> data;
    long checked_height = 0;  // heights used for the exact spot checks
    bool verified = false;
};

/// The proposition u = sup_n (n e /\ u) for u >= 0, witnessed leafwise.
/// Throws NotPositive when u has a negative value.
TruncationCert truncation_check(const SupElement& a);

struct InfinityTest {
    TreeFn v;      // inf over lambda of P_{(u - lambda e)^+} e, in closed form
    bool in_Xu = false;
    std::vector<std::pair<Rational, TreeFn>> lambda_trace;
};

/// The lambda-sweep test for membership in the universal completion: v is
/// the indicator of the cells identically +inf, the lattice infimum of the
/// decreasing family v_lambda (isolated branch points drop out). Requires
/// u >= 0.
InfinityTest infinity_test(const SupElement& a);

/// Product on the positive cone with 0 * inf = 0; e = 1 is the unit.
SupElement pos_product(const SupElement& a, const SupElement& b);

}  // namespace supcone

#endif  // SUPCONE_SUPCOMP_HPP
