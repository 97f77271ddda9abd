#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagcoh/cohomology.hpp"
#include "flagcoh/cones.hpp"
#include "flagcoh/presets.hpp"
#include "flagcoh/series.hpp"

namespace flagcoh {

/// Direct sum of twists O(d_1) + ... + O(d_r); rank is the length.
struct BundleSpec {
    std::vector<int> twists = {0};
    int rank() const { return static_cast<int>(twists.size()); }
};

/// Everything the map needs: a scheme with its fixed flag and trivialization
/// conventions (see presets.hpp), a bundle, the field, and the finite
/// window/precision on which claims are certified.
struct GeometricData {
    SchemeModel scheme;
    BundleSpec bundle;
    FieldTag field;
    Window window;
    int precision = 40;
};

/// A basis witness of a curve-preset subspace: a certified expansion at the
/// marked point together with its pole order there.
struct SeriesWitness {
    TruncatedSeries series;
    long pole_order = 0;
};

enum class PresetKind { ProjSpace, ProjLine, EllipticCurve };

/// The pair (B in K, W in K^r).  Toric presets carry cone models; curve
/// presets carry finite certified witness bases (P^1 carries both).
struct KricheverPair {
    PresetKind kind = PresetKind::ProjSpace;
    int n = 1;
    FieldTag field;
    Window window;
    int precision = 0;
    std::vector<int> twists;

    std::optional<LinearSubspaceModel> cone_B;
    std::vector<LinearSubspaceModel> cone_W;  // one per summand

    std::vector<SeriesWitness> basis_B;
    std::vector<std::vector<SeriesWitness>> basis_W;

    bool has_cones() const { return cone_B.has_value(); }
    bool has_basis() const { return !basis_B.empty(); }
};

/// The map from geometric data to (B, W): B models the sections of the
/// structure sheaf regular away from Y_1 through the whole flag localization
/// chain; W the same for the bundle.  Cone presets read the models off the
/// chart combinatorics; curve presets expand a certified witness basis.
KricheverPair phi(const GeometricData& data);

struct ClosureViolation {
    std::string left;   // offending pair, printable
    std::string right;
    std::string detail;
};

struct ClosureReport {
    bool passed = true;
    std::uint64_t products_checked = 0;
    std::vector<ClosureViolation> violations;
    bool contains_one = true;  // 1 in B
};

/// B . B inside B: all pairwise products of window points (cones) or basis
/// witnesses (curve presets) stay in the model, within certified precision.
ClosureReport check_ring_closure(const KricheverPair& pair, const Window& w);

/// B . W_j inside W_j for every summand.
ClosureReport check_module_closure(const KricheverPair& pair, const Window& w);

struct ReductionPiece {
    FiltrationIndex m = 0;
    bool B_matches = true;
    bool W_matches = true;
    long B_dim = 0;  // dimension of the graded piece on the reduced window
    std::vector<long> W_dims;
    std::vector<std::string> mismatches;
};

struct ReductionResult {
    bool passed = true;
    std::vector<ReductionPiece> pieces;
};

/// Compares each graded piece (B n K(m))/(B n K(m+1)) -- the z_n-slice of the
/// cone at level m -- with the W-image of the map applied to the reduced data
/// on Y_1 with the twist lowered by m; likewise for every W summand.
ReductionResult graded_reduction(const GeometricData& data, FiltrationIndex m_lo,
                                 FiltrationIndex m_hi);

struct ReconstructionResult {
    PresetKind kind = PresetKind::ProjLine;
    std::optional<FieldScalar> a;  // elliptic only
    std::optional<FieldScalar> b;
    std::vector<long> gaps;  // pole orders not realized, up to the basis cap
    long genus = 0;
};

/// Recovers the defining data from the pair alone.  Elliptic: normalizes
/// pole-order-2 and pole-order-3 witnesses to the short Weierstrass frame and
/// solves the unique linear relation among {1, X, Y, X^2, XY, X^3, Y^2};
/// P^1: reports genus 0 through the empty gap sequence.
ReconstructionResult reconstruct_affine_ring(const KricheverPair& pair, PresetKind hint);

struct HilbertReport {
    std::vector<long> dims;  // dim(A_(0) n K(-m)) for m = m_lo..m_hi
    FiltrationIndex m_lo = 0;
    bool unreliable = false;  // cone count touched the window boundary
};

/// Dimensions of the affine-ring filtration steps: the cone presets intersect
/// the reconstructed A_(0) model with K(-m) on the window; curve presets count
/// witnesses of pole order <= m.
HilbertReport hilbert_dims(const KricheverPair& pair, FiltrationIndex m_lo, FiltrationIndex m_hi,
                           const Window& w);

/// Gap sequence: pole orders in [1, cap] with no witness.
std::vector<long> gap_sequence(const KricheverPair& pair);

struct CounterexampleReport {
    bool violation_found = false;
    std::string identity;  // which intersection law was probed
    std::vector<ExponentVector> witnesses;
    long dim_intersection = 0;
    long dim_small_space = 0;
};

/// Probes the intersection law that the ideal-sheaf family is expected to
/// break (and the structure sheaf to satisfy): joint membership in the two
/// named spaces against the intersection simplex's space, on the window.
CounterexampleReport counterexample_check(PointPosition position, bool use_ideal_sheaf,
                                          FieldTag field, const Window& w);

struct StandardIntersectionReport {
    bool passed = true;
    std::vector<std::string> mismatches;
};

/// "One image suffices": every family model must coincide pointwise with the
/// intersection of B with the matching standard subspace (spaces containing
/// the last vertex are the standard subspaces themselves).
StandardIntersectionReport check_standard_intersections(const KricheverPair& pair,
                                                        const SubspaceFamily& fam, const Window& w);

}  // namespace flagcoh
