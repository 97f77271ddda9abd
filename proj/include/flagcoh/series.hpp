#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagcoh/exponent.hpp"
#include "flagcoh/field.hpp"

namespace flagcoh {

/// Index m of the filtration K(m) = z_n^m k((z_1))...((z_{n-1}))[[z_n]].
using FiltrationIndex = long long;

/// An element of k((z_1))...((z_n)) known exactly on a finite exponent window.
///
/// Two metadata vectors bound what is certified:
///   order:     a true per-variable lower bound on the support;
///   precision: coefficients at exponents componentwise below `precision`
///              are exact; beyond it nothing is claimed.
/// Stored terms always satisfy order <= e < precision componentwise, and zero
/// coefficients are never stored.  Within that box, absence means exact zero.
class TruncatedSeries {
public:
    using CoeffMap = std::map<ExponentVector, FieldScalar, KLexLess>;

    /// The exact zero series with unbounded precision.
    TruncatedSeries(int n, FieldTag field);
    TruncatedSeries(int n, FieldTag field, ExponentVector order, ExponentVector precision);

    static TruncatedSeries monomial(const ExponentVector& e, const FieldScalar& c);
    static TruncatedSeries constant(int n, const FieldScalar& c);
    /// Builds from a term list; order defaults to the support minimum.
    static TruncatedSeries from_terms(int n, FieldTag field,
                                      const std::vector<std::pair<ExponentVector, FieldScalar>>& terms);

    int variable_count() const { return n_; }
    FieldTag field() const { return field_; }
    const ExponentVector& order() const { return order_; }
    const ExponentVector& precision() const { return precision_; }
    const CoeffMap& coefficients() const { return coeffs_; }
    bool is_stored_zero() const { return coeffs_.empty(); }
    bool is_exact() const;  // every precision entry unbounded

    /// Coefficient at e; exact zero when absent but inside the certified box.
    FieldScalar coefficient(const ExponentVector& e) const;

    /// Restricts metadata precision (dropping now-uncertified terms).
    TruncatedSeries truncated_to(const ExponentVector& precision) const;

    /// Structural equality: same n, field, metadata and coefficients.
    bool operator==(const TruncatedSeries& o) const;

private:
    friend TruncatedSeries series_add(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries series_scale(const FieldScalar&, const TruncatedSeries&);
    friend TruncatedSeries series_mul(const TruncatedSeries&, const TruncatedSeries&);

    void insert_term(const ExponentVector& e, const FieldScalar& c);
    void drop_uncertified();

    int n_;
    FieldTag field_;
    ExponentVector order_;
    ExponentVector precision_;
    CoeffMap coeffs_;
};

/// Coefficientwise sum.  Result precision/order are the componentwise minima.
TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries series_sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries series_neg(const TruncatedSeries& f);
TruncatedSeries series_scale(const FieldScalar& c, const TruncatedSeries& f);

/// Convolution product.  order_t = order_t(f) + order_t(g), and
/// precision_t = min(precision_t(f) + order_t(g), precision_t(g) + order_t(f));
/// the unknown tail of one factor, shifted by the other's support bound, is
/// exactly what this rule excludes.  Terms outside the certified box are dropped.
TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// Multiplicative inverse: series_mul(f, result) == 1 componentwise below
/// `target_precision`.  The leading (KLex-minimal) stored term is inverted and
/// the tail accumulated as a geometric series.  Throws NotAUnitError when no
/// leading term exists, PrecisionError when f cannot certify the target.
TruncatedSeries series_inverse(const TruncatedSeries& f, const ExponentVector& target_precision);
TruncatedSeries series_inverse(const TruncatedSeries& f, int uniform_target_precision);

/// Largest m with f in K(m): the minimal z_n-exponent occurring in f.
/// Returns nullopt for the stored-zero series (infinite valuation); throws
/// IndeterminateError when the leading slice is not certified by precision.
std::optional<FiltrationIndex> zn_valuation(const TruncatedSeries& f);

/// The coefficient of z_n^m, an element of k((z_1))...((z_{n-1})).
/// Below f's z_n-order the slice is exactly zero; at or above the z_n-precision
/// it is indeterminate.
TruncatedSeries graded_slice(const TruncatedSeries& f, FiltrationIndex m);

/// True when f and g agree at every exponent certified by both.
bool agree_within_certified(const TruncatedSeries& f, const TruncatedSeries& g);

/// Textual literal, e.g. "3/2 * z1^-2 z2^3 + 1 * z1^0 z2^0 ; order=(-2,0) precision=(10,inf)".
/// parse_series(print_series(f), f.field()) == f bit-exactly.
std::string print_series(const TruncatedSeries& f);
TruncatedSeries parse_series(const std::string& text, FieldTag field);

}  // namespace flagcoh
