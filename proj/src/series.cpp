#include "flagcoh/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace flagcoh {

namespace {

ExponentVector add_shift(const ExponentVector& prec, const ExponentVector& shift) {
    ExponentVector r(prec.size());
    for (std::size_t t = 0; t < prec.size(); ++t) r[t] = precision_add(prec[t], shift[t]);
    return r;
}

bool below_componentwise(const ExponentVector& e, const ExponentVector& bound) {
    for (std::size_t t = 0; t < e.size(); ++t)
        if (e[t] >= bound[t]) return false;
    return true;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int n, FieldTag field)
    : n_(n),
      field_(field),
      order_(static_cast<std::size_t>(n), 0),
      precision_(static_cast<std::size_t>(n), kUnboundedPrecision) {
    if (n < 0) throw UsageError("negative variable count");
}

TruncatedSeries::TruncatedSeries(int n, FieldTag field, ExponentVector order, ExponentVector precision)
    : n_(n), field_(field), order_(std::move(order)), precision_(std::move(precision)) {
    if (n < 0) throw UsageError("negative variable count");
    if (order_.size() != static_cast<std::size_t>(n) || precision_.size() != static_cast<std::size_t>(n))
        throw UsageError("metadata length does not match the variable count");
}

TruncatedSeries TruncatedSeries::monomial(const ExponentVector& e, const FieldScalar& c) {
    TruncatedSeries f(static_cast<int>(e.size()), c.tag());
    f.order_ = e;
    if (!c.is_zero()) f.coeffs_.emplace(e, c);
    return f;
}

TruncatedSeries TruncatedSeries::constant(int n, const FieldScalar& c) {
    return monomial(ExponentVector(static_cast<std::size_t>(n), 0), c);
}

TruncatedSeries TruncatedSeries::from_terms(
    int n, FieldTag field, const std::vector<std::pair<ExponentVector, FieldScalar>>& terms) {
    TruncatedSeries f(n, field);
    for (const auto& [e, c] : terms) {
        if (e.size() != static_cast<std::size_t>(n)) throw UsageError("term dimension mismatch");
        if (!(c.tag() == field)) throw UsageError("term coefficient field mismatch");
        f.insert_term(e, c);
    }
    if (!f.coeffs_.empty()) {
        ExponentVector lo = f.coeffs_.begin()->first;
        for (const auto& [e, c] : f.coeffs_) lo = exponent_min(lo, e);
        f.order_ = lo;
    }
    return f;
}

bool TruncatedSeries::is_exact() const {
    return std::all_of(precision_.begin(), precision_.end(),
                       [](int p) { return precision_unbounded(p); });
}

void TruncatedSeries::insert_term(const ExponentVector& e, const FieldScalar& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        coeffs_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void TruncatedSeries::drop_uncertified() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (!below_componentwise(it->first, precision_))
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

FieldScalar TruncatedSeries::coefficient(const ExponentVector& e) const {
    if (e.size() != static_cast<std::size_t>(n_)) throw UsageError("exponent dimension mismatch");
    auto it = coeffs_.find(e);
    if (it != coeffs_.end()) return it->second;
    // Below the support bound in any variable the coefficient is exactly zero.
    for (std::size_t t = 0; t < e.size(); ++t)
        if (e[t] < order_[t]) return FieldScalar::zero(field_);
    if (below_componentwise(e, precision_)) return FieldScalar::zero(field_);
    throw IndeterminateError("coefficient at " + exponent_str(e) + " is beyond the certified precision");
}

TruncatedSeries TruncatedSeries::truncated_to(const ExponentVector& precision) const {
    if (precision.size() != static_cast<std::size_t>(n_)) throw UsageError("precision length mismatch");
    TruncatedSeries r(n_, field_, order_, exponent_min(precision_, precision));
    r.coeffs_ = coeffs_;
    r.drop_uncertified();
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return n_ == o.n_ && field_ == o.field_ && order_ == o.order_ &&
           precision_ == o.precision_ && coeffs_ == o.coeffs_;
}

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.variable_count() != g.variable_count())
        throw UsageError("adding series with different variable counts");
    if (!(f.field() == g.field())) throw UsageError("adding series over different fields");
    TruncatedSeries r(f.variable_count(), f.field(),
                      exponent_min(f.order(), g.order()),
                      exponent_min(f.precision(), g.precision()));
    for (const auto& [e, c] : f.coefficients()) r.insert_term(e, c);
    for (const auto& [e, c] : g.coefficients()) r.insert_term(e, c);
    r.drop_uncertified();
    return r;
}

TruncatedSeries series_neg(const TruncatedSeries& f) {
    return series_scale(-FieldScalar::one(f.field()), f);
}

TruncatedSeries series_sub(const TruncatedSeries& f, const TruncatedSeries& g) {
    return series_add(f, series_neg(g));
}

TruncatedSeries series_scale(const FieldScalar& c, const TruncatedSeries& f) {
    if (!(c.tag() == f.field())) throw UsageError("scalar field mismatch");
    TruncatedSeries r(f.variable_count(), f.field(), f.order(), f.precision());
    if (c.is_zero()) return r;
    for (const auto& [e, v] : f.coefficients()) r.coeffs_.emplace(e, c * v);
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.variable_count() != g.variable_count())
        throw UsageError("multiplying series with different variable counts");
    if (!(f.field() == g.field())) throw UsageError("multiplying series over different fields");
    TruncatedSeries r(f.variable_count(), f.field(),
                      exponent_add(f.order(), g.order()),
                      exponent_min(add_shift(f.precision(), g.order()),
                                   add_shift(g.precision(), f.order())));
    for (const auto& [ef, cf] : f.coefficients()) {
        for (const auto& [eg, cg] : g.coefficients()) {
            ExponentVector e = exponent_add(ef, eg);
            if (below_componentwise(e, r.precision())) r.insert_term(e, cf * cg);
        }
    }
    return r;
}

TruncatedSeries series_inverse(const TruncatedSeries& f, const ExponentVector& target_precision) {
    const int n = f.variable_count();
    if (target_precision.size() != static_cast<std::size_t>(n))
        throw UsageError("target precision length mismatch");
    if (f.is_stored_zero())
        throw NotAUnitError("no invertible leading term within the known window");
    const ExponentVector lead = f.coefficients().begin()->first;
    const FieldScalar lead_coeff = f.coefficients().begin()->second;

    TruncatedSeries g0 = TruncatedSeries::monomial(
        [&] {
            ExponentVector neg(lead.size());
            for (std::size_t t = 0; t < lead.size(); ++t) neg[t] = -lead[t];
            return neg;
        }(),
        lead_coeff.inverse());

    TruncatedSeries one = TruncatedSeries::constant(n, FieldScalar::one(f.field()));
    TruncatedSeries u = series_sub(one, series_mul(f, g0));

    if (u.is_stored_zero() && u.is_exact() && f.is_exact())
        return g0;  // certified monomial, exact inverse

    for (int p : target_precision)
        if (precision_unbounded(p))
            throw UsageError("inverting a non-monomial series requires a finite target precision");

    // Accumulate g0 * (1 + u + u^2 + ...).  The partial sum needs enough
    // certification that the product f * result is certified to the target,
    // which works out to target + lead - order(f); powers are truncated there
    // and the honest precision rule tracks whatever that truncation costs.
    ExponentVector sum_window(lead.size());
    for (std::size_t t = 0; t < lead.size(); ++t)
        sum_window[t] = precision_add(target_precision[t], lead[t] - f.order()[t]);
    TruncatedSeries sum = one;
    TruncatedSeries power = u.truncated_to(sum_window);
    constexpr int kMaxIterations = 100000;
    int iter = 0;
    while (!power.is_stored_zero()) {
        if (++iter > kMaxIterations)
            throw PrecisionError("series inverse did not terminate within the iteration budget");
        sum = series_add(sum, power);
        power = series_mul(power, u).truncated_to(sum_window);
    }
    TruncatedSeries g = series_mul(g0, sum);

    // The contract is that f * g is certified to the target.
    ExponentVector product_precision =
        exponent_min(add_shift(f.precision(), g.order()), add_shift(g.precision(), f.order()));
    for (std::size_t t = 0; t < product_precision.size(); ++t) {
        if (product_precision[t] < target_precision[t])
            throw PrecisionError(
                "inverse cannot be certified to the requested precision (variable z" +
                std::to_string(t + 1) + ": certified " + std::to_string(product_precision[t]) +
                ", requested " + std::to_string(target_precision[t]) + ")");
    }
    return g;
}

TruncatedSeries series_inverse(const TruncatedSeries& f, int uniform_target_precision) {
    return series_inverse(
        f, ExponentVector(static_cast<std::size_t>(f.variable_count()), uniform_target_precision));
}

std::optional<FiltrationIndex> zn_valuation(const TruncatedSeries& f) {
    if (f.variable_count() < 1) throw UsageError("valuation needs at least one variable");
    if (f.is_stored_zero()) return std::nullopt;  // infinite valuation
    const int m0 = f.coefficients().begin()->first.back();
    const std::size_t n = static_cast<std::size_t>(f.variable_count());
    // Certified when the leading level sits on the support bound, or when no
    // inner-variable tail can hide a lower level.
    bool certified = (m0 == f.order().back());
    if (!certified) {
        certified = true;
        for (std::size_t t = 0; t + 1 < n; ++t)
            if (!precision_unbounded(f.precision()[t])) { certified = false; break; }
    }
    if (!certified)
        throw IndeterminateError("z_n-leading slice is not certified by the precision window");
    return m0;
}

TruncatedSeries graded_slice(const TruncatedSeries& f, FiltrationIndex m) {
    const int n = f.variable_count();
    if (n < 1) throw UsageError("slice needs at least one variable");
    const ExponentVector inner_order(f.order().begin(), f.order().end() - 1);
    const ExponentVector inner_precision(f.precision().begin(), f.precision().end() - 1);
    if (m < f.order().back()) {
        // Below the support bound: exactly zero in the inner variables.
        TruncatedSeries zero(n - 1, f.field());
        return zero;
    }
    if (!precision_unbounded(f.precision().back()) && m >= f.precision().back())
        throw IndeterminateError("slice at z_n level " + std::to_string(m) +
                                 " is beyond the certified precision");
    TruncatedSeries r(n - 1, f.field(), inner_order, inner_precision);
    for (const auto& [e, c] : f.coefficients()) {
        if (e.back() == m) r.coeffs_.emplace(ExponentVector(e.begin(), e.end() - 1), c);
    }
    return r;
}

bool agree_within_certified(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.variable_count() != g.variable_count())
        throw UsageError("comparing series with different variable counts");
    if (!(f.field() == g.field())) throw UsageError("comparing series over different fields");
    const ExponentVector joint = exponent_min(f.precision(), g.precision());
    for (const auto& [e, c] : f.coefficients()) {
        if (!below_componentwise(e, joint)) continue;
        if (!(g.coefficient(e) == c)) return false;
    }
    for (const auto& [e, c] : g.coefficients()) {
        if (!below_componentwise(e, joint)) continue;
        if (!(f.coefficient(e) == c)) return false;
    }
    return true;
}

std::string print_series(const TruncatedSeries& f) {
    std::ostringstream os;
    if (f.is_stored_zero()) {
        os << "0";
    } else {
        bool first = true;
        for (const auto& [e, c] : f.coefficients()) {
            if (!first) os << " + ";
            first = false;
            os << c.str() << " *";
            for (std::size_t t = 0; t < e.size(); ++t) os << " z" << (t + 1) << '^' << e[t];
        }
    }
    os << " ; order=(";
    for (int t = 0; t < f.variable_count(); ++t) {
        if (t) os << ',';
        os << f.order()[static_cast<std::size_t>(t)];
    }
    os << ") precision=(";
    for (int t = 0; t < f.variable_count(); ++t) {
        if (t) os << ',';
        int p = f.precision()[static_cast<std::size_t>(t)];
        if (precision_unbounded(p))
            os << "inf";
        else
            os << p;
    }
    os << ')';
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw UsageError("malformed series literal near position " + std::to_string(i));
    }
    int read_int() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw UsageError("expected an integer in series literal at position " + std::to_string(i));
        return std::stoi(s.substr(start, i - start));
    }
    std::string read_scalar_token() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        if (i == start) throw UsageError("expected a coefficient in series literal at position " + std::to_string(i));
        return s.substr(start, i - start);
    }
};

ExponentVector parse_metadata_vector(Cursor& cur, bool allow_inf) {
    ExponentVector v;
    cur.expect('(');
    cur.skip_ws();
    if (cur.eat(')')) return v;
    while (true) {
        cur.skip_ws();
        if (allow_inf && cur.s.compare(cur.i, 3, "inf") == 0) {
            cur.i += 3;
            v.push_back(kUnboundedPrecision);
        } else {
            v.push_back(cur.read_int());
        }
        if (cur.eat(',')) continue;
        cur.expect(')');
        return v;
    }
}

}  // namespace

TruncatedSeries parse_series(const std::string& text, FieldTag field) {
    const std::size_t semi = text.rfind(';');
    if (semi == std::string::npos) throw UsageError("series literal is missing the metadata block");
    const std::string body = text.substr(0, semi);
    const std::string meta = text.substr(semi + 1);

    Cursor mc{meta};
    mc.skip_ws();
    if (mc.s.compare(mc.i, 6, "order=") != 0) throw UsageError("series metadata is missing order=(...)");
    mc.i += 6;
    ExponentVector order = parse_metadata_vector(mc, false);
    mc.skip_ws();
    if (mc.s.compare(mc.i, 10, "precision=") != 0)
        throw UsageError("series metadata is missing precision=(...)");
    mc.i += 10;
    ExponentVector precision = parse_metadata_vector(mc, true);
    mc.skip_ws();
    if (mc.i != mc.s.size()) throw UsageError("trailing characters in series metadata");
    if (order.size() != precision.size()) throw UsageError("order/precision length mismatch");
    const int n = static_cast<int>(order.size());

    TruncatedSeries f(n, field, order, precision);

    Cursor bc{body};
    bc.skip_ws();
    if (bc.s.compare(bc.i, 1, "0") == 0 &&
        [&] { Cursor probe = bc; ++probe.i; probe.skip_ws(); return probe.i == probe.s.size(); }()) {
        return f;
    }
    while (true) {
        FieldScalar c = FieldScalar::from_string(bc.read_scalar_token(), field);
        bc.expect('*');
        ExponentVector e(static_cast<std::size_t>(n), 0);
        for (int t = 0; t < n; ++t) {
            bc.skip_ws();
            if (bc.i >= bc.s.size() || bc.s[bc.i] != 'z')
                throw UsageError("expected variable z" + std::to_string(t + 1) + " in series term");
            ++bc.i;
            int var = bc.read_int();
            if (var != t + 1) throw UsageError("series term variables must appear as z1 ... zn in order");
            bc.expect('^');
            e[static_cast<std::size_t>(t)] = bc.read_int();
        }
        for (int t = 0; t < n; ++t) {
            if (e[static_cast<std::size_t>(t)] < order[static_cast<std::size_t>(t)] ||
                e[static_cast<std::size_t>(t)] >= precision[static_cast<std::size_t>(t)])
                throw UsageError("series term " + exponent_str(e) + " lies outside the certified box");
        }
        f.insert_term(e, c);
        bc.skip_ws();
        if (bc.i == bc.s.size()) break;
        bc.expect('+');
    }
    return f;
}

}  // namespace flagcoh
