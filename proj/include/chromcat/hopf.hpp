#ifndef CHROMCAT_HOPF_HPP
#define CHROMCAT_HOPF_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "chromcat/cyc.hpp"
#include "chromcat/fgl.hpp"
#include "chromcat/poly.hpp"

namespace chromcat {

/// A ∘-product [c] ∘ b_{i_1} ∘ ... ∘ b_{i_k} (indices sorted, all >= 1).
/// grouplike < 0 means no grouplike factor.
struct CircMonomial {
    int grouplike = -1;
    std::vector<unsigned> b;

    static CircMonomial tag(int c) { return CircMonomial{c, {}}; }
    static CircMonomial product(std::vector<unsigned> indices)
    {
        std::sort(indices.begin(), indices.end());
        return CircMonomial{-1, std::move(indices)};
    }

    bool is_grouplike() const { return b.empty(); }
    unsigned weight() const { return std::accumulate(b.begin(), b.end(), 0u); }

    friend auto operator<=>(const CircMonomial&, const CircMonomial&) = default;
};

/// A *-product of ∘-monomials, sorted; the empty product is [0].
using StarTerm = std::vector<CircMonomial>;

inline unsigned weight(const StarTerm& t)
{
    unsigned w = 0;
    for (const auto& m : t) {
        w += m.weight();
    }
    return w;
}

inline std::string to_string(const CircMonomial& m)
{
    std::string out;
    if (m.grouplike >= 0) {
        out = "[" + std::to_string(m.grouplike) + "]";
    }
    for (auto i : m.b) {
        out += (out.empty() ? "" : "∘") + std::string("b_") + std::to_string(i);
    }
    return out.empty() ? "[1]" : out;
}

inline std::string to_string(const StarTerm& t)
{
    if (t.empty()) {
        return "[0]";
    }
    std::string out;
    for (const auto& m : t) {
        out += (out.empty() ? "" : " * ") + to_string(m);
    }
    return out;
}

/// F_p[s, t]-linear combinations of *-products of ∘-monomials in the
/// elements b_i and grouplikes [c], for a height-n theory at prime p.
///
/// Always-valid rewrites are applied on insertion: b_0 = [0], [c]∘[d] = [cd],
/// [0]∘m = 0 and [1]∘m = m for m of positive degree, [c]*[d] = [c+d] with
/// [0] the *-unit, and pure b_1-powers of weight >= p^n vanish. Other
/// ∘-monomials are kept as formal symbols. Coefficients are truncated above
/// total degree D and terms of weight above D are dropped.
class HopfExpr {
public:
    HopfExpr(int p, unsigned height, unsigned D, std::size_t coeff_vars = 2)
        : p_(p), height_(height), D_(D), coeff_vars_(coeff_vars)
    {
        bound_ = static_cast<unsigned>(ipow(static_cast<std::size_t>(p), height));
    }

    static HopfExpr grouplike(int p, unsigned height, unsigned D, int c, std::size_t coeff_vars = 2)
    {
        HopfExpr e(p, height, D, coeff_vars);
        e.add_term({CircMonomial::tag(mod_p(c, p))}, PolyFp::constant(p, coeff_vars, 1));
        return e;
    }

    /// The *-unit [0].
    static HopfExpr star_unit(int p, unsigned height, unsigned D, std::size_t coeff_vars = 2)
    {
        return grouplike(p, height, D, 0, coeff_vars);
    }

    int prime() const { return p_; }
    unsigned height() const { return height_; }
    unsigned truncation() const { return D_; }
    std::size_t coefficient_variables() const { return coeff_vars_; }
    const std::map<StarTerm, PolyFp>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    PolyFp coefficient(const StarTerm& key) const
    {
        auto canon = canonical(key);
        if (!canon) {
            return PolyFp(p_, coeff_vars_);
        }
        auto it = terms_.find(*canon);
        return it == terms_.end() ? PolyFp(p_, coeff_vars_) : it->second;
    }

    void add_term(const StarTerm& term, const PolyFp& coeff)
    {
        if (coeff.prime() != p_ || coeff.variable_count() != coeff_vars_) {
            throw Error("HopfExpr: coefficient lives in a different ring");
        }
        auto canon = canonical(term);
        if (!canon || weight(*canon) > D_) {
            return;
        }
        const PolyFp c = coeff.truncate_degree(D_);
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(std::move(*canon), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    HopfExpr& operator+=(const HopfExpr& o)
    {
        check(o);
        for (const auto& [t, c] : o.terms_) {
            add_term(t, c);
        }
        return *this;
    }

    friend HopfExpr operator+(HopfExpr a, const HopfExpr& b) { return a += b; }

    friend bool operator==(const HopfExpr& a, const HopfExpr& b)
    {
        return a.p_ == b.p_ && a.height_ == b.height_ && a.terms_ == b.terms_;
    }

    /// Multiplies every coefficient by a polynomial.
    HopfExpr scaled(const PolyFp& c) const
    {
        HopfExpr out = empty_like();
        for (const auto& [t, k] : terms_) {
            out.add_term(t, k * c);
        }
        return out;
    }

    /// *-product.
    friend HopfExpr star(const HopfExpr& a, const HopfExpr& b)
    {
        a.check(b);
        HopfExpr out = a.empty_like();
        for (const auto& [ta, ca] : a.terms_) {
            const unsigned wa = weight(ta);
            for (const auto& [tb, cb] : b.terms_) {
                if (wa + weight(tb) > a.D_) {
                    continue;
                }
                StarTerm t = ta;
                t.insert(t.end(), tb.begin(), tb.end());
                out.add_term(t, (ca * cb).truncate_degree(a.D_));
            }
        }
        return out;
    }

    /// ∘-product, defined here only when every term is a single ∘-monomial
    /// (or [0]); distributing ∘ over * is outside this calculus.
    friend HopfExpr circ(const HopfExpr& a, const HopfExpr& b)
    {
        a.check(b);
        HopfExpr out = a.empty_like();
        for (const auto& [ta, ca] : a.terms_) {
            const auto ma = single_factor(ta);
            for (const auto& [tb, cb] : b.terms_) {
                if (weight(ta) + weight(tb) > a.D_) {
                    continue;
                }
                const auto mb = single_factor(tb);
                CircMonomial m;
                if (ma.grouplike >= 0 && mb.grouplike >= 0) {
                    m.grouplike = mod_p(static_cast<long long>(ma.grouplike) * mb.grouplike, a.p_);
                } else {
                    m.grouplike = std::max(ma.grouplike, mb.grouplike);
                }
                m.b = ma.b;
                m.b.insert(m.b.end(), mb.b.begin(), mb.b.end());
                std::sort(m.b.begin(), m.b.end());
                out.add_term({m}, (ca * cb).truncate_degree(a.D_));
            }
        }
        return out;
    }

    HopfExpr empty_like() const { return HopfExpr(p_, height_, D_, coeff_vars_); }

    std::string to_string(const std::vector<std::string>& names) const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto& [t, c] : terms_) {
            std::string coeff = c.to_string(names);
            std::string piece;
            if (coeff == "1") {
                piece = to_string_term(t);
            } else if (c.term_count() == 1 && coeff.find('*') == std::string::npos) {
                piece = coeff + " " + to_string_term(t);
            } else {
                piece = "(" + coeff + ") " + to_string_term(t);
            }
            out += (out.empty() ? "" : " + ") + piece;
        }
        return out;
    }

    std::string to_string() const { return to_string(coefficient_names(coeff_vars_)); }

    static std::vector<std::string> coefficient_names(std::size_t n)
    {
        std::vector<std::string> names{"s", "t", "u"};
        if (n > names.size()) {
            throw Error("HopfExpr: at most three coefficient variables");
        }
        names.resize(n);
        return names;
    }

    nlohmann::json to_json() const
    {
        nlohmann::json out = nlohmann::json::array();
        const auto names = coefficient_names(coeff_vars_);
        for (const auto& [t, c] : terms_) {
            out.push_back({{"term", to_string_term(t)}, {"coefficient", c.to_string(names)}});
        }
        return out;
    }

private:
    static std::string to_string_term(const StarTerm& t) { return chromcat::to_string(t); }

    static CircMonomial single_factor(const StarTerm& t)
    {
        if (t.empty()) {
            return CircMonomial::tag(0);
        }
        if (t.size() != 1) {
            throw Error("HopfExpr: ∘-product with a *-product of several factors is not supported");
        }
        return t.front();
    }

    std::optional<CircMonomial> canonical(CircMonomial m) const
    {
        std::sort(m.b.begin(), m.b.end());
        if (m.grouplike >= 0) {
            m.grouplike = mod_p(m.grouplike, p_);
        }
        // b_0 is the grouplike [0]
        const auto zeros = static_cast<std::size_t>(std::count(m.b.begin(), m.b.end(), 0u));
        if (zeros > 0) {
            m.b.erase(m.b.begin(), m.b.begin() + static_cast<std::ptrdiff_t>(zeros));
            m.grouplike = 0;
        }
        if (!m.b.empty()) {
            if (m.grouplike == 0) {
                return std::nullopt;
            }
            if (m.grouplike == 1) {
                m.grouplike = -1;
            }
            if (m.b.back() == 1 && m.b.size() >= bound_) {
                return std::nullopt;
            }
        } else if (m.grouplike < 0) {
            m.grouplike = 1;
        }
        return m;
    }

    std::optional<StarTerm> canonical(const StarTerm& t) const
    {
        StarTerm out;
        long long tag = 0;
        for (const auto& f : t) {
            auto m = canonical(f);
            if (!m) {
                return std::nullopt;
            }
            if (m->is_grouplike()) {
                tag += m->grouplike;
            } else {
                out.push_back(std::move(*m));
            }
        }
        if (mod_p(tag, p_) != 0) {
            out.push_back(CircMonomial::tag(mod_p(tag, p_)));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void check(const HopfExpr& o) const
    {
        if (o.p_ != p_ || o.height_ != height_ || o.D_ != D_ || o.coeff_vars_ != coeff_vars_) {
            throw Error("HopfExpr: operands live in different settings");
        }
    }

    int p_;
    unsigned height_;
    unsigned D_;
    std::size_t coeff_vars_;
    unsigned bound_ = 2;
    std::map<StarTerm, PolyFp> terms_;
};

/// Quotient by *-decomposables: [c]∘m -> c m for m of positive degree,
/// *-products of two or more positive-degree factors -> 0, [c]*m -> m.
/// Pure grouplike terms are kept.
inline HopfExpr mod_indecomposables(const HopfExpr& e)
{
    HopfExpr out = e.empty_like();
    for (const auto& [t, c] : e.terms()) {
        StarTerm positive;
        StarTerm grouplikes;
        long long scale = 1;
        for (const auto& f : t) {
            if (f.is_grouplike()) {
                grouplikes.push_back(f);
                continue;
            }
            CircMonomial m = f;
            if (m.grouplike >= 0) {
                scale *= m.grouplike;
                m.grouplike = -1;
            }
            positive.push_back(std::move(m));
        }
        if (positive.size() >= 2) {
            continue;
        }
        const PolyFp coeff = scale == 1 ? c : scale * c;
        out.add_term(positive.empty() ? grouplikes : positive, coeff);
    }
    return out;
}

/// Coefficient of b_{i_1}∘...∘b_{i_k} in total (s, t)-degree d.
inline PolyFp coefficient_of(const HopfExpr& e, std::vector<unsigned> indices, unsigned degree)
{
    return e.coefficient({CircMonomial::product(std::move(indices))}).homogeneous_part(degree);
}

/// Coefficient of an arbitrary *-term in total degree d.
inline PolyFp coefficient_of(const HopfExpr& e, const StarTerm& term, unsigned degree)
{
    return e.coefficient(term).homogeneous_part(degree);
}

/// b(u) = b_0 + sum_{i >= 1} b_i u^i for a series u without constant term.
inline HopfExpr b_series(const FpSeries& u, unsigned height)
{
    const int p = u.field().p;
    const unsigned D = u.truncation();
    const std::size_t vars = u.variable_count();
    HopfExpr out = HopfExpr::star_unit(p, height, D, vars);
    FpSeries power = FpSeries::constant(u.field(), vars, D, 1);
    for (unsigned i = 1; i <= D; ++i) {
        power = power * u;
        const PolyFp c = power.to_poly();
        if (!c.is_zero()) {
            out.add_term({CircMonomial::product({i})}, c);
        }
    }
    return out;
}

/// The pushforward of beta(s) (x) beta(t) (x) ... along a class written as a
/// formal sum: u^a -> b(u)^{∘a}, coefficient c -> [c]∘(...), sums -> *-products.
/// The empty sum goes to the *-unit [0]; the constant 1 goes to [1].
inline HopfExpr beta_pushforward(const FormalSum& expr, const FGL& F, unsigned D)
{
    if (expr.prime() != F.p) {
        throw Error("beta_pushforward: expression and formal group law have different primes");
    }
    if (D > F.degree) {
        throw Error("beta_pushforward: degree " + std::to_string(D) + " exceeds the formal group law truncation " +
                    std::to_string(F.degree));
    }
    const std::size_t vars = expr.rank();
    const PrimeField k{F.p};
    FGL law = F;
    if (D < F.degree) {
        FpSeries cut(k, 2, D);
        for (const auto& e : F.law.support()) {
            cut.set(e, F.law.coeff(e));
        }
        law.law = cut;
        law.degree = D;
    }
    auto argument_series = [&](const std::vector<int>& arg) {
        FpSeries acc(k, vars, D);
        bool first = true;
        for (std::size_t i = 0; i < vars; ++i) {
            if (arg[i] == 0) {
                continue;
            }
            const auto term = law.multiple(static_cast<unsigned>(arg[i]), FpSeries::variable(k, vars, D, i));
            acc = first ? term : law.add(acc, term);
            first = false;
        }
        return acc;
    };
    HopfExpr result = HopfExpr::star_unit(F.p, F.height, D, vars);
    for (const auto& m : expr.terms()) {
        HopfExpr mono = HopfExpr::grouplike(F.p, F.height, D, m.coeff, vars);
        for (const auto& f : m.factors) {
            const HopfExpr b = b_series(argument_series(f.arg), F.height);
            for (unsigned e = 0; e < f.exponent; ++e) {
                mono = circ(mono, b);
            }
        }
        result = star(result, mono);
    }
    return result;
}

/// Image of beta_t under the coalgebra map induced by c * x^i alone:
/// [c]∘ sum over compositions of t into i positive parts of b_{j_1}∘...∘b_{j_i};
/// for i = 0 it is [c] on beta_0 and 0 elsewhere.
inline HopfExpr hurewicz_monomial(int p, unsigned height, int c, unsigned i, unsigned t, unsigned D)
{
    HopfExpr out(p, height, D, 1);
    const PolyFp one = PolyFp::constant(p, 1, 1);
    if (i == 0) {
        if (t == 0) {
            out.add_term({CircMonomial::tag(c)}, one);
        }
        return out;
    }
    if (t == 0) {
        out.add_term({CircMonomial::tag(0)}, one);
        return out;
    }
    std::map<std::vector<unsigned>, long long> counts;
    std::vector<unsigned> parts;
    auto recurse = [&](auto&& self, unsigned left, unsigned slots) -> void {
        if (slots == 0) {
            if (left == 0) {
                auto key = parts;
                std::sort(key.begin(), key.end());
                ++counts[key];
            }
            return;
        }
        for (unsigned j = 1; j + (slots - 1) <= left; ++j) {
            parts.push_back(j);
            self(self, left - j, slots - 1);
            parts.pop_back();
        }
    };
    recurse(recurse, t, i);
    for (const auto& [key, n] : counts) {
        CircMonomial m{mod_p(c, p), key};
        out.add_term({m}, PolyFp::constant(p, 1, n));
    }
    return out;
}

/// Image of beta_t under the map induced by an element sum_i c_i x^i of
/// K(n)*(BZ/p) with v_n = 1: the coproduct of beta_t distributes over the
/// summands and their images are *-multiplied. No reduction applied.
inline HopfExpr hurewicz_raw(const PolyFp& element, unsigned height, unsigned t)
{
    const int p = element.prime();
    const unsigned bound = static_cast<unsigned>(ipow(static_cast<std::size_t>(p), height));
    if (element.variable_count() != 1) {
        throw Error("hurewicz: element must be a polynomial in one variable");
    }
    if (element.degree() >= static_cast<int>(bound)) {
        throw Error("hurewicz: element has a power of x at or above p^n");
    }
    if (t >= bound) {
        throw Error("hurewicz: beta index must lie below p^n");
    }
    const unsigned D = bound;
    // acc[j]: image of beta_j under the summands processed so far
    std::vector<HopfExpr> acc;
    for (unsigned j = 0; j <= t; ++j) {
        acc.push_back(j == 0 ? HopfExpr::star_unit(p, height, D, 1) : HopfExpr(p, height, D, 1));
    }
    for (const auto& [e, c] : element.terms()) {
        std::vector<HopfExpr> images;
        for (unsigned j = 0; j <= t; ++j) {
            images.push_back(hurewicz_monomial(p, height, c, e[0], j, D));
        }
        std::vector<HopfExpr> next;
        for (unsigned j = 0; j <= t; ++j) {
            HopfExpr sum(p, height, D, 1);
            for (unsigned a = 0; a <= j; ++a) {
                sum += star(acc[a], images[j - a]);
            }
            next.push_back(std::move(sum));
        }
        acc = std::move(next);
    }
    return acc[t];
}

inline HopfExpr hurewicz_eval(const PolyFp& element, unsigned height, unsigned t)
{
    return mod_indecomposables(hurewicz_raw(element, height, t));
}

/// Nonzero as a value of the coalgebra map: on beta_0 the zero class maps
/// to the *-unit [0], on beta_t (t > 0) to 0.
inline bool is_nonzero_image(const HopfExpr& image, unsigned t)
{
    if (t == 0) {
        return !(image == HopfExpr::star_unit(image.prime(), image.height(), image.truncation(),
                                              image.coefficient_variables()));
    }
    return !image.is_zero();
}

struct InjectivityRow {
    PolyFp element;
    unsigned witness = 0;
    bool expected_witness = true; // witness is the one named by the standard argument
    std::string image;
};

struct InjectivityReport {
    int p = 2;
    unsigned height = 1;
    std::vector<InjectivityRow> rows;
    bool passed = true;
};

/// Checks every nonzero homogeneous element (c x^i, and c_0 + c_top x^top
/// in degrees divisible by 2(p^n - 1)) has some beta_t with nonzero image.
inline InjectivityReport verify_kn_injectivity(int p, unsigned height)
{
    const unsigned bound = static_cast<unsigned>(ipow(static_cast<std::size_t>(p), height));
    if (bound > 16) {
        throw Error("verify_kn_injectivity: p^n must be at most 16");
    }
    const unsigned top = bound - 1;
    InjectivityReport report{p, height, {}, true};
    std::vector<std::pair<PolyFp, unsigned>> candidates; // element, expected witness
    auto mono = [&](int c, unsigned i) { return PolyFp::monomial(p, {i}, c); };
    for (unsigned i = 1; i < top; ++i) {
        for (int c = 1; c < p; ++c) {
            candidates.emplace_back(mono(c, i), i);
        }
    }
    for (int c0 = 0; c0 < p; ++c0) {
        for (int ct = 0; ct < p; ++ct) {
            if (c0 == 0 && ct == 0) {
                continue;
            }
            PolyFp f = mono(c0, 0) + mono(ct, top);
            candidates.emplace_back(std::move(f), ct != 0 ? top : 0);
        }
    }
    for (auto& [f, expected] : candidates) {
        InjectivityRow row{f, expected, true, {}};
        HopfExpr image = hurewicz_eval(f, height, expected);
        if (!is_nonzero_image(image, expected)) {
            row.expected_witness = false;
            bool found = false;
            for (unsigned t = 0; t < bound && !found; ++t) {
                image = hurewicz_eval(f, height, t);
                if (is_nonzero_image(image, t)) {
                    row.witness = t;
                    found = true;
                }
            }
            if (!found) {
                throw Error("verify_kn_injectivity: " + f.to_string({"x"}) + " has zero image on every beta_t");
            }
        }
        row.image = image.to_string({"s"});
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace chromcat

#endif // CHROMCAT_HOPF_HPP
