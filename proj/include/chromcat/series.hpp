#ifndef CHROMCAT_SERIES_HPP
#define CHROMCAT_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chromcat/fp.hpp"
#include "chromcat/poly.hpp"

namespace chromcat {

/// Exact rationals.
struct RationalField {
    using value_type = boost::multiprecision::cpp_rational;

    value_type zero() const { return 0; }
    value_type from_int(long long v) const { return v; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    bool is_zero(const value_type& a) const { return a == 0; }
    std::string to_string(const value_type& a) const { return a.str(); }
    friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// F_p with values in [0, p).
struct PrimeField {
    using value_type = int;

    int p = 2;

    value_type zero() const { return 0; }
    value_type from_int(long long v) const { return mod_p(v, p); }
    value_type add(value_type a, value_type b) const { return (a + b) % p; }
    value_type sub(value_type a, value_type b) const { return mod_p(static_cast<long long>(a) - b, p); }
    value_type mul(value_type a, value_type b) const { return static_cast<int>((static_cast<long long>(a) * b) % p); }
    bool is_zero(value_type a) const { return a == 0; }
    std::string to_string(value_type a) const { return std::to_string(a); }
    friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

/// Power series in 1..3 variables truncated above total degree D, stored
/// densely over the box [0, D]^nvars (entries above D stay zero).
template <class Field>
class TruncSeries {
public:
    using value_type = typename Field::value_type;

    TruncSeries(Field field, std::size_t nvars, unsigned D)
        : field_(field), nvars_(nvars), D_(D), coeffs_(ipow(D + 1, nvars), field.zero())
    {
        if (nvars < 1 || nvars > 3) {
            throw Error("TruncSeries: between 1 and 3 variables are supported");
        }
    }

    static TruncSeries variable(Field field, std::size_t nvars, unsigned D, std::size_t i)
    {
        TruncSeries s(field, nvars, D);
        if (D >= 1) {
            Exponents e(nvars, 0);
            e.at(i) = 1;
            s.set(e, field.from_int(1));
        }
        return s;
    }

    static TruncSeries constant(Field field, std::size_t nvars, unsigned D, long long c)
    {
        TruncSeries s(field, nvars, D);
        s.set(Exponents(nvars, 0), field.from_int(c));
        return s;
    }

    const Field& field() const { return field_; }
    std::size_t variable_count() const { return nvars_; }
    unsigned truncation() const { return D_; }

    const value_type& coeff(const Exponents& e) const { return coeffs_[index(e)]; }

    void set(const Exponents& e, value_type v)
    {
        if (total_degree(e) > D_) {
            return;
        }
        coeffs_[index(e)] = std::move(v);
    }

    /// Exponent vectors with a nonzero coefficient, in storage order.
    std::vector<Exponents> support() const
    {
        std::vector<Exponents> out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (!field_.is_zero(coeffs_[k])) {
                out.push_back(exponents(k));
            }
        }
        return out;
    }

    bool has_constant_term() const { return !field_.is_zero(coeffs_[0]); }

    /// Lowest total degree with a nonzero coefficient, or D + 1 if zero.
    unsigned valuation() const
    {
        unsigned best = D_ + 1;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (!field_.is_zero(coeffs_[k])) {
                best = std::min(best, total_degree(exponents(k)));
            }
        }
        return best;
    }

    TruncSeries& operator+=(const TruncSeries& o)
    {
        check(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            coeffs_[k] = field_.add(coeffs_[k], o.coeffs_[k]);
        }
        return *this;
    }

    TruncSeries& operator-=(const TruncSeries& o)
    {
        check(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            coeffs_[k] = field_.sub(coeffs_[k], o.coeffs_[k]);
        }
        return *this;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
    {
        a.check(b);
        TruncSeries out(a.field_, a.nvars_, a.D_);
        const auto sa = a.nonzero_terms();
        const auto sb = b.nonzero_terms();
        Exponents e(a.nvars_);
        for (const auto& [ea, ka] : sa) {
            const unsigned da = total_degree(ea);
            for (const auto& [eb, kb] : sb) {
                if (da + total_degree(eb) > a.D_) {
                    continue;
                }
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                }
                auto& slot = out.coeffs_[out.index(e)];
                slot = a.field_.add(slot, a.field_.mul(a.coeffs_[ka], b.coeffs_[kb]));
            }
        }
        return out;
    }

    TruncSeries scaled(const value_type& c) const
    {
        TruncSeries out = *this;
        for (auto& v : out.coeffs_) {
            v = field_.mul(v, c);
        }
        return out;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b)
    {
        return a.nvars_ == b.nvars_ && a.D_ == b.D_ && a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

    /// f(args[0], .., args[k-1]); every argument needs zero constant term
    /// so that truncation commutes with substitution.
    TruncSeries compose(const std::vector<TruncSeries>& args) const
    {
        if (args.size() != nvars_) {
            throw Error("TruncSeries::compose: expected " + std::to_string(nvars_) + " arguments");
        }
        const std::size_t m = args.front().nvars_;
        for (const auto& a : args) {
            if (a.nvars_ != m || a.D_ != D_ || !(a.field_ == field_)) {
                throw Error("TruncSeries::compose: arguments live in different rings");
            }
            if (a.has_constant_term()) {
                throw Error("TruncSeries::compose: argument has a constant term");
            }
        }
        // powers[i][k] = args[i]^k
        std::vector<std::vector<TruncSeries>> powers(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            powers[i].push_back(constant(field_, m, D_, 1));
            for (unsigned k = 1; k <= D_; ++k) {
                powers[i].push_back(powers[i].back() * args[i]);
            }
        }
        TruncSeries out(field_, m, D_);
        for (const auto& [e, k] : nonzero_terms()) {
            TruncSeries term = constant(field_, m, D_, 1).scaled(coeffs_[k]);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] > 0) {
                    term = term * powers[i][e[i]];
                }
            }
            out += term;
        }
        return out;
    }

    /// Coefficients as a polynomial (F_p series only).
    PolyFp to_poly() const
        requires std::is_same_v<Field, PrimeField>
    {
        PolyFp f(field_.p, nvars_);
        for (const auto& [e, k] : nonzero_terms()) {
            f.add_term(e, coeffs_[k]);
        }
        return f;
    }

    std::string to_string(const std::vector<std::string>& names) const
    {
        std::vector<std::pair<Exponents, std::size_t>> terms = nonzero_terms();
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
            const unsigned da = total_degree(a.first);
            const unsigned db = total_degree(b.first);
            return da != db ? da < db : a.first > b.first;
        });
        if (terms.empty()) {
            return "0";
        }
        std::string out;
        for (const auto& [e, k] : terms) {
            if (!out.empty()) {
                out += " + ";
            }
            std::string mono;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) {
                    continue;
                }
                mono += (mono.empty() ? "" : "*") + names.at(i) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
            }
            const std::string c = field_.to_string(coeffs_[k]);
            if (mono.empty()) {
                out += c;
            } else if (c == "1") {
                out += mono;
            } else {
                out += c + "*" + mono;
            }
        }
        return out;
    }

    std::vector<std::pair<Exponents, std::size_t>> nonzero_terms() const
    {
        std::vector<std::pair<Exponents, std::size_t>> out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (!field_.is_zero(coeffs_[k])) {
                out.emplace_back(exponents(k), k);
            }
        }
        return out;
    }

    const value_type& raw(std::size_t k) const { return coeffs_[k]; }
    std::size_t raw_size() const { return coeffs_.size(); }
    Exponents exponents(std::size_t k) const
    {
        Exponents e(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            e[i] = static_cast<unsigned>(k % (D_ + 1));
            k /= D_ + 1;
        }
        return e;
    }

private:
    std::size_t index(const Exponents& e) const
    {
        if (e.size() != nvars_) {
            throw Error("TruncSeries: exponent vector has wrong length");
        }
        std::size_t k = 0;
        for (std::size_t i = nvars_; i-- > 0;) {
            if (e[i] > D_) {
                throw Error("TruncSeries: exponent above truncation degree");
            }
            k = k * (D_ + 1) + e[i];
        }
        return k;
    }

    void check(const TruncSeries& o) const
    {
        if (o.nvars_ != nvars_ || o.D_ != D_ || !(o.field_ == field_)) {
            throw Error("TruncSeries: operands live in different rings");
        }
    }

    Field field_;
    std::size_t nvars_;
    unsigned D_;
    std::vector<value_type> coeffs_;
};

using RationalSeries = TruncSeries<RationalField>;
using FpSeries = TruncSeries<PrimeField>;

/// Compositional inverse of a one-variable series f = x + O(x^2).
inline RationalSeries compositional_inverse(const RationalSeries& f)
{
    if (f.variable_count() != 1 || f.has_constant_term() || f.coeff({1}) != 1) {
        throw Error("compositional_inverse: series must have the form x + higher terms");
    }
    const unsigned D = f.truncation();
    RationalSeries g = RationalSeries::variable(f.field(), 1, D, 0);
    for (unsigned k = 2; k <= D; ++k) {
        const auto fg = f.compose({g});
        g.set({k}, g.coeff({k}) - fg.coeff({k}));
    }
    return g;
}

/// Reduces a rational series mod p; every coefficient must be p-integral.
inline FpSeries reduce_mod_p(const RationalSeries& f, int p)
{
    FpSeries out(PrimeField{p}, f.variable_count(), f.truncation());
    for (const auto& [e, k] : f.nonzero_terms()) {
        const auto& c = f.raw(k);
        const auto num = boost::multiprecision::numerator(c);
        const auto den = boost::multiprecision::denominator(c);
        if (den % p == 0) {
            throw Error("reduce_mod_p: coefficient " + c.str() + " is not " + std::to_string(p) + "-integral");
        }
        const int n = mod_p(static_cast<long long>(num % p), p);
        const int d = mod_p(static_cast<long long>(den % p), p);
        out.set(e, static_cast<int>((static_cast<long long>(n) * inv_mod(d, p)) % p));
    }
    return out;
}

} // namespace chromcat

#endif // CHROMCAT_SERIES_HPP
