#ifndef CHROMCAT_POLY_HPP
#define CHROMCAT_POLY_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "chromcat/fp.hpp"

namespace chromcat {

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

/// Graded-lex order, largest first: higher total degree first, then larger
/// exponent of the earlier variable.
struct GrlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const
    {
        const unsigned da = total_degree(a);
        const unsigned db = total_degree(b);
        if (da != db) {
            return da > db;
        }
        return a > b;
    }
};

/// Default variable names: x, y, z for up to three variables, x1..xn otherwise.
inline std::vector<std::string> default_variable_names(std::size_t n)
{
    if (n <= 3) {
        std::vector<std::string> names{"x", "y", "z"};
        names.resize(n);
        return names;
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("x" + std::to_string(i));
    }
    return names;
}

/// Sparse polynomial over F_p. No zero coefficient is ever stored.
class PolyFp {
public:
    using Terms = std::map<Exponents, int, GrlexDescending>;

    PolyFp() = default;
    PolyFp(int p, std::size_t nvars) : p_(p), nvars_(nvars)
    {
        if (!is_prime(p)) {
            throw Error("PolyFp: modulus " + std::to_string(p) + " is not prime");
        }
    }

    static PolyFp constant(int p, std::size_t nvars, long long c)
    {
        PolyFp f(p, nvars);
        f.add_term(Exponents(nvars, 0), c);
        return f;
    }

    static PolyFp variable(int p, std::size_t nvars, std::size_t i)
    {
        if (i >= nvars) {
            throw Error("PolyFp::variable: index out of range");
        }
        Exponents e(nvars, 0);
        e[i] = 1;
        return monomial(p, e, 1);
    }

    static PolyFp monomial(int p, const Exponents& e, long long c = 1)
    {
        PolyFp f(p, e.size());
        f.add_term(e, c);
        return f;
    }

    int prime() const { return p_; }
    std::size_t variable_count() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int coefficient(const Exponents& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const Exponents& e, long long c)
    {
        if (e.size() != nvars_) {
            throw Error("PolyFp: exponent vector has wrong length");
        }
        const int v = mod_p(c, p_);
        if (v == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(e, v);
        if (!inserted) {
            it->second = mod_p(static_cast<long long>(it->second) + v, p_);
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    /// Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.begin()->first)); }

    bool is_homogeneous() const
    {
        return terms_.empty() || total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
    }

    PolyFp homogeneous_part(unsigned d) const
    {
        PolyFp out(p_, nvars_);
        for (const auto& [e, c] : terms_) {
            if (total_degree(e) == d) {
                out.terms_.emplace(e, c);
            }
        }
        return out;
    }

    /// Drops every term with total degree above d.
    PolyFp truncate_degree(unsigned d) const
    {
        PolyFp out(p_, nvars_);
        for (const auto& [e, c] : terms_) {
            if (total_degree(e) <= d) {
                out.terms_.emplace(e, c);
            }
        }
        return out;
    }

    /// Drops every term with some exponent >= bound (quotient by x_i^bound).
    PolyFp truncate_exponents(unsigned bound) const
    {
        PolyFp out(p_, nvars_);
        for (const auto& [e, c] : terms_) {
            if (std::all_of(e.begin(), e.end(), [&](unsigned k) { return k < bound; })) {
                out.terms_.emplace(e, c);
            }
        }
        return out;
    }

    PolyFp& operator+=(const PolyFp& g)
    {
        check_compatible(g);
        for (const auto& [e, c] : g.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    PolyFp& operator-=(const PolyFp& g)
    {
        check_compatible(g);
        for (const auto& [e, c] : g.terms_) {
            add_term(e, -static_cast<long long>(c));
        }
        return *this;
    }

    friend PolyFp operator+(PolyFp f, const PolyFp& g) { return f += g; }
    friend PolyFp operator-(PolyFp f, const PolyFp& g) { return f -= g; }
    friend PolyFp operator-(const PolyFp& f) { return PolyFp(f.p_, f.nvars_) - f; }

    friend PolyFp operator*(const PolyFp& f, const PolyFp& g)
    {
        f.check_compatible(g);
        PolyFp out(f.p_, f.nvars_);
        Exponents e(f.nvars_);
        for (const auto& [a, ca] : f.terms_) {
            for (const auto& [b, cb] : g.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = a[i] + b[i];
                }
                out.add_term(e, static_cast<long long>(ca) * cb);
            }
        }
        return out;
    }

    PolyFp& operator*=(const PolyFp& g) { return *this = *this * g; }

    friend PolyFp operator*(long long c, const PolyFp& f)
    {
        PolyFp out(f.p_, f.nvars_);
        for (const auto& [e, v] : f.terms_) {
            out.add_term(e, static_cast<long long>(v) * mod_p(c, f.p_));
        }
        return out;
    }

    PolyFp pow(unsigned k) const
    {
        PolyFp result = constant(p_, nvars_, 1);
        PolyFp base = *this;
        while (k > 0) {
            if (k & 1u) {
                result *= base;
            }
            k >>= 1u;
            if (k > 0) {
                base *= base;
            }
        }
        return result;
    }

    friend bool operator==(const PolyFp& a, const PolyFp& b)
    {
        return a.p_ == b.p_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Substitutes x_i -> images[i]; all images share a ring.
    PolyFp substitute(const std::vector<PolyFp>& images) const
    {
        if (images.size() != nvars_) {
            throw Error("PolyFp::substitute: expected " + std::to_string(nvars_) + " images");
        }
        if (images.empty()) {
            return *this;
        }
        const std::size_t target_vars = images.front().variable_count();
        PolyFp out(p_, target_vars);
        std::vector<std::map<unsigned, PolyFp>> powers(nvars_);
        for (const auto& [e, c] : terms_) {
            PolyFp term = constant(p_, target_vars, c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) {
                    continue;
                }
                auto it = powers[i].find(e[i]);
                if (it == powers[i].end()) {
                    if (images[i].p_ != p_ || images[i].nvars_ != target_vars) {
                        throw Error("PolyFp::substitute: images live in different rings");
                    }
                    it = powers[i].emplace(e[i], images[i].pow(e[i])).first;
                }
                term *= it->second;
            }
            out += term;
        }
        return out;
    }

    /// Sends x_j to sum_i M(i, j) x_i; the result has M.rows() variables.
    PolyFp substitute_linear(const FpMatrix& M) const
    {
        if (M.cols() != nvars_ || M.prime() != p_) {
            throw Error("PolyFp::substitute_linear: matrix has " + std::to_string(M.cols()) +
                        " columns for " + std::to_string(nvars_) + " variables");
        }
        std::vector<PolyFp> images;
        for (std::size_t j = 0; j < nvars_; ++j) {
            PolyFp img(p_, M.rows());
            for (std::size_t i = 0; i < M.rows(); ++i) {
                if (M(i, j) != 0) {
                    img += M(i, j) * variable(p_, M.rows(), i);
                }
            }
            images.push_back(std::move(img));
        }
        if (nvars_ == 0) {
            PolyFp out(p_, M.rows());
            for (const auto& [e, c] : terms_) {
                out.add_term(Exponents(M.rows(), 0), c);
            }
            return out;
        }
        return substitute(images);
    }

    std::string to_string(const std::vector<std::string>& names) const
    {
        if (names.size() != nvars_) {
            throw Error("PolyFp::to_string: wrong number of variable names");
        }
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) {
                out += " + ";
            }
            std::string mono;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) {
                    continue;
                }
                if (!mono.empty()) {
                    mono += "*";
                }
                mono += names[i];
                if (e[i] > 1) {
                    mono += "^" + std::to_string(e[i]);
                }
            }
            if (mono.empty()) {
                out += std::to_string(c);
            } else if (c == 1) {
                out += mono;
            } else {
                out += std::to_string(c) + "*" + mono;
            }
        }
        return out;
    }

    std::string to_string() const { return to_string(default_variable_names(nvars_)); }

    /// Parses sums, differences, products, powers, integers and parentheses.
    static PolyFp parse(const std::string& text, int p, const std::vector<std::string>& names);

    static PolyFp parse(const std::string& text, int p, std::size_t nvars)
    {
        return parse(text, p, default_variable_names(nvars));
    }

private:
    void check_compatible(const PolyFp& g) const
    {
        if (p_ != g.p_ || nvars_ != g.nvars_) {
            throw Error("PolyFp: operands live in different rings");
        }
    }

    int p_ = 2;
    std::size_t nvars_ = 0;
    Terms terms_;
};

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& text, int p, const std::vector<std::string>& names)
        : text_(text), p_(p), names_(names)
    {
    }

    PolyFp run()
    {
        PolyFp f = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return f;
    }

private:
    PolyFp expr()
    {
        skip_space();
        bool negate = false;
        if (peek() == '-' || peek() == '+') {
            negate = text_[pos_++] == '-';
        }
        PolyFp f = term();
        if (negate) {
            f = -f;
        }
        while (true) {
            skip_space();
            const char c = peek();
            if (c != '+' && c != '-') {
                return f;
            }
            ++pos_;
            if (c == '+') {
                f += term();
            } else {
                f -= term();
            }
        }
    }

    PolyFp term()
    {
        PolyFp f = factor();
        while (true) {
            skip_space();
            if (peek() != '*') {
                return f;
            }
            ++pos_;
            f *= factor();
        }
    }

    PolyFp factor()
    {
        PolyFp base = atom();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            base = base.pow(static_cast<unsigned>(integer()));
        }
        return base;
    }

    PolyFp atom()
    {
        skip_space();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            PolyFp f = expr();
            skip_space();
            if (peek() != ')') {
                fail("missing ')'");
            }
            ++pos_;
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return PolyFp::constant(p_, names_.size(), integer());
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name = text_.substr(start, pos_ - start);
            auto it = std::find(names_.begin(), names_.end(), name);
            if (it == names_.end()) {
                fail("unknown variable '" + name + "'");
            }
            return PolyFp::variable(p_, names_.size(), static_cast<std::size_t>(it - names_.begin()));
        }
        fail(pos_ < text_.size() ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
        return {};
    }

    long long integer()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an integer");
        }
        return std::stoll(text_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error("polynomial parse error at position " + std::to_string(pos_) + " in '" + text_ + "': " + what);
    }

    const std::string& text_;
    int p_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline PolyFp PolyFp::parse(const std::string& text, int p, const std::vector<std::string>& names)
{
    return detail::PolyParser(text, p, names).run();
}

/// Exact equality of canonical forms.
inline bool relation_check(const PolyFp& lhs, const PolyFp& rhs) { return lhs == rhs; }

} // namespace chromcat

#endif // CHROMCAT_POLY_HPP
