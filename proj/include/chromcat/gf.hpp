#ifndef CHROMCAT_GF_HPP
#define CHROMCAT_GF_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chromcat/fp.hpp"

namespace chromcat {

/// The finite field F_q, q = p^m <= 1024, as F_p[w]/(c(w)).
///
/// Element k stands for sum_i d_i w^i where d is the base-p expansion of k
/// (least significant first); k < p are the prime-field elements. The
/// modulus is a Conway polynomial where one is tabulated, else the least
/// irreducible monic polynomial in coefficient order.
class GaloisField {
public:
    static constexpr std::size_t kMaxOrder = 1024;

    explicit GaloisField(std::size_t q)
    {
        if (q < 2 || q > kMaxOrder) {
            throw Error("GaloisField: q = " + std::to_string(q) + " is outside 2.." + std::to_string(kMaxOrder));
        }
        std::size_t p = 2;
        while (q % p != 0) {
            ++p;
        }
        std::size_t m = 0;
        for (std::size_t r = q; r > 1; r /= p) {
            if (r % p != 0) {
                throw Error("GaloisField: q = " + std::to_string(q) + " is not a prime power");
            }
            ++m;
        }
        p_ = static_cast<int>(p);
        m_ = m;
        q_ = q;
        modulus_ = conway(p_, m_);
        if (modulus_.empty() || !build_tables()) {
            modulus_.clear();
            for (std::size_t code = 0; code < q_; ++code) {
                modulus_ = digits(code, p_, m_);
                modulus_.push_back(1);
                if (build_tables()) {
                    break;
                }
                modulus_.clear();
            }
            if (modulus_.empty()) {
                throw Error("GaloisField: no irreducible polynomial found");
            }
        }
    }

    int characteristic() const { return p_; }
    std::size_t degree() const { return m_; }
    std::size_t order() const { return q_; }
    /// Coefficients of the modulus, constant term first (monic).
    const std::vector<int>& modulus() const { return modulus_; }

    std::size_t add(std::size_t a, std::size_t b) const { return add_[a * q_ + b]; }
    std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * q_ + b]; }

    /// F_p-scalar times a field element.
    std::size_t scale(int c, std::size_t a) const { return mul(static_cast<std::size_t>(mod_p(c, p_)), a); }

    std::string element_string(std::size_t a) const
    {
        const auto d = digits(a, p_, m_);
        std::string out;
        for (std::size_t i = m_; i-- > 0;) {
            if (d[i] == 0) {
                continue;
            }
            if (!out.empty()) {
                out += " + ";
            }
            const std::string power = i == 0 ? "" : (i == 1 ? "w" : "w^" + std::to_string(i));
            if (power.empty()) {
                out += std::to_string(d[i]);
            } else {
                out += (d[i] == 1 ? "" : std::to_string(d[i]) + "*") + power;
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    static std::vector<int> conway(int p, std::size_t m)
    {
        static const std::map<std::pair<int, std::size_t>, std::vector<int>> table{
            {{2, 1}, {1, 1}},
            {{2, 2}, {1, 1, 1}},
            {{2, 3}, {1, 1, 0, 1}},
            {{2, 4}, {1, 1, 0, 0, 1}},
            {{2, 5}, {1, 0, 1, 0, 0, 1}},
            {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
            {{3, 1}, {1, 1}},
            {{3, 2}, {2, 2, 1}},
            {{3, 3}, {1, 2, 0, 1}},
            {{3, 4}, {2, 0, 0, 2, 1}},
            {{5, 2}, {2, 4, 1}},
            {{5, 3}, {3, 3, 0, 1}},
            {{7, 2}, {3, 6, 1}},
        };
        auto it = table.find({p, m});
        return it == table.end() ? std::vector<int>{} : it->second;
    }

    std::vector<int> multiply_digits(const std::vector<int>& a, const std::vector<int>& b) const
    {
        std::vector<long long> prod(2 * m_, 0);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < m_; ++j) {
                prod[i + j] += static_cast<long long>(a[i]) * b[j];
            }
        }
        for (std::size_t k = 2 * m_; k-- > m_;) {
            const long long c = prod[k] % p_;
            if (c == 0) {
                continue;
            }
            for (std::size_t i = 0; i <= m_; ++i) {
                prod[k - m_ + i] -= c * modulus_[i];
            }
        }
        std::vector<int> out(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            out[i] = mod_p(prod[i], p_);
        }
        return out;
    }

    /// Fills the tables; false if the modulus is reducible (zero divisors).
    bool build_tables()
    {
        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        std::vector<std::vector<int>> d(q_);
        for (std::size_t a = 0; a < q_; ++a) {
            d[a] = digits(a, p_, m_);
        }
        for (std::size_t a = 0; a < q_; ++a) {
            for (std::size_t b = 0; b < q_; ++b) {
                std::vector<int> s(m_);
                for (std::size_t i = 0; i < m_; ++i) {
                    s[i] = (d[a][i] + d[b][i]) % p_;
                }
                add_[a * q_ + b] = from_digits(s, p_);
                if (b < a) {
                    mul_[a * q_ + b] = mul_[b * q_ + a];
                    continue;
                }
                const std::size_t prod = from_digits(multiply_digits(d[a], d[b]), p_);
                if (a != 0 && b != 0 && prod == 0) {
                    return false;
                }
                mul_[a * q_ + b] = prod;
            }
        }
        return true;
    }

    int p_ = 2;
    std::size_t m_ = 1;
    std::size_t q_ = 2;
    std::vector<int> modulus_;
    std::vector<std::size_t> add_;
    std::vector<std::size_t> mul_;
};

} // namespace chromcat

#endif // CHROMCAT_GF_HPP
