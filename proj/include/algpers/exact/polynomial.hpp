#pragma once

// Sparse multivariate polynomials over Q in variables x1..xt. Terms are
// keyed by exponent vectors in graded-lex order, largest first.

#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "algpers/exact/field.hpp"

namespace algpers {

using Exponent = std::vector<unsigned>;

/// Graded-lex, descending: begin() of a term map is the leading term.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const
    {
        const auto da = std::accumulate(a.begin(), a.end(), 0u);
        const auto db = std::accumulate(b.begin(), b.end(), 0u);
        if (da != db) {
            return da > db;
        }
        return a > b;
    }
};

class Polynomial {
public:
    using Terms = std::map<Exponent, Rational, GrlexGreater>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c)
    {
        Polynomial p(nvars);
        p.add_term(Exponent(nvars, 0), c);
        return p;
    }

    /// x_i, 1-based.
    static Polynomial variable(std::size_t nvars, std::size_t i)
    {
        if (i < 1 || i > nvars) {
            throw std::invalid_argument("variable index out of range");
        }
        Exponent e(nvars, 0);
        e[i - 1] = 1;
        Polynomial p(nvars);
        p.add_term(e, 1);
        return p;
    }

    static Polynomial monomial(const Exponent& e, const Rational& c = 1)
    {
        Polynomial p(e.size());
        p.add_term(e, c);
        return p;
    }

    /// Parse sums of terms like "x1+x2", "3*x1^2*x2 - 1/2*x3 + 1". Variables
    /// are x<i> with 1 <= i <= nvars.
    static Polynomial parse(const std::string& text, std::size_t nvars);

    std::size_t arity() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
    }

    void add_term(const Exponent& e, const Rational& c)
    {
        if (e.size() != nvars_) {
            throw std::invalid_argument("term arity mismatch");
        }
        if (c == 0) {
            return;
        }
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& [e, c] : r.terms_) {
            c = -c;
        }
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        check_arity(a, b);
        Polynomial r = a;
        for (const auto& [e, c] : b.terms_) {
            r.add_term(e, c);
        }
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        check_arity(a, b);
        Polynomial r(a.nvars_);
        Exponent e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                }
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    Polynomial pow(unsigned k) const
    {
        Polynomial r = constant(nvars_, 1);
        for (unsigned i = 0; i < k; ++i) {
            r = r * *this;
        }
        return r;
    }

    /// Exact quotient a / b; throws if b does not divide a.
    friend Polynomial divide_exact(const Polynomial& a, const Polynomial& b)
    {
        check_arity(a, b);
        if (b.is_zero()) {
            throw std::domain_error("polynomial division by zero");
        }
        const auto& [lead_e, lead_c] = *b.terms_.begin();
        Polynomial rem = a;
        Polynomial q(a.nvars_);
        while (!rem.is_zero()) {
            const auto& [re, rc] = *rem.terms_.begin();
            Exponent qe(a.nvars_);
            for (std::size_t i = 0; i < qe.size(); ++i) {
                if (re[i] < lead_e[i]) {
                    throw std::domain_error("polynomial division is not exact");
                }
                qe[i] = re[i] - lead_e[i];
            }
            const Polynomial t = monomial(qe, rc / lead_c);
            q = q + t;
            rem = rem - t * b;
        }
        return q;
    }

    /// Ring homomorphism k[x] -> Q, x_i -> point[i-1].
    Rational evaluate(std::span<const Rational> point) const
    {
        if (point.size() != nvars_) {
            throw std::invalid_argument("evaluation point arity mismatch");
        }
        Rational sum = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                for (unsigned k = 0; k < e[i]; ++k) {
                    t *= point[i];
                }
            }
            sum += t;
        }
        return sum;
    }

    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational mag = c < 0 ? Rational(-c) : c;
            if (!first) {
                out += c < 0 ? " - " : " + ";
            } else if (c < 0) {
                out += "-";
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) {
                    continue;
                }
                if (!mono.empty()) {
                    mono += '*';
                }
                mono += "x" + std::to_string(i + 1);
                if (e[i] > 1) {
                    mono += '^' + std::to_string(e[i]);
                }
            }
            if (mono.empty()) {
                out += mag.str();
            } else if (mag == 1) {
                out += mono;
            } else {
                out += mag.str() + "*" + mono;
            }
        }
        return out;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    static unsigned degree_of(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

    static void check_arity(const Polynomial& a, const Polynomial& b)
    {
        if (a.nvars_ != b.nvars_) {
            throw std::invalid_argument("polynomial arity mismatch: " + std::to_string(a.nvars_) + " vs " +
                                        std::to_string(b.nvars_));
        }
    }

    std::size_t nvars_ = 0;
    Terms terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

inline Polynomial Polynomial::parse(const std::string& text, std::size_t nvars)
{
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("cannot parse polynomial '" + text + "' at offset " + std::to_string(pos) +
                                    ": " + what);
    };
    auto read_uint = [&]() -> std::string {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (start == pos) {
            fail("expected a number");
        }
        return text.substr(start, pos - start);
    };

    Polynomial result(nvars);
    skip();
    if (pos == text.size()) {
        fail("empty expression");
    }
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        skip();
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        Rational coeff = sign;
        Exponent e(nvars, 0);
        bool factor_expected = true;
        while (factor_expected) {
            skip();
            if (pos >= text.size()) {
                fail("dangling operator");
            }
            if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
                Integer num(read_uint());
                Integer den = 1;
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    den = Integer(read_uint());
                    if (den == 0) {
                        fail("zero denominator");
                    }
                }
                coeff *= Rational(num, den);
            } else if (text[pos] == 'x') {
                ++pos;
                const std::size_t idx = std::stoul(read_uint());
                if (idx < 1 || idx > nvars) {
                    fail("variable x" + std::to_string(idx) + " outside x1..x" + std::to_string(nvars));
                }
                unsigned power = 1;
                skip();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip();
                    power = static_cast<unsigned>(std::stoul(read_uint()));
                }
                e[idx - 1] += power;
            } else {
                fail(std::string("unexpected character '") + text[pos] + "'");
            }
            skip();
            factor_expected = pos < text.size() && text[pos] == '*';
            if (factor_expected) {
                ++pos;
            }
        }
        result.add_term(e, coeff);
        skip();
    }
    return result;
}

/// Number of variables mentioned by an expression: the largest i in x<i>.
inline std::size_t max_variable_index(const std::string& text)
{
    std::size_t best = 0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] == 'x' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                ++j;
            }
            best = std::max<std::size_t>(best, std::stoul(text.substr(i + 1, j - i - 1)));
        }
    }
    return best;
}

} // namespace algpers
