#ifndef ORTHINV_POLY_HPP
#define ORTHINV_POLY_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "orthinv/errors.hpp"
#include "orthinv/fields.hpp"
#include "orthinv/mat.hpp"

namespace orthinv {

inline constexpr std::array<const char*, 4> kVarNames = {"x1", "x2", "y1", "y2"};

/// Exponent vector (u, v, s, t) for x1^u x2^v y1^s y2^t.
struct Monomial {
    std::array<std::uint32_t, 4> e{};

    std::uint32_t degree() const { return e[0] + e[1] + e[2] + e[3]; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

enum class Order {
    Grlex,  // degree first, then lex with x1 > x2 > y1 > y2
    Lex,    // lex with x1 > y1 > x2 > y2
};

// Positive when a > b under ord.
inline int cmp_mono(const Monomial& a, const Monomial& b, Order ord) {
    if (ord == Order::Grlex) {
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        for (int i = 0; i < 4; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
    }
    static constexpr int prec[4] = {0, 2, 1, 3};  // x1 > y1 > x2 > y2
    for (int k = 0; k < 4; ++k) {
        int i = prec[k];
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    }
    return 0;
}

struct MonoGrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return cmp_mono(a, b, Order::Grlex) > 0;
    }
};

inline Monomial mul(const Monomial& a, const Monomial& b) {
    return {{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]}};
}

/// Sparse multivariate polynomial over F_p in x1, x2, y1, y2.
/// Terms are stored in grlex-descending order; no zero coefficients.
class Polynomial {
public:
    using TermMap = std::map<Monomial, std::uint32_t, MonoGrlexDesc>;

    explicit Polynomial(std::uint32_t p) : p_(p) {}

    static Polynomial constant(std::uint32_t p, std::int64_t c) {
        Polynomial f(p);
        f.add_term(Monomial{}, c);
        return f;
    }

    static Polynomial from_term(std::uint32_t p, const Monomial& m, std::int64_t c) {
        Polynomial f(p);
        f.add_term(m, c);
        return f;
    }

    static Polynomial variable(std::uint32_t p, int var, std::uint32_t exp = 1) {
        Monomial m;
        m.e[var] = exp;
        return from_term(p, m, 1);
    }

    std::uint32_t prime() const { return p_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::uint32_t degree() const {  // 0 for the zero polynomial
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool homogeneous() const {
        if (terms_.empty()) return true;
        std::uint32_t d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    void add_term(const Monomial& m, std::int64_t c) {
        std::uint32_t cv = fp_reduce(c, p_);
        if (!cv) return;
        auto [it, inserted] = terms_.emplace(m, cv);
        if (!inserted) {
            it->second = fp_add(it->second, cv, p_);
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
        if (f.p_ != g.p_) throw FieldMismatch();
        Polynomial r = f;
        for (const auto& [m, c] : g.terms_) r.add_term(m, c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
        if (f.p_ != g.p_) throw FieldMismatch();
        Polynomial r = f;
        for (const auto& [m, c] : g.terms_) r.add_term(m, fp_neg(c, f.p_));
        return r;
    }

    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        if (f.p_ != g.p_) throw FieldMismatch();
        Polynomial r(f.p_);
        for (const auto& [mf, cf] : f.terms_)
            for (const auto& [mg, cg] : g.terms_)
                r.add_term(mul(mf, mg), fp_mul(cf, cg, f.p_));
        return r;
    }

    Polynomial scalar_mul(std::int64_t c) const {
        Polynomial r(p_);
        std::uint32_t cv = fp_reduce(c, p_);
        for (const auto& [m, cm] : terms_) r.add_term(m, fp_mul(cm, cv, p_));
        return r;
    }

    Polynomial pow(std::uint32_t n) const {
        Polynomial r = constant(p_, 1);
        for (std::uint32_t i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    std::pair<Monomial, std::uint32_t> leading_term(Order ord = Order::Grlex) const {
        if (terms_.empty()) throw ZeroPolynomial();
        if (ord == Order::Grlex) return *terms_.begin();
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (cmp_mono(it->first, best->first, ord) > 0) best = it;
        return *best;
    }

    friend bool operator==(const Polynomial& f, const Polynomial& g) {
        return f.p_ == g.p_ && f.terms_ == g.terms_;
    }

private:
    std::uint32_t p_;
    TermMap terms_;
};

/// Simultaneous linear substitution by the matrix A: the new value of the
/// variable vector z is given column-wise, z_j -> sum_i A[i][j] z_i, so that
/// substitute_linear(f, A*B) == substitute_linear(substitute_linear(f, B), A).
inline Polynomial substitute_linear(const Polynomial& f, const Mat4& A) {
    if (f.prime() != A.p) throw FieldMismatch();
    if (det(A) == 0) throw SingularMatrix();
    std::array<Polynomial, 4> forms = {Polynomial(A.p), Polynomial(A.p),
                                       Polynomial(A.p), Polynomial(A.p)};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i)
            if (A.at(i, j))
                forms[j] = forms[j] + Polynomial::variable(A.p, i).scalar_mul(A.at(i, j));

    // powers of each substituted form, extended on demand
    std::array<std::vector<Polynomial>, 4> pw;
    for (int j = 0; j < 4; ++j) pw[j].push_back(Polynomial::constant(A.p, 1));
    auto power = [&](int j, std::uint32_t n) -> const Polynomial& {
        while (pw[j].size() <= n) pw[j].push_back(pw[j].back() * forms[j]);
        return pw[j][n];
    };

    Polynomial r(A.p);
    for (const auto& [m, c] : f.terms()) {
        Polynomial t = Polynomial::constant(A.p, c);
        for (int j = 0; j < 4; ++j)
            if (m.e[j]) t = t * power(j, m.e[j]);
        r = r + t;
    }
    return r;
}

/// Exact evaluation at a point of F_{p^e}^4 via the embedding F_p -> F_{p^e}.
inline ExtElem evaluate(const Polynomial& f, const ExtensionField& F,
                        const std::array<ExtElem, 4>& point) {
    if (f.prime() != F.p) throw FieldMismatch();
    std::array<std::vector<ExtElem>, 4> pw;
    for (int j = 0; j < 4; ++j) pw[j].push_back(ext_embed(F, 1));
    auto power = [&](int j, std::uint32_t n) -> const ExtElem& {
        while (pw[j].size() <= n) pw[j].push_back(ext_mul(F, pw[j].back(), point[j]));
        return pw[j][n];
    };
    ExtElem acc = ext_zero(F);
    for (const auto& [m, c] : f.terms()) {
        ExtElem t = ext_embed(F, c);
        for (int j = 0; j < 4; ++j)
            if (m.e[j]) t = ext_mul(F, t, power(j, m.e[j]));
        acc = ext_add(F, acc, t);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Text grammar:
//   poly   := [ '-' ] term ( ('+' | '-') term )*
//   term   := coeff | coeff '*' powers | powers
//   powers := power ( '*' power )*
//   power  := var [ '^' nat ]
//   var    := 'x1' | 'x2' | 'y1' | 'y2'
// Whitespace is insignificant; coefficients reduce mod p.

namespace detail {

struct PolyParser {
    std::string_view s;
    std::size_t pos = 0;
    std::uint32_t p;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    std::uint64_t parse_nat() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw SyntaxError(pos, "expected number");
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            v %= static_cast<std::uint64_t>(p) << 32;  // avoid overflow on huge literals
            ++pos;
        }
        return v;
    }

    int parse_var() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= s.size()) throw SyntaxError(pos, "expected variable");
        char head = s[pos];
        if (head != 'x' && head != 'y') {
            if (std::isalpha(static_cast<unsigned char>(head)))
                throw UnknownVariable(start, std::string(1, head));
            throw SyntaxError(pos, "expected variable");
        }
        ++pos;
        if (pos >= s.size() || (s[pos] != '1' && s[pos] != '2'))
            throw UnknownVariable(start, std::string(s.substr(start, pos - start + 1)));
        int idx = (head == 'x' ? 0 : 2) + (s[pos] - '1');
        ++pos;
        return idx;
    }

    // returns (monomial, coefficient)
    std::pair<Monomial, std::uint32_t> parse_term() {
        skip_ws();
        Monomial m;
        std::uint32_t coef = 1;
        bool have_any = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coef = static_cast<std::uint32_t>(parse_nat() % p);
            have_any = true;
            if (!eat('*')) return {m, coef};
        }
        while (true) {
            int var = parse_var();
            std::uint32_t exp = 1;
            if (eat('^')) exp = static_cast<std::uint32_t>(parse_nat());
            m.e[var] += exp;
            have_any = true;
            if (!eat('*')) break;
        }
        if (!have_any) throw SyntaxError(pos, "empty term");
        return {m, coef};
    }

    Polynomial parse() {
        Polynomial f(p);
        skip_ws();
        bool neg = eat('-');
        auto [m, c] = parse_term();
        f.add_term(m, neg ? fp_neg(c, p) : c);
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            bool minus;
            if (eat('+')) minus = false;
            else if (eat('-')) minus = true;
            else throw SyntaxError(pos, "expected '+' or '-'");
            auto [m2, c2] = parse_term();
            f.add_term(m2, minus ? fp_neg(c2, p) : c2);
        }
        return f;
    }
};

} // namespace detail

inline Polynomial parse_poly(std::string_view text, std::uint32_t p) {
    PrimeField check(p);
    detail::PolyParser parser{text, 0, p};
    return parser.parse();
}

inline std::string format_mono(const Monomial& m) {
    std::string out;
    for (int j = 0; j < 4; ++j) {
        if (!m.e[j]) continue;
        if (!out.empty()) out += "*";
        out += kVarNames[j];
        if (m.e[j] > 1) out += "^" + std::to_string(m.e[j]);
    }
    return out;
}

/// Grlex-descending terms; coefficient 1 omitted, '^1' omitted.
inline std::string format_poly(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : f.terms()) {
        if (!out.empty()) out += " + ";
        std::string mono = format_mono(m);
        if (mono.empty()) out += std::to_string(c);
        else if (c == 1) out += mono;
        else out += std::to_string(c) + "*" + mono;
    }
    return out;
}

} // namespace orthinv

#endif
