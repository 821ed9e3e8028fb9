#include "lsw/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace lsw {

Polynomial Polynomial::constant(Ring ring, const Scalar& c) {
    Polynomial p(ring);
    p.add_term(Monomial::one(ring->nvars()), c);
    return p;
}

Polynomial Polynomial::variable(Ring ring, size_t index) {
    Polynomial p(ring);
    p.add_term(Monomial::var(ring->nvars(), index), ring->field().one());
    return p;
}

Polynomial Polynomial::term(Ring ring, Monomial m, const Scalar& c) {
    Polynomial p(ring);
    p.add_term(m, c);
    return p;
}

int64_t Polynomial::total_degree() const {
    int64_t d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    const Field& f = ring_->field();
    if (f.is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = f.add(it->second, c);
        if (f.is_zero(it->second)) terms_.erase(it);
    }
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw RingError("polynomial context mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_ring(o);
    const Field& f = ring_->field();
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, f.neg(c));
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    const Field& f = ring_->field();
    Polynomial r(ring_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, f.mul(c1, c2));
    return r;
}

Polynomial Polynomial::operator-() const {
    const Field& f = ring_->field();
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, f.neg(c));
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    const Field& f = ring_->field();
    Polynomial r(ring_);
    if (f.is_zero(c)) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, f.mul(k, c));
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    Polynomial r(ring_);
    for (const auto& [m1, c] : terms_) r.terms_.emplace(m1 * m, c);
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = constant(ring_, ring_->field().one());
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    check_same_ring(o);
    return terms_ == o.terms_;
}

std::vector<std::pair<Monomial, Scalar>> Polynomial::sorted_terms(const TermOrder& order) const {
    std::vector<std::pair<Monomial, Scalar>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
        return order.greater(a.first, b.first);
    });
    return v;
}

std::pair<Monomial, Scalar> Polynomial::leading_term(const TermOrder& order) const {
    if (terms_.empty()) throw RingError("leading term of the zero polynomial");
    auto it = terms_.begin();
    auto best = it;
    for (++it; it != terms_.end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return *best;
}

std::optional<std::vector<int64_t>> Polynomial::multidegree() const {
    std::optional<std::vector<int64_t>> deg;
    for (const auto& [m, c] : terms_) {
        auto d = ring_->monomial_multidegree(m);
        if (!deg)
            deg = std::move(d);
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

Polynomial Polynomial::substitute(const Ring& target, const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->nvars()) throw RingError("one image per variable required");
    Polynomial result(target);
    for (const auto& [m, c] : terms_) {
        Polynomial prod = Polynomial::constant(target, c);
        for (size_t i = 0; i < m.size(); ++i)
            if (m.e[i] > 0) prod = prod * images[i].pow(static_cast<unsigned>(m.e[i]));
        result = result + prod;
    }
    return result;
}

Polynomial Polynomial::mapped(const Ring& target, const std::vector<size_t>& map) const {
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        Monomial t = Monomial::one(target->nvars());
        for (size_t i = 0; i < m.size(); ++i) {
            if (m.e[i] == 0) continue;
            t.e[map[i]] += m.e[i];
        }
        r.add_term(t, c);
    }
    return r;
}

std::string Polynomial::to_string(const TermOrder* order) const {
    if (terms_.empty()) return "0";
    const Field& f = ring_->field();
    TermOrder fallback = TermOrder::lex(ring_->nvars());
    const TermOrder& ord = order ? *order : fallback;
    std::string out;
    for (const auto& [m, c] : sorted_terms(ord)) {
        std::string coeff = f.to_string(c);
        bool neg = !coeff.empty() && coeff[0] == '-';
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (neg) coeff = coeff.substr(1);
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->var(i).name;
            if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
        }
        if (mono.empty()) {
            out += coeff;
        } else if (coeff == "1") {
            out += mono;
        } else {
            out += coeff + "*" + mono;
        }
    }
    return out;
}

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected a number at position " + std::to_string(pos));
        return s.substr(start, pos - start);
    }
    std::string var_name() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected a variable at position " + std::to_string(pos));
        std::string name = s.substr(start, pos - start);
        if (pos < s.size() && s[pos] == '[') {
            ++pos;
            name += "[";
            bool first = true;
            while (true) {
                if (!first && !eat(',')) break;
                first = false;
                if (eat('-')) name += "-"; // tolerate negative labels
                name += number();
                name += ",";
            }
            if (!name.empty() && name.back() == ',') name.pop_back();
            if (!eat(']')) throw ParseError("expected ']' in variable name");
            name += "]";
        }
        return name;
    }
};

} // namespace

Polynomial Polynomial::parse(const Ring& ring, const std::string& text) {
    const Field& f = ring->field();
    Lexer lx{text};
    Polynomial result(ring);
    bool first = true;
    while (!lx.done()) {
        bool negative = false;
        if (lx.eat('-'))
            negative = true;
        else if (lx.eat('+'))
            negative = false;
        else if (!first)
            throw ParseError("expected '+' or '-' between terms");
        first = false;

        Scalar coeff = f.one();
        Monomial mono = Monomial::one(ring->nvars());
        bool any_factor = false;
        while (true) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = lx.number();
                if (lx.eat('/')) {
                    std::string den = lx.number();
                    coeff = f.mul(coeff, f.parse(num + "/" + den));
                } else {
                    coeff = f.mul(coeff, f.parse(num));
                }
                any_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string name = lx.var_name();
                auto idx = ring->var_index(name);
                if (!idx) throw ParseError("unknown variable '" + name + "'");
                int exp = 1;
                if (lx.eat('^')) exp = std::stoi(lx.number());
                mono.e[*idx] += exp;
                any_factor = true;
            } else {
                throw ParseError(std::string("unexpected character '") + c + "' in polynomial");
            }
            if (!lx.eat('*')) break;
        }
        if (!any_factor) throw ParseError("empty term");
        if (negative) coeff = f.neg(coeff);
        result.add_term(mono, coeff);
    }
    return result;
}

} // namespace lsw
