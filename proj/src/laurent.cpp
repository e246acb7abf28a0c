#include "qmb/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qmb {

LaurentPoly::LaurentPoly(Int constant) {
    if (constant != 0) terms_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::term(Int coeff, int exponent) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exponent] = std::move(coeff);
    return p;
}

LaurentPoly LaurentPoly::q_power(int exponent) { return term(1, exponent); }

LaurentPoly LaurentPoly::neg_q_power(int exponent) {
    return term(exponent % 2 == 0 ? 1 : -1, exponent);
}

LaurentPoly LaurentPoly::q_inv_minus_q() {
    LaurentPoly p;
    p.terms_[-1] = 1;
    p.terms_[1] = -1;
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Int LaurentPoly::eval_at_one() const {
    Int sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

void LaurentPoly::add_term(int exponent, const Int& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_[exponent] = coeff;
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

bool LaurentPoly::single_term(Int& coeff, int& exponent) const {
    if (terms_.size() != 1) return false;
    exponent = terms_.begin()->first;
    coeff = terms_.begin()->second;
    return true;
}

namespace {

// Renders one monomial without a leading sign; |coeff| is passed in.
std::string monomial_text(const Int& abs_coeff, int exponent, bool latex) {
    std::ostringstream out;
    if (exponent == 0) {
        out << abs_coeff;
        return out.str();
    }
    if (abs_coeff != 1) out << abs_coeff << (latex ? "" : "*");
    out << "q";
    if (exponent != 1) {
        if (latex)
            out << "^{" << exponent << "}";
        else
            out << "^" << exponent;
    }
    return out.str();
}

std::string render(const std::map<int, Int>& terms, bool latex) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        bool neg = c < 0;
        Int abs_c = neg ? Int(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        out << monomial_text(abs_c, e, latex);
    }
    return out.str();
}

}  // namespace

std::string LaurentPoly::to_string() const { return render(terms_, false); }

std::string LaurentPoly::to_latex() const { return render(terms_, true); }

LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPolyBuilder builder;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_int = [&]() -> Int {
        skip_ws();
        size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) throw std::invalid_argument("expected integer in polynomial: " + text);
        return Int(text.substr(start, i - start));
    };

    skip_ws();
    if (text.empty() || i == text.size())
        throw std::invalid_argument("empty polynomial text");
    bool any = false;
    int sign = 1;
    if (text[i] == '-') {
        sign = -1;
        ++i;
    } else if (text[i] == '+') {
        ++i;
    }
    while (true) {
        skip_ws();
        Int coeff = 1;
        bool saw_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = parse_int();
            saw_coeff = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        int exponent = 0;
        if (i < text.size() && text[i] == 'q') {
            ++i;
            exponent = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                Int e = parse_int();
                exponent = static_cast<int>(e);
            }
        } else if (!saw_coeff) {
            throw std::invalid_argument("malformed polynomial term: " + text);
        }
        builder.add(exponent, sign > 0 ? coeff : Int(-coeff));
        any = true;
        skip_ws();
        if (i == text.size()) break;
        if (text[i] == '+')
            sign = 1;
        else if (text[i] == '-')
            sign = -1;
        else
            throw std::invalid_argument("unexpected character in polynomial: " + text);
        ++i;
    }
    if (!any) throw std::invalid_argument("empty polynomial text");
    return builder.take();
}

std::string LaurentPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : terms_) arr.push_back({e, c.str()});
    return arr.dump();
}

LaurentPoly LaurentPoly::from_json_text(const std::string& json) {
    nlohmann::json arr = nlohmann::json::parse(json);
    if (!arr.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    LaurentPolyBuilder builder;
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("polynomial JSON entries must be [exponent, coeff] pairs");
        builder.add(pair[0].get<int>(), Int(pair[1].get<std::string>()));
    }
    return builder.take();
}

}  // namespace qmb
