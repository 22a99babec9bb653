#include "quipu/intpoly.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace quipu {

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

IntPolynomial IntPolynomial::constant(BigInt v) {
    IntPolynomial p;
    if (v != 0)
        p.c_ = {std::move(v)};
    return p;
}

IntPolynomial IntPolynomial::x() {
    IntPolynomial p;
    p.c_ = {BigInt(0), BigInt(1)};
    return p;
}

BigInt IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size()))
        return BigInt(0);
    return c_[static_cast<size_t>(k)];
}

const BigInt& IntPolynomial::leading() const {
    if (c_.empty())
        throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero())
        return IntPolynomial();
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> r = c_;
    for (auto& v : r) v = -v;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::times_x() const {
    if (is_zero())
        return IntPolynomial();
    std::vector<BigInt> r;
    r.reserve(c_.size() + 1);
    r.emplace_back(0);
    r.insert(r.end(), c_.begin(), c_.end());
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::scaled(const BigInt& s) const {
    std::vector<BigInt> r = c_;
    for (auto& v : r) v *= s;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1)
        return IntPolynomial();
    std::vector<BigInt> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * BigInt(static_cast<long>(i));
    return IntPolynomial(std::move(r));
}

Scalar IntPolynomial::eval(const Scalar& x) const {
    Scalar acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += Scalar(c_[i]);
    }
    return acc;
}

BigRat IntPolynomial::eval_rat(const BigRat& x) const {
    BigRat acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += BigRat(c_[i]);
    }
    return acc;
}

BigInt IntPolynomial::eval_int(const BigInt& x) const {
    BigInt acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

std::string IntPolynomial::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : c_)
        arr.push_back(v.str());
    return arr.dump();
}

IntPolynomial IntPolynomial::from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array())
        throw std::invalid_argument("polynomial JSON must be an array of decimal strings");
    std::vector<BigInt> r;
    r.reserve(arr.size());
    for (const auto& v : arr)
        r.emplace_back(v.get<std::string>());
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::pretty(const std::string& var) const {
    if (is_zero())
        return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        BigInt a = coeff(k);
        if (a == 0)
            continue;
        bool neg = a < 0;
        BigInt mag = neg ? BigInt(-a) : a;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (mag != 1 || k == 0)
            out += mag.str();
        if (k > 0) {
            if (mag != 1)
                out += "*";
            out += var;
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace quipu
