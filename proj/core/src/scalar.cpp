#include "mhad/scalar.hpp"

#include <stdexcept>

namespace mhad {

std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(s));
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return Rat(num, den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string rat_to_string(const Rat& r) {
    Int num = numerator(r);
    Int den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

GRat GRat::inv() const {
    Rat n = norm2();
    if (n == 0) throw std::domain_error("GRat::inv: division by zero");
    return GRat(re / n, -im / n);
}

GRat grat_i() { return GRat(Rat(0), Rat(1)); }

std::string grat_to_string(const GRat& g) {
    if (g.im == 0) return rat_to_string(g.re);
    std::string im = rat_to_string(g.im) + "i";
    if (g.re == 0) return im;
    if (g.im > 0) return rat_to_string(g.re) + "+" + im;
    return rat_to_string(g.re) + im;  // '-' carried by the numerator
}

std::optional<GRat> parse_grat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s.back() == 'i') {
        // Split an optional real part off the front: find a '+' or '-' that
        // is not the leading sign and not part of a "/q" denominator sign.
        std::string body = s.substr(0, s.size() - 1);
        for (std::size_t k = body.size(); k-- > 1;) {
            if (body[k] == '+' || body[k] == '-') {
                if (body[k - 1] == '/') continue;  // defensive; not produced
                auto re = parse_rat(body.substr(0, k));
                std::string imtxt = body.substr(body[k] == '+' ? k + 1 : k);
                if (imtxt.empty() || imtxt == "-") return std::nullopt;
                auto im = parse_rat(imtxt);
                if (re && im) return GRat(*re, *im);
                return std::nullopt;
            }
        }
        if (body.empty() || body == "-") body += "1";
        auto im = parse_rat(body);
        if (im) return GRat(Rat(0), *im);
        return std::nullopt;
    }
    auto re = parse_rat(s);
    if (re) return GRat(*re);
    return std::nullopt;
}

}  // namespace mhad
