#pragma once

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "system.hpp"

namespace wgb {

/// WGB_MODULUS if set and valid, else 65521.
inline std::uint64_t env_default_modulus()
{
    const char* s = std::getenv("WGB_MODULUS");
    if (!s || !*s) return default_modulus;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (*end || !is_prime(v) || v >= (1ULL << 32)) throw parse_error(std::string("WGB_MODULUS is not a prime below 2^32: ") + s);
    return v;
}

namespace detail {

class ExprParser {
public:
    ExprParser(const std::string& s, RingPtr r, std::size_t line, std::size_t col0 = 0)
        : s_(s), r_(std::move(r)), line_(line), col0_(col0)
    {
        for (std::size_t i = 0; i < r_->names().size(); ++i) vars_[r_->names()[i]] = i;
    }

    Polynomial parse()
    {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw parse_error("line " + std::to_string(line_) + ", column " + std::to_string(col0_ + pos_ + 1) + ": " + msg);
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr()
    {
        bool neg = eat('-');
        if (!neg) eat('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    Polynomial term()
    {
        Polynomial p = factor();
        while (eat('*')) p *= factor();
        return p;
    }

    Polynomial factor()
    {
        Polynomial b = primary();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected an exponent");
            b = b.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
        }
        return b;
    }

    Polynomial primary()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) fail("missing ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -primary();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = 0, p = r_->field().modulus();
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = (v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0')) % p;
            return Polynomial::constant(r_, static_cast<std::int64_t>(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            auto it = vars_.find(name);
            if (it == vars_.end()) {
                pos_ = start;
                fail("undeclared variable '" + name + "'");
            }
            return Polynomial::variable(r_, it->second);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    RingPtr r_;
    std::size_t line_;
    std::size_t col0_;
    std::size_t pos_ = 0;
    std::map<std::string, std::size_t> vars_;
};

inline std::vector<std::string> split_list(const std::string& rest)
{
    std::string t = rest;
    for (auto& c : t)
        if (c == ',') c = ' ';
    std::istringstream is(t);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

} // namespace detail

inline Polynomial parse_polynomial(const std::string& expr, RingPtr ring)
{
    return detail::ExprParser(expr, std::move(ring), 1).parse();
}

/// Line format: `p <modulus>`, `vars <names>`, `weights <w>`, then `poly <expr>` lines; `#` starts a comment.
inline PolySystem parse_system(std::istream& in)
{
    std::uint64_t p = env_default_modulus();
    std::vector<std::string> names;
    std::vector<int> weights;
    RingPtr ring;
    std::vector<Polynomial> polys;
    std::string line;
    std::size_t no = 0;
    auto make_ring = [&] {
        if (ring) return;
        if (names.empty()) throw parse_error("line " + std::to_string(no) + ": `vars` must come before polynomials");
        if (weights.empty()) weights.assign(names.size(), 1);
        if (weights.size() != names.size())
            throw parse_error(std::to_string(weights.size()) + " weights for " + std::to_string(names.size()) + " variables");
        ring = Ring::make(WeightSystem(weights), p, names);
    };
    while (std::getline(in, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::string key;
        if (!(is >> key)) continue;
        std::string rest;
        std::size_t col0 = is.eof() ? line.size() : static_cast<std::size_t>(is.tellg());
        std::getline(is, rest);
        if (key == "poly") {
            make_ring();
            polys.push_back(detail::ExprParser(rest, ring, no, col0).parse());
            continue;
        }
        if (ring) throw parse_error("line " + std::to_string(no) + ": header `" + key + "` after polynomials");
        auto items = detail::split_list(rest);
        try {
            if (key == "p") {
                if (items.size() != 1) throw parse_error("expected one modulus");
                p = std::stoull(items[0]);
                if (!is_prime(p) || p >= (1ULL << 32)) throw parse_error("modulus " + items[0] + " is not a prime below 2^32");
            } else if (key == "vars") {
                names = items;
                std::map<std::string, int> seen;
                for (const auto& n : names)
                    if (seen[n]++) throw parse_error("variable " + n + " declared twice");
            } else if (key == "weights") {
                weights.clear();
                for (const auto& w : items) weights.push_back(std::stoi(w));
            } else {
                throw parse_error("unknown header `" + key + "`");
            }
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(no) + ": " + e.what());
        } catch (const std::exception&) {
            throw parse_error("line " + std::to_string(no) + ": malformed number");
        }
    }
    make_ring();
    return PolySystem(ring, std::move(polys));
}

inline PolySystem parse_system_string(const std::string& text)
{
    std::istringstream is(text);
    return parse_system(is);
}

inline PolySystem read_system_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return parse_system(in);
}

inline std::string format_system(const PolySystem& sys)
{
    std::ostringstream os;
    os << "p " << sys.field().modulus() << "\n";
    os << "vars";
    for (const auto& n : sys.ring->names()) os << " " << n;
    os << "\nweights";
    for (int w : sys.weights()) os << " " << w;
    os << "\n";
    for (const auto& f : sys.polys) os << "poly " << f.to_string() << "\n";
    return os.str();
}

} // namespace wgb
