#include "toricflip/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "toricflip/errors.hpp"

namespace toricflip {

VariableNames default_names(std::size_t n) { return n <= 26 ? VariableNames::Letters : VariableNames::Indexed; }

std::string format_monomial(ExponentView u, VariableNames names) {
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if (names == VariableNames::Letters) {
            out += static_cast<char>('a' + i);
        } else {
            if (!out.empty()) out += '*';
            out += 'x' + std::to_string(i + 1);
        }
        if (u[i] > 1) out += '^' + std::to_string(u[i]);
    }
    return out.empty() ? "1" : out;
}

std::string format_binomial(const Binomial& f, VariableNames names) {
    std::string out = format_monomial(f.lead, names);
    if (f.is_monomial()) return out;
    out += " - ";
    if (f.coeff != 1) out += f.coeff.get_str() + "*";
    return out + format_monomial(f.trail, names);
}

std::string format_ideal(const MonomialIdeal& M, VariableNames names) {
    std::string out = "<";
    for (std::size_t i = 0; i < M.size(); ++i) {
        if (i) out += ", ";
        out += format_monomial(M.generator(i), names);
    }
    return out + ">";
}

namespace {

[[noreturn]] void parse_error(std::string_view text, const std::string& why) {
    throw Error(ErrorKind::Parse, why + " in \"" + std::string(text) + "\"");
}

std::size_t read_number(std::string_view text, std::size_t& pos) {
    std::size_t start = pos;
    std::size_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > (1u << 30)) parse_error(text, "number too large");
        ++pos;
    }
    if (pos == start) parse_error(text, "expected a number");
    return value;
}

}  // namespace

Exponent parse_monomial(std::string_view text, std::size_t n) {
    Exponent u(n, 0);
    std::size_t pos = 0;
    bool any = false, unit = false;
    while (pos < text.size()) {
        char ch = text[pos];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
            ++pos;
            continue;
        }
        std::size_t var;
        if (ch == 'x' && pos + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
            ++pos;
            std::size_t idx = read_number(text, pos);
            if (idx == 0) parse_error(text, "variables are numbered from 1");
            var = idx - 1;
        } else if (ch >= 'a' && ch <= 'z') {
            var = static_cast<std::size_t>(ch - 'a');
            ++pos;
        } else if (ch == '1' && !any) {
            ++pos;
            unit = true;
            continue;
        } else {
            parse_error(text, std::string("unexpected character '") + ch + "'");
        }
        if (var >= n) parse_error(text, "variable index out of range");
        std::size_t power = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            power = read_number(text, pos);
        }
        u[var] += static_cast<int32_t>(power);
        any = true;
    }
    if (!any && !unit) parse_error(text, "empty monomial");
    return u;
}

Binomial parse_binomial(std::string_view text, std::size_t n) {
    auto minus = text.find('-');
    if (minus == std::string_view::npos) return Binomial::monomial(parse_monomial(text, n));
    Exponent lead = parse_monomial(text.substr(0, minus), n);
    std::string_view rest = text.substr(minus + 1);
    Rational c = 1;
    // Optional "c*" coefficient before the trailing monomial.
    std::size_t first = rest.find_first_not_of(" \t");
    if (first != std::string_view::npos &&
        (std::isdigit(static_cast<unsigned char>(rest[first])) && rest.find('*') != std::string_view::npos)) {
        std::size_t star = rest.find('*');
        std::string coeff(rest.substr(first, star - first));
        while (!coeff.empty() && std::isspace(static_cast<unsigned char>(coeff.back()))) coeff.pop_back();
        try {
            c = Rational(coeff);
            c.canonicalize();
        } catch (const std::invalid_argument&) {
            parse_error(text, "bad coefficient");
        }
        rest = rest.substr(star + 1);
    }
    Exponent trail = parse_monomial(rest, n);
    if (c == 0) parse_error(text, "zero coefficient");
    return Binomial{std::move(lead), std::move(trail), c};
}

MonomialIdeal parse_ideal_text(const std::vector<std::string>& generators, std::size_t n) {
    std::vector<Exponent> gens;
    for (const auto& g : generators) gens.push_back(parse_monomial(g, n));
    return MonomialIdeal::minimalize(n, std::move(gens));
}

MonomialIdeal parse_ideal(std::istream& in, std::size_t n) {
    std::vector<Exponent> gens;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        Exponent u;
        long long x;
        while (row >> x) {
            if (x < 0) throw Error(ErrorKind::Parse, "negative exponent in ideal file");
            u.push_back(static_cast<int32_t>(x));
        }
        if (!row.eof()) throw Error(ErrorKind::Parse, "non-integer token in ideal file");
        if (u.empty()) continue;
        if (n == 0) n = u.size();
        if (u.size() != n) throw Error(ErrorKind::BadLength, "ideal row has " + std::to_string(u.size()) + " entries");
        gens.push_back(std::move(u));
    }
    if (n == 0) throw Error(ErrorKind::Parse, "ideal file has no generators");
    return MonomialIdeal::minimalize(n, std::move(gens));
}

MonomialIdeal read_ideal_file(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IO, "cannot open " + path);
    return parse_ideal(in, n);
}

void write_ideal(std::ostream& out, const MonomialIdeal& M) {
    for (std::size_t i = 0; i < M.size(); ++i) {
        auto g = M.generator(i);
        for (std::size_t k = 0; k < g.size(); ++k) out << (k ? " " : "") << g[k];
        out << '\n';
    }
}

}  // namespace toricflip
