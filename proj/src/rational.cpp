#include <scpoly/rational.hpp>

#include <cctype>
#include <ostream>

namespace scpoly {

namespace {

bool valid_integer_token(const std::string& s, bool allow_sign) {
    if (s.empty())
        return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-')
        i = 1;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rat Rat::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_token(text, true))
            throw ParseError("not a valid integer: '" + text + "'");
        return Rat(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_token(num, true) || !valid_integer_token(den, false))
        throw ParseError("not a valid fraction: '" + text + "'");
    Int d(den);
    if (d == 0)
        throw ParseError("zero denominator in fraction: '" + text + "'");
    return Rat(Int(num), d);
}

std::string Rat::str() const {
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

} // namespace scpoly
