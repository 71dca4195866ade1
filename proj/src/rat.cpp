#include "planarlab/rat.hpp"

#include <stdexcept>

namespace planarlab {

std::string rat_to_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in rational literal: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

std::size_t rat_bit_length(const Rat& r) {
    if (r == 0) return 1;
    BigInt n = abs(rat_num(r));
    BigInt d = rat_den(r);
    return static_cast<std::size_t>(msb(n)) + static_cast<std::size_t>(msb(d)) + 2;
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace planarlab
