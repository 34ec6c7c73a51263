#include "gdpoly/random_poly.hpp"

namespace gdpoly {

std::uint64_t RandomPolyGen::next_u64() {
    // splitmix64; stable across platforms, unlike the std distributions.
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int RandomPolyGen::next_below(int bound) {
    return static_cast<int>(next_u64() % static_cast<std::uint64_t>(bound));
}

DiffPoly RandomPolyGen::next() {
    DiffPoly p;
    const int nterms = 1 + next_below(5);
    for (int t = 0; t < nterms; ++t) {
        const int genus = next_below(3);
        const int degree = next_below(5);
        JetExp jet;
        for (int i = 0; i < degree; ++i) jet.emplace_back(next_below(5), 1);
        long num = static_cast<long>(next_below(19)) - 9;
        if (num == 0) num = 1;
        const long den = 1 + next_below(4);
        p += DiffPoly::monomial(Rational(num, den), genus, std::move(jet));
    }
    return p;
}

DiffPoly RandomPolyGen::next_homogeneous(int n) {
    DiffPoly p;
    const int nterms = 1 + next_below(4);
    for (int t = 0; t < nterms; ++t) {
        JetExp jet;
        for (int i = 0; i < n; ++i) jet.emplace_back(next_below(5), 1);
        long num = static_cast<long>(next_below(19)) - 9;
        if (num == 0) num = 1;
        const long den = 1 + next_below(4);
        p += DiffPoly::monomial(Rational(num, den), 0, std::move(jet));
    }
    return p;
}

}  // namespace gdpoly
