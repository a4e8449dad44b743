#include "hurwitz/permutation.hpp"

#include <numeric>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Permutation Permutation::identity(int degree) {
    Permutation p;
    p.images.resize(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) p.images[static_cast<size_t>(i)] = static_cast<uint16_t>(i);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images[static_cast<size_t>(i)] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images.resize(images.size());
    for (int i = 0; i < degree(); ++i) r.images[images[static_cast<size_t>(i)]] = static_cast<uint16_t>(i);
    return r;
}

int64_t Permutation::order() const {
    std::vector<char> seen(images.size(), 0);
    int64_t result = 1;
    for (int i = 0; i < degree(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int64_t len = 0;
        int j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = 1;
            j = images[static_cast<size_t>(j)];
            ++len;
        }
        result = std::lcm(result, len);
    }
    return result;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    Permutation r;
    r.images.resize(p.images.size());
    for (size_t i = 0; i < p.images.size(); ++i) r.images[i] = q.images[p.images[i]];
    return r;
}

Permutation conjugate(const Permutation& g, const Permutation& x) {
    // (x^{-1} g x)(x(i)) = x(g(i)), filled in a single pass.
    Permutation r;
    r.images.resize(g.images.size());
    for (size_t i = 0; i < g.images.size(); ++i) r.images[x.images[i]] = x.images[g.images[i]];
    return r;
}

Permutation power(const Permutation& g, int64_t k) {
    Permutation result = Permutation::identity(g.degree());
    Permutation base = g;
    while (k > 0) {
        if (k & 1) result = compose(result, base);
        base = compose(base, base);
        k >>= 1;
    }
    return result;
}

void validate_permutation(const Permutation& p) {
    std::vector<char> seen(p.images.size(), 0);
    for (uint16_t v : p.images) {
        check_pre(v < p.images.size(), "permutation image out of range");
        check_pre(!seen[v], "permutation image repeated");
        seen[v] = 1;
    }
}

std::string format_permutation(const Permutation& p) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < p.degree(); ++i) {
        if (i) os << ' ';
        os << p.images[static_cast<size_t>(i)];
    }
    os << ']';
    return os.str();
}

Permutation parse_permutation(const std::string& text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (char c : text) cleaned += (c == '[' || c == ']' || c == ',') ? ' ' : c;
    std::istringstream is(cleaned);
    std::vector<uint16_t> images;
    long v;
    while (is >> v) {
        check_pre(v >= 0 && v < 65536, "permutation point out of range");
        images.push_back(static_cast<uint16_t>(v));
    }
    Permutation p(std::move(images));
    validate_permutation(p);
    return p;
}

size_t PermHash::operator()(const Permutation& p) const {
    // FNV-1a over the image bytes.
    uint64_t h = 1469598103934665603ull;
    for (uint16_t v : p.images) {
        h = (h ^ (v & 0xff)) * 1099511628211ull;
        h = (h ^ (v >> 8)) * 1099511628211ull;
    }
    return static_cast<size_t>(h);
}

} // namespace hurwitz
