#include "pbr/witt.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace pbr {

namespace {

using Mono = std::array<int, 4>;
using ZPoly = std::map<Mono, long long>;

ZPoly var(int i)
{
    Mono m{0, 0, 0, 0};
    m[static_cast<std::size_t>(i)] = 1;
    return {{m, 1}};
}

ZPoly add(const ZPoly& a, const ZPoly& b, long long sb = 1)
{
    ZPoly r = a;
    for (const auto& [m, c] : b) {
        r[m] += sb * c;
        if (r[m] == 0)
            r.erase(m);
    }
    return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b)
{
    ZPoly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Mono m;
            for (std::size_t i = 0; i < 4; ++i)
                m[i] = ma[i] + mb[i];
            r[m] += ca * cb;
            if (r[m] == 0)
                r.erase(m);
        }
    return r;
}

ZPoly pow(const ZPoly& a, int e)
{
    ZPoly r{{Mono{0, 0, 0, 0}, 1}};
    for (int i = 0; i < e; ++i)
        r = mul(r, a);
    return r;
}

WittPoly reduce_div_p(const ZPoly& a, int p)
{
    WittPoly out;
    for (const auto& [m, c] : a) {
        require(c % p == 0, ErrorCode::Precondition, "ghost identity not divisible by p");
        long long r = ((c / p) % p + p) % p;
        if (r != 0)
            out.terms.emplace_back(m, static_cast<int>(r));
    }
    return out;
}

StructurePolys build(int p)
{
    ZPoly a0 = var(0), a1 = var(1), b0 = var(2), b1 = var(3);
    ZPoly P{{Mono{0, 0, 0, 0}, p}};
    // ghost w1(x) = x0^p + p x1; sum1 from w1(a) + w1(b) = w1(s), prod1 from w1(a) w1(b) = w1(m)
    ZPoly wa = add(pow(a0, p), mul(P, a1));
    ZPoly wb = add(pow(b0, p), mul(P, b1));
    ZPoly s0p = pow(add(a0, b0), p);
    ZPoly sum_times_p = add(add(wa, wb), s0p, -1);
    ZPoly m0p = pow(mul(a0, b0), p);
    ZPoly prod_times_p = add(mul(wa, wb), m0p, -1);
    return {p, reduce_div_p(sum_times_p, p), reduce_div_p(prod_times_p, p)};
}

} // namespace

std::string WittPoly::to_string() const
{
    static const char* names[4] = {"a0", "a1", "b0", "b1"};
    std::string out;
    for (const auto& [m, c] : terms) {
        std::string t;
        if (c != 1)
            t = std::to_string(c);
        for (int i = 0; i < 4; ++i) {
            int e = m[static_cast<std::size_t>(i)];
            if (e == 0)
                continue;
            if (!t.empty())
                t += "*";
            t += names[i];
            if (e > 1)
                t += "^" + std::to_string(e);
        }
        if (t.empty())
            t = std::to_string(c);
        if (!out.empty())
            out += "+";
        out += t;
    }
    return out.empty() ? "0" : out;
}

const StructurePolys& structure_polynomials(int p)
{
    require(p >= 2 && p <= 7, ErrorCode::Precondition, "characteristic must lie in [2, 7]");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<StructurePolys>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[p];
    if (!slot)
        slot = std::make_unique<StructurePolys>(build(p));
    return *slot;
}

} // namespace pbr
