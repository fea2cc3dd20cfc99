// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
// `acceptance --regen` rewrites the golden outputs from the current build.

#include "cli.hpp"
#include "pbr/brauer.hpp"
#include "pbr/surface_local.hpp"
#include "pbr/swan.hpp"
#include "random_objects.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace pbr;
using namespace pbr::testing;

namespace {

// Time budgets in seconds.
constexpr double kBudgetWitt = 1.0;
constexpr double kBudgetRoundtrip = 30.0;
constexpr double kBudgetInvariance = 60.0;
constexpr double kBudgetBounds = 60.0;
constexpr double kBudgetNormalForm = 120.0;
constexpr double kBudgetSplit = 120.0;
constexpr double kBudgetVR = 60.0;
constexpr double kBudgetLocal = 120.0;
constexpr double kBudgetHensel = 30.0;
constexpr double kBudgetGolden = 30.0;

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
};

// --- 1 -----------------------------------------------------------------

long long teich(long long a, long long m, int p)
{
    long long r = 1;
    for (int i = 0; i < p; ++i)
        r = r * a % m;
    return r;
}

Outcome witt_oracle()
{
    Outcome out;
    long pairs = 0;
    for (int p : {2, 3, 5}) {
        const FqField& F = FqField::get(p, 1);
        long long m = static_cast<long long>(p) * p;
        auto z = [&](const WittVec<Fq>& v) { return (teich(v[0].value(), m, p) + p * (long long)v[1].value()) % m; };
        std::vector<WittVec<Fq>> all;
        for (int a0 = 0; a0 < p; ++a0)
            for (int a1 = 0; a1 < p; ++a1)
                all.emplace_back(Fq::from_int(F, a0), Fq::from_int(F, a1));
        for (const auto& a : all)
            for (const auto& b : all) {
                ++pairs;
                if (z(a + b) != (z(a) + z(b)) % m || z(a * b) != z(a) * z(b) % m)
                    out.fail("mismatch at p=" + std::to_string(p));
            }
    }
    out.detail = out.ok ? std::to_string(pairs) + " pairs" : out.detail;
    return out;
}

// --- 2 -----------------------------------------------------------------

Outcome roundtrips()
{
    Outcome out;
    long n = 0;
    for (int p : {2, 3, 5}) {
        std::mt19937 rng(1000 + p);
        const FieldContext& kf = FieldContext::get(p, 2, ResidueKind::Finite, 1);
        const FieldContext& kr = FieldContext::get(p, 1, ResidueKind::RationalFunction, 1);
        const FieldContext& kl = FieldContext::get(p, 1, ResidueKind::TruncatedLocal, 24);
        for (const FieldContext* k : {&kf, &kr, &kl}) {
            for (int i = 0; i < 1000; ++i, ++n) {
                Residue f = random_residue(*k, rng) * random_nonzero_residue(*k, rng) + random_residue(*k, rng);
                std::vector<Residue> parts = p_basis_decompose_k(f);
                Residue back = Residue::zero(*k);
                if (k->p_rank() == 0) {
                    back = parts.at(0).pow(p);
                } else {
                    Residue th = Residue::theta(*k);
                    for (int j = 0; j < static_cast<int>(parts.size()); ++j)
                        back = back + parts[static_cast<std::size_t>(j)].pow(p) * th.pow(j);
                }
                if (!back.equals_to_precision(f))
                    out.fail("p-basis " + std::string(to_string(k->kind())) + " p=" + std::to_string(p) + ": " +
                             f.to_string());
                if (k->p_rank() == 1) {
                    CartierParts cp = cartier_decompose(f);
                    Residue c = cp.a.pow(p) * Residue::theta(*k).pow(p - 1) + derivative_k(cp.g);
                    if (!c.equals_to_precision(f))
                        out.fail("cartier " + std::string(to_string(k->kind())) + " p=" + std::to_string(p) + ": " +
                                 f.to_string());
                }
            }
        }
    }
    if (out.ok)
        out.detail = std::to_string(n) + " elements";
    return out;
}

// --- 3 -----------------------------------------------------------------

Outcome invariance()
{
    Outcome out;
    const int forms = 100, perturbations = 20;
    for (int i = 0; i < forms; ++i) {
        int p = std::vector<int>{2, 3, 5}[static_cast<std::size_t>(i % 3)];
        const FieldContext& k = i % 2 == 0 ? ratfunc(p) : FieldContext::get(p, 1, ResidueKind::TruncatedLocal, 24);
        std::mt19937 rng(3000 + i);
        Form1 w = random_form(k, rng, 8);
        int sw = swan_conductor(w).sw;
        for (int j = 0; j < perturbations; ++j) {
            int upole = 10 / p;
            Form1 u{random_series(k, rng, -upole, 2), random_series(k, rng, -upole - 1, 1)};
            Form1 moved = w + f_minus_i(u) + d_F(random_series(k, rng, -10, 3));
            int sw2 = swan_conductor(moved).sw;
            if (sw2 != sw)
                out.fail("sw " + std::to_string(sw) + " vs " + std::to_string(sw2) + " for " + w.to_string());
        }
    }
    if (out.ok)
        out.detail = std::to_string(forms * perturbations) + " perturbed classes";
    return out;
}

// --- 4 -----------------------------------------------------------------

Outcome conductor_bounds()
{
    Outcome out;
    std::mt19937 rng(4000);
    for (int it = 0; it < 500; ++it) {
        int p = std::vector<int>{2, 3, 5}[static_cast<std::size_t>(it % 3)];
        const FieldContext& k = ratfunc(p);
        std::uniform_int_distribution<int> di(0, 8), dj(1, 4);
        int i = di(rng), j = dj(rng);
        Series a = series_monomial(random_nonzero_residue(k, rng), -i) + random_series(k, rng, -i + 1, 3);
        Series b = series_monomial(random_nonzero_residue(k, rng), j) + random_series(k, rng, j + 1, j + 4);
        Series u = series_constant(Residue::one(k)) + b;
        int s1 = swan_conductor(symbol_form(a, u)).sw;
        int s2 = swan_conductor(symbol_form(a, u) + symbol_form(a * b, a)).sw;
        if (s1 > std::max(i - j, 0))
            out.fail("sw(a dlog(1+b)) = " + std::to_string(s1) + " > " + std::to_string(i - j));
        if (s2 > std::max(i - 2 * j, 0))
            out.fail("sw(a dlog(1+b) + ab dlog a) = " + std::to_string(s2) + " > " + std::to_string(i - 2 * j));
    }
    if (out.ok)
        out.detail = "500 tuples";
    return out;
}

// --- 5, 6 --------------------------------------------------------------

struct WildCase {
    Form1 w;
    int sw;
    SymbolPresentation nf;
};

std::vector<WildCase> wild_classes()
{
    std::vector<WildCase> out;
    std::mt19937 rng(5000);
    for (int it = 0; out.size() < 200 && it < 5000; ++it) {
        int p = std::vector<int>{2, 3, 5}[static_cast<std::size_t>(it % 3)];
        const FieldContext& k = ratfunc(p);
        Form1 w = random_form(k, rng, 8);
        int sw = swan_conductor(w).sw;
        if (sw == 0)
            continue;
        out.push_back({w, sw, normal_form(w)});
    }
    return out;
}

Outcome normal_forms(const std::vector<WildCase>& cases)
{
    Outcome out;
    if (cases.size() < 200)
        out.fail("only " + std::to_string(cases.size()) + " wild classes generated");
    for (const auto& c : cases) {
        int p = c.w.context().p();
        std::string want = c.sw % p == 0 ? "II" : "III";
        if (c.nf.type != want || c.nf.exponent != c.sw || c.nf.sw != c.sw)
            out.fail("type " + c.nf.type + " exponent " + std::to_string(c.nf.exponent) + " for sw " +
                     std::to_string(c.nf.sw) + ": " + c.w.to_string());
        if (c.nf.certificate_status != CertStatus::Valid || cert_verify(c.w, c.nf.target, c.nf.certificate) != CertStatus::Valid)
            out.fail("certificate not Valid: " + c.w.to_string());
    }
    if (out.ok)
        out.detail = std::to_string(cases.size()) + " wild classes";
    return out;
}

Outcome split_certificates(const std::vector<WildCase>& cases)
{
    Outcome out;
    int nonzero = 0;
    for (const auto& c : cases) {
        if (c.nf.zero_status != ZeroStatus::NonZero)
            continue;
        ++nonzero;
        SplitCertificate sc = split_certificate(c.nf);
        if (sc.status != "Verified" || sc.degree != c.w.context().p())
            out.fail("split " + sc.status + " degree " + std::to_string(sc.degree) + ": " + c.w.to_string());
    }
    if (nonzero == 0)
        out.fail("no NonZero classes");
    if (out.ok)
        out.detail = std::to_string(nonzero) + " NonZero classes";
    return out;
}

// --- 7 -----------------------------------------------------------------

Outcome r1_after_v()
{
    Outcome out;
    std::mt19937 rng(7000);
    for (int i = 0; i < 100; ++i) {
        int p = std::vector<int>{2, 3, 5}[static_cast<std::size_t>(i % 3)];
        const FieldContext& k = ratfunc(p);
        BrauerRep x = symbol_class(WittF(random_series(k, rng, -6, 2)), random_unit_or_monomial(k, rng));
        ZeroDecision z = is_zero(map_R1(map_V(x)));
        if (z.status != ZeroStatus::Zero)
            out.fail(std::string(to_string(z.status)) + ": " + z.reason);
    }
    if (out.ok)
        out.detail = "100 symbols";
    return out;
}

// --- 8 -----------------------------------------------------------------

// sym(f; t) with f in pi*F_p[pi][1/t], sometimes plus a tame sym(c; t).
std::string random_restricted(int p, std::mt19937& rng, int& tame)
{
    std::uniform_int_distribution<int> nterms(1, 3), c(1, p - 1), pe(1, 2), te(0, 2 * p + 1), coin(0, 3);
    std::string f;
    for (int i = nterms(rng); i > 0; --i) {
        if (!f.empty())
            f += " + ";
        f += std::to_string(c(rng)) + "*pi^" + std::to_string(pe(rng)) + "*t^-" + std::to_string(te(rng));
    }
    tame = coin(rng) == 0 ? c(rng) : 0;
    return "sym(" + f + "; t)" + (tame ? " + sym(" + std::to_string(tame) + "; t)" : "");
}

Outcome local_classes()
{
    Outcome out;
    int accepted = 0, rejected = 0, obstructed = 0;
    for (int p : {3, 2}) {
        std::mt19937 rng(8000 + p);
        cli::Session s;
        s.p = p;
        s.residue = ResidueKind::Finite;
        int got = 0;
        for (int it = 0; got < 50 && it < 2000; ++it) {
            int tame = 0;
            std::string text = random_restricted(p, rng, tame);
            BivariateClass c = cli::eval_bivariate_class(cli::parse_expr(text), s);
            LocusReport loc = ramification_locus(c);
            bool only_t = loc.locus.size() == 1 && loc.locus[0] == Divisor::T;
            if (!only_t)
                continue;
            int sw = loc.along.at(Divisor::T).sw;
            if (sw >= p) {
                std::ostringstream o, e;
                int rc = cli::run_cli({"local2d", text, "--p", std::to_string(p)}, o, e);
                ++rejected;
                if (rc != cli::kPrecondition)
                    out.fail("exit " + std::to_string(rc) + " for sw " + std::to_string(sw) + ": " + text);
                continue;
            }
            ++got;
            PiSymbolReport r = reduce_to_pi_symbol(c);
            obstructed += r.obstruction.has_value();
            // over F_p every nonzero constant has nonzero trace
            if (r.obstruction.has_value() != (tame != 0))
                out.fail("obstruction mismatch: " + text);
            if (r.certificate_status != CertStatus::Valid)
                out.fail("certificate " + std::string(to_string(r.certificate_status)) + ": " + text);
            std::ostringstream o, e;
            int rc = cli::run_cli({"local2d", text, "--p", std::to_string(p)}, o, e);
            if (rc != cli::kOk || cli::Json::parse(o.str())["pi_symbol"] != "[" + r.h_string + ", pi)")
                out.fail("cli disagrees on " + text);
        }
        accepted += got;
        if (got < 50)
            out.fail("only " + std::to_string(got) + " admissible classes for p=" + std::to_string(p));
    }
    if (rejected == 0)
        out.fail("no sw >= p input exercised");
    if (out.ok)
        out.detail = std::to_string(accepted) + " classes (" + std::to_string(obstructed) + " with obstruction), " +
                     std::to_string(rejected) + " rejected";
    return out;
}

// --- 9 -----------------------------------------------------------------

// Exhaustive: is X^p - X = c solvable in F_q.
bool as_solvable(const Fq& c)
{
    const FqField& F = c.field();
    for (FqField::Value v = 0; v < static_cast<FqField::Value>(F.q()); ++v) {
        Fq u(F, v);
        if (u.pow(F.p()) - u == c)
            return true;
    }
    return false;
}

Outcome hensel()
{
    Outcome out;
    std::mt19937 rng(9000);
    const int prec = 16;
    int solvable = 0;
    for (int i = 0; i < 200; ++i) {
        int p = 0, n = 0;
        switch (i % 4) {
        case 0: p = 2, n = 1; break;
        case 1: p = 3, n = 1; break;
        case 2: p = 2, n = 2; break;
        default: p = 3, n = 2; break;
        }
        const FieldContext& k = FieldContext::get(p, n, ResidueKind::TruncatedLocal, prec);
        const FqField& F = k.fq();
        std::uniform_int_distribution<long> c(0, static_cast<long>(F.q()) - 1);
        std::vector<Fq> coeffs;
        for (int e = 0; e < prec; ++e)
            coeffs.emplace_back(F, static_cast<FqField::Value>(c(rng)));
        Residue a = Residue::from_local(k, LocalSeries(Fq::zero(F), 0, coeffs, prec, prec));
        bool expect = as_solvable(coeffs[0]);
        std::optional<Residue> u = artin_schreier_solve(a);
        if (u.has_value() != expect)
            out.fail("solvability mismatch for " + a.to_string());
        if (u) {
            ++solvable;
            if (!(u->pow(p) - *u).equals_to_precision(a))
                out.fail("u^p - u != a for " + a.to_string());
        }
    }
    if (out.ok)
        out.detail = "200 series, " + std::to_string(solvable) + " solvable";
    return out;
}

// --- 10 ----------------------------------------------------------------

struct Invocation {
    std::string name;
    std::vector<std::string> args;
};

std::vector<Invocation> invocations(const std::string& dir)
{
    std::ifstream in(dir + "/invocations.json");
    std::vector<Invocation> out;
    if (!in)
        return out;
    cli::Json j = cli::Json::parse(in);
    for (const auto& e : j)
        out.push_back({e["name"].get<std::string>(), e["args"].get<std::vector<std::string>>()});
    return out;
}

std::string run_once(const Invocation& inv, int& rc)
{
    std::ostringstream o, e;
    rc = cli::run_cli(inv.args, o, e);
    return o.str();
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return in ? s.str() : std::string();
}

Outcome golden(const std::string& dir)
{
    Outcome out;
    auto invs = invocations(dir);
    if (invs.size() != 10)
        out.fail("expected 10 invocations, found " + std::to_string(invs.size()));
    std::vector<std::string> seen;
    for (const auto& inv : invs) {
        int rc1 = 0, rc2 = 0;
        std::string a = run_once(inv, rc1), b = run_once(inv, rc2);
        seen.push_back(inv.args.at(0));
        if (a != b || rc1 != rc2)
            out.fail(inv.name + ": output differs between runs");
        if (rc1 != cli::kOk)
            out.fail(inv.name + ": exit " + std::to_string(rc1));
        if (a != slurp(dir + "/" + inv.name + ".json"))
            out.fail(inv.name + ": differs from frozen output");
    }
    for (const char* cmd : {"sw", "normal-form", "per-ind", "witt", "local2d"})
        if (std::find(seen.begin(), seen.end(), cmd) == seen.end())
            out.fail(std::string("no golden invocation of ") + cmd);
    if (out.ok)
        out.detail = std::to_string(invs.size()) + " invocations";
    return out;
}

int regen(const std::string& dir)
{
    for (const auto& inv : invocations(dir)) {
        int rc = 0;
        std::string text = run_once(inv, rc);
        std::ofstream(dir + "/" + inv.name + ".json", std::ios::binary) << text;
        std::cout << inv.name << " exit " << rc << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    const std::string dir = PBR_GOLDEN_DIR;
    if (argc > 1 && std::string(argv[1]) == "--regen")
        return regen(dir);

    std::vector<WildCase> wild;
    struct Criterion {
        int id;
        const char* name;
        double budget;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all = {
        {1, "Witt ring vs Z/p^2 oracle", kBudgetWitt, witt_oracle},
        {2, "p-basis and Cartier roundtrips", kBudgetRoundtrip, roundtrips},
        {3, "sw invariant under coboundaries", kBudgetInvariance, invariance},
        {4, "conductor bounds for a dlog(1+b)", kBudgetBounds, conductor_bounds},
        {5, "normal form type and exponent", kBudgetNormalForm,
         [&] {
             wild = wild_classes();
             return normal_forms(wild);
         }},
        {6, "degree-p split certificates", kBudgetSplit, [&] { return split_certificates(wild); }},
        {7, "R1 after V is zero", kBudgetVR, r1_after_v},
        {8, "restricted classes reduce to [h, pi)", kBudgetLocal, local_classes},
        {9, "AS solvability over F_q[[pi]]", kBudgetHensel, hensel},
        {10, "CLI golden outputs", kBudgetGolden, [&] { return golden(dir); }},
    };

    int failures = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget)
            o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget) + " s");
        failures += !o.ok;
        std::printf("[%s] %2d %-38s %7.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failures, all.size());
    return failures == 0 ? 0 : 1;
}
