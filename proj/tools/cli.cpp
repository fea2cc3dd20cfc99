#include "cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <ostream>
#include <set>

namespace pbr::cli {

int exit_code_for(ErrorCode c)
{
    switch (c) {
    case ErrorCode::Parse:
        return kParse;
    case ErrorCode::Precondition:
        return kPrecondition;
    case ErrorCode::PrecisionExhausted:
        return kPrecision;
    default:
        return kFailure;
    }
}

namespace {

const char* code_name(ErrorCode c)
{
    switch (c) {
    case ErrorCode::Parse:
        return "parse";
    case ErrorCode::Precondition:
        return "precondition";
    case ErrorCode::PrecisionExhausted:
        return "precision";
    case ErrorCode::ContextMismatch:
        return "context";
    case ErrorCode::DivisionByZero:
        return "division-by-zero";
    default:
        return "unsupported";
    }
}

Json base(const std::string& command, const Session& s, const std::string& input)
{
    Json r;
    r["command"] = command;
    r["context"] = {{"p", s.p}, {"q", s.q()}, {"residue", to_string(s.residue)}, {"prec", s.prec}};
    r["input"] = input;
    r["sw"] = nullptr;
    r["zero_status"] = nullptr;
    r["normal_form"] = nullptr;
    r["per"] = nullptr;
    r["ind"] = nullptr;
    r["splitting"] = Json::array();
    r["obstruction"] = nullptr;
    r["certificate_status"] = nullptr;
    r["assumptions"] = Json::array();
    return r;
}

template <class T>
Json opt(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

Json symbol_json(const GradedSymbol& g)
{
    Json j;
    j["kind"] = to_string(g.kind);
    j["level"] = g.level;
    j["value"] = g.value ? Json(g.value->to_string()) : Json(nullptr);
    if (g.unram)
        j["unramified"] = g.unram->to_string();
    return j;
}

void put_normal_form(Json& r, const SymbolPresentation& nf)
{
    Json j;
    j["type"] = nf.type;
    j["a"] = nf.a ? Json(nf.a_string()) : Json(nullptr);
    j["b"] = nf.b ? Json(nf.b_string()) : Json(nullptr);
    r["normal_form"] = j;
    r["certificate_status"] = to_string(nf.certificate_status);
    r["exponent"] = nf.exponent;
    r["remainder"] = nf.remainder ? Json(nf.remainder->to_string()) : Json(nullptr);
    r["certificate_moves"] = nf.certificate.size();
}

void put_splitting(Json& r, const SplitCertificate& sc)
{
    for (const auto& d : sc.descriptors)
        r["splitting"].push_back({{"kind", d.kind}, {"equation", d.equation}, {"degree", d.degree}});
    r["splitting_status"] = sc.status;
}

void put_assumptions(Json& r, const std::vector<std::string>& tags)
{
    std::set<std::string> seen;
    for (const auto& t : tags)
        if (seen.insert(t).second)
            r["assumptions"].push_back(t);
}

const Form1& level_one(const BrauerRep& x, const std::string& command)
{
    require(x.level() == 1, ErrorCode::Precondition, command + " takes p-torsion classes; use is-zero or per-ind for w2 symbols");
    return x.form();
}

std::string witt_string(const WittF& v)
{
    return v.to_string([](const Series& c) { return series_string(c); });
}

} // namespace

Json run_command(const std::string& command, const Session& s, const std::string& input)
{
    if (command == "witt") {
        WNodePtr ast = parse_witt(input);
        Json r = base(command, s, print(ast));
        WittF v = eval_witt(ast, s);
        r["length"] = v.length();
        r["value"] = witt_string(v);
        return r;
    }

    Expr ast = parse_expr(input);
    Json r = base(command, s, print(ast));

    if (command == "local2d") {
        BivariateClass c = eval_bivariate_class(ast, s);
        LocusReport loc = ramification_locus(c);
        Json locus = Json::array();
        for (Divisor d : loc.locus)
            locus.push_back(to_string(d));
        r["sw"] = loc.along.at(Divisor::T).sw;
        r["locus"] = locus;
        PiSymbolReport red = reduce_to_pi_symbol(c);
        r["obstruction"] = red.obstruction ? Json("[" + red.obstruction->to_string() + ", t)") : Json(nullptr);
        r["certificate_status"] = to_string(red.certificate_status);
        r["pi_symbol"] = "[" + red.h_string + ", pi)";
        r["certificate_moves"] = red.certificate.size();
        put_assumptions(r, {"lift: coefficients of pi-powers carried verbatim",
                            "residue field along (t) is F_q((pi)) modulo pi^" + std::to_string(c.n_pi)});
        return r;
    }

    BrauerRep x = eval_class(ast, s);
    r["level"] = x.level();

    if (command == "sw") {
        const Form1& w = level_one(x, command);
        SwanReport sr = swan_conductor(w);
        r["sw"] = sr.sw;
        r["zero_status"] = to_string(sr.zero_status);
        r["certificate_status"] = to_string(cert_verify(w, sr.reduced, sr.certificate));
        r["graded_symbol"] = symbol_json(sr.leading);
        r["reason"] = sr.reason;
        return r;
    }
    if (command == "normal-form") {
        const Form1& w = level_one(x, command);
        SymbolPresentation nf = normal_form(w);
        r["sw"] = nf.sw;
        r["zero_status"] = to_string(nf.zero_status);
        put_normal_form(r, nf);
        put_splitting(r, split_certificate(nf));
        r["reason"] = nf.reason;
        return r;
    }
    if (command == "is-zero") {
        ZeroDecision z = is_zero(x);
        if (x.level() == 1)
            r["sw"] = swan_conductor(x.form()).sw;
        r["zero_status"] = to_string(z.status);
        r["reason"] = z.reason;
        return r;
    }
    if (command == "per-ind") {
        IndexReport ir = index_report(x);
        r["sw"] = opt(ir.sw);
        r["zero_status"] = to_string(ir.zero_status);
        if (ir.normal_form)
            put_normal_form(r, *ir.normal_form);
        r["per"] = opt(ir.per);
        r["ind"] = opt(ir.ind);
        if (ir.splitting)
            put_splitting(r, *ir.splitting);
        put_assumptions(r, ir.assumptions);
        r["m"] = opt(ir.m);
        r["separable_degree"] = opt(ir.separable_degree);
        r["inseparable_degree"] = opt(ir.inseparable_degree);
        if (ir.valuation) {
            const auto& v = *ir.valuation;
            r["valuation"] = {{"d", v.d}, {"e", v.e}, {"e_prime", v.e_prime}, {"f", v.f}, {"n", v.n}};
        } else {
            r["valuation"] = nullptr;
        }
        r["reason"] = ir.reason;
        return r;
    }
    fail(ErrorCode::Precondition, "unknown command '" + command + "'");
}

Json run_guarded(const std::string& command, const Session& s, const std::string& input, int& code)
{
    auto error = [&](const std::string& name, const std::string& msg, int c, std::optional<std::size_t> pos) {
        code = c;
        Json e;
        e["input"] = input;
        Json body{{"code", name}, {"message", msg}};
        if (pos)
            body["position"] = *pos;
        e["error"] = body;
        return e;
    };
    try {
        code = kOk;
        return run_command(command, s, input);
    } catch (const ParseError& e) {
        return error(code_name(e.code()), e.what(), kParse, e.position());
    } catch (const Error& e) {
        return error(code_name(e.code()), e.what(), exit_code_for(e.code()), std::nullopt);
    } catch (const std::exception& e) {
        return error("internal", e.what(), kFailure, std::nullopt);
    }
}

std::string render_text(const Json& report)
{
    std::string out;
    for (const auto& [key, value] : report.items()) {
        if (value.is_null() || (value.is_array() && value.empty()))
            continue;
        out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
    return out;
}

namespace {

Session session_from(int p, long q, const std::string& residue, int prec)
{
    require(p == 2 || p == 3 || p == 5 || p == 7, ErrorCode::Precondition, "--p must be one of 2, 3, 5, 7");
    Session s;
    s.p = p;
    long v = q;
    int n = 0;
    while (v > 1 && v % p == 0) {
        v /= p;
        ++n;
    }
    require(v == 1 && n >= 1, ErrorCode::Precondition, "--q must be a power of p");
    s.n = n;
    if (residue == "fq")
        s.residue = ResidueKind::Finite;
    else if (residue == "local")
        s.residue = ResidueKind::TruncatedLocal;
    else
        s.residue = ResidueKind::RationalFunction;
    require(prec > p && prec <= 400, ErrorCode::Precondition, "--prec must lie in (p, 400]");
    s.prec = prec;
    return s;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Brauer classes of k((t)) in characteristic p"};
    app.name("pbr");
    std::string command, input, residue = "ratfunc", format = "json", batch;
    int p = 2, prec = kDefaultPrecision;
    long q = 0;
    app.add_option("command", command, "sw | normal-form | is-zero | per-ind | witt | local2d")
        ->required()
        ->check(CLI::IsMember({"sw", "normal-form", "is-zero", "per-ind", "witt", "local2d"}));
    app.add_option("input", input, "expression (omit with --batch)");
    app.add_option("--p", p, "characteristic");
    app.add_option("--q", q, "size of the constant field (default p)");
    app.add_option("--residue", residue, "residue field of k((t))")->check(CLI::IsMember({"fq", "ratfunc", "local"}));
    app.add_option("--prec", prec, "t-adic working precision");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--batch", batch, "file with one expression per line");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kParse;
    }

    Session s;
    try {
        if (command == "local2d")
            residue = "fq";
        s = session_from(p, q == 0 ? p : q, residue, prec);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }

    auto emit = [&](const Json& j, bool compact) {
        if (format == "text") {
            if (j.contains("error"))
                err << "error: " << j["error"]["message"].get<std::string>() << "\n";
            else
                out << render_text(j);
            if (compact)
                out << "\n";
        } else {
            out << (compact ? j.dump() : j.dump(2)) << "\n";
        }
    };

    if (!batch.empty()) {
        std::ifstream in(batch);
        if (!in) {
            err << "error: cannot open " << batch << "\n";
            return kFailure;
        }
        int first_error = kOk;
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#')
                continue;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            int code = kOk;
            emit(run_guarded(command, s, line, code), true);
            if (first_error == kOk)
                first_error = code;
        }
        return first_error;
    }

    if (input.empty()) {
        err << "error: no input expression (pass one, or use --batch)\n";
        return kParse;
    }
    int code = kOk;
    emit(run_guarded(command, s, input, code), false);
    return code;
}

} // namespace pbr::cli
