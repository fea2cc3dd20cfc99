#include "pbr/fq.hpp"

#include "pbr/error.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace pbr {

namespace {

bool is_prime_small(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace

const FqField& FqField::get(int p, int n)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<FqField>> registry;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(p, n);
    auto it = registry.find(key);
    if (it != registry.end())
        return *it->second;
    require(is_prime_small(p) && p <= 7, ErrorCode::Precondition, "p must be a prime in [2, 7]");
    require(n >= 1, ErrorCode::Precondition, "extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        require(q <= (1 << 16), ErrorCode::Unsupported, "field size above 65536 is not supported");
    }
    auto field = std::unique_ptr<FqField>(new FqField(p, n));
    const FqField& ref = *field;
    registry.emplace(key, std::move(field));
    return ref;
}

FqField::FqField(int p, int n) : p_(p), n_(n)
{
    q_ = 1;
    for (int i = 0; i < n; ++i) {
        pow_p_.push_back(q_);
        q_ *= static_cast<Value>(p);
    }

    // Multiply-by-w on digit vectors modulo the candidate modulus.
    auto times_w = [&](std::vector<int>& d, const std::vector<int>& m) {
        int top = d[n - 1];
        for (int i = n - 1; i > 0; --i)
            d[i] = d[i - 1];
        d[0] = 0;
        for (int i = 0; i < n; ++i)
            d[i] = ((d[i] - top * m[i]) % p + p) % p;
    };
    auto encode = [&](const std::vector<int>& d) {
        Value v = 0;
        for (int i = n - 1; i >= 0; --i)
            v = v * static_cast<Value>(p) + static_cast<Value>(d[i]);
        return v;
    };

    // First primitive monic polynomial in the order of the integer code
    // sum c_i p^i over the non-leading coefficients.
    for (Value code = 1; code < q_; ++code) {
        std::vector<int> m(n + 1, 0);
        Value c = code;
        for (int i = 0; i < n; ++i) {
            m[i] = static_cast<int>(c % p);
            c /= p;
        }
        m[n] = 1;
        if (m[0] == 0)
            continue;
        std::vector<int> d(n, 0);
        d[0] = 1;
        std::vector<Value> seq;
        seq.reserve(q_ - 1);
        Value order = 0;
        do {
            seq.push_back(encode(d));
            times_w(d, m);
            ++order;
        } while (encode(d) != 1 && order < q_);
        if (order == q_ - 1) {
            modulus_ = m;
            exp_ = std::move(seq);
            break;
        }
    }
    require(!modulus_.empty(), ErrorCode::Unsupported, "no primitive modulus found");

    log_.assign(q_, -1);
    for (Value k = 0; k < q_ - 1; ++k)
        log_[exp_[k]] = static_cast<int>(k);
    generator_ = exp_.size() > 1 ? exp_[1] : 1;

    if (q_ <= 1024) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (Value a = 0; a < q_; ++a)
            for (Value b = 0; b < q_; ++b) {
                Value r = 0;
                for (int i = n - 1; i >= 0; --i)
                    r = r * p + static_cast<Value>((digit(a, i) + digit(b, i)) % p);
                add_table_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(r);
            }
    }

    frob_.resize(q_);
    frob_inv_.resize(q_);
    for (Value a = 0; a < q_; ++a)
        frob_[a] = pow(a, p);
    for (Value a = 0; a < q_; ++a)
        frob_inv_[frob_[a]] = a;
    trace_.resize(q_);
    for (Value a = 0; a < q_; ++a) {
        Value s = 0, x = a;
        for (int i = 0; i < n; ++i) {
            s = add(s, x);
            x = frob_[x];
        }
        trace_[a] = static_cast<int>(s); // lies in the prime field, i.e. digit 0 only
    }
    for (Value a = 0; a < q_; ++a)
        if (trace_[a] == 1) {
            trace_one_ = a;
            break;
        }
}

std::string FqField::modulus_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int i = n_; i >= 0; --i) {
        int c = modulus_[i];
        if (c == 0)
            continue;
        if (!first)
            os << "+";
        first = false;
        if (i == 0 || c != 1)
            os << c;
        if (i > 0)
            os << (c != 1 ? "*" : "") << "w" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

int FqField::digit(Value a, int i) const { return static_cast<int>((a / pow_p_[i]) % p_); }

FqField::Value FqField::from_digits(const std::vector<int>& digits) const
{
    Value v = 0;
    for (int i = n_ - 1; i >= 0; --i) {
        int d = i < static_cast<int>(digits.size()) ? digits[i] : 0;
        v = v * p_ + static_cast<Value>(((d % p_) + p_) % p_);
    }
    return v;
}

FqField::Value FqField::add(Value a, Value b) const
{
    if (!add_table_.empty())
        return add_table_[static_cast<std::size_t>(a) * q_ + b];
    Value r = 0;
    for (int i = n_ - 1; i >= 0; --i)
        r = r * p_ + static_cast<Value>((digit(a, i) + digit(b, i)) % p_);
    return r;
}

FqField::Value FqField::neg(Value a) const
{
    Value r = 0;
    for (int i = n_ - 1; i >= 0; --i)
        r = r * p_ + static_cast<Value>((p_ - digit(a, i)) % p_);
    return r;
}

FqField::Value FqField::sub(Value a, Value b) const { return add(a, neg(b)); }

FqField::Value FqField::mul(Value a, Value b) const
{
    if (a == 0 || b == 0)
        return 0;
    return exp_[(static_cast<Value>(log_[a]) + static_cast<Value>(log_[b])) % (q_ - 1)];
}

FqField::Value FqField::inv(Value a) const
{
    require(a != 0, ErrorCode::DivisionByZero, "inverse of zero in F_q");
    return exp_[(q_ - 1 - static_cast<Value>(log_[a])) % (q_ - 1)];
}

FqField::Value FqField::pow(Value a, long long e) const
{
    if (e == 0)
        return 1;
    if (a == 0) {
        require(e > 0, ErrorCode::DivisionByZero, "negative power of zero in F_q");
        return 0;
    }
    long long order = static_cast<long long>(q_) - 1;
    long long k = (static_cast<long long>(log_[a]) * (e % order)) % order;
    if (k < 0)
        k += order;
    return exp_[static_cast<std::size_t>(k)];
}

FqField::Value FqField::from_int(long long c) const
{
    return static_cast<Value>(((c % p_) + p_) % p_);
}

Fq Fq::operator/(const Fq& o) const { return *this * o.inverse(); }

Fq Fq::inverse() const { return Fq(*f_, f_->inv(v_)); }

bool Fq::is_single_term() const
{
    int terms = 0;
    for (int i = 0; i < f_->n(); ++i)
        terms += f_->digit(v_, i) != 0;
    return terms <= 1;
}

std::string Fq::to_string() const
{
    if (v_ == 0)
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < f_->n(); ++i) {
        int d = f_->digit(v_, i);
        if (d == 0)
            continue;
        if (!first)
            os << "+";
        first = false;
        if (i == 0) {
            os << d;
            continue;
        }
        if (d != 1)
            os << d << "*";
        os << "w";
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

FqPoly::FqPoly(const FqField& f, std::vector<FqField::Value> coeffs) : f_(&f), c_(std::move(coeffs))
{
    trim();
}

FqPoly FqPoly::constant(const Fq& c) { return FqPoly(c.field(), {c.value()}); }

FqPoly FqPoly::monomial(const Fq& c, int degree)
{
    std::vector<FqField::Value> v(static_cast<std::size_t>(degree) + 1, 0);
    v[static_cast<std::size_t>(degree)] = c.value();
    return FqPoly(c.field(), std::move(v));
}

void FqPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Fq FqPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return Fq(*f_, 0);
    return Fq(*f_, c_[static_cast<std::size_t>(i)]);
}

int FqPoly::low_degree() const
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            return static_cast<int>(i);
    return -1;
}

FqPoly FqPoly::operator+(const FqPoly& o) const
{
    std::vector<FqField::Value> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        FqField::Value a = i < c_.size() ? c_[i] : 0;
        FqField::Value b = i < o.c_.size() ? o.c_[i] : 0;
        r[i] = f_->add(a, b);
    }
    return FqPoly(*f_, std::move(r));
}

FqPoly FqPoly::operator-() const
{
    std::vector<FqField::Value> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f_->neg(c_[i]);
    return FqPoly(*f_, std::move(r));
}

FqPoly FqPoly::operator-(const FqPoly& o) const { return *this + (-o); }

FqPoly FqPoly::operator*(const FqPoly& o) const
{
    if (is_zero() || o.is_zero())
        return FqPoly(*f_);
    std::vector<FqField::Value> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
    }
    return FqPoly(*f_, std::move(r));
}

FqPoly FqPoly::scaled(const Fq& c) const
{
    std::vector<FqField::Value> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f_->mul(c_[i], c.value());
    return FqPoly(*f_, std::move(r));
}

FqPoly FqPoly::shifted(int k) const
{
    if (is_zero())
        return *this;
    std::vector<FqField::Value> r(static_cast<std::size_t>(k), 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return FqPoly(*f_, std::move(r));
}

void FqPoly::divmod(const FqPoly& d, FqPoly& q, FqPoly& r) const
{
    require(!d.is_zero(), ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<FqField::Value> rem = c_;
    int dd = d.degree();
    std::vector<FqField::Value> quot(rem.size() >= d.c_.size() ? rem.size() - d.c_.size() + 1 : 0, 0);
    FqField::Value lead_inv = f_->inv(d.c_.back());
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        FqField::Value c = rem[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        FqField::Value factor = f_->mul(c, lead_inv);
        quot[static_cast<std::size_t>(i - dd)] = factor;
        for (int j = 0; j <= dd; ++j) {
            auto idx = static_cast<std::size_t>(i - dd + j);
            rem[idx] = f_->sub(rem[idx], f_->mul(factor, d.c_[static_cast<std::size_t>(j)]));
        }
    }
    q = FqPoly(*f_, std::move(quot));
    r = FqPoly(*f_, std::move(rem));
}

FqPoly FqPoly::operator/(const FqPoly& d) const
{
    FqPoly q(*f_), r(*f_);
    divmod(d, q, r);
    return q;
}

FqPoly FqPoly::operator%(const FqPoly& d) const
{
    FqPoly q(*f_), r(*f_);
    divmod(d, q, r);
    return r;
}

FqPoly FqPoly::monic() const
{
    if (is_zero())
        return *this;
    return scaled(leading().inverse());
}

FqPoly FqPoly::derivative() const
{
    if (c_.size() <= 1)
        return FqPoly(*f_);
    std::vector<FqField::Value> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = f_->mul(c_[i], f_->from_int(static_cast<long long>(i)));
    return FqPoly(*f_, std::move(r));
}

FqPoly FqPoly::pow(int e) const
{
    FqPoly result = FqPoly::constant(Fq::one(*f_));
    FqPoly base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

FqPoly FqPoly::frobenius() const
{
    if (is_zero())
        return *this;
    int p = f_->p();
    std::vector<FqField::Value> r((c_.size() - 1) * static_cast<std::size_t>(p) + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        r[i * static_cast<std::size_t>(p)] = f_->frobenius(c_[i]);
    return FqPoly(*f_, std::move(r));
}

FqPoly FqPoly::residue_class(int r) const
{
    int p = f_->p();
    std::vector<FqField::Value> out;
    for (std::size_t i = static_cast<std::size_t>(r); i < c_.size(); i += static_cast<std::size_t>(p))
        out.push_back(c_[i]);
    return FqPoly(*f_, std::move(out));
}

FqPoly FqPoly::coeff_pth_root() const
{
    std::vector<FqField::Value> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        out[i] = f_->pth_root(c_[i]);
    return FqPoly(*f_, std::move(out));
}

Fq FqPoly::eval(const Fq& x) const
{
    Fq acc = Fq::zero(*f_);
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * x + Fq(*f_, c_[i]);
    return acc;
}

bool FqPoly::is_single_term() const
{
    int terms = 0;
    for (auto c : c_)
        if (c != 0)
            terms += Fq(*f_, c).is_single_term() ? 1 : 2;
    return terms <= 1;
}

std::string FqPoly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        Fq c(*f_, c_[i]);
        if (!first)
            os << "+";
        first = false;
        if (i == 0) {
            os << c.to_string();
            continue;
        }
        if (!c.is_one()) {
            if (c.is_single_term())
                os << c.to_string() << "*";
            else
                os << "(" << c.to_string() << ")*";
        }
        os << var;
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

FqPoly gcd(FqPoly a, FqPoly b)
{
    while (!b.is_zero()) {
        FqPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace pbr
