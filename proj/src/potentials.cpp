#include "bswkb/potentials.hpp"
#include "bswkb/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace bswkb {

PotentialSpec PotentialSpec::power(double m, double a, double g)
{
    PotentialSpec v;
    v.kind = PotentialKind::power;
    v.m = m;
    v.a = a;
    v.g = g;
    validate(v);
    return v;
}

PotentialSpec PotentialSpec::coulomb()
{
    PotentialSpec v;
    v.kind = PotentialKind::coulomb;
    v.m = -1.0;
    return v;
}

PotentialSpec PotentialSpec::logarithmic()
{
    PotentialSpec v;
    v.kind = PotentialKind::log;
    v.m = 0.0;
    return v;
}

PotentialSpec PotentialSpec::anharmonic(double lambda)
{
    PotentialSpec v;
    v.kind = PotentialKind::anharmonic;
    v.lambda = lambda;
    validate(v);
    return v;
}

PotentialSpec PotentialSpec::infinite_well()
{
    PotentialSpec v;
    v.kind = PotentialKind::infinite_well;
    return v;
}

bool PotentialSpec::confining() const
{
    switch (kind) {
    case PotentialKind::power: return m > 0.0;
    case PotentialKind::log:
    case PotentialKind::anharmonic:
    case PotentialKind::infinite_well: return true;
    default: return false;
    }
}

bool PotentialSpec::attractive_singular() const
{
    return kind == PotentialKind::coulomb || (kind == PotentialKind::power && m < 0.0);
}

double PotentialSpec::power_prefactor() const
{
    return a * std::pow(g, m - 2.0);
}

void validate(const PotentialSpec& v)
{
    switch (v.kind) {
    case PotentialKind::power:
        if (v.m < -1.0 || v.m == 0.0)
            throw std::domain_error("potential: power exponent must be in [-1,inf) excluding 0 "
                                    "(use 'log' for the m=0 limit)");
        if (!(v.a > 0.0) || !(v.g > 0.0))
            throw std::domain_error("potential: power parameters a, g must be positive");
        break;
    case PotentialKind::anharmonic:
        if (v.lambda < 0.0) throw std::domain_error("potential: anharmonic lambda must be >= 0");
        break;
    default: break;
    }
}

void validate(const QuantumLabel& q)
{
    if (q.n_r < 0) throw std::domain_error("quantum label: n_r must be >= 0");
    if (q.d < 1 || q.d > 12) throw std::domain_error("quantum label: d must be an integer in 1..12");
}

double evaluate(const PotentialSpec& v, double r)
{
    if (!(r > 0.0)) throw std::domain_error("evaluate: requires r > 0");
    switch (v.kind) {
    case PotentialKind::power: {
        const double sign = v.m > 0.0 ? 1.0 : -1.0;
        return v.power_prefactor() * sign * std::pow(r, v.m);
    }
    case PotentialKind::coulomb: return -1.0 / r;
    case PotentialKind::log: return std::log(r);
    case PotentialKind::anharmonic: {
        const double r2 = r * r;
        return r2 + v.lambda * r2 * r2;
    }
    case PotentialKind::infinite_well:
        throw UsageError("evaluate: infinite well has no pointwise form; use the closed-form "
                         "energies/action");
    }
    throw UsageError("evaluate: unknown potential kind");
}

namespace {

double anharmonic_turning_point(double lambda, double energy)
{
    if (!(energy > 0.0)) throw std::domain_error("turning_point: anharmonic requires E > 0");
    // V is strictly increasing: bracket then bisect, Newton polish.
    double lo = 0.0;
    double hi = std::max(1.0, std::pow(energy, 0.25)) + 1.0;
    auto f = [&](double r) { return r * r + lambda * r * r * r * r - energy; };
    while (f(hi) < 0.0) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; it++) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    double r = 0.5 * (lo + hi);
    for (int it = 0; it < 3; it++) {
        const double df = 2.0 * r + 4.0 * lambda * r * r * r;
        r -= f(r) / df;
    }
    return r;
}

} // namespace

double turning_point(const PotentialSpec& v, double energy)
{
    switch (v.kind) {
    case PotentialKind::power: {
        const double c = v.power_prefactor();
        if (v.m > 0.0) {
            if (!(energy > 0.0)) throw std::domain_error("turning_point: power m>0 requires E > 0");
            return std::pow(energy / c, 1.0 / v.m);
        }
        if (!(energy < 0.0)) throw std::domain_error("turning_point: power m<0 requires E < 0");
        return std::pow(std::fabs(energy) / c, 1.0 / v.m);
    }
    case PotentialKind::coulomb:
        if (!(energy < 0.0)) throw std::domain_error("turning_point: coulomb requires E < 0");
        return -1.0 / energy;
    case PotentialKind::log: return std::exp(energy);
    case PotentialKind::anharmonic: return anharmonic_turning_point(v.lambda, energy);
    case PotentialKind::infinite_well:
        if (!(energy > 0.0)) throw std::domain_error("turning_point: well requires E > 0");
        return 1.0; // wall
    }
    throw UsageError("turning_point: unknown potential kind");
}

namespace {

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

double parse_number(const std::string& s, const std::string& key)
{
    size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("potential: bad numeric value for key '" + key + "': " + s);
    }
    if (pos != s.size())
        throw UsageError("potential: bad numeric value for key '" + key + "': " + s);
    return value;
}

} // namespace

PotentialSpec PotentialSpec::parse(const std::string& text)
{
    const std::string t = lower(text);
    const size_t colon = t.find(':');
    const std::string head = t.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : t.substr(colon + 1);

    PotentialSpec v;
    if (head == "power")
        v.kind = PotentialKind::power;
    else if (head == "coulomb")
        return coulomb();
    else if (head == "log")
        return logarithmic();
    else if (head == "anharmonic")
        v.kind = PotentialKind::anharmonic;
    else if (head == "well")
        return infinite_well();
    else
        throw UsageError("potential: unknown kind '" + head + "'");

    bool have_m = false;
    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw UsageError("potential: expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const double value = parse_number(item.substr(eq + 1), key);
        if (v.kind == PotentialKind::power) {
            if (key == "m") {
                v.m = value;
                have_m = true;
            } else if (key == "a")
                v.a = value;
            else if (key == "g")
                v.g = value;
            else
                throw UsageError("potential: unknown key '" + key + "' for power");
        } else {
            if (key == "lambda")
                v.lambda = value;
            else
                throw UsageError("potential: unknown key '" + key + "' for anharmonic");
        }
    }
    if (v.kind == PotentialKind::power && !have_m)
        throw UsageError("potential: power requires m=<exponent>");
    validate(v);
    return v;
}

std::string PotentialSpec::describe() const
{
    std::ostringstream os;
    switch (kind) {
    case PotentialKind::power:
        os << "power:m=" << m;
        if (a != 1.0) os << ",a=" << a;
        if (g != 1.0) os << ",g=" << g;
        break;
    case PotentialKind::coulomb: os << "coulomb"; break;
    case PotentialKind::log: os << "log"; break;
    case PotentialKind::anharmonic: os << "anharmonic:lambda=" << lambda; break;
    case PotentialKind::infinite_well: os << "well"; break;
    }
    return os.str();
}

} // namespace bswkb
