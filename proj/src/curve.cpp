#include "zetalab/curve.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace zetalab {

const char* curve_kind_name(CurveKind k)
{
    switch (k) {
    case CurveKind::elliptic:      return "elliptic";
    case CurveKind::hyperelliptic: return "hyperelliptic";
    case CurveKind::plane:         return "plane";
    case CurveKind::p1:            return "p1";
    }
    return "?";
}

namespace {

int64_t mod_pos(int64_t a, int64_t p)
{
    int64_t r = a % p;
    return r < 0 ? r + p : r;
}

std::vector<int64_t> reduce_mod(std::vector<int64_t> v, int64_t p)
{
    for (auto& c : v) c = mod_pos(c, p);
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

int degree(const std::vector<int64_t>& v)
{
    return static_cast<int>(v.size()) - 1; // -1 for the zero polynomial
}

// ---- config document parsing ------------------------------------------------

std::string trim(const std::string& s)
{
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<int64_t> parse_int_list(const std::string& raw)
{
    std::string s = trim(raw);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        fail(errc::parse_error, "expected a bracketed integer list, got '" + raw + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<int64_t> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail(errc::parse_error, "bad integer '" + item + "' in list");
        }
    }
    return out;
}

std::vector<std::vector<int64_t>> parse_nested_list(const std::string& raw)
{
    std::string s = trim(raw);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        fail(errc::parse_error, "expected a nested list, got '" + raw + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<std::vector<int64_t>> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ','))
            ++i;
        if (i >= s.size()) break;
        if (s[i] != '[') fail(errc::parse_error, "expected '[' in nested list");
        size_t close = s.find(']', i);
        if (close == std::string::npos) fail(errc::parse_error, "unterminated '[' in nested list");
        out.push_back(parse_int_list(s.substr(i, close - i + 1)));
        i = close + 1;
    }
    return out;
}

int64_t parse_int(const std::string& s, const std::string& key)
{
    try {
        size_t pos = 0;
        int64_t v = std::stoll(trim(s), &pos);
        if (pos != trim(s).size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(errc::parse_error, "bad integer for key '" + key + "'");
    }
}

// ---- model validation --------------------------------------------------------

void validate_hyperelliptic_family(CurveModel& c)
{
    const int64_t p = c.base->p();
    c.f = reduce_mod(std::move(c.f), p);
    c.h = reduce_mod(std::move(c.h), p);
    const int df = degree(c.f);

    if (c.kind == CurveKind::elliptic) {
        if (df != 3)
            fail(errc::invalid_curve, "elliptic model needs deg f = 3, got " + std::to_string(df));
        if (degree(c.h) > 1)
            fail(errc::invalid_curve, "elliptic model needs deg h <= 1");
        c.genus = 1;
    } else {
        if (df < 3)
            fail(errc::invalid_curve, "hyperelliptic model needs deg f >= 3");
        c.genus = (df - 1) / 2; // deg f = 2g+1 or 2g+2
        if (degree(c.h) > c.genus + 1)
            fail(errc::invalid_curve, "hyperelliptic model needs deg h <= g+1");
    }

    if (p == 2) {
        if (c.h.empty())
            fail(errc::invalid_curve, "y^2 + h y = f needs h != 0 in characteristic 2");
    } else {
        if (!c.h.empty())
            fail(errc::invalid_curve, "odd characteristic model must have h = 0");
        auto g = poly_fp::gcd(c.f, poly_fp::derivative(c.f, p), p);
        if (degree(g) != 0)
            fail(errc::invalid_curve, "f is not squarefree (gcd(f, f') != 1)");
    }
}

void spot_check_plane_smoothness(const CurveModel& c);

void validate_plane(CurveModel& c)
{
    const int64_t p = c.base->p();
    int d = -1;
    std::vector<PlaneMonomial> cleaned;
    for (auto m : c.poly) {
        m.coeff = mod_pos(m.coeff, p);
        if (m.coeff == 0) continue;
        if (m.ex < 0 || m.ey < 0 || m.ez < 0)
            fail(errc::invalid_curve, "negative exponent in plane monomial");
        int total = m.ex + m.ey + m.ez;
        if (d == -1) d = total;
        if (total != d)
            fail(errc::invalid_curve, "plane polynomial is not homogeneous");
        cleaned.push_back(m);
    }
    if (d < 1) fail(errc::invalid_curve, "plane polynomial is zero or constant");
    c.poly = std::move(cleaned);
    c.plane_degree = d;
    c.genus = (d - 1) * (d - 2) / 2;
    spot_check_plane_smoothness(c);
}

void validate(CurveModel& c)
{
    switch (c.kind) {
    case CurveKind::p1:
        c.genus = 0;
        break;
    case CurveKind::elliptic:
    case CurveKind::hyperelliptic:
        validate_hyperelliptic_family(c);
        break;
    case CurveKind::plane:
        validate_plane(c);
        break;
    }
}

// ---- point counting ----------------------------------------------------------

std::vector<FieldCoeffs> lift_int_poly(const std::vector<int64_t>& poly, const FieldSpec& ext)
{
    std::vector<FieldCoeffs> out;
    out.reserve(poly.size());
    for (int64_t c : poly) out.push_back(ext.from_int(c));
    return out;
}

// Absolute trace to F_2 of each basis power x^i, for solving y^2 + y = a.
std::vector<int> trace_basis_char2(const FieldSpec& ext)
{
    const int n = ext.k();
    std::vector<int> tr(static_cast<size_t>(n));
    FieldCoeffs xi = ext.one();
    const FieldCoeffs x = ext.gen();
    for (int i = 0; i < n; ++i) {
        FieldCoeffs t = xi, acc = xi;
        for (int j = 1; j < n; ++j) {
            t = ext.mul(t, t);
            acc = ext.add(acc, t);
        }
        // acc lies in F_2
        tr[static_cast<size_t>(i)] = static_cast<int>(acc[0]);
        xi = ext.mul(xi, x);
    }
    return tr;
}

int trace_of(const FieldCoeffs& a, const std::vector<int>& tr_basis)
{
    int t = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i]) t ^= tr_basis[i];
    return t;
}

Int count_hyperelliptic_like(const CurveModel& curve, const FieldSpec& ext)
{
    const int64_t p = curve.base->p();
    const int64_t Q = ext.q();
    const auto fx = lift_int_poly(curve.f, ext);
    const auto hx = lift_int_poly(curve.h, ext);
    const int df = degree(curve.f);
    const int g = curve.genus;

    Int total = 0;

    if (p == 2) {
        const auto tr_basis = trace_basis_char2(ext);
        auto solutions = [&](const FieldCoeffs& c1, const FieldCoeffs& c0) -> int {
            if (ext.is_zero(c1)) return 1; // y -> y^2 is bijective
            FieldCoeffs ci = ext.inv(c1);
            FieldCoeffs a = ext.mul(c0, ext.mul(ci, ci));
            return trace_of(a, tr_basis) == 0 ? 2 : 0;
        };
        for (int64_t i = 0; i < Q; ++i) {
            FieldCoeffs x = ext.element(i);
            total += solutions(ext.eval_poly(hx, x), ext.eval_poly(fx, x));
        }
        if (df == 2 * g + 1) {
            total += 1;
        } else {
            FieldCoeffs lead = ext.from_int(curve.f[static_cast<size_t>(df)]);
            FieldCoeffs hl = (degree(curve.h) == g + 1)
                                 ? ext.from_int(curve.h[static_cast<size_t>(g + 1)])
                                 : ext.zero();
            total += solutions(hl, lead);
        }
    } else {
        // h = 0; count via the multiplicity table of y -> y^2
        std::vector<int32_t> sqcnt(static_cast<size_t>(Q), 0);
        for (int64_t i = 0; i < Q; ++i) {
            FieldCoeffs y = ext.element(i);
            sqcnt[static_cast<size_t>(ext.index_of(ext.mul(y, y)))]++;
        }
        for (int64_t i = 0; i < Q; ++i) {
            FieldCoeffs x = ext.element(i);
            total += sqcnt[static_cast<size_t>(ext.index_of(ext.eval_poly(fx, x)))];
        }
        if (df == 2 * g + 1)
            total += 1;
        else
            total += sqcnt[static_cast<size_t>(
                ext.index_of(ext.from_int(curve.f[static_cast<size_t>(df)])))];
    }
    return total;
}

FieldCoeffs eval_monomials(const std::vector<PlaneMonomial>& poly, const FieldSpec& ext,
                           const FieldCoeffs& x, const FieldCoeffs& y, const FieldCoeffs& z)
{
    FieldCoeffs acc = ext.zero();
    for (const auto& m : poly) {
        FieldCoeffs term = ext.from_int(m.coeff);
        term = ext.mul(term, ext.pow(x, static_cast<uint64_t>(m.ex)));
        term = ext.mul(term, ext.pow(y, static_cast<uint64_t>(m.ey)));
        term = ext.mul(term, ext.pow(z, static_cast<uint64_t>(m.ez)));
        acc = ext.add(acc, term);
    }
    return acc;
}

Int count_plane(const CurveModel& curve, const FieldSpec& ext)
{
    const int64_t Q = ext.q();
    if (Q > (int64_t(1) << 11))
        fail(errc::too_large, "plane-curve enumeration needs q^m <= 2^11");

    Int total = 0;
    const FieldCoeffs one = ext.one(), zero = ext.zero();
    for (int64_t i = 0; i < Q; ++i) {
        FieldCoeffs x = ext.element(i);
        for (int64_t j = 0; j < Q; ++j) {
            FieldCoeffs y = ext.element(j);
            if (ext.is_zero(eval_monomials(curve.poly, ext, x, y, one))) total += 1;
        }
    }
    // z = 0: points (x : 1 : 0), then (1 : 0 : 0)
    for (int64_t i = 0; i < Q; ++i) {
        FieldCoeffs x = ext.element(i);
        if (ext.is_zero(eval_monomials(curve.poly, ext, x, one, zero))) total += 1;
    }
    if (ext.is_zero(eval_monomials(curve.poly, ext, one, zero, zero))) total += 1;
    return total;
}

std::vector<PlaneMonomial> partial(const std::vector<PlaneMonomial>& poly, int which, int64_t p)
{
    std::vector<PlaneMonomial> out;
    for (auto m : poly) {
        int e = which == 0 ? m.ex : which == 1 ? m.ey : m.ez;
        if (e == 0) continue;
        m.coeff = mod_pos(m.coeff * e, p);
        if (m.coeff == 0) continue;
        (which == 0 ? m.ex : which == 1 ? m.ey : m.ez) -= 1;
        out.push_back(m);
    }
    return out;
}

// Nonsingularity over F_{q^m} for small m only: exhaustive search for a common
// projective zero of the three partials. A passed check does not certify
// smoothness over the algebraic closure.
void spot_check_plane_smoothness(const CurveModel& c)
{
    const int64_t p = c.base->p();
    auto fx = partial(c.poly, 0, p);
    auto fy = partial(c.poly, 1, p);
    auto fz = partial(c.poly, 2, p);
    for (int m = 1; m <= 4; ++m) {
        int64_t qm = 1;
        bool fits = true;
        for (int i = 0; i < c.base->k() * m; ++i) {
            qm *= p;
            if (qm > (int64_t(1) << 7)) { fits = false; break; }
        }
        if (!fits) break;
        FieldSpec ext = FieldSpec::build(p, c.base->k() * m);
        for (int64_t i = 0; i < ext.q(); ++i)
            for (int64_t j = 0; j < ext.q(); ++j)
                for (int64_t l = 0; l < ext.q(); ++l) {
                    if (i == 0 && j == 0 && l == 0) continue;
                    FieldCoeffs x = ext.element(i), y = ext.element(j), z = ext.element(l);
                    if (ext.is_zero(eval_monomials(fx, ext, x, y, z)) &&
                        ext.is_zero(eval_monomials(fy, ext, x, y, z)) &&
                        ext.is_zero(eval_monomials(fz, ext, x, y, z)))
                        fail(errc::invalid_curve,
                             "plane model is singular over F_{q^" + std::to_string(m) + "}");
                }
    }
}

} // namespace

std::string CurveModel::canonical_key() const
{
    std::ostringstream os;
    os << "model=" << curve_kind_name(kind) << ";p=" << base->p() << ";k=" << base->k() << ";f=";
    for (auto c : f) os << c << ",";
    os << ";h=";
    for (auto c : h) os << c << ",";
    os << ";poly=";
    for (const auto& m : poly) os << m.ex << "." << m.ey << "." << m.ez << "." << m.coeff << ",";
    return os.str();
}

std::string CurveModel::cache_id() const
{
    // FNV-1a, 64-bit
    uint64_t h64 = 1469598103934665603ull;
    for (unsigned char ch : canonical_key()) {
        h64 ^= ch;
        h64 *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h64;
    return os.str();
}

CurveModel parse_curve(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    bool in_curve = false;
    std::map<std::string, std::string> kv;
    while (std::getline(in, line)) {
        auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line == "[curve]") {
                in_curve = true;
                continue;
            }
            in_curve = false;
            continue;
        }
        if (!in_curve) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) fail(errc::parse_error, "expected 'key = value': " + line);
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) fail(errc::parse_error, "empty key");
        kv[key] = val;
    }
    if (kv.empty()) fail(errc::parse_error, "no [curve] table found");

    auto need = [&](const std::string& key) -> std::string {
        auto it = kv.find(key);
        if (it == kv.end()) fail(errc::parse_error, "missing key '" + key + "'");
        return it->second;
    };

    std::string model = need("model");
    int64_t p = parse_int(need("p"), "p");
    int k = static_cast<int>(parse_int(need("k"), "k"));
    std::string name = kv.count("name") ? kv["name"] : model;

    if (model == "p1") return make_p1(p, k, name);
    if (model == "elliptic" || model == "hyperelliptic") {
        auto f = parse_int_list(need("f"));
        std::vector<int64_t> h;
        if (kv.count("h")) h = parse_int_list(kv["h"]);
        return model == "elliptic" ? make_elliptic(p, k, std::move(f), std::move(h), name)
                                   : make_hyperelliptic(p, k, std::move(f), std::move(h), name);
    }
    if (model == "plane") {
        auto rows = parse_nested_list(need("poly"));
        std::vector<PlaneMonomial> poly;
        for (const auto& r : rows) {
            if (r.size() != 4)
                fail(errc::parse_error, "plane monomials are [ex, ey, ez, coeff] quadruples");
            poly.push_back(PlaneMonomial{static_cast<int>(r[0]), static_cast<int>(r[1]),
                                         static_cast<int>(r[2]), r[3]});
        }
        return make_plane(p, k, std::move(poly), name);
    }
    fail(errc::parse_error, "unknown model '" + model + "'");
}

static CurveModel make_common(int64_t p, int k, CurveKind kind, const std::string& name)
{
    CurveModel c;
    c.name = name;
    c.base = std::make_shared<FieldSpec>(FieldSpec::build(p, k));
    c.kind = kind;
    return c;
}

CurveModel make_p1(int64_t p, int k, const std::string& name)
{
    CurveModel c = make_common(p, k, CurveKind::p1, name);
    validate(c);
    return c;
}

CurveModel make_elliptic(int64_t p, int k, std::vector<int64_t> f, std::vector<int64_t> h,
                         const std::string& name)
{
    CurveModel c = make_common(p, k, CurveKind::elliptic, name);
    c.f = std::move(f);
    c.h = std::move(h);
    validate(c);
    return c;
}

CurveModel make_hyperelliptic(int64_t p, int k, std::vector<int64_t> f, std::vector<int64_t> h,
                              const std::string& name)
{
    CurveModel c = make_common(p, k, CurveKind::hyperelliptic, name);
    c.f = std::move(f);
    c.h = std::move(h);
    validate(c);
    return c;
}

CurveModel make_plane(int64_t p, int k, std::vector<PlaneMonomial> poly, const std::string& name)
{
    CurveModel c = make_common(p, k, CurveKind::plane, name);
    c.poly = std::move(poly);
    validate(c);
    return c;
}

Int count_points(const CurveModel& curve, int m)
{
    if (m < 1) fail(errc::invalid_argument, "extension degree m must be >= 1");
    if (curve.kind == CurveKind::p1)
        return int_pow(Int(curve.base->p()), static_cast<unsigned>(curve.base->k() * m)) + 1;

    FieldSpec ext = FieldSpec::build(curve.base->p(), curve.base->k() * m); // throws TooLarge
    if (curve.kind == CurveKind::plane) return count_plane(curve, ext);
    return count_hyperelliptic_like(curve, ext);
}

std::vector<int> mobius_table(int n)
{
    std::vector<int> mu(static_cast<size_t>(n) + 1, 1);
    std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
    for (int i = 2; i <= n; ++i) {
        if (composite[static_cast<size_t>(i)]) continue;
        for (int j = i; j <= n; j += i) {
            if (j > i) composite[static_cast<size_t>(j)] = true;
            mu[static_cast<size_t>(j)] *= -1;
        }
        int64_t sq = static_cast<int64_t>(i) * i;
        for (int64_t j = sq; j <= n; j += sq) mu[static_cast<size_t>(j)] = 0;
    }
    mu[0] = 0;
    return mu;
}

PointCountTable closed_point_spectrum(const std::vector<Int>& counts)
{
    const int M = static_cast<int>(counts.size());
    if (M == 0) fail(errc::invalid_argument, "need at least one count");
    auto mu = mobius_table(M);

    PointCountTable t;
    t.counts = counts;
    t.a.assign(static_cast<size_t>(M) + 1, Int(0));
    for (int l = 1; l <= M; ++l) {
        Int s = 0;
        for (int d = 1; d <= l; ++d)
            if (l % d == 0) s += Int(mu[static_cast<size_t>(l / d)]) * counts[static_cast<size_t>(d - 1)];
        if (s < 0 || s % l != 0)
            fail(errc::inconsistent_counts,
                 "Moebius inversion fails at degree " + std::to_string(l));
        t.a[static_cast<size_t>(l)] = s / l;
    }

    // b_n from prod_l (1 - t^l)^{-a_l}: repeated stride-l prefix sums
    t.b.assign(static_cast<size_t>(M) + 1, Int(0));
    t.b[0] = 1;
    for (int l = 1; l <= M; ++l) {
        Int reps = t.a[static_cast<size_t>(l)];
        for (Int r = 0; r < reps; ++r)
            for (int n = l; n <= M; ++n)
                t.b[static_cast<size_t>(n)] += t.b[static_cast<size_t>(n - l)];
    }
    return t;
}

std::map<int, Int> load_count_cache(const std::string& path)
{
    std::map<int, Int> out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        try {
            int m = std::stoi(line.substr(0, tab));
            out[m] = Int(line.substr(tab + 1));
        } catch (const std::exception&) {
            continue; // skip malformed rows
        }
    }
    return out;
}

void save_count_cache(const std::string& path, const std::map<int, Int>& entries)
{
    std::ofstream out(path, std::ios::trunc);
    for (const auto& [m, n] : entries) out << m << '\t' << n.str() << '\n';
}

std::vector<Int> counts_up_to(const CurveModel& curve, int max_degree, const std::string& cache_dir)
{
    std::map<int, Int> cache;
    std::string path;
    if (!cache_dir.empty()) {
        path = cache_dir + "/" + curve.cache_id() + ".counts";
        cache = load_count_cache(path);
    }
    bool dirty = false;
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(max_degree));
    for (int m = 1; m <= max_degree; ++m) {
        auto it = cache.find(m);
        if (it != cache.end()) {
            out.push_back(it->second);
        } else {
            Int n = count_points(curve, m);
            out.push_back(n);
            cache[m] = n;
            dirty = true;
        }
    }
    if (!path.empty() && dirty) save_count_cache(path, cache);
    return out;
}

} // namespace zetalab
