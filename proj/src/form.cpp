#include "tsl/form.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace tsl {

Mat3 TernaryForm::gram() const
{
    Mat3 g;
    g << 2 * a, f, e,
         f, 2 * b, d,
         e, d, 2 * c;
    return g;
}

Int TernaryForm::content() const
{
    Int g = 0;
    for (Int x : coeffs()) g = std::gcd(g, x);
    return g;
}

Int TernaryForm::value(const Vec3& x) const
{
    return a * x[0] * x[0] + b * x[1] * x[1] + c * x[2] * x[2] + d * x[1] * x[2] + e * x[2] * x[0]
         + f * x[0] * x[1];
}

bool is_positive_definite(const Mat3& g)
{
    const Wide m1 = g(0, 0);
    const Wide m2 = Wide(g(0, 0)) * g(1, 1) - Wide(g(0, 1)) * g(1, 0);
    return m1 > 0 && m2 > 0 && det3(g.cast<Wide>()) > 0;
}

namespace {

void require_definite(const TernaryForm& f)
{
    if (!is_positive_definite(f.gram())) throw NotPositiveDefinite("form " + to_string(f) + " is not positive definite");
}

} // namespace

TernaryForm make_lattice(Int a, Int b, Int c, Int d, Int e, Int f)
{
    TernaryForm q{a, b, c, d, e, f};
    require_definite(q);
    return q;
}

TernaryForm make_form(Int a, Int b, Int c, Int d, Int e, Int f)
{
    TernaryForm q = make_lattice(a, b, c, d, e, f);
    if (!q.is_primitive()) throw NotPrimitive("form " + to_string(q) + " has content " + std::to_string(q.content()));
    return q;
}

TernaryForm make_form(const std::array<Int, 6>& c) { return make_form(c[0], c[1], c[2], c[3], c[4], c[5]); }

TernaryForm form_from_gram(const Mat3& g)
{
    if (g != g.transpose()) throw Error("Gram matrix is not symmetric");
    if (g(0, 0) % 2 || g(1, 1) % 2 || g(2, 2) % 2) throw Error("doubled Gram matrix must have even diagonal");
    return make_lattice(g(0, 0) / 2, g(1, 1) / 2, g(2, 2) / 2, g(1, 2), g(0, 2), g(0, 1));
}

BinaryForm make_binary(Int a, Int b, Int c)
{
    if (a <= 0 || 4 * a * c - b * b <= 0)
        throw NotPositiveDefinite("binary form " + to_string(BinaryForm{a, b, c}) + " is not positive definite");
    return BinaryForm{a, b, c};
}

Int discriminant4(const Mat3& g) { return det3(g) / 2; }

Discriminant4 discriminant4(const TernaryForm& f) { return Discriminant4{discriminant4(f.gram())}; }

TernaryForm direct_sum_one(const BinaryForm& ell) { return make_form(1, ell.a, ell.c, ell.b, 0, 0); }

TernaryForm diagonal(Int a, Int b, Int c) { return make_lattice(a, b, c, 0, 0, 0); }

TernaryForm scaled(const TernaryForm& f, Int k)
{
    return make_lattice(k * f.a, k * f.b, k * f.c, k * f.d, k * f.e, k * f.f);
}

TernaryForm primitive_part(const TernaryForm& f)
{
    const Int g = f.content();
    return TernaryForm{f.a / g, f.b / g, f.c / g, f.d / g, f.e / g, f.f / g};
}

TernaryForm transform(const TernaryForm& f, const Mat3& basis)
{
    return form_from_gram(basis.transpose() * f.gram() * basis);
}

namespace {

std::vector<Int> parse_list(std::string_view text, std::size_t expected)
{
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t' && ch != '\n') s.push_back(ch);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("expected a bracketed list like [1,1,1,0,0,0], got '" + std::string(text) + "'");
    std::vector<Int> out;
    const char* p = s.data() + 1;
    const char* end = s.data() + s.size() - 1;
    while (p < end) {
        Int v = 0;
        const char* start = (*p == '+') ? p + 1 : p;
        auto [next, ec] = std::from_chars(start, end, v);
        if (ec != std::errc() || next == start) throw ParseError("bad integer in '" + std::string(text) + "'");
        out.push_back(v);
        p = next;
        if (p < end) {
            if (*p != ',') throw ParseError("expected ',' in '" + std::string(text) + "'");
            ++p;
            if (p == end) throw ParseError("trailing ',' in '" + std::string(text) + "'");
        }
    }
    if (out.size() != expected)
        throw ParseError("expected " + std::to_string(expected) + " coefficients in '" + std::string(text) + "'");
    return out;
}

} // namespace

TernaryForm parse_form(std::string_view text)
{
    auto v = parse_list(text, 6);
    return make_lattice(v[0], v[1], v[2], v[3], v[4], v[5]);
}

BinaryForm parse_binary(std::string_view text)
{
    auto v = parse_list(text, 3);
    return make_binary(v[0], v[1], v[2]);
}

std::string to_string(const TernaryForm& f)
{
    std::ostringstream os;
    os << '[' << f.a << ',' << f.b << ',' << f.c << ',' << f.d << ',' << f.e << ',' << f.f << ']';
    return os.str();
}

std::string to_string(const BinaryForm& f)
{
    std::ostringstream os;
    os << '[' << f.a << ',' << f.b << ',' << f.c << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TernaryForm& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const BinaryForm& f) { return os << to_string(f); }

} // namespace tsl
