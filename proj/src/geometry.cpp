#include "mwb/geometry.hpp"

#include <stdexcept>

namespace mwb {

namespace {
constexpr long long kMaxPoints = 1 << 20;

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) {
        r *= b;
        if (r > (1LL << 40)) throw std::invalid_argument("geometry: size overflow");
    }
    return r;
}

// All canonical projective representatives of GF(q)^m, in lexicographic
// order of (v[0], ..., v[m-1]).
std::vector<std::vector<FieldElement>> projective_points(const FieldSpec& fs, int m) {
    long long total = ipow(fs.q(), m);
    if (total > kMaxPoints) throw std::invalid_argument("geometry: too many points");
    std::vector<std::vector<FieldElement>> pts;
    for (long long code = 1; code < total; ++code) {
        std::vector<FieldElement> v(m);
        long long t = code;
        for (int i = m - 1; i >= 0; --i) {
            v[i] = static_cast<FieldElement>(t % fs.q());
            t /= fs.q();
        }
        int lead = 0;
        while (v[lead] == 0) ++lead;
        if (v[lead] == 1) pts.push_back(std::move(v));
    }
    return pts;
}
}  // namespace

long long GeometryTag::point_count() const {
    if (rank < 1) throw std::invalid_argument("GeometryTag: rank must be >= 1");
    if (family == PG) {
        long long num = ipow(q, rank) - 1;
        return num / (q - 1);
    }
    return ipow(q, rank - 1);
}

std::string GeometryTag::str() const {
    return std::string(family == PG ? "pg" : "ag") + ":" + std::to_string(rank) + ":" +
           std::to_string(q);
}

GeometryTag GeometryTag::parse(const std::string& s) {
    auto a = s.find(':');
    auto b = s.find(':', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos)
        throw std::invalid_argument("GeometryTag: expected family:rank:q, got '" + s + "'");
    std::string fam = s.substr(0, a);
    GeometryTag t;
    if (fam == "pg")
        t.family = PG;
    else if (fam == "ag")
        t.family = AG;
    else
        throw std::invalid_argument("GeometryTag: unknown family '" + fam + "'");
    t.rank = std::stoi(s.substr(a + 1, b - a - 1));
    t.q = std::stoi(s.substr(b + 1));
    if (t.rank < 1) throw std::invalid_argument("GeometryTag: rank must be >= 1");
    return t;
}

std::shared_ptr<const LinearMatroid> pg(int m, int q) {
    if (m < 1) throw std::invalid_argument("pg: rank must be >= 1");
    FieldSpec fs = FieldSpec::of_order(q);
    auto pts = projective_points(fs, m);
    return std::make_shared<LinearMatroid>(std::move(fs), m, std::move(pts));
}

std::shared_ptr<const LinearMatroid> ag(int m, int q) {
    if (m < 1) throw std::invalid_argument("ag: rank must be >= 1");
    FieldSpec fs = FieldSpec::of_order(q);
    auto pts = projective_points(fs, m);
    std::vector<std::vector<FieldElement>> affine;
    for (auto& v : pts)
        if (v[0] != 0) affine.push_back(std::move(v));
    return std::make_shared<LinearMatroid>(std::move(fs), m, std::move(affine));
}

std::shared_ptr<const LinearMatroid> make_geometry(const GeometryTag& tag) {
    return tag.family == GeometryTag::PG ? pg(tag.rank, tag.q) : ag(tag.rank, tag.q);
}

}  // namespace mwb
