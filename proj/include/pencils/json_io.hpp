// json_io.hpp -- JSON forms of fields, expressions, partitions, covers,
// pencils, profiles and reports.  Field elements serialize as their
// integer encodings; points, lines and exponent triples as arrays.

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pencils/blocking.hpp"
#include "pencils/pencil.hpp"
#include "pencils/plane.hpp"
#include "pencils/poly.hpp"

namespace pencils::io {

using nlohmann::json;

// q = p^n for a unique prime p, or an error
inline std::pair<long, int> prime_power_decompose(long long q) {
    if (q < 2) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    long p = 0;
    for (long d = 2; static_cast<long long>(d) * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {static_cast<long>(q), 1};
    int n = 0;
    long long rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++n;
    }
    if (rest != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return {p, n};
}

inline json field_to_json(const Field& f) {
    return json{{"p", f.p()}, {"n", f.n()}, {"modulus", f.modulus()}};
}

inline std::unique_ptr<Field> field_from_json(const json& j) {
    if (!j.contains("p") || !j.contains("n")) throw std::invalid_argument("field: missing p or n");
    auto f = std::make_unique<Field>(j.at("p").get<long>(), j.at("n").get<int>());
    if (j.contains("modulus")) {
        std::vector<Elem> mod = j.at("modulus").get<std::vector<Elem>>();
        if (mod != f->modulus())
            throw std::invalid_argument("field: modulus differs from the canonical modulus for (p, n)");
    }
    return f;
}

inline json poly_to_json(const Poly& poly) {
    switch (poly.kind()) {
        case Poly::Kind::scalar:
            return json{{"op", "scalar"}, {"value", poly.coeffs()[0]}};
        case Poly::Kind::linear:
            return json{{"op", "linear"},
                        {"coeffs", {poly.coeffs()[0], poly.coeffs()[1], poly.coeffs()[2]}}};
        case Poly::Kind::power:
            return json{{"op", "pow"}, {"base", poly_to_json(poly.children()[0])}, {"exp", poly.exponent()}};
        case Poly::Kind::product: {
            json kids = json::array();
            for (const auto& c : poly.children()) kids.push_back(poly_to_json(c));
            return json{{"op", "mul"}, {"factors", kids}};
        }
        case Poly::Kind::sum: {
            json kids = json::array();
            for (const auto& c : poly.children()) kids.push_back(poly_to_json(c));
            return json{{"op", "add"}, {"terms", kids}};
        }
        case Poly::Kind::scalar_mul:
            return json{{"op", "smul"},
                        {"scalar", poly.coeffs()[0]},
                        {"child", poly_to_json(poly.children()[0])}};
    }
    throw std::logic_error("poly_to_json: bad node");
}

inline Poly poly_from_json(const json& j, const Field& f) {
    const std::string op = j.at("op").get<std::string>();
    if (op == "scalar") return Poly::scalar(f, j.at("value").get<Elem>());
    if (op == "linear") {
        auto c = j.at("coeffs").get<std::vector<Elem>>();
        if (c.size() != 3) throw std::invalid_argument("linear: expected 3 coefficients");
        return Poly::linear(f, c[0], c[1], c[2]);
    }
    if (op == "pow") return Poly::power(poly_from_json(j.at("base"), f), j.at("exp").get<long>());
    if (op == "mul") {
        std::vector<Poly> kids;
        for (const auto& cj : j.at("factors")) kids.push_back(poly_from_json(cj, f));
        return Poly::product(std::move(kids));
    }
    if (op == "add") {
        std::vector<Poly> kids;
        for (const auto& cj : j.at("terms")) kids.push_back(poly_from_json(cj, f));
        return Poly::sum(std::move(kids));
    }
    if (op == "smul") return Poly::scalar_mul(j.at("scalar").get<Elem>(), poly_from_json(j.at("child"), f));
    throw std::invalid_argument("poly: unknown op '" + op + "'");
}

inline json sparse_to_json(const SparsePoly& s) {
    json terms = json::array();
    for (const auto& [e, coef] : s.terms) terms.push_back({e[0], e[1], e[2], coef});
    return json{{"degree", s.degree}, {"terms", terms}};
}

inline json point_to_json(const ProjPoint& p) { return json{p.c[0], p.c[1], p.c[2]}; }

inline ProjPoint point_from_json(const json& j, const Plane& plane) {
    auto c = j.get<std::vector<Elem>>();
    if (c.size() != 3) throw std::invalid_argument("point: expected 3 coordinates");
    return plane.normalize_point(c[0], c[1], c[2]);
}

inline json point_set_to_json(const PointSet& s) {
    json arr = json::array();
    for (const auto& p : s.points()) arr.push_back(point_to_json(p));
    return arr;
}

inline PointSet point_set_from_json(const json& j, const Plane& plane) {
    PointSet s(plane);
    for (const auto& pj : j) s.insert(point_from_json(pj, plane));
    return s;
}

inline json partition_to_json(const Partition& part) {
    json parts = json::array();
    for (const auto& s : part.parts) parts.push_back(point_set_to_json(s));
    return json{{"q", part.plane->q()}, {"parts", parts}};
}

inline Partition partition_from_json(const json& j, const Plane& plane) {
    if (j.at("q").get<long>() != plane.q()) throw std::invalid_argument("partition: q mismatch");
    Partition part;
    part.plane = &plane;
    for (const auto& pj : j.at("parts")) part.parts.push_back(point_set_from_json(pj, plane));
    part.validate();
    return part;
}

inline json pencil_to_json(const Pencil& pencil) {
    return json{{"field", field_to_json(pencil.plane().field())},
                {"F", poly_to_json(pencil.f())},
                {"G", poly_to_json(pencil.g())}};
}

inline json profile_to_json(const IncidenceProfile& prof) {
    return json{{"N", prof.n_points}, {"t", prof.t}};
}

inline json check_to_json(const CheckResult& r) {
    json j{{"status", check_status_str(r.status)}, {"note", r.note}};
    if (r.status != CheckStatus::skipped) {
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
    }
    return j;
}

inline json report_to_json(const PencilReport& rep) {
    json members = json::array();
    for (const auto& rec : rep.members) {
        members.push_back(json{{"param", {rec.param.c[0], rec.param.c[1]}},
                               {"count", rec.count},
                               {"class", rec.cls.str()}});
    }
    return json{{"q", rep.q},         {"d", rep.degree},           {"base_locus_size", rep.base_locus_size},
                {"members", members}, {"m", rep.m},                {"nonblocking", rep.nonblocking}};
}

}  // namespace pencils::io
