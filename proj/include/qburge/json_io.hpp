#pragma once

#include <json.hpp>

#include "qburge/rpp.hpp"

namespace qburge {

/* JSON encodings, shared by the CLI and by cross-language fixtures:
 *   Partition      [5,5,3,2]
 *   Composition    {"parts":[2,1,3]}
 *   SSYTableau     [[1,1,3,3],[2,3]]
 *   QPoly          {"coeffs":["1","2","2","1"]}   (ascending, decimal strings)
 *   QRat           {"num":{...},"den":{...}}
 *   Fraction       {"num":"1","den":"2"}
 *   GFMatrix       {"p":2,"rows":[[0,1],[0,0]]}
 *   IntMat         [[1,0],[0,1]]
 *   RPP            {"k":2,"l":3,"rows":[[2],[4,1],[3,0],[2]]}  (rows i = k-1..-l+1)
 * Big integers are decimal strings throughout.
 */

using json = nlohmann::json;

inline void to_json(json& j, const Partition& p) { j = p.parts(); }
inline void from_json(const json& j, Partition& p) {
    p = Partition(j.get<std::vector<int>>());
}

inline void to_json(json& j, const Composition& c) { j = json{{"parts", c.parts()}}; }
inline void from_json(const json& j, Composition& c) {
    c = Composition(j.at("parts").get<std::vector<int>>());
}

inline void to_json(json& j, const SSYTableau& t) { j = t.rows(); }
inline void from_json(const json& j, SSYTableau& t) {
    t = SSYTableau(j.get<std::vector<std::vector<int>>>());
}

inline void to_json(json& j, const QPoly& p) {
    std::vector<std::string> coeffs;
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    j = json{{"coeffs", coeffs}};
}
inline void from_json(const json& j, QPoly& p) {
    std::vector<BigInt> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.emplace_back(s.get<std::string>());
    p = QPoly(std::move(coeffs));
}

inline void to_json(json& j, const QRat& r) {
    j = json{{"num", r.num()}, {"den", r.den()}};
}
inline void from_json(const json& j, QRat& r) {
    r = QRat(j.at("num").get<QPoly>(), j.at("den").get<QPoly>());
}

inline json fraction_to_json(const Fraction& f) {
    return json{{"num", boost::multiprecision::numerator(f).str()},
                {"den", boost::multiprecision::denominator(f).str()}};
}
inline Fraction fraction_from_json(const json& j) {
    return Fraction(BigInt(j.at("num").get<std::string>()),
                    BigInt(j.at("den").get<std::string>()));
}

inline void to_json(json& j, const GFMatrix& m) {
    std::vector<std::vector<int>> rows(m.rows(), std::vector<int>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
    j = json{{"p", m.p()}, {"rows", rows}};
}
inline void from_json(const json& j, GFMatrix& m) {
    m = GFMatrix(j.at("p").get<int>(), j.at("rows").get<std::vector<std::vector<long long>>>());
}

inline void to_json(json& j, const IntMat& m) {
    std::vector<std::vector<long long>> rows(m.k, std::vector<long long>(m.l));
    for (int i = 0; i < m.k; ++i)
        for (int jj = 0; jj < m.l; ++jj) rows[i][jj] = m.at(i, jj);
    j = rows;
}
inline void from_json(const json& j, IntMat& m) {
    m = IntMat(j.get<std::vector<std::vector<long long>>>());
}

inline void to_json(json& j, const RPP& r) {
    j = json{{"k", r.k}, {"l", r.l}, {"rows", r.rows}};
}
inline void from_json(const json& j, RPP& r) {
    r.k = j.at("k").get<int>();
    r.l = j.at("l").get<int>();
    r.rows = j.at("rows").get<std::vector<std::vector<int>>>();
    if (!is_valid_rpp(r)) throw std::invalid_argument("RPP: not a reverse plane partition");
}

inline json prob_table_to_json(const ProbTable& t) {
    json rows = json::array();
    for (const auto& [key, cnt] : t.counts)
        rows.push_back(json{{"T", key.first},
                            {"Tp", key.second},
                            {"count", cnt},
                            {"prob", fraction_to_json(Fraction(cnt, t.total))}});
    return json{{"schema", "qburge/1"}, {"M", t.m},       {"p", t.p},
                {"free_dim", t.free_dim}, {"total", t.total}, {"table", rows}};
}

inline json growth_diagram_to_json(const GrowthDiagram& g) {
    json grid = json::array();
    for (int i = 0; i <= g.k; ++i) {
        json row = json::array();
        for (int jj = 0; jj <= g.l; ++jj) row.push_back(g.at(i, jj));
        grid.push_back(row);
    }
    return grid;
}

}  // namespace qburge
