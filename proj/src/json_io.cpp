#include "nct/json_io.hpp"

#include <bit>

namespace nct {

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed JSON");
    return j;
}

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw InputError("rational must be a string or integer");
}

Json to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

RatMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw InputError("matrix JSON must have rows, cols, entries");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const Json& e = j.at("entries");
    if (!e.is_array() || e.size() != rows) throw InputError("matrix entries have wrong shape");
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!e[i].is_array() || e[i].size() != cols)
            throw InputError("matrix entries have wrong shape");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(e[i][c]);
    }
    return m;
}

Json to_json(const SkewMatrix& s) { return to_json(s.inner()); }

SkewMatrix skew_from_json(const Json& j) { return SkewMatrix(matrix_from_json(j)); }

Json to_json(const GroupElement& g) {
    return Json{{"n", g.n()},
                {"A", to_json(g.A())},
                {"B", to_json(g.B())},
                {"C", to_json(g.C())},
                {"D", to_json(g.D())}};
}

GroupElement group_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("group element JSON must be an object");
    for (const char* key : {"A", "B", "C", "D"})
        if (!j.contains(key)) throw InputError("group element JSON missing a block");
    return {matrix_from_json(j.at("A")), matrix_from_json(j.at("B")),
            matrix_from_json(j.at("C")), matrix_from_json(j.at("D"))};
}

Json to_json(const GeneratorToken& t) {
    switch (t.kind) {
        case GeneratorToken::Kind::Rho:
            return Json{{"kind", "rho"}, {"R", to_json(t.mat)}};
        case GeneratorToken::Kind::Nu:
            return Json{{"kind", "nu"}, {"N", to_json(t.mat)}};
        case GeneratorToken::Kind::Mu:
            return Json{{"kind", "mu"}, {"N", to_json(t.mat)}};
        case GeneratorToken::Kind::Sigma:
            return Json{{"kind", "sigma"}, {"k", t.k}};
        case GeneratorToken::Kind::Inverse:
            return Json{{"kind", "inverse"}, {"of", to_json(t.inner.front())}};
    }
    throw InputError("unknown token kind");
}

GeneratorToken token_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) throw InputError("token JSON missing kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rho") return GeneratorToken::make_rho(matrix_from_json(j.at("R")));
    if (kind == "nu") return GeneratorToken::make_nu(matrix_from_json(j.at("N")));
    if (kind == "mu") return GeneratorToken::make_mu(matrix_from_json(j.at("N")));
    if (kind == "sigma") return GeneratorToken::make_sigma(j.at("k").get<std::size_t>());
    if (kind == "inverse") return GeneratorToken::make_inverse(token_from_json(j.at("of")));
    throw InputError("unknown token kind: " + kind);
}

Json to_json(const GeneratorWord& w) {
    Json tokens = Json::array();
    for (const auto& t : w.tokens()) tokens.push_back(to_json(t));
    return Json{{"tokens", std::move(tokens)}};
}

GeneratorWord word_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("tokens") || !j.at("tokens").is_array())
        throw InputError("word JSON must hold a token array");
    GeneratorWord w;
    for (const auto& t : j.at("tokens")) w.push(token_from_json(t));
    return w;
}

namespace {

Json subset_of_mask(std::uint32_t mask) {
    Json subset = Json::array();
    for (int j = 0; j < 32; ++j)
        if (mask & (1u << j)) subset.push_back(j + 1);
    return subset;
}

std::uint32_t mask_of_subset(const Json& subset, std::size_t n) {
    std::uint32_t mask = 0;
    for (const auto& v : subset) {
        std::size_t idx = v.get<std::size_t>();
        if (idx < 1 || idx > n) throw InputError("subset index out of range");
        mask |= 1u << (idx - 1);
    }
    return mask;
}

} // namespace

Json to_json(const GrassmannElement& e) {
    Json terms = Json::array();
    for (std::uint32_t m = 0; m < e.dim(); ++m) {
        if (e.coeff(m).is_zero()) continue;
        terms.push_back(Json{{"subset", subset_of_mask(m)}, {"coeff", to_json(e.coeff(m))}});
    }
    return Json{{"n", e.n()}, {"terms", std::move(terms)}};
}

GrassmannElement grassmann_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n")) throw InputError("grassmann JSON missing n");
    std::size_t n = j.at("n").get<std::size_t>();
    GrassmannElement e(n);
    for (const auto& t : j.value("terms", Json::array()))
        e.set_coeff(mask_of_subset(t.at("subset"), n), rational_from_json(t.at("coeff")));
    return e;
}

Json to_json(const KLatticeElement& x) {
    Json terms = Json::array();
    for (auto m : x.support_masks()) {
        if (x.coord(m) == 0) continue;
        terms.push_back(Json{{"subset", subset_of_mask(m)}, {"coeff", x.coord(m).get_str()}});
    }
    return Json{{"n", x.n()},
                {"parity", x.parity() == Parity::Even ? "even" : "odd"},
                {"terms", std::move(terms)}};
}

KLatticeElement klattice_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("parity"))
        throw InputError("lattice JSON missing n or parity");
    std::size_t n = j.at("n").get<std::size_t>();
    std::string par = j.at("parity").get<std::string>();
    if (par != "even" && par != "odd") throw InputError("parity must be even or odd");
    KLatticeElement x(n, par == "even" ? Parity::Even : Parity::Odd);
    for (const auto& t : j.value("terms", Json::array())) {
        Integer v(t.at("coeff").get<std::string>());
        x.set_coord(mask_of_subset(t.at("subset"), n), v);
    }
    return x;
}

Json to_json(const RationalTheta& rt) {
    RatMatrix m(rt.n, rt.n);
    for (std::size_t i = 0; i < rt.n; ++i)
        for (std::size_t j = 0; j < rt.n; ++j)
            m(i, j) = Rational(static_cast<long>(rt.entry(i, j)));
    return Json{{"q", rt.q}, {"P", to_json(m)}};
}

RationalTheta rational_theta_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("P"))
        throw InputError("rational theta JSON must hold q and P");
    RatMatrix m = matrix_from_json(j.at("P"));
    if (!m.is_square() || !m.is_integer()) throw InputError("P must be a square integer matrix");
    std::vector<long long> p;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) p.push_back(m(i, c).num().get_si());
    return {m.rows(), j.at("q").get<long long>(), std::move(p)};
}

Json to_json(const EmbeddingData& e) {
    return Json{{"n", e.n},
                {"p", e.p},
                {"q", e.q},
                {"theta", to_json(e.theta)},
                {"T11", to_json(e.T11)},
                {"T31", to_json(e.T31)},
                {"T32", to_json(e.T32)},
                {"T", to_json(e.T)},
                {"J", to_json(e.J)},
                {"Tbar", to_json(e.Tbar)},
                {"S", to_json(e.S)},
                {"sigma_theta", to_json(e.sigma_theta)}};
}

Json to_json(const DomainReport& r) {
    Json by_len = Json::array();
    for (std::size_t i = 0; i < r.count_by_len.size(); ++i)
        by_len.push_back(Json{{"length", i + 1},
                              {"count", r.count_by_len[i]},
                              {"defined", r.defined_by_len[i]}});
    return Json{{"n", r.n},
                {"max_word_len", r.max_word_len},
                {"count", r.count},
                {"seed", r.seed},
                {"defined", r.defined},
                {"fraction", to_json(r.fraction)},
                {"by_length", std::move(by_len)}};
}

Json to_json(const CounterexampleReport& r) {
    Json hits = Json::array();
    for (const auto& h : r.hits) {
        Json rows = Json::array();
        for (int i = 0; i < 3; ++i)
            rows.push_back(Json::array({h[3 * i], h[3 * i + 1], h[3 * i + 2]}));
        hits.push_back(std::move(rows));
    }
    return Json{{"bound", r.bound}, {"checked", r.checked}, {"hits", std::move(hits)}};
}

} // namespace nct
