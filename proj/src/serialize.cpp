#include "chaincodes/serialize.hpp"

#include "chaincodes/error.hpp"
#include "chaincodes/literals.hpp"

namespace chaincodes {

namespace {

Json terms_json(std::span<const Coeff> c) {
    Json terms = Json::array();
    for (std::size_t g = 0; g < c.size(); ++g)
        if (c[g]) terms.push_back(Json::array({c[g], g}));
    return terms;
}

std::vector<Coeff> terms_from_json(const Json& terms, std::size_t n) {
    std::vector<Coeff> c(n, 0);
    for (const auto& t : terms) {
        const auto g = t.at(1).get<std::size_t>();
        if (g >= n) throw Error(ErrorKind::Parse, "element index out of range");
        c[g] = t.at(0).get<Coeff>();
    }
    return c;
}

const Json& field(const Json& j, const char* key) {
    if (!j.contains(key)) throw Error(ErrorKind::Parse, std::string("missing JSON field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json to_json(const FAlgebraElement& e) {
    Json j;
    j["group"] = e.group().spec();
    j["p"] = e.p();
    j["terms"] = terms_json(e.coeffs());
    j["text"] = format_element(e);
    return j;
}

FAlgebraElement f_element_from_json(const Json& j) {
    const auto group = parse_group_spec(field(j, "group").get<std::string>());
    const auto p = field(j, "p").get<Coeff>();
    return FAlgebraElement(group, p, terms_from_json(field(j, "terms"), group->order()));
}

Json to_json(const RAlgebraElement& e) {
    Json j;
    j["group"] = e.group().spec();
    j["ring"] = e.ring().spec().to_string();
    Json terms = Json::array();
    for (std::size_t g = 0; g < e.size(); ++g)
        if (e[g]) terms.push_back(Json::array({e.ring().to_text(e[g]), g}));
    j["terms"] = terms;
    j["text"] = format_element(e);
    return j;
}

RAlgebraElement r_element_from_json(const Json& j) {
    const auto group = parse_group_spec(field(j, "group").get<std::string>());
    const auto ring = make_ring(parse_ring_spec(field(j, "ring").get<std::string>()));
    std::vector<Scalar> c(group->order(), 0);
    for (const auto& t : field(j, "terms")) {
        const auto g = t.at(1).get<std::size_t>();
        if (g >= c.size()) throw Error(ErrorKind::Parse, "element index out of range");
        c[g] = parse_scalar(t.at(0).get<std::string>(), *ring);
    }
    return RAlgebraElement(group, ring, std::move(c));
}

Json to_json(const GroupCodeF& c, const std::optional<FAlgebraElement>& idempotent) {
    Json j;
    j["group"] = c.group().spec();
    j["p"] = c.p();
    j["dim"] = c.dim();
    j["basis"] = c.basis();
    j["idempotent"] = idempotent ? terms_json(idempotent->coeffs()) : Json(nullptr);
    return j;
}

GroupCodeF f_code_from_json(const Json& j) {
    const auto group = parse_group_spec(field(j, "group").get<std::string>());
    const auto p = field(j, "p").get<Coeff>();
    return GroupCodeF::from_rows(group, p, field(j, "basis").get<FpMatrix>());
}

Json to_json(const RCode& c) {
    Json j;
    j["group"] = c.group().spec();
    j["ring"] = c.ring().spec().to_string();
    Json rows = Json::array();
    for (const auto& r : c.rows()) {
        Json row = Json::array();
        for (auto x : r) row.push_back(c.ring().to_text(x));
        rows.push_back(row);
    }
    j["rows"] = rows;
    j["pivot_cols"] = c.pivot_cols();
    j["pivot_vals"] = c.pivot_vals();
    j["log_p_size"] = c.log_size();
    return j;
}

RCode r_code_from_json(const Json& j) {
    const auto group = parse_group_spec(field(j, "group").get<std::string>());
    const auto ring = make_ring(parse_ring_spec(field(j, "ring").get<std::string>()));
    RMatrix rows;
    for (const auto& r : field(j, "rows")) {
        RRow row;
        for (const auto& x : r) row.push_back(parse_scalar(x.get<std::string>(), *ring));
        rows.push_back(std::move(row));
    }
    RCode c = RCode::from_rows(group, ring, std::move(rows));
    if (j.contains("pivot_vals") && j.at("pivot_vals").get<std::vector<unsigned>>() != c.pivot_vals())
        throw Error(ErrorKind::Parse, "stored pivot valuations do not match the standard form");
    return c;
}

Json to_json(const CodeChain& chain) {
    Json j;
    j["ring"] = chain.spec.to_string();
    Json layers = Json::array();
    for (std::size_t i = 0; i < chain.codes.size(); ++i) layers.push_back(to_json(chain.codes[i], chain.idems[i]));
    j["layers"] = layers;
    return j;
}

CodeChain chain_from_json(const Json& j) {
    CodeChain chain;
    chain.spec = parse_ring_spec(field(j, "ring").get<std::string>());
    for (const auto& layer : field(j, "layers")) {
        GroupCodeF c = f_code_from_json(layer);
        if (layer.contains("idempotent") && !layer.at("idempotent").is_null())
            chain.idems.emplace_back(FAlgebraElement(c.group_ptr(), c.p(), terms_from_json(layer.at("idempotent"), c.length())));
        else
            chain.idems.emplace_back(std::nullopt);
        chain.codes.push_back(std::move(c));
    }
    validate_chain(chain);
    return chain;
}

Json to_json(const SearchWitness& w) {
    Json j;
    j["idempotent"] = to_json(w.idempotent);
    j["chain"] = to_json(w.chain);
    j["generator"] = to_json(w.generator);
    j["code"] = to_json(w.code);
    j["distance"] = w.distance;
    j["self_dual"] = w.self_dual;
    return j;
}

SearchWitness witness_from_json(const Json& j) {
    RCode code = r_code_from_json(field(j, "code"));
    RAlgebraElement generator = r_element_from_json(field(j, "generator"));
    return SearchWitness{f_element_from_json(field(j, "idempotent")), chain_from_json(field(j, "chain")),
                         std::move(generator), std::move(code), field(j, "distance").get<std::size_t>(),
                         field(j, "self_dual").get<bool>()};
}

Json to_json(const SearchReport& r, bool include_timing) {
    Json j;
    j["group"] = r.group_spec;
    j["ring"] = r.ring_spec;
    j["strategy"] = r.strategy;
    j["candidates_scanned"] = r.candidates_scanned;
    j["idempotent_count"] = r.idempotent_count;
    j["self_orthogonal_idempotents"] = r.self_orthogonal_idempotents;
    Json codes = Json::array();
    for (const auto& c : r.codes)
        codes.push_back(Json{{"key", c.key}, {"dim", c.dim}, {"distance", c.distance},
                             {"self_dual", c.self_dual}, {"idempotent", format_element(c.idempotent)}});
    j["codes"] = codes;
    j["best_distance"] = r.best_distance;
    j["best_self_dual_distance"] = r.best_self_dual_distance;
    j["optimal_count"] = r.optimal_count;
    Json witnesses = Json::array();
    for (const auto& w : r.optimal) witnesses.push_back(to_json(w));
    j["optimal"] = witnesses;
    if (include_timing) j["wall_seconds"] = r.wall_seconds;
    return j;
}

std::string table_csv_row(const SearchReport& r) {
    const auto group = parse_group_spec(r.group_spec);
    return std::to_string(group->order()) + "," + std::to_string(r.best_distance);
}

}  // namespace chaincodes
