#include "recring/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace recring {

namespace {

Int int_from_json(const json& j, const char* what) {
    if (j.is_string())
        return Int(j.get<std::string>());
    if (j.is_number_integer())
        return Int(j.get<long long>());
    throw std::invalid_argument(std::string(what) + " must be an integer or decimal string");
}

json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

} // namespace

json poly_to_json(const Polynomial& p) {
    std::vector<const Term*> order;
    order.reserve(p.terms().size());
    for (const auto& t : p.terms())
        order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const Term* a, const Term* b) { return display_less(a->mono, b->mono); });

    json terms = json::array();
    for (const Term* t : order) {
        json exps = json::array();
        for (const auto& [index, exp] : t->mono.factors())
            exps.push_back(json::array({index, exp}));
        terms.push_back(json{{"c", t->coeff.str()}, {"e", std::move(exps)}});
    }
    return terms;
}

Polynomial poly_from_json(const json& j, const CoefficientRing& ring) {
    if (!j.is_array())
        throw std::invalid_argument("polynomial JSON must be an array of terms");
    std::vector<Term> terms;
    terms.reserve(j.size());
    for (const auto& entry : j) {
        if (!entry.is_object() || !entry.contains("c") || !entry.contains("e"))
            throw std::invalid_argument("each term needs fields \"c\" and \"e\"");
        Int coeff = int_from_json(entry.at("c"), "coefficient");
        std::vector<Monomial::Factor> factors;
        for (const auto& pair : entry.at("e")) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("exponent entries are [index, exponent] pairs");
            factors.emplace_back(pair.at(0).get<int>(), pair.at(1).get<std::int64_t>());
        }
        terms.push_back(Term{std::move(coeff), Monomial::from_factors(std::move(factors))});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

json coeff_ring_to_json(const CoefficientRing& ring) {
    if (ring.is_modular())
        return json{{"kind", "Zmod"}, {"m", int_to_json(ring.modulus())}};
    return json{{"kind", "Z"}};
}

CoefficientRing coeff_ring_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Z")
        return CoefficientRing::integers();
    if (kind == "Zmod") {
        if (!j.contains("m"))
            throw std::invalid_argument("coefficient kind Zmod needs field \"m\"");
        return CoefficientRing::integers_mod(int_from_json(j.at("m"), "modulus"));
    }
    throw std::invalid_argument("coefficient kind must be \"Z\" or \"Zmod\"");
}

json ring_spec_to_json(const RingSpec& ring) {
    json reducers = json::array();
    for (const auto& p : ring.reducers())
        reducers.push_back(poly_to_json(p));
    return json{{"d", ring.degree()},
                {"n", ring.num_vars()},
                {"coeff", coeff_ring_to_json(ring.coeff_ring())},
                {"P", std::move(reducers)}};
}

RingSpec ring_spec_from_json(const json& j) {
    if (!j.is_object())
        throw std::invalid_argument("ring spec JSON must be an object");
    for (const char* field : {"d", "n", "coeff", "P"})
        if (!j.contains(field))
            throw std::invalid_argument(std::string("ring spec needs field \"") + field + "\"");
    const int d = j.at("d").get<int>();
    const int n = j.at("n").get<int>();
    CoefficientRing coeff = coeff_ring_from_json(j.at("coeff"));
    const json& table = j.at("P");
    if (!table.is_array())
        throw std::invalid_argument("field \"P\" must be an array of polynomials");
    std::vector<Polynomial> reducers;
    reducers.reserve(table.size());
    for (const auto& entry : table)
        reducers.push_back(poly_from_json(entry, coeff));
    return RingSpec(n, d, std::move(reducers), std::move(coeff));
}

json report_to_json(const GroebnerReport& report) {
    json j{{"is_groebner", report.is_groebner},
           {"pairs_checked", report.pairs_checked},
           {"failing_pair", nullptr}};
    if (report.failing_pair)
        j["failing_pair"] = json{{"i", report.failing_pair->i},
                                 {"j", report.failing_pair->j},
                                 {"remainder", poly_to_json(report.failing_pair->remainder)}};
    return j;
}

json report_to_json(const ChainReport& report) {
    json j{{"triangular", report.triangular},
           {"variable_order", nullptr},
           {"groebner_certified", report.groebner_certified},
           {"zero_dimensional", report.zero_dimensional},
           {"is_regular_chain", report.is_regular_chain}};
    if (report.variable_order)
        j["variable_order"] = *report.variable_order;
    switch (report.leading_regular) {
    case Regularity::regular:
        j["leading_regular"] = true;
        break;
    case Regularity::zero_divisor:
        j["leading_regular"] = false;
        break;
    case Regularity::undetermined:
        j["leading_regular"] = "undetermined";
        break;
    }
    return j;
}

} // namespace recring
