#include "s2r/json_io.hpp"

#include <algorithm>

#include "s2r/ring_level.hpp"
#include "s2r/support.hpp"

namespace s2r {

using nlohmann::json;

json ring_to_json(const GradedRing& R) {
    json j;
    j["char"] = R.p();
    j["group"] = R.group().factors();
    j["eps"] = R.eps().matrix();
    json basis = json::array();
    for (int i = 0; i < R.dim(); ++i) {
        json b;
        b["name"] = R.basis_names()[i];
        b["degree"] = R.group().elt(R.basis_degrees()[i]);
        basis.push_back(b);
    }
    j["basis"] = basis;
    json mult = json::object();
    for (int i = 0; i < R.dim(); ++i)
        for (int k = 0; k < R.dim(); ++k) {
            const Vec& v = R.table(i, k);
            json entries = json::array();
            for (int b = 0; b < R.dim(); ++b)
                if (v[b] != 0) entries.push_back({static_cast<int>(v[b]), b});
            if (!entries.empty()) mult[std::to_string(i) + "," + std::to_string(k)] = entries;
        }
    j["mult"] = mult;
    return j;
}

GradedRing ring_from_json(const json& j) {
    try {
        int p = j.at("char").get<int>();
        std::vector<int> factors = j.at("group").get<std::vector<int>>();
        GradingGroup G(factors);
        std::vector<std::vector<int>> eps_m =
            j.at("eps").get<std::vector<std::vector<int>>>();
        SignForm eps(eps_m);

        std::vector<std::string> names;
        std::vector<int> degs;
        for (const auto& b : j.at("basis")) {
            names.push_back(b.at("name").get<std::string>());
            GroupElt e = b.at("degree").get<GroupElt>();
            degs.push_back(G.index_of(e));
        }
        int dim = static_cast<int>(names.size());
        std::vector<Vec> table(static_cast<std::size_t>(dim) * dim, Vec(dim, 0));
        for (const auto& [key, entries] : j.at("mult").items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos) throw RingFormatError("bad mult key: " + key);
            int a = std::stoi(key.substr(0, comma));
            int b = std::stoi(key.substr(comma + 1));
            if (a < 0 || a >= dim || b < 0 || b >= dim)
                throw RingFormatError("mult key out of range: " + key);
            Vec v(dim, 0);
            for (const auto& e : entries) {
                int coeff = e.at(0).get<int>();
                int idx = e.at(1).get<int>();
                if (idx < 0 || idx >= dim) throw RingFormatError("mult entry out of range");
                v[idx] = static_cast<Coef>(((coeff % p) + p) % p);
            }
            table[static_cast<std::size_t>(a) * dim + b] = v;
        }
        return GradedRing(p, G, eps, names, degs, table);
    } catch (const RingFormatError&) {
        throw;
    } catch (const std::exception& e) {
        throw RingFormatError(std::string("malformed ring file: ") + e.what());
    }
}

json mor_to_json(const TwoRing& t, const Mor& m) {
    json j;
    j["src"] = t.group().elt(m.src);
    j["tgt"] = t.group().elt(m.tgt);
    json val = json::object();
    for (int i = 0; i < t.ring().dim(); ++i)
        if (m.val[i] != 0) val[t.ring().basis_names()[i]] = static_cast<int>(m.val[i]);
    j["val"] = val;
    return j;
}

json ideal_to_json(const Ideal& ideal) {
    const TwoRing& t = ideal.parent();
    json members = json::array();
    for (const Mor& m : ideal.members()) members.push_back(mor_to_json(t, m));
    json j;
    j["members"] = members;
    return j;
}

json spec_to_json(const SpecSpace& sp) {
    json j;
    json primes = json::array();
    for (const Ideal& p : sp.primes) primes.push_back(ideal_to_json(p));
    j["primes"] = primes;
    json spec_pairs = json::array();
    for (std::size_t i = 0; i < sp.primes.size(); ++i)
        for (std::size_t k = 0; k < sp.primes.size(); ++k)
            if (i != k && sp.leq[i][k]) spec_pairs.push_back({i, k});
    j["specialization"] = spec_pairs;
    j["closed_sets"] = sp.closed_sets;
    return j;
}

std::string spec_to_dot(const SpecSpace& sp) {
    // nodes carry canonical keys; edges are covering relations
    std::string out = "digraph spec {\n";
    for (std::size_t i = 0; i < sp.primes.size(); ++i)
        out += "  p" + std::to_string(i) + " [label=\"" + sp.primes[i].key() + "\"];\n";
    for (std::size_t i = 0; i < sp.primes.size(); ++i)
        for (std::size_t j = 0; j < sp.primes.size(); ++j) {
            if (i == j || !sp.leq[i][j]) continue;
            bool covering = true;
            for (std::size_t k = 0; k < sp.primes.size(); ++k)
                if (k != i && k != j && sp.leq[i][k] && sp.leq[k][j]) covering = false;
            if (covering)
                out += "  p" + std::to_string(i) + " -> p" + std::to_string(j) + ";\n";
        }
    out += "}\n";
    return out;
}

json localization_to_json(const Localization& L) {
    json j;
    j["ring"] = ring_to_json(L.localized().ring());
    j["spectrum"] = spec_to_json(enumerate_primes(L.localized_ptr()));
    return j;
}

json rho_table_to_json(const TwoRing& t) {
    json table = json::array();
    for (const RingIdeal& p : enumerate_ring_primes(t.ring())) {
        Ideal cat_prime = corr_to_companion(t, p);
        Ideal back = rho(t, sigma(t.ring(), p));
        json row;
        row["prime"] = ideal_to_json(cat_prime);
        row["rho_sigma"] = ideal_to_json(back);
        row["equal"] = (back == cat_prime);
        table.push_back(row);
    }
    json j;
    j["table"] = table;
    return j;
}

namespace {

GroupElt parse_degree(const GradingGroup& G, const std::string& s) {
    if (G.rank() == 0) {
        if (s != "()" && s != "0") throw std::invalid_argument("bad degree for trivial group: " + s);
        return {};
    }
    std::string body = s;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw std::invalid_argument("unbalanced degree tuple: " + s);
        body = body.substr(1, body.size() - 2);
    }
    GroupElt e;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        auto comma = body.find(',', pos);
        std::string part =
            comma == std::string::npos ? body.substr(pos) : body.substr(pos, comma - pos);
        e.push_back(std::stoi(part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(e.size()) != G.rank())
        throw std::invalid_argument("degree arity mismatch: " + s);
    for (int i = 0; i < G.rank(); ++i) e[i] = ((e[i] % G.factors()[i]) + G.factors()[i]) % G.factors()[i];
    return e;
}

}  // namespace

Mor parse_morphism(const TwoRing& t, const std::string& selector) {
    auto colon = selector.find(':');
    auto arrow = selector.find("->", colon == std::string::npos ? 0 : colon);
    if (colon == std::string::npos || arrow == std::string::npos)
        throw std::invalid_argument("selector must look like \"combo:src->tgt\"");
    std::string combo = selector.substr(0, colon);
    std::string src = selector.substr(colon + 1, arrow - colon - 1);
    std::string tgt = selector.substr(arrow + 2);

    const GradedRing& R = t.ring();
    int si = t.group().index_of(parse_degree(t.group(), src));
    int ti = t.group().index_of(parse_degree(t.group(), tgt));

    Vec val = R.zero();
    if (combo != "0") {
        std::size_t pos = 0;
        while (pos < combo.size()) {
            auto plus = combo.find('+', pos);
            std::string term =
                plus == std::string::npos ? combo.substr(pos) : combo.substr(pos, plus - pos);
            // optional decimal coefficient, then a basis name
            std::size_t split = 0;
            int coeff = 1;
            bool found = false;
            for (std::size_t k = 0; k <= term.size() && !found; ++k) {
                std::string head = term.substr(0, k);
                std::string name = term.substr(k);
                if (!head.empty() &&
                    head.find_first_not_of("0123456789") != std::string::npos)
                    continue;
                auto it = std::find(R.basis_names().begin(), R.basis_names().end(), name);
                if (it != R.basis_names().end()) {
                    split = k;
                    coeff = head.empty() ? 1 : std::stoi(head);
                    found = true;
                }
            }
            if (!found) throw std::invalid_argument("unknown basis term: " + term);
            int idx = static_cast<int>(
                std::find(R.basis_names().begin(), R.basis_names().end(), term.substr(split)) -
                R.basis_names().begin());
            val[idx] = fp_add(val[idx], static_cast<Coef>(((coeff % R.p()) + R.p()) % R.p()), R.p());
            if (plus == std::string::npos) break;
            pos = plus + 1;
        }
    }
    Mor m{si, ti, val};
    if (!t.valid_mor(m)) throw std::invalid_argument("selector value has the wrong degree");
    return m;
}

}  // namespace s2r
