#include "core/lattice_json.hpp"

#include <json.hpp>

#include "core/error.hpp"

namespace pachgap {

using ordered_json = nlohmann::ordered_json;

std::string lattice_to_json_text(const GradedLattice& L) {
    ordered_json doc;
    doc["format"] = "pachgap-lattice";
    doc["q"] = L.q;
    doc["r"] = L.top_rank;
    ordered_json elems = ordered_json::array();
    bool coords = true;
    for (int i = 0; i < L.size(); ++i) {
        const auto& e = L.elems[i];
        ordered_json je;
        je["id"] = i;
        je["rank"] = e.rank;
        if (e.sub) {
            ordered_json rows = ordered_json::array();
            for (int ri = 0; ri < e.sub->dim(); ++ri) {
                ordered_json row = ordered_json::array();
                for (int c = 0; c < e.sub->ambient; ++c) row.push_back(int(e.sub->basis.at(ri, c)));
                rows.push_back(std::move(row));
            }
            je["rref"] = std::move(rows);
        } else {
            coords = false;
        }
        elems.push_back(std::move(je));
    }
    doc["elements"] = std::move(elems);
    if (coords && L.q > 0) {
        doc["derived"] = true;
    } else {
        ordered_json pairs = ordered_json::array();
        for (int x = 0; x < L.size(); ++x) {
            const Bitset& up = L.up_set(x);
            for (size_t y = up.find_first(); y != Bitset::npos; y = up.find_next(y))
                if (int(y) != x) pairs.push_back(ordered_json::array({x, int(y)}));
        }
        doc["leq"] = std::move(pairs);
    }
    return doc.dump(2) + "\n";
}

GradedLattice lattice_from_json_text(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw_io(std::string("lattice JSON parse failure: ") + e.what());
    }
    try {
        if (doc.value("format", "") != "pachgap-lattice") throw_param("not a pachgap-lattice document");
        int q = doc.at("q").get<int>();
        int r = doc.at("r").get<int>();
        const auto& jelems = doc.at("elements");
        std::vector<GradedLattice::Elem> elems(jelems.size());
        int idx = 0;
        for (const auto& je : jelems) {
            int id = je.at("id").get<int>();
            if (id != idx) throw_param("element ids must be dense and ascending");
            GradedLattice::Elem e;
            e.rank = je.at("rank").get<int>();
            if (je.contains("rref")) {
                std::vector<std::vector<int>> rows;
                for (const auto& jr : je.at("rref")) rows.push_back(jr.get<std::vector<int>>());
                if (q <= 0) throw_param("rref coordinates need q > 0");
                e.sub = subspace_from_rows(q, r, rows);
            }
            elems[idx++] = std::move(e);
        }
        bool derive = doc.value("derived", false);
        std::vector<std::pair<int, int>> pairs;
        if (!derive) {
            if (!doc.contains("leq")) throw_param("lattice JSON needs 'leq' or 'derived': true");
            for (const auto& jp : doc.at("leq")) {
                if (!jp.is_array() || jp.size() != 2) throw_param("leq entries must be pairs");
                pairs.emplace_back(jp[0].get<int>(), jp[1].get<int>());
            }
        }
        return build_lattice(q, r, std::move(elems), pairs, derive);
    } catch (const nlohmann::json::exception& e) {
        throw_param(std::string("lattice JSON shape: ") + e.what());
    }
}

} // namespace pachgap
