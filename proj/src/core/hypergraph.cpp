#include "core/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "core/config.hpp"
#include "core/error.hpp"

namespace pachgap {

namespace {

// lex combination odometer over {0..n-1}, size m; returns false when done
bool next_combination(std::vector<int>& c, int n) {
    int m = int(c.size());
    for (int i = m - 1; i >= 0; --i) {
        if (c[i] < n - (m - i)) {
            ++c[i];
            for (int j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_combination(int m) {
    std::vector<int> c(m);
    for (int i = 0; i < m; ++i) c[i] = i;
    return c;
}

std::optional<HBox> extract_impl(const MultipartiteHypergraph& H, int m, long long& left) {
    int k = H.parts();
    for (int c = 0; c < k; ++c)
        if (H.class_size(c) < m) return std::nullopt;

    if (k == 1) {
        std::vector<int> verts;
        for (const auto& e : H.edges) verts.push_back(e[0]);
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (int(verts.size()) < m) return std::nullopt;
        HBox b;
        b.m = m;
        b.parts.push_back(std::vector<int>(verts.begin(), verts.begin() + m));
        return b;
    }

    int last = k - 1;
    std::vector<int> subset = first_combination(m);
    do {
        if (--left < 0) throw_capacity("box search exceeded the subset budget");
        if (k == 2) {
            std::vector<int> common;
            std::vector<int> e(2);
            for (int v = 0; v < H.class_size(0); ++v) {
                bool all = true;
                for (int s : subset) {
                    e[0] = v;
                    e[1] = s;
                    if (!H.has_edge(e)) {
                        all = false;
                        break;
                    }
                }
                if (all) common.push_back(v);
            }
            if (int(common.size()) >= m) {
                HBox b;
                b.m = m;
                b.parts.push_back(std::vector<int>(common.begin(), common.begin() + m));
                b.parts.push_back(subset);
                return b;
            }
        } else {
            // common link of the chosen subset of the last class
            std::vector<int> sizes;
            for (int c = 0; c < last; ++c) sizes.push_back(H.class_size(c));
            MultipartiteHypergraph link = make_hypergraph(sizes);
            for (int c = 0; c < last; ++c) link.labels[c] = H.labels[c];
            std::vector<std::vector<int>> prefixes;
            std::vector<int> full(k);
            for (const auto& e : H.edges) {
                if (e[last] != subset[0]) continue;
                bool all = true;
                for (int c = 0; c < last; ++c) full[c] = e[c];
                for (int s : subset) {
                    full[last] = s;
                    if (!H.has_edge(full)) {
                        all = false;
                        break;
                    }
                }
                if (all) prefixes.push_back(std::vector<int>(e.begin(), e.begin() + last));
            }
            std::sort(prefixes.begin(), prefixes.end());
            prefixes.erase(std::unique(prefixes.begin(), prefixes.end()), prefixes.end());
            link.edges = std::move(prefixes);
            link.finalize();
            auto sub = extract_impl(link, m, left);
            if (sub) {
                sub->parts.push_back(subset);
                return sub;
            }
        }
    } while (next_combination(subset, H.class_size(last)));
    return std::nullopt;
}

} // namespace

unsigned long long MultipartiteHypergraph::code_of(const std::vector<int>& e) const {
    unsigned long long code = 0;
    for (int c = 0; c < parts(); ++c) code = code * (unsigned long long)class_size(c) + e[c];
    return code;
}

bool MultipartiteHypergraph::has_edge(const std::vector<int>& e) const {
    return std::binary_search(codes_.begin(), codes_.end(), code_of(e));
}

void MultipartiteHypergraph::finalize() {
    if (labels.empty()) throw_param("hypergraph needs at least one class");
    unsigned long long space = 1;
    for (const auto& cls : labels) {
        if (cls.empty()) throw_param("empty vertex class");
        if (space > (1ull << 62) / cls.size()) throw_param("vertex classes too large");
        space *= cls.size();
    }
    std::map<std::string, int> seen;
    for (const auto& cls : labels)
        for (const auto& l : cls)
            if (++seen[l] > 1) throw_param("repeated vertex label: " + l);
    codes_.clear();
    codes_.reserve(edges.size());
    for (const auto& e : edges) {
        if (int(e.size()) != parts()) throw_param("edge arity does not match the class count");
        for (int c = 0; c < parts(); ++c)
            if (e[c] < 0 || e[c] >= class_size(c)) throw_param("edge vertex out of range");
        codes_.push_back(code_of(e));
    }
    std::sort(codes_.begin(), codes_.end());
    if (std::adjacent_find(codes_.begin(), codes_.end()) != codes_.end())
        throw_param("repeated edge");
}

MultipartiteHypergraph make_hypergraph(const std::vector<int>& class_sizes) {
    MultipartiteHypergraph H;
    for (size_t c = 0; c < class_sizes.size(); ++c) {
        if (class_sizes[c] <= 0) throw_param("class sizes must be positive");
        std::vector<std::string> cls;
        for (int j = 0; j < class_sizes[c]; ++j) {
            std::string base = c < 26 ? std::string(1, char('a' + c)) : "v" + std::to_string(c) + "_";
            cls.push_back(base + std::to_string(j));
        }
        H.labels.push_back(std::move(cls));
    }
    return H;
}

MultipartiteHypergraph parse_hypergraph_text(const std::string& text) {
    MultipartiteHypergraph H;
    std::map<std::string, std::pair<int, int>> where; // label -> (class, index)
    std::istringstream in(text);
    std::string line;
    bool have_classes = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "classes") {
            if (have_classes) throw_param("line " + std::to_string(lineno) + ": second classes line");
            have_classes = true;
            std::vector<std::string> cls;
            while (ls >> tok) {
                if (tok == "|") {
                    if (cls.empty()) throw_param("line " + std::to_string(lineno) + ": empty class");
                    H.labels.push_back(cls);
                    cls.clear();
                } else {
                    cls.push_back(tok);
                }
            }
            if (cls.empty()) throw_param("line " + std::to_string(lineno) + ": empty class");
            H.labels.push_back(cls);
            for (int c = 0; c < H.parts(); ++c)
                for (int j = 0; j < H.class_size(c); ++j) {
                    if (where.count(H.labels[c][j]))
                        throw_param("repeated vertex label: " + H.labels[c][j]);
                    where[H.labels[c][j]] = {c, j};
                }
        } else if (tok == "edge") {
            if (!have_classes) throw_param("line " + std::to_string(lineno) + ": edge before classes");
            std::vector<int> e(H.parts(), -1);
            int got = 0;
            while (ls >> tok) {
                auto it = where.find(tok);
                if (it == where.end())
                    throw_param("line " + std::to_string(lineno) + ": unknown vertex " + tok);
                auto [c, j] = it->second;
                if (e[c] >= 0) throw_param("line " + std::to_string(lineno) + ": two vertices in one class");
                e[c] = j;
                ++got;
            }
            if (got != H.parts()) throw_param("line " + std::to_string(lineno) + ": edge misses a class");
            H.edges.push_back(std::move(e));
        } else {
            throw_param("line " + std::to_string(lineno) + ": unknown directive " + tok);
        }
    }
    if (!have_classes) throw_param("missing classes line");
    H.finalize();
    return H;
}

std::string hypergraph_text(const MultipartiteHypergraph& H) {
    std::string out = "classes";
    for (int c = 0; c < H.parts(); ++c) {
        if (c) out += " |";
        for (const auto& l : H.labels[c]) out += " " + l;
    }
    out += "\n";
    for (const auto& e : H.edges) {
        out += "edge";
        for (int c = 0; c < H.parts(); ++c) out += " " + H.labels[c][e[c]];
        out += "\n";
    }
    return out;
}

std::optional<HBox> extract_box(const MultipartiteHypergraph& H, int m) {
    if (m < 1) throw_param("box size must be positive");
    long long left = budgets().subset_enum;
    return extract_impl(H, m, left);
}

HBox max_box_exact(const MultipartiteHypergraph& H) {
    if (H.parts() > 3) throw_capacity("exact box maximum supports at most 3 classes");
    for (int c = 0; c < H.parts(); ++c)
        if (H.class_size(c) > 6) throw_capacity("exact box maximum supports class sizes up to 6");
    HBox best;
    int cap = H.class_size(0);
    for (int c = 1; c < H.parts(); ++c) cap = std::min(cap, H.class_size(c));
    for (int m = 1; m <= cap; ++m) {
        auto b = extract_box(H, m);
        if (!b) break;
        best = *b;
    }
    return best;
}

bool box_complete(const MultipartiteHypergraph& H, const std::vector<std::vector<int>>& parts) {
    if (int(parts.size()) != H.parts()) throw_param("box arity does not match the class count");
    for (int c = 0; c < H.parts(); ++c)
        for (int v : parts[c])
            if (v < 0 || v >= H.class_size(c)) throw_param("box vertex out of range");
    std::vector<size_t> at(parts.size(), 0);
    for (const auto& p : parts)
        if (p.empty()) return true; // empty part: no transversal to check
    std::vector<int> e(parts.size());
    while (true) {
        for (size_t c = 0; c < parts.size(); ++c) e[c] = parts[c][at[c]];
        if (!H.has_edge(e)) return false;
        size_t c = 0;
        while (c < at.size() && ++at[c] == parts[c].size()) at[c++] = 0;
        if (c == at.size()) return true;
    }
}

} // namespace pachgap
