#include "recgraph/graphs.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace recgraph::graphs {

VertexId VertexId::nat(Nat n) {
    VertexId v;
    v.kind_ = Kind::Nat;
    v.a_ = n;
    return v;
}

VertexId VertexId::row(Nat m, Nat j) {
    VertexId v;
    v.kind_ = Kind::Row;
    v.a_ = m;
    v.b_ = j;
    return v;
}

VertexId VertexId::clique_extra(Nat m, Nat i) {
    VertexId v;
    v.kind_ = Kind::CliqueExtra;
    v.a_ = m;
    v.b_ = i;
    return v;
}

VertexId VertexId::special(Nat i) {
    VertexId v;
    v.kind_ = Kind::Special;
    v.a_ = i;
    return v;
}

VertexId VertexId::seq(Nat code) {
    VertexId v;
    v.kind_ = Kind::Seq;
    v.a_ = code;
    return v;
}

VertexId VertexId::tree_base(Nat e) {
    VertexId v;
    v.kind_ = Kind::TreeBase;
    v.a_ = e;
    return v;
}

VertexId VertexId::triangle_aux(Nat e, Nat i) {
    VertexId v;
    v.kind_ = Kind::TriangleAux;
    v.a_ = e;
    v.b_ = i;
    return v;
}

VertexId VertexId::cycle(Nat e, Nat seq_code, Nat k, Nat pos) {
    VertexId v;
    v.kind_ = Kind::Cycle;
    v.a_ = e;
    v.b_ = seq_code;
    v.c_ = k;
    v.d_ = pos;
    return v;
}

VertexId VertexId::named(std::string label) {
    VertexId v;
    v.kind_ = Kind::Named;
    v.name_ = std::move(label);
    return v;
}

std::string VertexId::label() const {
    std::ostringstream out;
    switch (kind_) {
        case Kind::Nat:
            out << a_;
            break;
        case Kind::Row:
            out << 'v' << a_ << ',' << b_;
            break;
        case Kind::CliqueExtra:
            out << 'u' << a_ << ',' << b_;
            break;
        case Kind::Special:
            out << 'v' << a_;
            break;
        case Kind::Seq:
            out << '<' << codes::decode(a_).to_string() << '>';
            break;
        case Kind::TreeBase:
            out << "t0:" << a_;
            break;
        case Kind::TriangleAux:
            out << a_ << ":v" << b_;
            break;
        case Kind::Cycle:
            out << 'C' << a_ << ':' << codes::decode(b_).to_string() << ':' << c_ << ':' << d_;
            break;
        case Kind::Named:
            return name_;
    }
    return out.str();
}

std::string to_string(TriEdge e) {
    switch (e) {
        case TriEdge::Edge: return "Edge";
        case TriEdge::NoEdge: return "NoEdge";
        case TriEdge::Pending: return "Pending";
    }
    return "?";
}

ComputableGraph::ComputableGraph(std::string name, Enumerate enumerate, Contains contains,
                                 EdgeRule rule)
    : name_(std::move(name)),
      enumerate_(std::move(enumerate)),
      contains_(std::move(contains)),
      rule_(std::move(rule)) {}

TriEdge ComputableGraph::edge_at(const VertexId& u, const VertexId& v, Nat budget) const {
    if (!contains_(u)) {
        throw InvalidArgumentError(name_ + ": vertex outside universe: " + u.label());
    }
    if (!contains_(v)) {
        throw InvalidArgumentError(name_ + ": vertex outside universe: " + v.label());
    }
    if (u == v) return TriEdge::NoEdge;
    return u < v ? rule_(u, v, budget) : rule_(v, u, budget);
}

TriEdge edge_at(const ComputableGraph& g, const VertexId& u, const VertexId& v, Nat budget) {
    return g.edge_at(u, v, budget);
}

FinitePrefix::FinitePrefix(std::vector<VertexId> vertices,
                           std::vector<std::pair<std::size_t, std::size_t>> edges,
                           std::vector<std::pair<std::size_t, std::size_t>> undecided)
    : vertices_(std::move(vertices)), undecided_(std::move(undecided)) {
    const std::size_t n = vertices_.size();
    adjacency_.assign(n * n, false);
    auto check = [n](std::pair<std::size_t, std::size_t>& p, const char* what) {
        if (p.first >= n || p.second >= n || p.first == p.second) {
            throw InvalidArgumentError(std::string("FinitePrefix: bad ") + what + " pair");
        }
        if (p.first > p.second) std::swap(p.first, p.second);
    };
    for (auto& e : edges) {
        check(e, "edge");
        adjacency_[e.first * n + e.second] = true;
        adjacency_[e.second * n + e.first] = true;
    }
    for (auto& u : undecided_) check(u, "undecided");
    std::sort(undecided_.begin(), undecided_.end());
    undecided_.erase(std::unique(undecided_.begin(), undecided_.end()), undecided_.end());
    for (const auto& u : undecided_) {
        if (adjacency_[u.first * n + u.second]) {
            throw InvalidArgumentError("FinitePrefix: pair listed as both edge and undecided");
        }
    }
}

std::size_t FinitePrefix::matrix_index(std::size_t i, std::size_t j) const {
    return i * vertices_.size() + j;
}

bool FinitePrefix::adjacent(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size()) {
        throw InvalidArgumentError("FinitePrefix::adjacent: index out of range");
    }
    return adjacency_[matrix_index(i, j)];
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePrefix::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) {
            if (adjacency_[matrix_index(i, j)]) out.emplace_back(i, j);
        }
    }
    return out;
}

std::optional<std::size_t> FinitePrefix::index_of(const VertexId& v) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i] == v) return i;
    }
    return std::nullopt;
}

std::vector<std::size_t> FinitePrefix::neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j) {
        if (j != i && adjacent(i, j)) out.push_back(j);
    }
    return out;
}

std::size_t FinitePrefix::degree(std::size_t i) const {
    return neighbors(i).size();
}

FinitePrefix FinitePrefix::induced(const std::vector<std::size_t>& indices) const {
    std::vector<VertexId> verts;
    verts.reserve(indices.size());
    for (std::size_t i : indices) {
        if (i >= size()) {
            throw InvalidArgumentError("FinitePrefix::induced: index out of range");
        }
        verts.push_back(vertices_[i]);
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::pair<std::size_t, std::size_t>> undecided;
    for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = a + 1; b < indices.size(); ++b) {
            std::size_t i = std::min(indices[a], indices[b]);
            std::size_t j = std::max(indices[a], indices[b]);
            if (i == j) {
                throw InvalidArgumentError("FinitePrefix::induced: repeated index");
            }
            if (adjacency_[matrix_index(i, j)]) {
                edges.emplace_back(a, b);
            } else if (std::binary_search(undecided_.begin(), undecided_.end(),
                                          std::make_pair(i, j))) {
                undecided.emplace_back(a, b);
            }
        }
    }
    return FinitePrefix(std::move(verts), std::move(edges), std::move(undecided));
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string FinitePrefix::to_dot() const {
    std::ostringstream out;
    out << "graph G {\n";
    for (const auto& v : vertices_) {
        out << "  " << dot_quote(v.label()) << ";\n";
    }
    for (const auto& [i, j] : edges()) {
        out << "  " << dot_quote(vertices_[i].label()) << " -- " << dot_quote(vertices_[j].label())
            << ";\n";
    }
    for (const auto& [i, j] : undecided_) {
        out << "  " << dot_quote(vertices_[i].label()) << " -- " << dot_quote(vertices_[j].label())
            << " [style=dashed];\n";
    }
    out << "}\n";
    return out.str();
}

std::string FinitePrefix::to_json() const {
    nlohmann::json doc;
    doc["vertices"] = nlohmann::json::array();
    for (const auto& v : vertices_) doc["vertices"].push_back(v.label());
    doc["edges"] = nlohmann::json::array();
    for (const auto& [i, j] : edges()) doc["edges"].push_back({i, j});
    doc["undecided"] = nlohmann::json::array();
    for (const auto& [i, j] : undecided_) doc["undecided"].push_back({i, j});
    return doc.dump(2) + "\n";
}

FinitePrefix FinitePrefix::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("graph json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
        throw Error("graph json: missing vertices array");
    }
    std::vector<VertexId> verts;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw Error("graph json: vertex labels must be strings");
        verts.push_back(VertexId::named(v.get<std::string>()));
    }
    auto read_pairs = [&doc](const char* key) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        if (!doc.contains(key)) return out;
        if (!doc[key].is_array()) throw Error(std::string("graph json: ") + key + " must be an array");
        for (const auto& p : doc[key]) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
                !p[1].is_number_unsigned()) {
                throw Error(std::string("graph json: malformed pair in ") + key);
            }
            out.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
        }
        return out;
    };
    try {
        return FinitePrefix(std::move(verts), read_pairs("edges"), read_pairs("undecided"));
    } catch (const InvalidArgumentError& e) {
        throw Error(std::string("graph json: ") + e.what());
    }
}

FinitePrefix prefix(const ComputableGraph& g, Nat count, Nat budget) {
    std::vector<VertexId> verts;
    verts.reserve(count);
    for (Nat i = 0; i < count; ++i) verts.push_back(g.vertex(i));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::pair<std::size_t, std::size_t>> undecided;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            switch (g.edge_at(verts[i], verts[j], budget)) {
                case TriEdge::Edge:
                    edges.emplace_back(i, j);
                    break;
                case TriEdge::NoEdge:
                    break;
                case TriEdge::Pending:
                    undecided.emplace_back(i, j);
                    break;
            }
        }
    }
    return FinitePrefix(std::move(verts), std::move(edges), std::move(undecided));
}

void Coloring::assign(std::size_t index, Nat color) {
    if (by_index.size() <= index) by_index.resize(index + 1);
    by_index[index] = color;
}

std::optional<Nat> Coloring::at(std::size_t index) const {
    if (index >= by_index.size()) return std::nullopt;
    return by_index[index];
}

bool is_valid_coloring(const FinitePrefix& f, const Coloring& coloring) {
    if (!f.decided()) {
        throw BudgetExhaustedError("is_valid_coloring: prefix has undecided pairs");
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!coloring.at(i)) {
            throw InvalidArgumentError("is_valid_coloring: vertex " + std::to_string(i) +
                                       " has no color");
        }
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (f.adjacent(i, j) && *coloring.at(i) == *coloring.at(j)) return false;
        }
    }
    return true;
}

}  // namespace recgraph::graphs
