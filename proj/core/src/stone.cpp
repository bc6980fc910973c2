#include "supcone/stone.hpp"

#include <algorithm>
#include <memory>
#include <string_view>

namespace supcone {

namespace {

// Mark-trie used for canonicalization and Boolean operations.
struct Trie {
    bool mark = false;
    std::unique_ptr<Trie> child[2];
};

void trie_insert(Trie& t, std::string_view w) {
    if (t.mark) return;
    if (w.empty()) {
        t.mark = true;
        t.child[0].reset();
        t.child[1].reset();
        return;
    }
    int b = w[0] - '0';
    if (!t.child[b]) t.child[b] = std::make_unique<Trie>();
    trie_insert(*t.child[b], w.substr(1));
}

void trie_simplify(Trie& t) {
    if (t.mark) return;
    if (t.child[0]) trie_simplify(*t.child[0]);
    if (t.child[1]) trie_simplify(*t.child[1]);
    if (t.child[0] && t.child[1] && t.child[0]->mark && t.child[1]->mark) {
        t.mark = true;
        t.child[0].reset();
        t.child[1].reset();
    }
}

void trie_emit(const Trie& t, std::string& w, std::vector<Cell>& out) {
    if (t.mark) {
        out.push_back(Cell(w));
        return;
    }
    for (int b = 0; b < 2; ++b) {
        if (!t.child[b]) continue;
        w.push_back(static_cast<char>('0' + b));
        trie_emit(*t.child[b], w, out);
        w.pop_back();
    }
}

void trie_emit_complement(const Trie& t, std::string& w, std::vector<Cell>& out) {
    if (t.mark) return;
    if (!t.child[0] && !t.child[1]) {
        out.push_back(Cell(w));
        return;
    }
    for (int b = 0; b < 2; ++b) {
        w.push_back(static_cast<char>('0' + b));
        if (t.child[b])
            trie_emit_complement(*t.child[b], w, out);
        else
            out.push_back(Cell(w));
        w.pop_back();
    }
}

}  // namespace

ClopenSet ClopenSet::of(std::vector<Cell> cells) {
    Trie root;
    for (const auto& c : cells) trie_insert(root, c.word);
    trie_simplify(root);
    ClopenSet result;
    std::string w;
    trie_emit(root, w, result.cells_);
    std::sort(result.cells_.begin(), result.cells_.end());
    return result;
}

bool ClopenSet::contains_cell(const std::string& word) const {
    for (const auto& c : cells_)
        if (c.is_prefix_of(word)) return true;
    return false;
}

bool ClopenSet::intersects_cell(const std::string& word) const {
    for (const auto& c : cells_)
        if (c.is_prefix_of(word) || Cell(word).is_prefix_of(c.word)) return true;
    return false;
}

bool ClopenSet::contains(const BranchPoint& p) const {
    for (const auto& c : cells_) {
        bool prefix = true;
        for (std::size_t i = 0; i < c.word.size() && prefix; ++i)
            prefix = c.word[i] == p.bit(i);
        if (prefix) return true;
    }
    return false;
}

std::string ClopenSet::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (i) s += ",";
        s += cells_[i].str();
    }
    s += "}";
    return s;
}

ClopenSet clopen_complement(const ClopenSet& u) {
    Trie root;
    for (const auto& c : u.cells()) trie_insert(root, c.word);
    std::vector<Cell> out;
    std::string w;
    trie_emit_complement(root, w, out);
    return ClopenSet::of(std::move(out));
}

ClopenSet clopen_meet(const ClopenSet& u, const ClopenSet& v) {
    std::vector<Cell> out;
    for (const auto& a : u.cells())
        for (const auto& b : v.cells()) {
            if (a.is_prefix_of(b.word))
                out.push_back(b);
            else if (b.is_prefix_of(a.word))
                out.push_back(a);
        }
    return ClopenSet::of(std::move(out));
}

ClopenSet clopen_join(const ClopenSet& u, const ClopenSet& v) {
    std::vector<Cell> out(u.cells());
    out.insert(out.end(), v.cells().begin(), v.cells().end());
    return ClopenSet::of(std::move(out));
}

ClopenSet clopen_diff(const ClopenSet& u, const ClopenSet& v) {
    return clopen_meet(u, clopen_complement(v));
}

std::string point_str(const PointRef& p) {
    if (const auto* c = std::get_if<Cell>(&p)) return c->str();
    return std::get<BranchPoint>(p).str();
}

namespace {

void check_partition(const std::vector<ClopenSet>& p) {
    ClopenSet whole;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (!clopen_meet(p[i], p[j]).is_empty())
                throw NotAPartition("members " + p[i].str() + " and " + p[j].str() +
                                    " overlap");
        whole = clopen_join(whole, p[i]);
    }
    if (!whole.is_full()) throw NotAPartition("members cover only " + whole.str());
}

}  // namespace

std::vector<ClopenSet> partition_meet(const std::vector<ClopenSet>& p,
                                      const std::vector<ClopenSet>& q) {
    check_partition(p);
    check_partition(q);
    std::vector<ClopenSet> result;
    for (const auto& u : p)
        for (const auto& v : q) {
            ClopenSet m = clopen_meet(u, v);
            if (!m.is_empty()) result.push_back(m);
        }
    return result;
}

}  // namespace supcone
