#pragma once

// Finite CW complexes with Z/2 cellular boundary, and the operations used to
// assemble real loci out of pieces: disjoint union, product, and gluing
// along labeled subcomplexes.

#include "msym/bitmatrix.hpp"
#include "msym/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace msym {

using BettiVector = std::vector<std::size_t>;

/// Symmetric difference of a face list: each id survives iff it occurs an odd number of times.
inline std::vector<std::string> reduce_mod2(const std::vector<std::string>& word) {
    std::map<std::string, int> count;
    for (const auto& f : word) ++count[f];
    std::vector<std::string> out;
    for (const auto& f : word) {
        auto it = count.find(f);
        if (it != count.end() && it->second % 2 == 1) {
            out.push_back(f);
            count.erase(it);
        }
    }
    return out;
}

class ChainComplexF2;

/// Accumulates cells and labels; build() validates and freezes them.
class ComplexBuilder {
public:
    /// Adds a cell whose face list is already mod-2 reduced (no repeats allowed).
    ComplexBuilder& add_cell(int dim, std::string id, std::vector<std::string> faces = {}) {
        cells_.push_back({dim, std::move(id), std::move(faces)});
        return *this;
    }

    /// Adds a cell from an attaching word; faces are reduced mod 2.
    ComplexBuilder& add_cell_word(int dim, std::string id, const std::vector<std::string>& word) {
        return add_cell(dim, std::move(id), reduce_mod2(word));
    }

    ComplexBuilder& add_label(std::string name, std::vector<std::string> ids) {
        if (labels_.contains(name)) throw InvalidComplex("duplicate label '" + name + "'");
        labels_.emplace(std::move(name), std::move(ids));
        return *this;
    }

    ChainComplexF2 build() const;

private:
    struct PendingCell {
        int dim;
        std::string id;
        std::vector<std::string> faces;
    };
    std::vector<PendingCell> cells_;
    std::map<std::string, std::vector<std::string>> labels_;
};

/// Immutable finite CW complex over GF(2).
class ChainComplexF2 {
public:
    ChainComplexF2() = default;

    /// Top cell dimension; -1 when empty.
    int dimension() const { return static_cast<int>(cells_.size()) - 1; }

    std::size_t cell_count(int k) const {
        return (k >= 0 && k <= dimension()) ? cells_[static_cast<std::size_t>(k)].size() : 0;
    }

    std::size_t total_cells() const {
        std::size_t n = 0;
        for (const auto& c : cells_) n += c.size();
        return n;
    }

    const std::vector<std::string>& cells(int k) const {
        static const std::vector<std::string> empty;
        return (k >= 0 && k <= dimension()) ? cells_[static_cast<std::size_t>(k)] : empty;
    }

    bool contains(const std::string& id) const { return index_.contains(id); }

    int dim_of(const std::string& id) const { return locate(id).first; }

    std::vector<std::string> faces(const std::string& id) const {
        const auto [k, i] = locate(id);
        std::vector<std::string> out;
        if (k == 0) return out;
        for (std::size_t f : boundary_[static_cast<std::size_t>(k)][i])
            out.push_back(cells_[static_cast<std::size_t>(k - 1)][f]);
        return out;
    }

    const std::map<std::string, std::vector<std::string>>& labels() const { return labels_; }

    bool has_label(const std::string& name) const { return labels_.contains(name); }

    const std::vector<std::string>& label(const std::string& name) const {
        auto it = labels_.find(name);
        if (it == labels_.end()) throw InvalidComplex("no label '" + name + "'");
        return it->second;
    }

    /// Matrix of the boundary map from k-cells to (k-1)-cells, one row per k-cell.
    BitMatrixF2 boundary_matrix(int k) const {
        BitMatrixF2 m(cell_count(k), cell_count(k - 1));
        if (k <= 0 || k > dimension()) return m;
        const auto& bd = boundary_[static_cast<std::size_t>(k)];
        for (std::size_t r = 0; r < bd.size(); ++r)
            for (std::size_t c : bd[r]) m.set(r, c);
        return m;
    }

    /// True iff the k-chain (a set of k-cell ids) is a cycle that bounds.
    /// Throws InvalidComplex if the chain is not a cycle.
    bool homology_class_is_zero(int k, const std::vector<std::string>& chain) const {
        const auto row = chain_row(k, chain);
        // Boundary of the chain.
        std::vector<int> parity(cell_count(k - 1), 0);
        for (std::size_t c = 0; c < cell_count(k); ++c) {
            if (!((row[c / 64] >> (c % 64)) & 1u)) continue;
            if (k > 0)
                for (std::size_t f : boundary_[static_cast<std::size_t>(k)][c]) parity[f] ^= 1;
        }
        if (std::any_of(parity.begin(), parity.end(), [](int p) { return p != 0; }))
            throw InvalidComplex("homology_class_is_zero: chain is not a cycle");

        auto m = boundary_matrix(k + 1);
        BitMatrixF2 img(m.rows(), cell_count(k));
        for (std::size_t r = 0; r < m.rows(); ++r) std::copy(m.row(r).begin(), m.row(r).end(), img.row(r).begin());
        const std::size_t before = img.rank();
        img.push_row(row);
        return img.rank() == before;
    }

    friend class ComplexBuilder;

private:
    std::pair<int, std::size_t> locate(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw InvalidComplex("unknown cell '" + id + "'");
        return it->second;
    }

    std::vector<BitMatrixF2::Word> chain_row(int k, const std::vector<std::string>& chain) const {
        std::vector<BitMatrixF2::Word> row((cell_count(k) + 63) / 64, 0);
        for (const auto& id : chain) {
            const auto [d, i] = locate(id);
            if (d != k) throw InvalidComplex("cell '" + id + "' is not of dimension " + std::to_string(k));
            row[i / 64] ^= BitMatrixF2::Word(1) << (i % 64);
        }
        return row;
    }

    std::vector<std::vector<std::string>> cells_;
    std::vector<std::vector<std::vector<std::size_t>>> boundary_;  // [k][cell] -> face indices in dim k-1
    std::unordered_map<std::string, std::pair<int, std::size_t>> index_;
    std::map<std::string, std::vector<std::string>> labels_;
};

inline ChainComplexF2 ComplexBuilder::build() const {
    ChainComplexF2 c;
    int top = -1;
    for (const auto& p : cells_) {
        if (p.dim < 0) throw InvalidComplex("cell '" + p.id + "' has negative dimension");
        top = std::max(top, p.dim);
    }
    c.cells_.resize(static_cast<std::size_t>(top + 1));
    c.boundary_.resize(static_cast<std::size_t>(top + 1));

    for (const auto& p : cells_) {
        auto& bucket = c.cells_[static_cast<std::size_t>(p.dim)];
        if (!c.index_.emplace(p.id, std::pair{p.dim, bucket.size()}).second)
            throw InvalidComplex("duplicate cell '" + p.id + "'");
        bucket.push_back(p.id);
    }

    for (const auto& p : cells_) {
        const auto k = static_cast<std::size_t>(p.dim);
        auto& bd = c.boundary_[k];
        bd.resize(c.cells_[k].size());
        if (p.dim == 0 && !p.faces.empty()) throw InvalidComplex("0-cell '" + p.id + "' has faces");
        std::vector<std::size_t> idx;
        std::set<std::string> seen;
        for (const auto& f : p.faces) {
            if (!seen.insert(f).second)
                throw InvalidComplex("cell '" + p.id + "' lists face '" + f + "' more than once");
            auto it = c.index_.find(f);
            if (it == c.index_.end())
                throw InvalidComplex("cell '" + p.id + "' references unknown face '" + f + "'");
            if (it->second.first != p.dim - 1)
                throw InvalidComplex("cell '" + p.id + "' has face '" + f + "' of wrong dimension");
            idx.push_back(it->second.second);
        }
        std::sort(idx.begin(), idx.end());
        bd[c.index_.at(p.id).second] = std::move(idx);
    }

    // d o d = 0
    for (std::size_t k = 2; k < c.boundary_.size(); ++k) {
        for (std::size_t i = 0; i < c.boundary_[k].size(); ++i) {
            std::vector<int> parity(c.cells_[k - 2].size(), 0);
            for (std::size_t f : c.boundary_[k][i])
                for (std::size_t ff : c.boundary_[k - 1][f]) parity[ff] ^= 1;
            for (std::size_t j = 0; j < parity.size(); ++j) {
                if (parity[j])
                    throw InvalidComplex("boundary of boundary of cell '" + c.cells_[k][i] + "' contains '" +
                                         c.cells_[k - 2][j] + "'");
            }
        }
    }

    for (const auto& [name, ids] : labels_) {
        std::set<std::string> members(ids.begin(), ids.end());
        if (members.size() != ids.size()) throw InvalidComplex("label '" + name + "' repeats a cell");
        for (const auto& id : ids) {
            if (!c.index_.contains(id)) throw InvalidComplex("label '" + name + "' references unknown cell '" + id + "'");
            for (const auto& f : c.faces(id)) {
                if (!members.contains(f))
                    throw InvalidComplex("label '" + name + "' is not closed: '" + id + "' has face '" + f + "' outside it");
            }
        }
        c.labels_.emplace(name, ids);
    }
    return c;
}

/// b[k] = dim ker d_k - rank d_{k+1}, ranks over GF(2).
inline BettiVector betti(const ChainComplexF2& c) {
    const int top = c.dimension();
    if (top < 0) return {};
    std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
    for (int k = 1; k <= top; ++k) rank[static_cast<std::size_t>(k)] = c.boundary_matrix(k).rank();
    BettiVector b(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        b[uk] = c.cell_count(k) - rank[uk] - rank[uk + 1];
    }
    return b;
}

inline long euler_char(const ChainComplexF2& c) {
    long chi = 0;
    for (int k = 0; k <= c.dimension(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(c.cell_count(k));
    return chi;
}

inline long euler_char(const BettiVector& b) {
    long chi = 0;
    for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(b[k]);
    return chi;
}

inline std::size_t betti_total(const BettiVector& b) {
    std::size_t s = 0;
    for (auto x : b) s += x;
    return s;
}

/// Componentwise sum, padding the shorter vector with zeros.
inline BettiVector betti_add(const BettiVector& a, const BettiVector& b) {
    BettiVector r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

/// Kunneth over a field: Betti vector of a product is the convolution.
inline BettiVector betti_convolve(const BettiVector& a, const BettiVector& b) {
    if (a.empty() || b.empty()) return {};
    BettiVector r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

/// Copy with every cell id and label name prefixed.
inline ChainComplexF2 renamed(const ChainComplexF2& c, const std::string& prefix) {
    ComplexBuilder b;
    for (int k = 0; k <= c.dimension(); ++k) {
        for (const auto& id : c.cells(k)) {
            std::vector<std::string> faces;
            for (const auto& f : c.faces(id)) faces.push_back(prefix + f);
            b.add_cell(k, prefix + id, std::move(faces));
        }
    }
    for (const auto& [name, ids] : c.labels()) {
        std::vector<std::string> renamed_ids;
        for (const auto& id : ids) renamed_ids.push_back(prefix + id);
        b.add_label(prefix + name, std::move(renamed_ids));
    }
    return b.build();
}

/// Disjoint union; ids and labels of the two sides get prefixes "a." and "b.".
inline ChainComplexF2 disjoint_union(const ChainComplexF2& a, const ChainComplexF2& b,
                                     const std::string& prefix_a = "a.", const std::string& prefix_b = "b.") {
    if (prefix_a == prefix_b) throw InvalidComplex("disjoint_union: prefixes must differ");
    ComplexBuilder out;
    for (const auto* part : {&a, &b}) {
        const std::string& prefix = part == &a ? prefix_a : prefix_b;
        for (int k = 0; k <= part->dimension(); ++k) {
            for (const auto& id : part->cells(k)) {
                std::vector<std::string> faces;
                for (const auto& f : part->faces(id)) faces.push_back(prefix + f);
                out.add_cell(k, prefix + id, std::move(faces));
            }
        }
        for (const auto& [name, ids] : part->labels()) {
            std::vector<std::string> r;
            for (const auto& id : ids) r.push_back(prefix + id);
            out.add_label(prefix + name, std::move(r));
        }
    }
    return out.build();
}

/// Id of the product cell sigma x tau.
inline std::string product_id(const std::string& sigma, const std::string& tau) { return sigma + "*" + tau; }

/// Cellular product. Cell sigma*tau has dimension dim sigma + dim tau and
/// boundary (d sigma)*tau + sigma*(d tau); signs vanish mod 2.
///
/// Labels: L in a becomes "L*" (L x b), M in b becomes "*M" (a x M), and each
/// pair becomes "L*M".
inline ChainComplexF2 product(const ChainComplexF2& a, const ChainComplexF2& b) {
    ComplexBuilder out;
    for (int total = 0; total <= a.dimension() + b.dimension(); ++total) {
        for (int p = 0; p <= a.dimension(); ++p) {
            const int q = total - p;
            if (q < 0 || q > b.dimension()) continue;
            for (const auto& s : a.cells(p)) {
                const auto ds = a.faces(s);
                for (const auto& t : b.cells(q)) {
                    std::vector<std::string> faces;
                    for (const auto& f : ds) faces.push_back(product_id(f, t));
                    for (const auto& f : b.faces(t)) faces.push_back(product_id(s, f));
                    out.add_cell(total, product_id(s, t), std::move(faces));
                }
            }
        }
    }
    auto all_cells = [](const ChainComplexF2& c) {
        std::vector<std::string> ids;
        for (int k = 0; k <= c.dimension(); ++k) ids.insert(ids.end(), c.cells(k).begin(), c.cells(k).end());
        return ids;
    };
    auto cross = [](const std::vector<std::string>& xs, const std::vector<std::string>& ys) {
        std::vector<std::string> r;
        for (const auto& x : xs)
            for (const auto& y : ys) r.push_back(product_id(x, y));
        return r;
    };
    const auto a_all = all_cells(a);
    const auto b_all = all_cells(b);
    for (const auto& [la, ids] : a.labels()) out.add_label(la + "*", cross(ids, b_all));
    for (const auto& [lb, ids] : b.labels()) out.add_label("*" + lb, cross(a_all, ids));
    for (const auto& [la, ida] : a.labels())
        for (const auto& [lb, idb] : b.labels()) out.add_label(la + "*" + lb, cross(ida, idb));
    return out.build();
}

using CellMatch = std::map<std::string, std::string>;

/// Match between two product subcomplexes induced by factorwise matches.
inline CellMatch product_match(const CellMatch& first, const CellMatch& second) {
    CellMatch m;
    for (const auto& [s1, s2] : first)
        for (const auto& [t1, t2] : second) m.emplace(product_id(s1, t1), product_id(s2, t2));
    return m;
}

/// Pushout of a and b along a chain isomorphism between label lb of b and
/// label la of a. `match` maps each cell of lb to its image in la. Cells of b
/// outside lb, and b's surviving labels, are renamed with b_prefix; the glued
/// labels la and lb are consumed.
inline ChainComplexF2 glue(const ChainComplexF2& a, const std::string& la, const ChainComplexF2& b,
                           const std::string& lb, const CellMatch& match, const std::string& b_prefix = "") {
    const auto& a_iface = a.label(la);
    const auto& b_iface = b.label(lb);
    const std::set<std::string> a_set(a_iface.begin(), a_iface.end());
    const std::set<std::string> b_set(b_iface.begin(), b_iface.end());

    if (match.size() != b_set.size())
        throw InterfaceMismatch("glue: match has " + std::to_string(match.size()) + " entries, label '" + lb +
                                "' has " + std::to_string(b_set.size()) + " cells");
    std::set<std::string> images;
    for (const auto& [src, dst] : match) {
        if (!b_set.contains(src)) throw InterfaceMismatch("glue: '" + src + "' is not in label '" + lb + "'");
        if (!a_set.contains(dst)) throw InterfaceMismatch("glue: '" + dst + "' is not in label '" + la + "'");
        if (!images.insert(dst).second) throw InterfaceMismatch("glue: '" + dst + "' is hit twice");
        if (a.dim_of(dst) != b.dim_of(src))
            throw InterfaceMismatch("glue: '" + src + "' and '" + dst + "' differ in dimension");
        std::set<std::string> mapped_faces;
        for (const auto& f : b.faces(src)) mapped_faces.insert(match.at(f));
        const auto af = a.faces(dst);
        if (mapped_faces != std::set<std::string>(af.begin(), af.end()))
            throw InterfaceMismatch("glue: boundary of '" + src + "' does not map to boundary of '" + dst + "'");
    }
    if (images.size() != a_set.size()) throw InterfaceMismatch("glue: match does not cover label '" + la + "'");

    auto map_b = [&](const std::string& id) {
        auto it = match.find(id);
        return it != match.end() ? it->second : b_prefix + id;
    };

    ComplexBuilder out;
    const int top = std::max(a.dimension(), b.dimension());
    for (int k = 0; k <= top; ++k) {
        for (const auto& id : a.cells(k)) out.add_cell(k, id, a.faces(id));
        for (const auto& id : b.cells(k)) {
            if (b_set.contains(id)) continue;
            std::vector<std::string> faces;
            for (const auto& f : b.faces(id)) faces.push_back(map_b(f));
            // Two faces of a b-cell can never land on the same a-cell: match is injective.
            out.add_cell(k, b_prefix + id, std::move(faces));
        }
    }
    for (const auto& [name, ids] : a.labels())
        if (name != la) out.add_label(name, ids);
    for (const auto& [name, ids] : b.labels()) {
        if (name == lb) continue;
        std::vector<std::string> r;
        for (const auto& id : ids) r.push_back(map_b(id));
        out.add_label(b_prefix + name, std::move(r));
    }
    return out.build();
}

}  // namespace msym
