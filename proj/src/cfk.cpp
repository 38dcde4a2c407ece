#include "dinv/cfk.hpp"

#include "dinv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace dinv {

namespace {

int parity(long grading) {
    return static_cast<int>(((grading % 2) + 2) % 2);
}

// F2 rank by Gaussian elimination; rows are small, plain vectors suffice.
std::size_t f2_rank(std::vector<std::vector<char>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && !m[pivot][c]) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || !m[r][c]) continue;
            for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] ^= m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<char>> identity_matrix(std::size_t n) {
    std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// Boolean product. Valid because the U-power of every contributing term is
// determined by the row and column gradings alone, so nothing can collide.
std::vector<std::vector<char>> bool_mul(const std::vector<std::vector<char>>& a,
                                        const std::vector<std::vector<char>>& b) {
    const std::size_t n = a.size();
    std::vector<std::vector<char>> out(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j) out[i][j] ^= b[k][j];
    return out;
}

struct MoveLegality {
    bool legal = false;
    long power = 0;
};

MoveLegality move_legality(const std::vector<CfkGenerator>& gens, std::size_t source,
                           std::size_t target) {
    MoveLegality m;
    if (source == target) return m;
    const auto& x = gens[source];
    const auto& y = gens[target];
    long diff = x.grading - y.grading;
    if (diff % 2 != 0 || diff < 0) return m; // need a U^(>=0) translate of the source
    long n = diff / 2;
    if (x.fi - n > y.fi || x.fj - n > y.fj) return m;
    m.legal = true;
    m.power = n;
    return m;
}

// In-place elementary basis change: target += U^power * source. Column
// update on the target's outgoing arrows, row update on incoming ones.
void apply_move(std::vector<std::set<std::size_t>>& diff, std::size_t source,
                std::size_t target) {
    // New d(target) = d(target) + U^n d(source).
    for (std::size_t to : diff[source]) {
        if (to == target) continue; // cannot happen: gradings forbid it
        auto [it, inserted] = diff[target].insert(to);
        if (!inserted) diff[target].erase(it);
    }
    // Rewriting old target = new target + U^n source toggles source targets.
    for (std::size_t from = 0; from < diff.size(); ++from) {
        if (from == target || !diff[from].count(target)) continue;
        auto [it, inserted] = diff[from].insert(source);
        if (!inserted) diff[from].erase(it);
    }
}

} // namespace

BifilteredComplex::BifilteredComplex(std::vector<CfkGenerator> generators,
                                     std::vector<std::set<std::size_t>> differential)
    : gens_(std::move(generators)), diff_(std::move(differential)) {
    if (diff_.size() != gens_.size())
        throw DomainError("differential size does not match generator count");
    std::set<std::string> names;
    for (const auto& g : gens_) {
        if (g.name.empty()) throw DomainError("generator with empty name");
        for (char c : g.name)
            if (std::isspace(static_cast<unsigned char>(c)))
                throw DomainError("generator name '" + g.name + "' contains whitespace");
        if (!names.insert(g.name).second)
            throw DomainError("duplicate generator name '" + g.name + "'");
    }
    for (std::size_t from = 0; from < diff_.size(); ++from) {
        for (std::size_t to : diff_[from]) {
            if (to >= gens_.size()) throw DomainError("arrow target out of range");
            long drop = gens_[to].grading - gens_[from].grading + 1;
            if (drop % 2 != 0)
                throw DomainError("arrow " + gens_[from].name + " -> " + gens_[to].name
                                  + " cannot drop the grading by exactly 1");
            long n = drop / 2;
            if (n < 0)
                throw DomainError("arrow " + gens_[from].name + " -> " + gens_[to].name
                                  + " needs a negative U-power");
            if (gens_[to].fi - n > gens_[from].fi || gens_[to].fj - n > gens_[from].fj)
                throw DomainError("arrow " + gens_[from].name + " -> " + gens_[to].name
                                  + " violates the filtration");
        }
    }
    // ∂² = 0 over F2: the U-power of a two-step path x -> y -> z depends
    // only on x and z, so path parity per (x, z) pair must vanish.
    for (std::size_t x = 0; x < diff_.size(); ++x) {
        std::map<std::size_t, int> count;
        for (std::size_t y : diff_[x])
            for (std::size_t z : diff_[y]) count[z] ^= 1;
        for (const auto& [z, c] : count)
            if (c)
                throw DomainError("differential does not square to zero ("
                                  + gens_[x].name + " reaches " + gens_[z].name
                                  + " an odd number of ways)");
    }
}

long BifilteredComplex::u_power(std::size_t from, std::size_t to) const {
    if (!has_arrow(from, to)) throw DomainError("no arrow between the given generators");
    return (gens_[to].grading - gens_[from].grading + 1) / 2;
}

std::size_t BifilteredComplex::arrow_count() const {
    std::size_t n = 0;
    for (const auto& s : diff_) n += s.size();
    return n;
}

std::string BifilteredComplex::to_text() const {
    std::ostringstream os;
    for (const auto& g : gens_)
        os << "gen " << g.name << " " << g.fi << " " << g.fj << " " << g.grading << "\n";
    for (std::size_t from = 0; from < diff_.size(); ++from)
        for (std::size_t to : diff_[from])
            os << "arrow " << gens_[from].name << " " << gens_[to].name << " "
               << u_power(from, to) << "\n";
    return os.str();
}

BifilteredComplex BifilteredComplex::parse_text(const std::string& text) {
    std::vector<CfkGenerator> gens;
    std::map<std::string, std::size_t> index;
    struct PendingArrow {
        std::string from, to;
        long power;
    };
    std::vector<PendingArrow> arrows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "gen") {
            CfkGenerator g;
            if (!(ls >> g.name >> g.fi >> g.fj >> g.grading))
                throw ParseError("bad generator line '" + line + "'");
            if (!index.emplace(g.name, gens.size()).second)
                throw ParseError("duplicate generator '" + g.name + "'");
            gens.push_back(std::move(g));
        } else if (kind == "arrow") {
            PendingArrow a;
            if (!(ls >> a.from >> a.to >> a.power))
                throw ParseError("bad arrow line '" + line + "'");
            arrows.push_back(std::move(a));
        } else {
            throw ParseError("unknown line kind '" + kind + "'");
        }
    }
    std::vector<std::set<std::size_t>> diff(gens.size());
    for (const auto& a : arrows) {
        auto f = index.find(a.from);
        auto t = index.find(a.to);
        if (f == index.end() || t == index.end())
            throw ParseError("arrow references unknown generator '"
                             + (f == index.end() ? a.from : a.to) + "'");
        long forced = (gens[t->second].grading - gens[f->second].grading + 1) / 2;
        if (forced != a.power)
            throw ParseError("arrow " + a.from + " -> " + a.to
                             + " declares U-power " + std::to_string(a.power)
                             + " but the gradings force " + std::to_string(forced));
        diff[f->second].insert(t->second);
    }
    return BifilteredComplex(std::move(gens), std::move(diff));
}

BifilteredComplex staircase(long n) {
    if (n < 1) throw DomainError("staircase parameter must be at least 1");
    std::vector<CfkGenerator> gens;
    std::vector<std::set<std::size_t>> diff;
    const long count = 2 * n + 1;
    for (long m = 0; m < count; ++m) {
        CfkGenerator g;
        if (count <= 26)
            g.name = std::string(1, static_cast<char>('a' + m));
        else
            g.name = "g" + std::to_string(m);
        if (m % 2 == 0) {
            g.fi = m / 2;
            g.fj = n - m / 2;
            g.grading = 0;
        } else {
            g.fi = (m + 1) / 2;
            g.fj = n - (m - 1) / 2;
            g.grading = 1;
        }
        gens.push_back(std::move(g));
    }
    diff.resize(gens.size());
    for (long m = 1; m < count; m += 2) {
        diff[static_cast<std::size_t>(m)].insert(static_cast<std::size_t>(m - 1));
        diff[static_cast<std::size_t>(m)].insert(static_cast<std::size_t>(m + 1));
    }
    return BifilteredComplex(std::move(gens), std::move(diff));
}

BifilteredComplex unknot_complex() {
    return BifilteredComplex({CfkGenerator{"a", 0, 0, 0}}, {{}});
}

BifilteredComplex tensor(const BifilteredComplex& a, const BifilteredComplex& b) {
    bool short_names = true;
    for (const auto& g : a.generators()) short_names = short_names && g.name.size() == 1;
    for (const auto& g : b.generators()) short_names = short_names && g.name.size() == 1;
    const std::string sep = short_names ? "" : "*";

    std::vector<CfkGenerator> gens;
    auto index = [&](std::size_t x, std::size_t y) { return x * b.size() + y; };
    for (std::size_t x = 0; x < a.size(); ++x) {
        for (std::size_t y = 0; y < b.size(); ++y) {
            const auto& gx = a.generator(x);
            const auto& gy = b.generator(y);
            gens.push_back(CfkGenerator{gx.name + sep + gy.name, gx.fi + gy.fi,
                                        gx.fj + gy.fj, gx.grading + gy.grading});
        }
    }
    std::vector<std::set<std::size_t>> diff(gens.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
        for (std::size_t y = 0; y < b.size(); ++y) {
            for (std::size_t to : a.differential()[x]) diff[index(x, y)].insert(index(to, y));
            for (std::size_t to : b.differential()[y]) diff[index(x, y)].insert(index(x, to));
        }
    }
    return BifilteredComplex(std::move(gens), std::move(diff));
}

BifilteredComplex direct_sum(const BifilteredComplex& a, const BifilteredComplex& b) {
    std::set<std::string> a_names;
    bool collide = false;
    for (const auto& g : a.generators()) a_names.insert(g.name);
    for (const auto& g : b.generators()) collide = collide || a_names.count(g.name) != 0;

    std::vector<CfkGenerator> gens;
    for (const auto& g : a.generators()) {
        CfkGenerator h = g;
        if (collide) h.name = "a." + h.name;
        gens.push_back(std::move(h));
    }
    for (const auto& g : b.generators()) {
        CfkGenerator h = g;
        if (collide) h.name = "b." + h.name;
        gens.push_back(std::move(h));
    }
    std::vector<std::set<std::size_t>> diff(gens.size());
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t to : a.differential()[x]) diff[x].insert(to);
    for (std::size_t x = 0; x < b.size(); ++x)
        for (std::size_t to : b.differential()[x]) diff[a.size() + x].insert(a.size() + to);
    return BifilteredComplex(std::move(gens), std::move(diff));
}

SplitResult split_summands(const BifilteredComplex& x) {
    const std::size_t n = x.size();
    auto diff = x.differential();
    const auto& gens = x.generators();

    SplitResult result;
    result.change = identity_matrix(n);
    result.change_inv = identity_matrix(n);

    // Greedy descent on the arrow count. Applying only strictly improving
    // moves guarantees termination; a fully split outcome is not promised,
    // the component cut below just works with whatever this reaches.
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t s = 0; s < n && !improved; ++s) {
            for (std::size_t t = 0; t < n && !improved; ++t) {
                auto legality = move_legality(gens, s, t);
                if (!legality.legal) continue;
                auto trial = diff;
                apply_move(trial, s, t);
                std::size_t before = 0, after = 0;
                for (const auto& set : diff) before += set.size();
                for (const auto& set : trial) after += set.size();
                if (after >= before) continue;
                diff = std::move(trial);
                result.moves.push_back(BasisMove{s, t, legality.power});
                // Column t of change picks up column s; row s of the
                // inverse picks up row t.
                for (std::size_t r = 0; r < n; ++r) result.change[r][t] ^= result.change[r][s];
                for (std::size_t c = 0; c < n; ++c)
                    result.change_inv[s][c] ^= result.change_inv[t][c];
                improved = true;
            }
        }
    }

    // Connected components of the (undirected) arrow graph.
    std::vector<std::size_t> component(n, n);
    std::size_t next = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (component[start] != n) continue;
        std::vector<std::size_t> stack{start};
        component[start] = next;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            auto visit = [&](std::size_t w) {
                if (component[w] == n) {
                    component[w] = next;
                    stack.push_back(w);
                }
            };
            for (std::size_t w : diff[v]) visit(w);
            for (std::size_t w = 0; w < n; ++w)
                if (diff[w].count(v)) visit(w);
        }
        ++next;
    }

    result.summand_indices.assign(next, {});
    for (std::size_t i = 0; i < n; ++i) result.summand_indices[component[i]].push_back(i);
    for (const auto& indices : result.summand_indices) {
        std::vector<CfkGenerator> sub_gens;
        std::vector<std::set<std::size_t>> sub_diff(indices.size());
        std::map<std::size_t, std::size_t> local;
        for (std::size_t i = 0; i < indices.size(); ++i) local[indices[i]] = i;
        for (std::size_t i = 0; i < indices.size(); ++i) {
            sub_gens.push_back(gens[indices[i]]);
            for (std::size_t to : diff[indices[i]]) sub_diff[i].insert(local.at(to));
        }
        result.summands.emplace_back(std::move(sub_gens), std::move(sub_diff));
    }
    return result;
}

bool split_recombines(const BifilteredComplex& original, const SplitResult& split) {
    const std::size_t n = original.size();
    std::size_t total = 0;
    for (const auto& s : split.summands) total += s.size();
    if (total != n) return false;

    // Reassemble the post-move differential from the summands.
    std::vector<std::vector<char>> d_new(n, std::vector<char>(n, 0));
    for (std::size_t s = 0; s < split.summands.size(); ++s) {
        const auto& indices = split.summand_indices[s];
        const auto& comp = split.summands[s];
        for (std::size_t from = 0; from < comp.size(); ++from)
            for (std::size_t to : comp.differential()[from])
                d_new[indices[to]][indices[from]] = 1; // matrix rows are targets
    }
    std::vector<std::vector<char>> d_orig(n, std::vector<char>(n, 0));
    for (std::size_t from = 0; from < n; ++from)
        for (std::size_t to : original.differential()[from]) d_orig[to][from] = 1;

    auto product = bool_mul(bool_mul(split.change, d_new), split.change_inv);
    if (product != d_orig) return false;
    return bool_mul(split.change, split.change_inv) == identity_matrix(n);
}

long homology_rank(const BifilteredComplex& x) {
    // Evaluate at U = 1: homology over F2[U, U^-1] vanishes exactly when the
    // resulting parity-graded F2 complex is exact, and its rank equals the
    // F2 dimension of that complex's homology.
    std::vector<std::size_t> even, odd;
    for (std::size_t i = 0; i < x.size(); ++i)
        (parity(x.generator(i).grading) == 0 ? even : odd).push_back(i);

    auto block = [&](const std::vector<std::size_t>& from, const std::vector<std::size_t>& to) {
        std::vector<std::vector<char>> m(from.size(), std::vector<char>(to.size(), 0));
        for (std::size_t r = 0; r < from.size(); ++r)
            for (std::size_t c = 0; c < to.size(); ++c)
                if (x.has_arrow(from[r], to[c])) m[r][c] = 1;
        return m;
    };
    std::size_t rank_eo = f2_rank(block(even, odd));
    std::size_t rank_oe = f2_rank(block(odd, even));
    return static_cast<long>(even.size() - rank_eo - rank_oe)
         + static_cast<long>(odd.size() - rank_oe - rank_eo);
}

bool is_acyclic(const BifilteredComplex& x) {
    return homology_rank(x) == 0;
}

namespace {

std::vector<long> signature_key(const CfkGenerator& g) {
    return {g.fi, g.fj, g.grading};
}

bool match_search(const BifilteredComplex& a, const BifilteredComplex& b,
                  std::vector<std::size_t>& image, std::vector<char>& used, std::size_t pos) {
    if (pos == a.size()) return true;
    for (std::size_t cand = 0; cand < b.size(); ++cand) {
        if (used[cand]) continue;
        if (signature_key(a.generator(pos)) != signature_key(b.generator(cand))) continue;
        bool consistent = true;
        for (std::size_t prev = 0; prev < pos && consistent; ++prev) {
            consistent = a.has_arrow(pos, prev) == b.has_arrow(cand, image[prev])
                      && a.has_arrow(prev, pos) == b.has_arrow(image[prev], cand);
        }
        if (!consistent) continue;
        image[pos] = cand;
        used[cand] = 1;
        if (match_search(a, b, image, used, pos + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

} // namespace

bool isomorphic_filtered(const BifilteredComplex& a, const BifilteredComplex& b) {
    if (a.size() != b.size()) return false;
    if (a.size() > 20)
        throw InconclusiveError("isomorphism search capped at 20 generators, got "
                                + std::to_string(a.size()));
    std::vector<std::vector<long>> sig_a, sig_b;
    for (const auto& g : a.generators()) sig_a.push_back(signature_key(g));
    for (const auto& g : b.generators()) sig_b.push_back(signature_key(g));
    std::sort(sig_a.begin(), sig_a.end());
    std::sort(sig_b.begin(), sig_b.end());
    if (sig_a != sig_b) return false;
    if (a.arrow_count() != b.arrow_count()) return false;

    std::vector<std::size_t> image(a.size(), 0);
    std::vector<char> used(b.size(), 0);
    return match_search(a, b, image, used, 0);
}

bool equal_up_to_acyclic(const BifilteredComplex& a, const BifilteredComplex& b) {
    auto sa = split_summands(a);
    auto sb = split_summands(b);
    std::vector<const BifilteredComplex*> ka, kb;
    for (const auto& s : sa.summands)
        if (!is_acyclic(s)) ka.push_back(&s);
    for (const auto& s : sb.summands)
        if (!is_acyclic(s)) kb.push_back(&s);
    if (ka.empty() && kb.empty()) return true;
    if (ka.empty() || kb.empty()) return false;
    BifilteredComplex ra = *ka[0];
    for (std::size_t i = 1; i < ka.size(); ++i) ra = direct_sum(ra, *ka[i]);
    BifilteredComplex rb = *kb[0];
    for (std::size_t i = 1; i < kb.size(); ++i) rb = direct_sum(rb, *kb[i]);
    return isomorphic_filtered(ra, rb);
}

} // namespace dinv
