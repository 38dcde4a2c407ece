#include "dinv/metabolizer.hpp"

#include "dinv/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace dinv {

namespace {

constexpr std::uint64_t span_guard = 10000000;

Rational reduce_mod_1(const Rational& r) {
    return r - Rational(floor_div(r.num(), r.den()));
}

// Mixed-radix codec between element indices and coefficient vectors.
struct Codec {
    std::vector<std::uint64_t> radix;
    std::uint64_t size = 1;

    explicit Codec(const LinkingGroup& g) {
        for (const Int& n : g.factors()) {
            auto nn = to_int64(n);
            if (!nn || *nn <= 0 || size > span_guard / static_cast<std::uint64_t>(*nn))
                throw TooLargeError("group " + g.factors_string()
                                    + " is too large to enumerate element-wise");
            radix.push_back(static_cast<std::uint64_t>(*nn));
            size *= radix.back();
        }
    }

    std::vector<Int> decode(std::uint64_t idx) const {
        std::vector<Int> v(radix.size());
        for (std::size_t i = radix.size(); i-- > 0;) {
            v[i] = Int(static_cast<unsigned long>(idx % radix[i]));
            idx /= radix[i];
        }
        return v;
    }

    std::uint64_t encode(const std::vector<Int>& v) const {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < radix.size(); ++i) {
            Int r = mod_floor(v[i], Int(static_cast<unsigned long>(radix[i])));
            idx = idx * radix[i] + r.get_ui();
        }
        return idx;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t idx = 0;
        for (std::size_t i = radix.size(); i-- > 0;) {
            std::uint64_t s = (a % radix[i] + b % radix[i]) % radix[i];
            a /= radix[i];
            b /= radix[i];
            idx += s * stride(i);
        }
        return idx;
    }

    std::uint64_t stride(std::size_t i) const {
        std::uint64_t s = 1;
        for (std::size_t j = i + 1; j < radix.size(); ++j) s *= radix[j];
        return s;
    }
};

// Closure of an existing subgroup (sorted indices) and one new element.
std::vector<std::uint64_t> extend_span(const Codec& codec,
                                       const std::vector<std::uint64_t>& span,
                                       std::uint64_t x) {
    std::set<std::uint64_t> out(span.begin(), span.end());
    std::uint64_t k = x;
    while (out.find(k) == out.end()) {
        for (std::uint64_t s : span) out.insert(codec.add(s, k));
        k = codec.add(k, x);
    }
    return {out.begin(), out.end()};
}

void check_square_order(const LinkingGroup& g, Int& root) {
    auto r = exact_sqrt(g.order());
    if (!r)
        throw PreconditionError("group of order " + to_string(g.order())
                                + " has non-square order; no metabolizer is possible");
    root = *r;
}

} // namespace

LinkingGroup::LinkingGroup(std::vector<Int> factors, std::vector<std::vector<Rational>> form)
    : factors_(std::move(factors)), form_(std::move(form)) {
    for (const Int& n : factors_)
        if (n < 1) throw DomainError("cyclic factor orders must be positive");
    if (form_.size() != factors_.size())
        throw DomainError("linking form matrix does not match the factor count");
    for (auto& row : form_) {
        if (row.size() != factors_.size())
            throw DomainError("linking form matrix is not square");
        for (auto& entry : row) entry = reduce_mod_1(entry);
    }
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        for (std::size_t j = 0; j < factors_.size(); ++j) {
            if (form_[i][j] != form_[j][i])
                throw DomainError("linking form is not symmetric mod 1");
            // Well-definedness: the order of either generator kills the entry.
            if (!(Rational(factors_[i]) * form_[i][j]).is_integer())
                throw DomainError("linking form entry (" + std::to_string(i) + ","
                                  + std::to_string(j) + ") is not killed by the factor order");
        }
    }
}

Int LinkingGroup::order() const {
    Int n = 1;
    for (const Int& f : factors_) n *= f;
    return n;
}

Rational LinkingGroup::form_value(const std::vector<Int>& x, const std::vector<Int>& y) const {
    if (x.size() != rank() || y.size() != rank())
        throw DomainError("element vector length does not match the group rank");
    Rational v(0);
    for (std::size_t i = 0; i < rank(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j) {
            if (y[j] == 0 || form_[i][j].is_zero()) continue;
            v += Rational(x[i] * y[j]) * form_[i][j];
        }
    }
    return reduce_mod_1(v);
}

bool LinkingGroup::form_vanishes(const std::vector<Int>& x, const std::vector<Int>& y) const {
    return form_value(x, y).is_zero();
}

std::string LinkingGroup::factors_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << "+";
        os << to_string(factors_[i]);
    }
    return os.str();
}

std::vector<std::uint64_t> subgroup_span(const LinkingGroup& g, const Subgroup& s) {
    Codec codec(g);
    std::vector<std::uint64_t> span{0};
    for (const auto& gen : s.generators) {
        if (gen.size() != g.rank())
            throw DomainError("subgroup generator length does not match the group rank");
        span = extend_span(codec, span, codec.encode(gen));
    }
    return span;
}

std::vector<Int> decode_element(const LinkingGroup& g, std::uint64_t index) {
    return Codec(g).decode(index);
}

bool is_metabolizer(const LinkingGroup& g, const Subgroup& s) {
    Int root;
    check_square_order(g, root);
    auto span = subgroup_span(g, s);
    if (Int(static_cast<unsigned long>(span.size())) != root) return false;
    for (const auto& a : s.generators)
        for (const auto& b : s.generators)
            if (!g.form_vanishes(a, b)) return false;
    return true;
}

std::vector<Subgroup> enumerate_metabolizers(const LinkingGroup& g, const Int& bound) {
    Int root;
    check_square_order(g, root);
    if (g.order() > bound)
        throw TooLargeError("group " + g.factors_string() + " exceeds the enumeration bound "
                            + to_string(bound) + "; decompose with split_by_primes first");
    Codec codec(g);
    const std::uint64_t n = codec.size;

    // Grow isotropic subgroups breadth-first, one generator at a time. Each
    // state is a subgroup, deduplicated by its full (sorted) span, so the
    // walk visits every isotropic subgroup of order dividing root exactly
    // once. Metabolizers are the states of order exactly root.
    struct State {
        std::vector<std::uint64_t> span;
        std::vector<std::uint64_t> gens;
    };
    std::map<std::vector<std::uint64_t>, std::vector<std::uint64_t>> seen;
    std::deque<State> queue;
    queue.push_back({{0}, {}});
    seen.emplace(queue.back().span, queue.back().gens);

    while (!queue.empty()) {
        State st = std::move(queue.front());
        queue.pop_front();
        for (std::uint64_t x = 1; x < n; ++x) {
            if (std::binary_search(st.span.begin(), st.span.end(), x)) continue;
            auto xv = codec.decode(x);
            if (!g.form_vanishes(xv, xv)) continue;
            bool ok = true;
            for (std::uint64_t gen : st.gens) {
                if (!g.form_vanishes(xv, codec.decode(gen))) { ok = false; break; }
            }
            if (!ok) continue;
            auto span = extend_span(codec, st.span, x);
            Int span_order(static_cast<unsigned long>(span.size()));
            if (span_order > root || mod_floor(root, span_order) != 0) continue;
            if (seen.count(span)) continue;
            auto gens = st.gens;
            gens.push_back(x);
            seen.emplace(span, gens);
            queue.push_back({std::move(span), std::move(gens)});
        }
    }

    std::vector<Subgroup> result;
    for (const auto& [span, gens] : seen) {
        if (Int(static_cast<unsigned long>(span.size())) != root) continue;
        Subgroup s;
        for (std::uint64_t gen : gens) s.generators.push_back(codec.decode(gen));
        if (s.generators.empty()) s.generators.push_back(std::vector<Int>(g.rank(), Int(0)));
        result.push_back(std::move(s));
    }
    return result;
}

std::vector<PrimaryComponent> split_by_primes(const LinkingGroup& g) {
    // Collect the primes dividing any factor order.
    std::set<Int> primes;
    for (Int n : g.factors()) {
        for (Int d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                primes.insert(d);
                while (n % d == 0) n /= d;
            }
        }
        if (n > 1) primes.insert(n);
    }

    std::vector<PrimaryComponent> components;
    for (const Int& prime : primes) {
        std::vector<Int> orders;
        std::vector<std::size_t> factor_index;
        std::vector<Int> embedding_coeff;
        for (std::size_t i = 0; i < g.rank(); ++i) {
            Int n = g.factors()[i];
            Int pe = 1;
            while (mod_floor(n, prime) == 0) {
                pe *= prime;
                n /= prime;
            }
            if (pe == 1) continue;
            // Component generator is (n_i / p^e) times the original one.
            orders.push_back(pe);
            factor_index.push_back(i);
            embedding_coeff.push_back(n);
        }
        std::vector<std::vector<Rational>> form(orders.size(),
                                                std::vector<Rational>(orders.size()));
        for (std::size_t a = 0; a < orders.size(); ++a)
            for (std::size_t b = 0; b < orders.size(); ++b)
                form[a][b] = Rational(embedding_coeff[a] * embedding_coeff[b])
                             * g.form()[factor_index[a]][factor_index[b]];
        components.push_back(PrimaryComponent{prime,
                                              LinkingGroup(std::move(orders), std::move(form)),
                                              std::move(factor_index),
                                              std::move(embedding_coeff)});
    }
    return components;
}

Subgroup embed_subgroup(const LinkingGroup& ambient, const PrimaryComponent& component,
                        const Subgroup& s) {
    Subgroup out;
    for (const auto& gen : s.generators) {
        if (gen.size() != component.group.rank())
            throw DomainError("subgroup generator length does not match the component rank");
        std::vector<Int> v(ambient.rank(), Int(0));
        for (std::size_t j = 0; j < gen.size(); ++j) {
            std::size_t i = component.factor_index[j];
            v[i] = mod_floor(v[i] + gen[j] * component.embedding_coeff[j], ambient.factors()[i]);
        }
        out.generators.push_back(std::move(v));
    }
    if (out.generators.empty())
        out.generators.push_back(std::vector<Int>(ambient.rank(), Int(0)));
    return out;
}

} // namespace dinv
